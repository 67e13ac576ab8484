"""Length-truncated Jacobi algebras of the conifold quiver.

All relations are binomial (each cyclic derivative is a difference of two
words), so the quotient by the two-sided ideal, degree by degree, is the
quotient of the set of composable words by the equivalence generated by
substituting one relation word for its partner inside a larger word.  The
basis of each homogeneous component is therefore a set of word classes,
computed by union-find; no Groebner machinery is needed.  Products of
classes whose total length exceeds the cutoff are zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .paths import SRC, TGT, FreePathElement, is_composable, relations

MAX_CUTOFF = 12

# partner substitution table for the four binomial relations
_REL_PARTNER = {}
for _r in relations():
    _w1, _w2 = sorted(_r.coeffs)
    _REL_PARTNER[_w1] = _w2
    _REL_PARTNER[_w2] = _w1


def _words_from(source, length):
    """All composable words of given length starting at ``source``."""
    if length == 0:
        return [""]
    outs = {0: "xz", 1: "yw"}
    words = [a for a in outs[source]]
    for _ in range(length - 1):
        words = [a + w for w in words for a in outs[TGT[w[0]]]]
    return words


class _UnionFind:
    def __init__(self, items):
        self.parent = {i: i for i in items}

    def find(self, i):
        p = self.parent
        root = i
        while p[root] != root:
            root = p[root]
        while p[i] != root:
            p[i], i = root, p[i]
        return root

    def union(self, i, j):
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)


class TruncatedAlgebra:
    """Paths of length <= N modulo the relation ideal, with exact basis.

    Basis elements are canonical word representatives, indexed per
    (source, target) pair; the two vertex idempotents are the empty words
    at v0 and v1.
    """

    def __init__(self, cutoff: int):
        if not 0 <= cutoff <= MAX_CUTOFF:
            raise ValueError("cutoff must be in 0..%d" % MAX_CUTOFF)
        self.cutoff = cutoff
        # (source, length) -> {word: canonical representative}
        self._canon = {}
        # (source, target) -> ordered list of (length, representative)
        self.basis = {(s, t): [] for s in (0, 1) for t in (0, 1)}
        self._index = {}
        for source in (0, 1):
            for length in range(cutoff + 1):
                words = _words_from(source, length)
                uf = _UnionFind(words)
                for word in words:
                    for i in range(length - 2):
                        sub = word[i:i + 3]
                        partner = _REL_PARTNER.get(sub)
                        if partner is not None:
                            uf.union(word, word[:i] + partner + word[i + 3:])
                canon = {w: uf.find(w) for w in words}
                self._canon[(source, length)] = canon
                target = source if length % 2 == 0 else 1 - source
                reps = sorted(set(canon.values()))
                for rep in reps:
                    self._index[(source, rep)] = len(self.basis[(source, target)])
                    self.basis[(source, target)].append((length, rep))

    def class_of(self, word: str, source=None):
        """Canonical representative of a word, or None if length > cutoff.

        ``source`` disambiguates the empty word (a vertex idempotent).
        """
        if word == "":
            if source is None:
                raise ValueError("idempotent needs an explicit source vertex")
            return ""
        if not is_composable(word):
            raise ValueError("non-composable word %r" % word)
        if len(word) > self.cutoff:
            return None
        return self._canon[(SRC[word[-1]], len(word))][word]

    def product(self, u: str, v: str, source_u=None, source_v=None):
        """Class of the concatenation u*v (u acts after v); None if truncated."""
        if u == "" and v == "":
            if source_u != source_v:
                return None
            return ""
        if u == "":
            return self.class_of(v) if TGT[v[0]] == source_u else None
        if v == "":
            return self.class_of(u) if SRC[u[-1]] == source_v else None
        if SRC[u[-1]] != TGT[v[0]]:
            return None
        if len(u) + len(v) > self.cutoff:
            return None
        return self.class_of(u + v)

    def dims(self):
        """dict (source, target, length) -> dimension of that component."""
        table = {}
        for (s, t), entries in self.basis.items():
            for length, _ in entries:
                key = (s, t, length)
                table[key] = table.get(key, 0) + 1
        return table

    def dim(self, source, target, length):
        return self.dims().get((source, target, length), 0)

    def reduce(self, element: FreePathElement, grading=None):
        """Coordinates of the coset of ``element`` in the basis of its
        (source, target) component.  Raises if a word exceeds the cutoff."""
        if element.is_zero():
            if grading is None:
                return ()
            return tuple(Fraction(0) for _ in self.basis[grading])
        g = element.grading()
        if g is None:
            raise ValueError("element mixes (source, target) gradings")
        if grading is not None and grading != g:
            raise ValueError("element grading %r does not match %r" % (g, grading))
        coords = [Fraction(0)] * len(self.basis[g])
        for word, coeff in element.coeffs.items():
            rep = self.class_of(word)
            if rep is None:
                raise ValueError("word %r longer than cutoff %d" % (word, self.cutoff))
            coords[self._index[(SRC[word[-1]], rep)]] += coeff
        return tuple(coords)

    def is_zero(self, element: FreePathElement) -> bool:
        """True iff the element reduces to the zero coset (words over the
        cutoff would be dropped by the quotient, so they are rejected)."""
        if element.is_zero():
            return True
        return all(c == 0 for c in self.reduce(element))


@lru_cache(maxsize=None)
def truncated_algebra(cutoff: int) -> TruncatedAlgebra:
    """Shared constructor; the algebra is immutable so caching is safe."""
    return TruncatedAlgebra(cutoff)
