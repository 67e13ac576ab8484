"""Finite A-infinity algebra on the endomorphisms of the two Lagrangian
spheres, with formal path-algebra coefficients.

Twelve generators: a unit and a point class for each sphere, four
degree-1 intersection generators X, Y, Z, W and their degree-2 partners
Xbar, Ybar, Zbar, Wbar.  m1 vanishes, m2 pairs each generator with its
partner into a point class, m3 realizes the eight cyclic triple products,
and everything in arity >= 4 vanishes.

Sign conventions (fixed here once, validated by ``stasheff_check``):

* A-infinity relations carry the sign (-1)^(sum of reduced degrees of the
  inputs left of the inner operation);
* units are strict: m2(unit, a) = a, m2(a, unit) = (-1)^{deg a} a, and m3
  and higher vanish on any tuple containing a unit;
* pulling a path coefficient out of slot j contributes
  (-1)^(len(coeff) * reduced degree of each generator it passes), which is
  positive whenever the inputs pair arrows with the degree-1 generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .paths import FreePathElement, fpe, word_source, word_target, cyclic_derivative, POTENTIAL

GENERATORS = ("unit0", "unit1", "pt0", "pt1", "X", "Y", "Z", "W", "Xbar", "Ybar", "Zbar", "Wbar")

DEGREE = {
    "unit0": 0, "unit1": 0, "pt0": 3, "pt1": 3,
    "X": 1, "Y": 1, "Z": 1, "W": 1,
    "Xbar": 2, "Ybar": 2, "Zbar": 2, "Wbar": 2,
}

# brane pair (source sphere, target sphere) of each generator
BRANES = {
    "unit0": (0, 0), "pt0": (0, 0), "unit1": (1, 1), "pt1": (1, 1),
    "X": (0, 1), "Z": (0, 1), "Ybar": (0, 1), "Wbar": (0, 1),
    "Y": (1, 0), "W": (1, 0), "Xbar": (1, 0), "Zbar": (1, 0),
}

#: deformation pairs (arrow variable, degree-1 generator)
B_PAIRS = (("x", "X"), ("y", "Y"), ("z", "Z"), ("w", "W"))

#: degree-2 generator matched with each arrow of the quiver
BAR_OF_ARROW = {"x": "Xbar", "y": "Ybar", "z": "Zbar", "w": "Wbar"}


def _default_m2():
    return {
        ("X", "Xbar"): (-1, "pt0"), ("Z", "Zbar"): (-1, "pt0"),
        ("Ybar", "Y"): (1, "pt0"), ("Wbar", "W"): (1, "pt0"),
        ("Xbar", "X"): (1, "pt1"), ("Zbar", "Z"): (1, "pt1"),
        ("Y", "Ybar"): (-1, "pt1"), ("W", "Wbar"): (-1, "pt1"),
    }


def _default_m3():
    return {
        ("X", "Y", "Z"): (1, "Wbar"), ("Z", "Y", "X"): (-1, "Wbar"),
        ("Y", "Z", "W"): (1, "Xbar"), ("W", "Z", "Y"): (-1, "Xbar"),
        ("Z", "W", "X"): (1, "Ybar"), ("X", "W", "Z"): (-1, "Ybar"),
        ("W", "X", "Y"): (1, "Zbar"), ("Y", "X", "W"): (-1, "Zbar"),
    }


@dataclass
class AInftyTable:
    """Structure constants; entries map generator tuples to (sign, generator)."""

    m2: dict = field(default_factory=_default_m2)
    m3: dict = field(default_factory=_default_m3)

    def composable(self, gens):
        return all(BRANES[gens[i]][1] == BRANES[gens[i + 1]][0] for i in range(len(gens) - 1))

    def apply(self, gens):
        """m_k on a tuple of bare generators; returns (coeff, gen) or None."""
        k = len(gens)
        if not self.composable(gens):
            raise ValueError("branes do not compose: %r" % (gens,))
        if k == 1 or k >= 4:
            return None
        if k == 2:
            a, b = gens
            if a in ("unit0", "unit1"):
                return (1, b)
            if b in ("unit0", "unit1"):
                return ((-1) ** DEGREE[a], a)
            return self.m2.get(gens)
        return self.m3.get(gens)


TABLE = AInftyTable()


def mk_eval(args, table: AInftyTable = TABLE):
    """Evaluate m_k on coefficient-weighted generators.

    ``args`` is a sequence of (coefficient, generator) pairs whose branes
    compose; a coefficient is either a plain rational (no path attached)
    or a FreePathElement whose words run between the vertices of the
    generator's branes.  The coefficients are multiplied in reverse order,
    m_k(u1 A1, ..., uk Ak) = (+-) uk...u1 m_k(A1, ..., Ak).  Returns a
    dict generator -> FreePathElement, or generator -> Fraction when no
    path coefficients are involved at all.
    """
    if not 1 <= len(args) <= 6:
        raise ValueError("arity must be between 1 and 6")
    gens = tuple(g for _, g in args)
    if not table.composable(gens):
        raise ValueError("branes do not compose: %r" % (gens,))
    terms = []  # per slot: list of (word or "", scalar)
    for coeff, gen in args:
        if isinstance(coeff, FreePathElement):
            for word in coeff.coeffs:
                if (word_source(word), word_target(word)) != BRANES[gen]:
                    raise ValueError("coefficient %r does not match branes of %s" % (word, gen))
            terms.append(list(coeff.coeffs.items()))
        else:
            terms.append([("", Fraction(coeff))])
    hit = table.apply(gens)
    if hit is None:
        return {}
    sign0, target_gen = hit
    reduced = [DEGREE[g] - 1 for g in gens]
    scalar_acc = Fraction(0)
    path_acc = FreePathElement()
    for choice in product(*terms):
        words = [w for w, _ in choice]
        scalar = Fraction(1)
        for _, c in choice:
            scalar *= c
        koszul = sum(len(words[j]) * sum(reduced[:j]) for j in range(len(words)))
        term = sign0 * (-1) ** (koszul % 2) * scalar
        word = "".join(reversed(words))
        if word == "":
            scalar_acc += term
        else:
            path_acc = path_acc + FreePathElement({word: term})
    if not path_acc.is_zero() and scalar_acc != 0:
        raise ValueError("mixed scalar and path output on %s" % target_gen)
    if scalar_acc != 0:
        return {target_gen: scalar_acc}
    if path_acc.is_zero():
        return {}
    return {target_gen: path_acc}


def _tuples(arity):
    """All brane-composable generator tuples of the given arity."""
    chains = [(g,) for g in GENERATORS]
    for _ in range(arity - 1):
        chains = [c + (g,) for c in chains for g in GENERATORS if BRANES[c[-1]][1] == BRANES[g][0]]
    return chains


@dataclass
class StasheffReport:
    ok: bool
    checked: int
    violation: tuple = None  # (arity, tuple, residual dict)

    def __bool__(self):
        return self.ok


def stasheff_check(max_arity: int = 6, table: AInftyTable = TABLE) -> StasheffReport:
    """Exhaustively evaluate the A-infinity identities up to ``max_arity``.

    With m1 = 0 and nothing above m3, every identity of arity > 6 vanishes
    termwise, so arities 2..6 decide the structure.
    """
    if not 2 <= max_arity <= 6:
        raise ValueError("max_arity must be in 2..6")
    checked = 0
    for arity in range(2, max_arity + 1):
        for gens in _tuples(arity):
            residual = {}
            for s in (2, 3):
                outer_arity = arity - s + 1
                if outer_arity < 1 or outer_arity > 3:
                    continue
                for r in range(0, arity - s + 1):
                    inner = table.apply(gens[r:r + s])
                    if inner is None:
                        continue
                    sign_in, gen_in = inner
                    spliced = gens[:r] + (gen_in,) + gens[r + s:]
                    if len(spliced) == 1:
                        continue  # m1 = 0
                    if not table.composable(spliced):
                        continue
                    outer = table.apply(spliced)
                    if outer is None:
                        continue
                    sign_out, gen_out = outer
                    koszul = sum(DEGREE[g] - 1 for g in gens[:r])
                    term = sign_in * sign_out * (-1) ** (koszul % 2)
                    residual[gen_out] = residual.get(gen_out, 0) + term
            checked += 1
            residual = {g: c for g, c in residual.items() if c != 0}
            if residual:
                return StasheffReport(False, checked, (arity, gens, residual))
    return StasheffReport(True, checked)


def mc_expand(table: AInftyTable = TABLE):
    """Components of sum_k m_k(b, ..., b) for b = xX + yY + zZ + wW.

    Returns a dict over the degree-2 generators; any component off those
    generators would be a structure error and raises.
    """
    total = {}
    for arity in (1, 2, 3):
        for combo in product(B_PAIRS, repeat=arity):
            gens = tuple(g for _, g in combo)
            if not table.composable(gens):
                continue
            part = mk_eval([(fpe(a), g) for a, g in combo], table)
            for gen, coeff in part.items():
                total[gen] = total.get(gen, FreePathElement()) + coeff
    total = {g: c for g, c in total.items() if not c.is_zero()}
    bad = [g for g in total if DEGREE[g] != 2]
    if bad:
        raise AssertionError("Maurer-Cartan expansion leaked onto %r" % bad)
    for bar in ("Xbar", "Ybar", "Zbar", "Wbar"):
        total.setdefault(bar, FreePathElement())
    return total


def mc_matches_relations(table: AInftyTable = TABLE) -> bool:
    """The deformation equation cuts out exactly the quiver relations:
    the coefficient on each degree-2 generator is minus the cyclic
    derivative of the potential at the matching arrow."""
    comps = mc_expand(table)
    return all(comps[BAR_OF_ARROW[a]] == -cyclic_derivative(POTENTIAL, a) for a in "xyzw")
