"""Small dense exact linear algebra over Fraction.

Matrices are tuples of row tuples; the empty matrix keeps its shape
through explicit (rows, cols) arguments where it matters.  Everything is
plain Gaussian elimination -- sizes in this package stay far below the
point where that is a concern.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows):
    return tuple(tuple(Fraction(c) for c in row) for row in rows)


def zeros(nrows, ncols):
    return tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows))


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(m, ncols=None):
    if m:
        return len(m), len(m[0])
    return 0, (0 if ncols is None else ncols)


def mat_mul(a, b, bcols=None):
    """a @ b; ``bcols`` supplies the width of b when b has no rows."""
    if not a:
        return ()
    if not b:
        return zeros(len(a), 0 if bcols is None else bcols)
    n = len(b[0])
    return tuple(
        tuple(sum((ra[k] * b[k][j] for k in range(len(b))), ZERO) for j in range(n))
        for ra in a
    )


def mat_vec(m, v):
    return tuple(sum((row[k] * v[k] for k in range(len(v))), ZERO) for row in m)


def transpose(m, ncols=None):
    r, c = shape(m, ncols)
    return tuple(tuple(m[i][j] for i in range(r)) for j in range(c))


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(s, m):
    s = Fraction(s)
    return tuple(tuple(s * x for x in row) for row in m)


def mat_eq(a, b):
    return a == b


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (rows_without_zero_rows, pivot_cols)."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    cols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def row_space(rows, ncols=None):
    return rref(rows, ncols)[0]


def nullspace(m, ncols=None):
    """Basis (as rows) of {v : m v = 0} for an (r x c) matrix."""
    r, c = shape(m, ncols)
    red, pivots = rref(m, c)
    free = [j for j in range(c) if j not in pivots]
    basis = []
    for j in free:
        v = [ZERO] * c
        v[j] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][j]
        basis.append(tuple(v))
    return tuple(basis)


def in_span(basis, vec):
    """Membership of ``vec`` in the row span of ``basis``."""
    if all(x == 0 for x in vec):
        return True
    if not basis:
        return False
    before = rank(basis, len(vec))
    return rank(tuple(basis) + (tuple(vec),), len(vec)) == before


def span_sum(a, b, ncols):
    return row_space(tuple(a) + tuple(b), ncols)


def span_intersect(a, b, ncols):
    """Intersection of two row spans via the kernel of the stacked system."""
    a, b = tuple(a), tuple(b)
    if not a or not b:
        return ()
    stacked = transpose(a, ncols) if False else None
    # coefficients (s, t) with s.A = t.B: kernel of [A^T | -B^T]
    rows = []
    for i in range(ncols):
        rows.append(tuple(a[k][i] for k in range(len(a))) + tuple(-b[k][i] for k in range(len(b))))
    combos = nullspace(tuple(rows), len(a) + len(b))
    vecs = []
    for combo in combos:
        v = tuple(sum((combo[k] * a[k][i] for k in range(len(a))), ZERO) for i in range(ncols))
        vecs.append(v)
    return row_space(tuple(vecs), ncols)


def preimage(m, target_basis, ncols):
    """Basis of {v : m v in row span of target_basis}; m is (r x ncols)."""
    r, _ = shape(m, ncols)
    t = tuple(target_basis)
    rows = []
    for i in range(r):
        rows.append(tuple(m[i][j] for j in range(ncols)) + tuple(-t[k][i] for k in range(len(t))))
    combos = nullspace(tuple(rows), ncols + len(t))
    vecs = [v[:ncols] for v in combos]
    return row_space(tuple(vecs), ncols)


def solve_matrix(a, b, ncols):
    """One solution x (as column list) of a x = b, or None; a is (r x ncols)."""
    r, _ = shape(a, ncols)
    aug = tuple(tuple(a[i][j] for j in range(ncols)) + (b[i],) for i in range(r))
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return tuple(x)


def is_invertible(m):
    n = len(m)
    return n == 0 or (len(m[0]) == n and rank(m, n) == n)
