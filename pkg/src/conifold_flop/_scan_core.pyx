# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled backend for the exhaustive GF(2) representation scan.

Same contract and semantics as scan_py.scan_dims: packed bit-matrices,
relation filtering with precomputed composition tables, nilpotency by
image chains, stability by closed-subspace search over the destabilizing
dimension vectors, and the endomorphism (Schur) filter that discards
Galois-twisted forms.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

from itertools import combinations, product


cdef inline int popcount_parity(unsigned int v):
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    v ^= v >> 1
    return v & 1


cdef inline unsigned int mat_mul_packed(unsigned int a, unsigned int b,
                                        int p, int q, int r):
    """(p x q) . (q x r) on row-major packed bits."""
    cdef unsigned int out = 0, acc, row_a
    cdef unsigned int mask_r = (1u << r) - 1
    cdef int i, k
    for i in range(p):
        row_a = (a >> (i * q)) & ((1u << q) - 1)
        acc = 0
        k = 0
        while row_a:
            if row_a & 1:
                acc ^= (b >> (k * r)) & mask_r
            row_a >>= 1
            k += 1
        out |= acc << (i * r)
    return out


cdef inline unsigned int apply_packed(unsigned int m, unsigned int v, int rows, int cols):
    """Image of the packed vector v under the (rows x cols) matrix m."""
    cdef unsigned int img = 0
    cdef int i
    for i in range(rows):
        img |= (<unsigned int>popcount_parity(((m >> (i * cols)) & ((1u << cols) - 1)) & v)) << i
    return img


cdef int reduce_basis(unsigned int *vecs, int n):
    """In-place GF(2) reduction; returns the rank, basis left in vecs."""
    cdef int rank = 0, i, j
    cdef unsigned int v, low
    for i in range(n):
        v = vecs[i]
        for j in range(rank):
            low = vecs[j] & (~vecs[j] + 1)
            if v & low:
                v ^= vecs[j]
        if v:
            vecs[rank] = v
            rank += 1
    return rank


cdef int reduce_basis64(unsigned long long *vecs, int n):
    cdef int rank = 0, i, j
    cdef unsigned long long v, low
    for i in range(n):
        v = vecs[i]
        for j in range(rank):
            low = vecs[j] & (~vecs[j] + 1)
            if v & low:
                v ^= vecs[j]
        if v:
            vecs[rank] = v
            rank += 1
    return rank


cdef bint schur_c(unsigned int x, unsigned int z, unsigned int y, unsigned int w,
                  int d0, int d1):
    """End(V) = GF(2): the intertwining system has a 1-dimensional solution
    space.  Unknowns: entries of p0 (d0 x d0) then p1 (d1 x d1)."""
    cdef unsigned long long rows[64]
    cdef int nrows = 0
    cdef int n0 = d0 * d0
    cdef int i, j, k
    cdef unsigned long long row
    cdef unsigned int m
    # p1.M = M.p0 for M in {x, z} (M is d1 x d0)
    for m in (x, z):
        for i in range(d1):
            for j in range(d0):
                row = 0
                for k in range(d1):
                    if (m >> (k * d0 + j)) & 1:
                        row ^= 1ull << (n0 + i * d1 + k)
                for k in range(d0):
                    if (m >> (i * d0 + k)) & 1:
                        row ^= 1ull << (k * d0 + j)
                if row:
                    rows[nrows] = row
                    nrows += 1
    # p0.M = M.p1 for M in {y, w} (M is d0 x d1)
    for m in (y, w):
        for i in range(d0):
            for j in range(d1):
                row = 0
                for k in range(d0):
                    if (m >> (k * d1 + j)) & 1:
                        row ^= 1ull << (i * d0 + k)
                for k in range(d1):
                    if (m >> (i * d1 + k)) & 1:
                        row ^= 1ull << (n0 + k * d1 + j)
                if row:
                    rows[nrows] = row
                    nrows += 1
    return (n0 + d1 * d1) - reduce_basis64(rows, nrows) == 1


cdef bint nilpotent_c(unsigned int *ax, unsigned int *az,
                      unsigned int *ay, unsigned int *aw, int d0, int d1):
    cdef unsigned int u0[8]
    cdef unsigned int u1[8]
    cdef unsigned int n0[32]
    cdef unsigned int n1[32]
    cdef int k0 = d0, k1 = d1, i, m0, m1, it
    for i in range(d0):
        u0[i] = 1u << i
    for i in range(d1):
        u1[i] = 1u << i
    for it in range(d0 + d1 + 1):
        if k0 == 0 and k1 == 0:
            return True
        m0 = 0
        for i in range(k1):
            n0[m0] = ay[u1[i]]; m0 += 1
            n0[m0] = aw[u1[i]]; m0 += 1
        m1 = 0
        for i in range(k0):
            n1[m1] = ax[u0[i]]; m1 += 1
            n1[m1] = az[u0[i]]; m1 += 1
        k0 = reduce_basis(n0, m0)
        k1 = reduce_basis(n1, m1)
        for i in range(k0):
            u0[i] = n0[i]
        for i in range(k1):
            u1[i] = n1[i]
    return k0 == 0 and k1 == 0


def scan_dims(int d0, int d1, destab, bint count_all=True):
    """Number of stable relation-satisfying nilpotent tuples over GF(2)."""
    if d0 == 0 or d1 == 0:
        return 0 if destab else 1
    if d0 > 4 or d1 > 4:
        raise ValueError("vertex dimension above 4 not supported")

    cdef int nA = 1 << (d0 * d1)   # codes for x, z (d1 x d0)
    cdef int nB = nA               # codes for y, w (d0 x d1)
    cdef int nE1 = 1 << (d1 * d1)
    cdef int nE0 = 1 << (d0 * d0)
    cdef unsigned int *pab = <unsigned int *>calloc(nA * nB, sizeof(unsigned int))
    cdef unsigned int *pba = <unsigned int *>calloc(nB * nA, sizeof(unsigned int))
    cdef unsigned int *qa = <unsigned int *>calloc(nE1 * nA, sizeof(unsigned int))
    cdef unsigned int *qb = <unsigned int *>calloc(nE0 * nB, sizeof(unsigned int))
    if not pab or not pba or not qa or not qb:
        raise MemoryError
    cdef int a, b, c
    for a in range(nA):
        for b in range(nB):
            pab[a * nB + b] = mat_mul_packed(a, b, d1, d0, d1)
            pba[b * nA + a] = mat_mul_packed(b, a, d0, d1, d0)
    for c in range(nE1):
        for a in range(nA):
            qa[c * nA + a] = mat_mul_packed(c, a, d1, d1, d0)
    for c in range(nE0):
        for b in range(nB):
            qb[c * nB + b] = mat_mul_packed(c, b, d0, d0, d1)

    # subspace data grouped by destabilizing dimension vector, flattened:
    # per entry: mask0, nb0, basis0..., mask1, nb1, basis1...
    subs0 = _subspaces_py(d0)
    subs1 = _subspaces_py(d1)
    flat = []
    offsets = [0]
    for e0, e1 in destab:
        for k0, m0, b0 in subs0:
            if k0 != e0:
                continue
            for k1, m1, b1 in subs1:
                if k1 != e1:
                    continue
                flat.append(m0)
                flat.append(len(b0))
                flat.extend(b0)
                flat.append(m1)
                flat.append(len(b1))
                flat.extend(b1)
        offsets.append(len(flat))
    cdef int npairsets = len(destab)
    cdef unsigned int *subdata = <unsigned int *>calloc(max(len(flat), 1), sizeof(unsigned int))
    cdef int *offs = <int *>calloc(npairsets + 1, sizeof(int))
    cdef int i
    for i in range(len(flat)):
        subdata[i] = flat[i]
    for i in range(npairsets + 1):
        offs[i] = offsets[i]

    cdef unsigned int ax[32]
    cdef unsigned int az[32]
    cdef unsigned int ay[32]
    cdef unsigned int aw[32]
    cdef int *s1_count = <int *>calloc(nA, sizeof(int))
    cdef int *s1_list = <int *>calloc(nA * nA, sizeof(int))
    cdef char *x4 = <char *>calloc(nA, 1)
    if not s1_list or not s1_count or not x4:
        raise MemoryError

    cdef long count = 0
    cdef int x, z, y, w, v, t, pos, nb0, nb1, b0_at, b1_at, ok, closed
    cdef unsigned int m0mask, m1mask
    try:
        for y in range(nB):
            # rel xyz = zyx given y, indexed by z
            memset(s1_count, 0, nA * sizeof(int))
            for x in range(nA):
                for z in range(nA):
                    if qa[pab[x * nB + y] * nA + z] == qa[pab[z * nB + y] * nA + x]:
                        s1_list[z * nA + s1_count[z]] = x
                        s1_count[z] += 1
            for w in range(nB):
                # rel wxy = yxw: prune x
                for x in range(nA):
                    x4[x] = qb[pba[w * nA + x] * nB + y] == qb[pba[y * nA + x] * nB + w]
                for z in range(nA):
                    # rel yzw = wzy
                    if qb[pba[y * nA + z] * nB + w] != qb[pba[w * nA + z] * nB + y]:
                        continue
                    for i in range(s1_count[z]):
                        x = s1_list[z * nA + i]
                        if not x4[x]:
                            continue
                        # rel zwx = xwz
                        if qa[pab[z * nB + w] * nA + x] != qa[pab[x * nB + w] * nA + z]:
                            continue
                        for v in range(1 << d0):
                            ax[v] = apply_packed(x, v, d1, d0)
                            az[v] = apply_packed(z, v, d1, d0)
                        for v in range(1 << d1):
                            ay[v] = apply_packed(y, v, d0, d1)
                            aw[v] = apply_packed(w, v, d0, d1)
                        if not nilpotent_c(ax, az, ay, aw, d0, d1):
                            continue
                        # stability: no closed destabilizing subspace pair
                        ok = 1
                        for t in range(npairsets):
                            pos = offs[t]
                            while pos < offs[t + 1]:
                                m0mask = subdata[pos]; pos += 1
                                nb0 = subdata[pos]; pos += 1
                                b0_at = pos; pos += nb0
                                m1mask = subdata[pos]; pos += 1
                                nb1 = subdata[pos]; pos += 1
                                b1_at = pos; pos += nb1
                                closed = 1
                                for i in range(nb0):
                                    v = subdata[b0_at + i]
                                    if not ((m1mask >> ax[v]) & 1) or not ((m1mask >> az[v]) & 1):
                                        closed = 0
                                        break
                                if closed:
                                    for i in range(nb1):
                                        v = subdata[b1_at + i]
                                        if not ((m0mask >> ay[v]) & 1) or not ((m0mask >> aw[v]) & 1):
                                            closed = 0
                                            break
                                if closed:
                                    ok = 0
                                    break
                            if not ok:
                                break
                        if not ok:
                            continue
                        if not schur_c(x, z, y, w, d0, d1):
                            continue
                        count += 1
                        if not count_all:
                            return count
    finally:
        free(pab); free(pba); free(qa); free(qb)
        free(subdata); free(offs); free(s1_list); free(s1_count); free(x4)
    return count


def _subspaces_py(dim):
    """All subspaces of GF(2)^dim as (dim, membership mask, basis tuple)."""
    subs = [(0, 1, ())]
    seen = set()
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            free_pos = [(i, j) for i, p in enumerate(pivots)
                        for j in range(p + 1, dim) if j not in pivots]
            for fill in product([0, 1], repeat=len(free_pos)):
                basis = [1 << p for p in pivots]
                for (i, j), bit in zip(free_pos, fill):
                    if bit:
                        basis[i] |= 1 << j
                span = {0}
                for bb in basis:
                    span |= {s ^ bb for s in span}
                mask = 0
                for vv in span:
                    mask |= 1 << vv
                if mask in seen:
                    continue
                seen.add(mask)
                subs.append((k, mask, tuple(basis)))
    return subs
