"""Backend dispatch for the GF(2) chamber scan.

The compiled extension is preferred when it imports; the pure-Python
twin is always available and selected either as a fallback or through
the environment variable CONIFOLD_FLOP_PURE=1.  Both implement the same
``scan_dims`` contract and are compared in tests and benchmarks.
"""

from __future__ import annotations

import os

from . import scan_py

_backend = scan_py
_backend_name = "pure"

if os.environ.get("CONIFOLD_FLOP_PURE", "") != "1":
    try:
        from . import _scan_core

        _backend = _scan_core
        _backend_name = "compiled"
    except ImportError:
        pass


def backend_name() -> str:
    return _backend_name


def get_backends():
    """(name, module) pairs of every importable backend."""
    out = [("pure", scan_py)]
    try:
        from . import _scan_core

        out.append(("compiled", _scan_core))
    except ImportError:
        pass
    return out


def destabilizing_pairs(chamber: int, d0: int, d1: int):
    """Proper nonzero sub-dimension vectors of phase >= the total phase.

    The phase comparison reduces to the sign of e0*d1 - e1*d0 once the
    chamber is fixed, so the destabilizing set depends on the chamber only
    through that sign.  Sorted small-first so witnesses are found early.
    """
    out = []
    for e0 in range(d0 + 1):
        for e1 in range(d1 + 1):
            if (e0, e1) in ((0, 0), (d0, d1)):
                continue
            det = e0 * d1 - e1 * d0
            if (chamber > 0 and det >= 0) or (chamber < 0 and det <= 0):
                out.append((e0, e1))
    return sorted(out, key=lambda p: (p[0] + p[1], p))


def scan_stable_dimvectors(chamber: int, bound: int, with_counts=False, backend=None):
    """Exhaustive GF(2) scan over all dimension vectors d0 + d1 <= bound.

    Returns {dims: number of stable representations} (dims with at least
    one).  ``with_counts=False`` stops each dimension vector at the first
    stable representation, which does not change the returned key set.
    """
    if chamber not in (1, -1):
        raise ValueError("chamber must be +1 or -1")
    if not 1 <= bound <= 5:
        raise ValueError("bound must be in 1..5")
    mod = _backend if backend is None else dict(get_backends())[backend]
    results = {}
    for total in range(1, bound + 1):
        for d0 in range(total + 1):
            d1 = total - d0
            destab = destabilizing_pairs(chamber, d0, d1)
            n = mod.scan_dims(d0, d1, destab, count_all=with_counts)
            if n:
                results[(d0, d1)] = n
    return results
