"""Matching-path calculus in the punctured plane.

Arcs are piecewise-linear curves with exact rational vertices joining the
two marked points a < b < 0 on the real axis, staying clear of the
deleted origin.  Two crossing invariants are computed by exact sign
predicates: the signed count of crossings with the positive real axis
(positive when the arc passes upward) and the unsigned count of
transverse crossings with the open interval (a, b).

The half-rotation surgery rotates the disk of radius R1 about the
midpoint (a + b)/2 by pi exactly, fixes everything outside radius R2,
and interpolates across the annulus by a staircase of exact rational
rotations (Pythagorean approximations).  The positive axis stays outside
the R2-disk and the interval (a, b) inside the R1-disk, so both
invariants transform predictably: the surgery exchanges the endpoints
and preserves the crossing data, as does the full-turn twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

F = Fraction


@dataclass(frozen=True)
class SceneConfig:
    a: Fraction
    b: Fraction
    r1: Fraction
    r2: Fraction
    eps: Fraction

    def __post_init__(self):
        a, b = F(self.a), F(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "r1", F(self.r1))
        object.__setattr__(self, "r2", F(self.r2))
        object.__setattr__(self, "eps", F(self.eps))
        if not a < b < 0:
            raise ValueError("need a < b < 0")
        if not self.r1 > (b - a) / 2:
            raise ValueError("inner radius must cover the marked points")
        if not self.r2 > self.r1:
            raise ValueError("need r1 < r2")
        if not self.r2 < abs(a + b) / 2:
            raise ValueError("outer disk must exclude the origin")
        if self.eps <= 0:
            raise ValueError("clearance must be positive")

    @property
    def center(self):
        return (self.a + self.b) / 2


DEFAULT_SCENE = SceneConfig(F(-4), F(-2), F(3, 2), F(5, 2), F(1, 8))


@dataclass(frozen=True)
class PLArc:
    """Vertex chain with exact rational coordinates; endpoints at the
    marked points; orientation +1 traverses the vertex list as given."""

    points: tuple
    orientation: int = 1

    def __post_init__(self):
        pts = tuple((F(x), F(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("an arc needs at least two vertices")
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    def reversed(self):
        """Same vertex chain traversed the other way."""
        return PLArc(self.points, -self.orientation)

    def segments(self):
        return list(zip(self.points[:-1], self.points[1:]))


@dataclass(frozen=True)
class ArcInvariants:
    ray_crossings: int
    seg_crossings: int
    start: str  # "a" or "b": first endpoint under the arc's orientation

    def tuple(self):
        return (self.ray_crossings, self.seg_crossings)


class DegenerateArc(ValueError):
    """Vertex exactly on a reference set; perturb the arc and retry."""


def _sq_dist(p, q=(0, 0)):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _segment_clearance_ok(p, q, eps):
    """Minimal distance of segment pq to the origin is at least eps."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    den = dx * dx + dy * dy
    if den == 0:
        return _sq_dist(p) >= eps * eps
    t = -(p[0] * dx + p[1] * dy) / den
    t = max(F(0), min(F(1), t))
    closest = (p[0] + t * dx, p[1] + t * dy)
    return _sq_dist(closest) >= eps * eps


def _orient(p, q, r):
    """Sign of the cross product (q - p) x (r - p)."""
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _segments_cross(p1, q1, p2, q2):
    """Proper or improper intersection of closed segments, exact."""
    o1, o2 = _orient(p1, q1, p2), _orient(p1, q1, q2)
    o3, o4 = _orient(p2, q2, p1), _orient(p2, q2, q1)
    if o1 != o2 and o3 != o4:
        return True

    def on_seg(p, q, r):
        return (_orient(p, q, r) == 0 and min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
                and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))

    return on_seg(p1, q1, p2) or on_seg(p1, q1, q2) or on_seg(p2, q2, p1) or on_seg(p2, q2, q1)


def validate_arc(arc: PLArc, cfg: SceneConfig):
    """Simplicity, endpoint placement and origin clearance, all exact."""
    pts = arc.points
    ends = {pts[0], pts[-1]}
    marked = {(cfg.a, F(0)), (cfg.b, F(0))}
    if ends != marked:
        raise ValueError("arc endpoints must be the two marked points")
    for p, q in arc.segments():
        if p == q:
            raise ValueError("degenerate segment")
        if not _segment_clearance_ok(p, q, cfg.eps):
            raise ValueError("arc passes within eps of the origin")
    segs = arc.segments()
    for i in range(len(segs)):
        for j in range(i + 1, len(segs)):
            if j == i + 1:
                # consecutive segments share exactly their joint vertex
                shared = segs[i][1]
                p1, q1 = segs[i]
                p2, q2 = segs[j]
                if _orient(p1, q1, q2) == 0 and min(p1[0], q1[0]) <= q2[0] <= max(p1[0], q1[0]) \
                        and min(p1[1], q1[1]) <= q2[1] <= max(p1[1], q1[1]) and q2 != shared:
                    raise ValueError("consecutive segments fold back")
                continue
            if i == 0 and j == len(segs) - 1 and len(segs) > 2:
                # closed arcs are not allowed; endpoints are distinct marked
                # points, so a crossing here is a genuine self-intersection
                pass
            if _segments_cross(*segs[i], *segs[j]):
                raise ValueError("arc is not simple")
    return True


def invariants(arc: PLArc, cfg: SceneConfig = DEFAULT_SCENE) -> ArcInvariants:
    """Exact crossing counts; refuses on vertices lying on a reference set."""
    validate_arc(arc, cfg)
    a, b = cfg.a, cfg.b
    pts = arc.points if arc.orientation == 1 else tuple(reversed(arc.points))
    for idx, (x, y) in enumerate(pts):
        if idx in (0, len(pts) - 1):
            continue
        if y == 0 and x > 0:
            raise DegenerateArc("vertex on the positive axis; perturb the arc")
        if y == 0 and a < x < b:
            prev_pt, next_pt = pts[idx - 1], pts[idx + 1]
            if prev_pt[1] != 0 or next_pt[1] != 0:
                raise DegenerateArc("vertex on the open interval; perturb the arc")
    ray = 0
    seg = 0
    for p, q in zip(pts[:-1], pts[1:]):
        if p[1] == q[1]:
            continue  # horizontal pieces (including runs along the axis)
        if (p[1] < 0 < q[1]) or (q[1] < 0 < p[1]):
            t = (F(0) - p[1]) / (q[1] - p[1])
            x = p[0] + t * (q[0] - p[0])
            if x > 0:
                ray += 1 if q[1] > p[1] else -1
            elif a < x < b:
                seg += 1
            elif x == 0 or x == a or x == b:
                raise DegenerateArc("crossing through a marked point; perturb the arc")
        elif p[1] == 0 or q[1] == 0:
            # touching the axis at a vertex: only harmful on reference sets,
            # which the vertex check above already rejected (interior) or
            # excluded (endpoints)
            continue
    start = "a" if pts[0] == (a, F(0)) else "b"
    return ArcInvariants(ray, seg, start)


def refine(arc: PLArc, pieces: int = 2) -> PLArc:
    """Subdivide every segment into equal rational pieces; the invariants
    are unchanged."""
    pts = [arc.points[0]]
    for p, q in arc.segments():
        for i in range(1, pieces):
            t = F(i, pieces)
            pts.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
        pts.append(q)
    return PLArc(tuple(pts), arc.orientation)


# ---------------------------------------------------------------------------
# catalog arcs


def _wiggle_xs(cfg, count):
    a, b = cfg.a, cfg.b
    return [a + (b - a) * F(2 * i + 1, 2 * count) for i in range(count)]


def make_arc(cfg: SceneConfig, ray_dir: int, wiggles: int) -> PLArc:
    """Arc from a to b with the prescribed signed ray crossing (one of
    -1, 0, +1) and number of transverse crossings of (a, b)."""
    a, b = cfg.a, cfg.b
    h = min(cfg.eps, (b - a) / 8, (cfg.r1 ** 2 - ((b - a) / 2) ** 2) / (4 * cfg.r1 + 1))
    big = 2 * abs(a)
    rx = abs(a) + 1
    pts = [(a, F(0))]
    side = F(1)  # current vertical side of the approach, +1 = above
    if ray_dir != 0:
        s = F(-ray_dir)  # pass below first for a positive (upward) crossing
        pts += [(a - 1, s * big), (rx, s * big), (rx, -s * big), (a - 1, -s * big)]
        side = -s
    approach_y = side * h
    if wiggles:
        for i, x in enumerate(_wiggle_xs(cfg, wiggles)):
            y = approach_y * (-1) ** i
            pts += [(x, y), (x, -y)]
        approach_y = -approach_y * (-1) ** (wiggles - 1)
    landing = (a + 7 * (b - a) / F(8), approach_y)
    if pts[-1][0] != landing[0] or pts[-1][1] != landing[1]:
        pts.append(landing)
    pts.append((b, F(0)))
    return PLArc(tuple(pts))


#: invariant table: index -> (signed ray crossings, interval crossings)
SPHERE_INVARIANTS = {
    -3: (-1, 4), -2: (-1, 3), -1: (-1, 2),
    0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (1, 2),
}

CATALOG_RANGE = range(-3, 4)


def catalog_arc(label: str, k: int, cfg: SceneConfig = DEFAULT_SCENE) -> PLArc:
    """Shipped digitizations: 'S' for the sphere family, 'Sp' for the
    straightened family after the surgery, whose k-th member matches the
    invariants of the (-k)-th sphere."""
    if k not in CATALOG_RANGE:
        raise ValueError("catalog index must be in -3..3")
    if label == "S":
        ray, seg = SPHERE_INVARIANTS[k]
    elif label == "Sp":
        ray, seg = SPHERE_INVARIANTS[-k]
    else:
        raise ValueError("label must be 'S' or 'Sp'")
    return make_arc(cfg, ray, seg)


# ---------------------------------------------------------------------------
# the half-rotation surgery and the twist


def _pythagorean_rotation(t: Fraction):
    """Exact rational rotation by an angle close to pi * t, via the
    half-angle parametrization (cos, sin) = ((1-u^2), 2u)/(1+u^2)."""
    # u = tan(theta / 2) for theta = pi t; rational approximation of
    # tan(pi t / 2) good enough for a monotone staircase
    if t <= 0:
        return (F(1), F(0))
    if t >= 1:
        return (F(-1), F(0))
    # tan(pi t / 2) ~ t/(1 - t) rescaled; monotonicity is all that matters
    u = F(4) * t / (3 * (1 - t) + 1)
    den = 1 + u * u
    return ((1 - u * u) / den, 2 * u / den)


def _rotate_about(center, p, cs):
    c, s = cs
    dx, dy = p[0] - center, p[1]
    return (center + c * dx - s * dy, s * dx + c * dy)


def _zone(cfg, p):
    d2 = (p[0] - cfg.center) ** 2 + p[1] ** 2
    if d2 <= cfg.r1 ** 2:
        return 0
    if d2 >= cfg.r2 ** 2:
        return 2
    return 1


def _subdivide_for_zones(arc: PLArc, cfg: SceneConfig, rings: int) -> PLArc:
    """Refine until every segment has both ends in the same ring of the
    staircase (or shares one boundary ring), bounded effort."""
    radii2 = [cfg.r1 ** 2]
    for i in range(1, rings):
        r = cfg.r1 + (cfg.r2 - cfg.r1) * F(i, rings)
        radii2.append(r * r)
    radii2.append(cfg.r2 ** 2)

    def ring(p):
        d2 = (p[0] - cfg.center) ** 2 + p[1] ** 2
        for i, rr in enumerate(radii2):
            if d2 <= rr:
                return i
        return len(radii2)

    pts = list(arc.points)
    for _ in range(24):
        out = [pts[0]]
        changed = False
        for p, q in zip(pts[:-1], pts[1:]):
            if abs(ring(p) - ring(q)) > 1:
                out.append(((p[0] + q[0]) / 2, (p[1] + q[1]) / 2))
                changed = True
            out.append(q)
        pts = out
        if not changed:
            return PLArc(tuple(pts), arc.orientation)
    raise RuntimeError("could not refine the arc across the annulus")


def _staircase_once(arc: PLArc, cfg: SceneConfig, total_turns: Fraction, rings: int) -> PLArc:
    arc = _subdivide_for_zones(arc, cfg, rings)
    inner_cs = {F(1): (F(-1), F(0)), F(2): (F(1), F(0)), F(-2): (F(1), F(0))}[total_turns]
    radii2 = [cfg.r1 ** 2]
    for i in range(1, rings):
        r = cfg.r1 + (cfg.r2 - cfg.r1) * F(i, rings)
        radii2.append(r * r)

    sign = 1 if total_turns > 0 else -1
    steps = abs(total_turns)

    def image(p):
        d2 = (p[0] - cfg.center) ** 2 + p[1] ** 2
        if d2 >= cfg.r2 ** 2:
            return p
        if d2 <= cfg.r1 ** 2:
            return _rotate_about(cfg.center, p, inner_cs)
        level = sum(1 for rr in radii2 if d2 > rr)  # 1..rings-1 within annulus
        t = steps * F(rings - level, rings)
        whole = int(t)  # full pi-turns rotate exactly
        frac = t - whole
        cs = _pythagorean_rotation(frac)
        if whole % 2 == 1:
            cs = (-cs[0], -cs[1])
        if sign < 0:
            cs = (cs[0], -cs[1])
        return _rotate_about(cfg.center, p, cs)

    pts = [image(p) for p in arc.points]
    out = PLArc(tuple(pts), arc.orientation)
    validate_arc(out, cfg)
    return out


def _staircase_map(arc: PLArc, cfg: SceneConfig, total_turns: Fraction) -> PLArc:
    """Map rotating the inner disk by pi * total_turns exactly, fixing the
    outside, with a monotone staircase of rational rotations between; the
    staircase is refined until the image validates."""
    last = None
    for rings in (8, 16, 32, 64, 128):
        try:
            return _staircase_once(arc, cfg, total_turns, rings)
        except (ValueError, RuntimeError) as exc:
            last = exc
    raise RuntimeError("surgery image failed to validate after refinement: %s" % last)


def flop_map(arc: PLArc, cfg: SceneConfig = DEFAULT_SCENE) -> PLArc:
    """Half-rotation surgery: exact pi-rotation inside, identity outside,
    exchanging the endpoints a <-> b."""
    return _staircase_map(arc, cfg, F(1))


def dehn_twist_map(arc: PLArc, cfg: SceneConfig = DEFAULT_SCENE, inverse: bool = False) -> PLArc:
    """Full-turn twist supported on the annulus; the inner disk and the
    outside are pointwise fixed."""
    return _staircase_map(arc, cfg, F(-2) if inverse else F(2))


# ---------------------------------------------------------------------------
# the formal phase comparator for the sphere family


def phase_order(i: int, j: int) -> str:
    """'greater', 'less' or 'unspecified' for the phases of the i-th and
    j-th spheres: the zeroth is maximal, the first minimal, each chain is
    ordered downward, and cross-chain pairs are left unspecified."""
    if i == j:
        raise ValueError("indices must differ")
    if i == 0:
        return "greater"
    if j == 0:
        return "less"
    if i == 1:
        return "less"
    if j == 1:
        return "greater"
    if i >= 2 and j >= 2:
        return "greater" if i < j else "less"
    if i <= -1 and j <= -1:
        return "greater" if i < j else "less"
    return "unspecified"
