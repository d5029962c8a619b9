"""Planar primitives for Steiner tree construction.

Points are complex numbers (x + iy). All functions are pure and operate on
immutable values, so they are safe to share across threads.
"""

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateInput

# Tolerance ladder: geometric predicates at 1e-12, length comparisons at 1e-9.
GEOM_TOL = 1e-12
LENGTH_TOL = 1e-9

Point = complex

# Unit rotations by +-60 degrees, used for equilateral third points.
_ROT_CCW_60 = cmath.exp(1j * math.pi / 3)
_ROT_CW_60 = cmath.exp(-1j * math.pi / 3)

TWO_PI = 2.0 * math.pi


def as_point(xy) -> Point:
    """Coerce an (x, y) pair or complex into a finite Point."""
    p = complex(xy[0], xy[1]) if not isinstance(xy, complex) else xy
    if not (math.isfinite(p.real) and math.isfinite(p.imag)):
        raise DegenerateInput(f"non-finite coordinate: {p!r}")
    return p


def to_xy(p: Point) -> tuple[float, float]:
    return (p.real, p.imag)


@dataclass(frozen=True)
class Arc:
    """Circle arc swept counterclockwise from start_angle to end_angle.

    Invariants: radius >= 0 and 0 < end_angle - start_angle <= 2*pi.
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float

    def __post_init__(self):
        if self.radius < 0.0:
            raise DegenerateInput("arc radius must be nonnegative")
        sweep = self.end_angle - self.start_angle
        if not (0.0 < sweep <= TWO_PI + GEOM_TOL):
            raise DegenerateInput(f"arc sweep {sweep} outside (0, 2*pi]")

    @property
    def sweep(self) -> float:
        return self.end_angle - self.start_angle

    def contains_angle(self, phi: float, tol: float = GEOM_TOL) -> bool:
        """True if the ray angle phi falls on the arc (tol in arc-length units)."""
        ang_tol = tol / self.radius if self.radius > tol else math.pi
        off = (phi - self.start_angle) % TWO_PI
        if off > TWO_PI - ang_tol:
            off -= TWO_PI
        return -ang_tol <= off <= self.sweep + ang_tol


def full_circle(center: Point, radius: float) -> Arc:
    return Arc(center, radius, 0.0, TWO_PI)


def orientation(a: Point, b: Point, c: Point) -> float:
    """Signed doubled area of triangle abc; > 0 when c is left of a->b."""
    u = b - a
    v = c - a
    return u.real * v.imag - u.imag * v.real


def third_equilateral_point(a: Point, b: Point, side: str) -> Point:
    """Apex c making triangle (a, b, c) equilateral.

    side "left" puts c in the left half-plane of the directed line a->b
    (counterclockwise rotation of b about a), "right" mirrors it.
    """
    if abs(a - b) < GEOM_TOL:
        raise DegenerateInput("equilateral third point needs distinct endpoints")
    if side == "left":
        return a + (b - a) * _ROT_CCW_60
    if side == "right":
        return a + (b - a) * _ROT_CW_60
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def angle_at(v: Point, a: Point, b: Point) -> float:
    """Unsigned angle of the wedge (a, v, b), in [0, pi].

    Computed from atan2 of cross/dot; stays accurate near 0 and pi where
    acos of a normalized dot product loses digits.
    """
    u = a - v
    w = b - v
    if abs(u) < GEOM_TOL or abs(w) < GEOM_TOL:
        raise DegenerateInput("angle_at arguments coincide with the vertex")
    cross = u.real * w.imag - u.imag * w.real
    dot = u.real * w.real + u.imag * w.imag
    return abs(math.atan2(cross, dot))


def intersect_segment_arc(p: Point, q: Point, arc: Arc) -> list[Point]:
    """Intersection points of segment [p, q] with an arc, sorted along the segment.

    Returns points within GEOM_TOL of both objects; empty list when disjoint.
    """
    d = q - p
    seg_len = abs(d)
    if seg_len < GEOM_TOL:
        raise DegenerateInput("segment endpoints coincide")
    f = p - arc.center
    # |f + t*d|^2 = r^2, quadratic in t
    a = d.real * d.real + d.imag * d.imag
    b = 2.0 * (f.real * d.real + f.imag * d.imag)
    c = f.real * f.real + f.imag * f.imag - arc.radius * arc.radius
    disc = b * b - 4.0 * a * c
    if disc < 0.0:
        # allow a grazing hit within tolerance of the circle
        if disc < -4.0 * a * (GEOM_TOL * (2.0 * arc.radius + GEOM_TOL)):
            return []
        disc = 0.0
    sq = math.sqrt(disc)
    ts = [(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
    t_tol = GEOM_TOL / seg_len
    out: list[Point] = []
    for t in ts:
        if t < -t_tol or t > 1.0 + t_tol:
            continue
        pt = p + min(max(t, 0.0), 1.0) * d
        phi = cmath.phase(pt - arc.center)
        if not arc.contains_angle(phi):
            continue
        if out and abs(pt - out[-1]) < GEOM_TOL:
            continue  # tangency: report the double root once
        out.append(pt)
    return out


def segments_cross(p1: Point, q1: Point, p2: Point, q2: Point) -> bool:
    """True if open segments [p1,q1] and [p2,q2] share a point (within GEOM_TOL).

    Endpoint-to-endpoint contact counts as crossing here; callers exempt
    edges that share a tree vertex before asking.
    """
    d1 = orientation(p2, q2, p1)
    d2 = orientation(p2, q2, q1)
    d3 = orientation(p1, q1, p2)
    d4 = orientation(p1, q1, q2)
    scale = max(abs(q1 - p1), abs(q2 - p2), 1e-30)
    eps = GEOM_TOL * scale
    if ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    ):
        return True
    # near-collinear contact: check point-to-segment distances
    for a, b, c in ((p1, q1, p2), (p1, q1, q2), (p2, q2, p1), (p2, q2, q1)):
        if _point_on_segment(a, b, c):
            return True
    return False


def _point_on_segment(a: Point, b: Point, c: Point) -> bool:
    ab = b - a
    L = abs(ab)
    if L < GEOM_TOL:
        return abs(c - a) < GEOM_TOL
    t = ((c - a).real * ab.real + (c - a).imag * ab.imag) / (L * L)
    t = min(max(t, 0.0), 1.0)
    return abs(a + t * ab - c) < GEOM_TOL
