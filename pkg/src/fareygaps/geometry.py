"""Exact rational polygon engine for the index cells of the Farey triangle.

A cell is the set of points of the triangle {0 < x, y <= 1, x + y > 1} whose
first r index values under the triangle map are a prescribed tuple.  Its
closure is cut out of the closed triangle by pairs of half-planes whose
integer coefficients are continuants of the tuple; this module builds those
closures by sequential half-plane clipping over ``fractions.Fraction``, so
vertices and areas are exact.

Emptiness always means "zero area": measure-zero slivers (points, segments)
count as empty, which is the convention under which the classification
tables for short tuples come out exactly.  Degenerate results keep their
vertex list for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

from .continuant import KTuple, as_ktuple, continuant

Point = tuple[Fraction, Fraction]

_ZERO = Fraction(0)


def _pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


@dataclass(frozen=True)
class HalfPlane:
    """Constraint a*x + b*y <= c, or < c when ``strict``.

    Clipping always intersects with the closure; the strict flag only
    records which side of the boundary belongs to the underlying half-open
    cell.  (a, b) must not both vanish.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a == 0 and self.b == 0:
            raise ValueError("half-plane needs a nonzero normal vector")

    def excess(self, p: Point) -> Fraction:
        """a*x + b*y - c; nonpositive on the closure."""
        return self.a * p[0] + self.b * p[1] - self.c

    def admits(self, p: Point) -> bool:
        """Membership honouring the recorded sense (strict or not)."""
        v = self.excess(p)
        return v < 0 if self.strict else v <= 0


def _cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(points: Iterable[Point]) -> tuple[Point, ...]:
    """Convex hull, counter-clockwise from the lexicographically smallest
    vertex, with collinear points pruned.  Collapses to <= 2 points for
    degenerate input."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = tuple(lower[:-1] + upper[:-1])
    if len(hull) < 3:  # every input point was collinear
        return (pts[0], pts[-1])
    return hull


@dataclass(frozen=True)
class ConvexRegion:
    """Closed convex polygon, CCW vertices starting at the smallest one.

    Zero, one or two vertices encode a region with empty interior (the
    degenerate vertex list is kept as a diagnostic).
    """

    vertices: tuple[Point, ...] = ()

    @staticmethod
    def from_points(points: Iterable[Point]) -> "ConvexRegion":
        return ConvexRegion(_hull(points))

    @cached_property
    def area(self) -> Fraction:
        vs = self.vertices
        if len(vs) < 3:
            return _ZERO
        twice = _ZERO
        for i, (x0, y0) in enumerate(vs):
            x1, y1 = vs[(i + 1) % len(vs)]
            twice += x0 * y1 - x1 * y0
        return abs(twice) / 2

    @property
    def is_empty(self) -> bool:
        """True when the interior is empty (zero area)."""
        return self.area == 0

    def centroid(self) -> Point:
        """Vertex average; an interior point whenever the area is positive."""
        if not self.vertices:
            raise ValueError("region with no vertices has no centroid")
        n = len(self.vertices)
        sx = sum(v[0] for v in self.vertices)
        sy = sum(v[1] for v in self.vertices)
        return (Fraction(sx, n), Fraction(sy, n))

    def contains(self, point, strict: bool = False) -> bool:
        """Closure membership, or interior membership when ``strict``."""
        p = _pt(*point)
        vs = self.vertices
        if len(vs) < 3:
            if strict or not vs:
                return False
            if len(vs) == 1:
                return p == vs[0]
            return _cross(vs[0], vs[1], p) == 0 and min(vs) <= p <= max(vs)
        for i in range(len(vs)):
            turn = _cross(vs[i], vs[(i + 1) % len(vs)], p)
            if turn < 0 or (strict and turn == 0):
                return False
        return True


def area(region: ConvexRegion) -> Fraction:
    """Exact shoelace area of the closure (0 for empty regions)."""
    return region.area


@lru_cache(maxsize=1)
def farey_triangle() -> ConvexRegion:
    """Closure of {0 < x, y <= 1, x + y > 1}: the triangle (0,1), (1,0), (1,1)."""
    return ConvexRegion.from_points([_pt(0, 1), _pt(1, 1), _pt(1, 0)])


def base_cell(k: int) -> ConvexRegion:
    """Closure of the part of the triangle where floor((1+x)/y) == k.

    k = 1 gives the triangle (0,1), (1,1), (1/3,2/3); k >= 2 gives the
    quadrangle (k/(k+2), 2/(k+2)), (1, 2/k), (1, 2/(k+1)),
    ((k-1)/(k+1), 2/(k+1)).
    """
    if k < 1:
        raise ValueError("index k must be >= 1")
    if k == 1:
        pts = [_pt(0, 1), _pt(1, 1), _pt(Fraction(1, 3), Fraction(2, 3))]
    else:
        pts = [
            _pt(Fraction(k, k + 2), Fraction(2, k + 2)),
            _pt(1, Fraction(2, k)),
            _pt(1, Fraction(2, k + 1)),
            _pt(Fraction(k - 1, k + 1), Fraction(2, k + 1)),
        ]
    return ConvexRegion.from_points(pts)


def base_cell_area(k: int) -> Fraction:
    """Closed-form area of base_cell(k): 1/6 for k = 1, else 4/(k(k+1)(k+2))."""
    if k < 1:
        raise ValueError("index k must be >= 1")
    if k == 1:
        return Fraction(1, 6)
    return Fraction(4, k * (k + 1) * (k + 2))


def constraint_pair(k, i: int) -> tuple[HalfPlane, HalfPlane]:
    """The two half-planes that the i-th index value adds to a cell system.

    Written with denominators cleared: the i-th condition on a point whose
    running pair is (q_{i-2}, q_{i-1}) is k_i <= (1 + q_{i-2})/q_{i-1} <
    k_i + 1, and multiplying through by q_{i-1} > 0 turns it into

        K(k1..ki)*y - K(k2..ki)*x <= 1           (the "g" side, non-strict)
        K(k1..ki^+)*y - K(k2..ki^+)*x > 1        (the "f" side, strict)

    where ^+ bumps the last entry by one.  No continuant is ever divided
    by, so non-positive values (empty tuples' cells) need no special
    casing.  Returns (f, g).
    """
    k = as_ktuple(k)
    if not 1 <= i <= len(k):
        raise ValueError(f"constraint index {i} out of range for tuple of length {len(k)}")
    head = k[:i]
    bumped = head[:-1] + (head[-1] + 1,)
    b_g, a_g = continuant(head), continuant(head[1:])
    b_f, a_f = continuant(bumped), continuant(bumped[1:])
    # g:  b_g*y - a_g*x <= 1;   f:  b_f*y - a_f*x > 1, stored as a_f*x - b_f*y < -1
    g = HalfPlane(a=-a_g, b=b_g, c=1, strict=False)
    f = HalfPlane(a=a_f, b=-b_f, c=-1, strict=True)
    return f, g


def clip(region: ConvexRegion, half_plane: HalfPlane) -> ConvexRegion:
    """Exact intersection of the region with the closure of the half-plane.

    Returns the region object unchanged when the constraint is vacuous over
    it; degenerate (zero-area) outputs keep their vertices.
    """
    vs = region.vertices
    if not vs:
        return region
    exc = [half_plane.excess(v) for v in vs]
    if all(e <= 0 for e in exc):
        return region
    if all(e > 0 for e in exc):
        return ConvexRegion()
    out: list[Point] = []
    n = len(vs)
    for i in range(n):
        p, ep = vs[i], exc[i]
        q, eq = vs[(i + 1) % n], exc[(i + 1) % n]
        if ep <= 0:
            out.append(p)
        if (ep < 0 < eq) or (eq < 0 < ep):
            t = ep / (ep - eq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return ConvexRegion.from_points(out)


def cell(k) -> ConvexRegion:
    """Closure of the cell of the index tuple k (empty tuple: whole triangle).

    Built by clipping the triangle with constraint_pair(k, i) for each i;
    prefixes are cached, so enumerating by extension is cheap.
    """
    return _cell(as_ktuple(k))


@lru_cache(maxsize=None)
def _cell(k: KTuple) -> ConvexRegion:
    if not k:
        return farey_triangle()
    region = _cell(k[:-1])
    f, g = constraint_pair(k, len(k))
    return clip(clip(region, g), f)


def is_empty(k) -> bool:
    """True when the cell of k has empty interior (zero area)."""
    return cell(k).is_empty


def enumerate_nonempty(max_len: int, kmax: int) -> Iterator[KTuple]:
    """All tuples with non-empty cells, entries <= kmax, length <= max_len.

    Depth-first, extensions right after their prefix; prefix emptiness
    prunes the walk (a non-empty cell forces non-empty prefixes).
    """
    if max_len < 1 or kmax < 1:
        raise ValueError("max_len and kmax must be >= 1")

    def walk(prefix: KTuple) -> Iterator[KTuple]:
        for e in range(1, kmax + 1):
            t = prefix + (e,)
            if not is_empty(t):
                yield t
                if len(t) < max_len:
                    yield from walk(t)

    yield from walk(())


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def region_dump(k) -> dict:
    """JSON-ready exact description of cell(k); rationals as strings/pairs."""
    t = as_ktuple(k)
    r = cell(t)
    return {
        "tuple": list(t),
        "empty": r.is_empty,
        "vertices": [
            [[v[0].numerator, v[0].denominator], [v[1].numerator, v[1].denominator]]
            for v in r.vertices
        ],
        "area": _frac_str(r.area),
    }
