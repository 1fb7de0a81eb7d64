"""Exact orbit arithmetic for the BCZ map on the Farey triangle.

The map sends (x, y) to (y, floor((1+x)/y)*y - x).  It is bijective and
area-preserving on the triangle {0 < x, y <= 1, x + y > 1}, affine on each
index cell, and encodes the passage from one pair of consecutive normalized
Farey denominators (q/Q, q'/Q) to the next.  Everything runs on exact
rationals, which makes itineraries usable as an independent oracle for the
polygon engine: the itinerary of any interior point of a cell spells out
the cell's tuple.
"""

from __future__ import annotations

from fractions import Fraction

from .continuant import KTuple

TrianglePoint = tuple[Fraction, Fraction]


def in_triangle(p) -> bool:
    """Half-open membership test: 0 < x <= 1, 0 < y <= 1, x + y > 1."""
    x, y = Fraction(p[0]), Fraction(p[1])
    return 0 < x <= 1 and 0 < y <= 1 and x + y > 1


def _checked(p) -> TrianglePoint:
    x, y = Fraction(p[0]), Fraction(p[1])
    if not (0 < x <= 1 and 0 < y <= 1 and x + y > 1):
        raise ValueError(f"point ({x}, {y}) lies outside the Farey triangle")
    return (x, y)


def kappa(p) -> int:
    """Index value floor((1+x)/y), computed exactly; always >= 1 here."""
    x, y = _checked(p)
    q = (1 + x) / y
    return q.numerator // q.denominator


def bcz_map(p) -> TrianglePoint:
    """One step of the map: (x, y) -> (y, kappa*y - x)."""
    x, y = _checked(p)
    return (y, kappa((x, y)) * y - x)


def itinerary(p, r: int) -> KTuple:
    """First r index values along the orbit of p."""
    if r < 1:
        raise ValueError("itinerary length r must be >= 1")
    cur = _checked(p)
    out = []
    for _ in range(r):
        out.append(kappa(cur))
        cur = bcz_map(cur)
    return tuple(out)
