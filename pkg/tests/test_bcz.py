"""Triangle-map dynamics as an independent oracle for the polygon engine."""

from fractions import Fraction as F

import pytest

from fareygaps.bcz import bcz_map, in_triangle, itinerary, kappa
from fareygaps.farey import farey_iter
from fareygaps.geometry import HalfPlane, ConvexRegion, base_cell, cell, clip, enumerate_nonempty


def test_kappa_values():
    assert kappa((1, 1)) == 2
    assert kappa((F(1, 5), 1)) == 1
    assert kappa((F(2, 3), F(2, 5))) == 4


def test_kappa_rejects_outside():
    with pytest.raises(ValueError):
        kappa((F(1, 3), F(1, 3)))
    with pytest.raises(ValueError):
        kappa((0, 1))


def test_map_fixed_point():
    assert bcz_map((1, 1)) == (F(1), F(1))
    assert itinerary((1, 1), 3) == (2, 2, 2)


def test_map_consecutive_denominator_steps():
    assert bcz_map((F(1, 5), 1)) == (F(1), F(4, 5))
    assert bcz_map((1, F(4, 5))) == (F(4, 5), F(3, 5))


def test_map_stays_in_triangle():
    p = (F(3, 7), F(5, 7))
    for _ in range(25):
        assert in_triangle(p)
        p = bcz_map(p)


def test_itinerary_of_cell_centroids():
    assert itinerary(cell((3, 2, 1, 7)).centroid(), 4) == (3, 2, 1, 7)
    assert itinerary(base_cell(5).centroid(), 1) == (5,)
    for t in enumerate_nonempty(max_len=4, kmax=8):
        assert itinerary(cell(t).centroid(), len(t)) == t


def test_itinerary_matches_cell_membership_on_grid():
    # the dynamical route and the polygon route must agree pointwise
    for i in range(1, 21):
        for j in range(1, 21):
            p = (F(i, 20), F(j, 20))
            if not in_triangle(p):
                continue
            t = itinerary(p, 3)
            assert cell(t).contains(p), (p, t)


def test_farey_consistency():
    q_max = 100
    prev2 = prev = None
    for _, q in farey_iter(q_max):
        if prev2 is not None:
            x, y = F(prev2, q_max), F(prev, q_max)
            assert bcz_map((x, y)) == (y, F(q, q_max))
        prev2, prev = prev, q


def test_affine_branch_preserves_area():
    roof = HalfPlane(0, -1, F(-3, 4))  # y >= 3/4
    for k in range(1, 5):
        piece = clip(base_cell(k), roof)
        image = ConvexRegion.from_points(
            [(y, k * y - x) for (x, y) in piece.vertices]
        )
        assert image.area == piece.area


def test_itinerary_validates_arguments():
    with pytest.raises(ValueError):
        itinerary((1, 1), 0)
    with pytest.raises(ValueError):
        itinerary((2, 2), 1)
