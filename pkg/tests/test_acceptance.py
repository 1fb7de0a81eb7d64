"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Tolerances and runtime budgets are pinned here; nothing
is deferred to later calibration.
"""

from contextlib import contextmanager
from fractions import Fraction as F
from time import perf_counter

from fareygaps.bcz import bcz_map, itinerary
from fareygaps.continuant import FAMILY_NAMES, continuant, expand_family, family_continuant
from fareygaps.farey import empirical_nu, farey_iter, gap_histogram
from fareygaps.geometry import area, cell, enumerate_nonempty, is_empty
from fareygaps.proportions import (
    limit_nu_area,
    limit_nu_closed,
    limit_nu_closed_fraction,
    tail_identity_check,
)
from fareygaps.tuple_sets import (
    FixedRow,
    ResidueSpec,
    closed_families,
    closed_form_circ,
    enumerate_circ,
)


@contextmanager
def criterion(number, name, limit_seconds=None):
    start = perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} {name}: FAIL")
        raise
    elapsed = perf_counter() - start
    if limit_seconds is not None:
        assert elapsed < limit_seconds, (
            f"criterion {number} took {elapsed:.1f}s (budget {limit_seconds}s)"
        )
    print(f"ACCEPTANCE {number} {name}: PASS ({elapsed:.2f}s)")


# criterion 1 ---------------------------------------------------------------

WINDOW_CELLS = {
    7: ({(F(4, 7), F(3, 7)), (F(3, 4), F(1, 2)), (F(10, 17), F(7, 17))}, F(1, 476)),
    8: (
        {(F(10, 17), F(7, 17)), (F(3, 4), F(1, 2)), (F(8, 9), F(5, 9)), (F(3, 5), F(2, 5))},
        F(13, 3060),
    ),
    9: (
        {(F(3, 5), F(2, 5)), (F(8, 9), F(5, 9)), (F(1), F(3, 5)), (F(8, 11), F(5, 11))},
        F(2, 495),
    ),
    10: (
        {(F(8, 11), F(5, 11)), (F(1), F(3, 5)), (F(1), F(10, 17)), (F(5, 6), F(1, 2))},
        F(7, 2805),
    ),
    11: (
        {(F(5, 6), F(1, 2)), (F(1), F(10, 17)), (F(1), F(11, 19)), (F(12, 13), F(7, 13))},
        F(14, 12597),
    ),
    12: ({(F(12, 13), F(7, 13)), (F(1), F(11, 19)), (F(1), F(4, 7))}, F(1, 3458)),
}


def test_criterion_1_window_cells_exact():
    with criterion(1, "window cells (3,2,1,k), k=7..12: exact vertices and areas", 1.0):
        for k, (vertices, expected_area) in WINDOW_CELLS.items():
            region = cell((3, 2, 1, k))
            assert set(region.vertices) == vertices, k
            assert region.area == expected_area, k


def test_criterion_2_partition_of_parent_cell():
    with criterion(2, "window areas sum to the parent cell area 1/70", 1.0):
        total = sum(cell((3, 2, 1, k)).area for k in range(7, 13))
        parent = cell((3, 2, 1)).area
        assert total == parent == F(1, 70)


# criterion 3 ---------------------------------------------------------------


def long_window_areas(r):
    """Closed forms for the seven areas of (3, 2^(r-3), 1, k), k = 4r-10..4r-4."""
    return [
        F(1, 2 * (2 * r - 5) * (4 * r - 9) * (6 * r - 13)),
        F(9 * r - 19, 2 * (r - 2) * (4 * r - 9) * (6 * r - 13) * (6 * r - 11)),
        F(5 * r - 9, 2 * (r - 2) * (2 * r - 3) * (4 * r - 7) * (6 * r - 11)),
        F(2, (2 * r - 3) * (4 * r - 7) * (4 * r - 5)),
        F(5 * r - 6, 2 * (r - 1) * (2 * r - 3) * (4 * r - 5) * (6 * r - 7)),
        F(9 * r - 8, 2 * (r - 1) * (4 * r - 3) * (6 * r - 7) * (6 * r - 5)),
        F(1, 2 * (2 * r - 1) * (4 * r - 3) * (6 * r - 5)),
    ]


def test_criterion_3_long_window_closed_forms():
    with criterion(3, "long windows r=6..12: closed-form areas and their sum", 10.0):
        for r in range(6, 13):
            head = (3,) + (2,) * (r - 3) + (1,)
            got = [area(cell(head + (k,))) for k in range(4 * r - 10, 4 * r - 3)]
            assert got == long_window_areas(r), r
            assert sum(got) == F(2, (2 * r - 5) * (2 * r - 3) * (2 * r - 1)), r


# criterion 4 ---------------------------------------------------------------


def pair_empty_expected(k, m):
    return (
        (m == 1 and k == 1)
        or (m == 2 and k >= 5)
        or (m in (3, 4) and k >= 3)
        or (m >= 5 and k >= 2)
    )


def triple_empty_expected(k, m, n):
    if pair_empty_expected(k, m) or pair_empty_expected(m, n):
        return True
    if m == 1:
        if k == 2 and 1 <= n <= 5:
            return True
        if k == 3 and n not in (4, 5, 6, 7, 8):
            return True
        if k == 4 and n not in (3, 4, 5):
            return True
        if k == 5 and n not in (3, 4):
            return True
        if 6 <= k <= 8 and n >= 4:
            return True
        if k >= 9 and n >= 3:
            return True
    elif m == 2:
        if k == 1 and n not in (2, 3, 4):
            return True
        if k == 2 and n >= 4:
            return True
        if k == 3 and n >= 3:
            return True
        if k == 4 and n >= 2:
            return True
    elif m == 3:
        if k in (1, 2) and n >= 3:
            return True
    elif m == 4:
        if k == 1 and n >= 3:
            return True
        if k == 2 and n >= 2:
            return True
    elif m >= 5:
        if k == 1 and n >= 2:
            return True
    return False


def test_criterion_4_emptiness_classification():
    with criterion(4, "pair and triple emptiness tables up to 30", 60.0):
        for k in range(1, 31):
            for m in range(1, 31):
                assert is_empty((k, m)) == pair_empty_expected(k, m), (k, m)
        for k in range(1, 31):
            for m in range(1, 31):
                for n in range(1, 31):
                    assert is_empty((k, m, n)) == triple_empty_expected(k, m, n), (k, m, n)


# criterion 5 ---------------------------------------------------------------


def test_criterion_5_brute_force_equals_closed_forms():
    with criterion(5, "brute force vs closed forms, r<=7, four residue specs", 120.0):
        for c0, c1 in ((1, 2), (2, 1), (1, 0), (2, 0)):
            spec = ResidueSpec(3, c0, c1)
            for r in range(1, 8):
                kmax = 4 * r + 8
                brute = enumerate_circ(r, spec, kmax)
                closed = closed_form_circ(r, spec, kmax)
                assert brute.tuples == closed.tuples, (c0, c1, r)


# criterion 6 ---------------------------------------------------------------

PRINTED_DECIMALS = {
    0: 0.3333333333,
    1: 0.1434580504,
    2: 0.2629661031,
    3: 0.1370814561,
    4: 0.0773922912,
    5: 0.0351867552,
}


def test_criterion_6_limit_values():
    with criterion(6, "limit values: printed decimals, area route, total mass"):
        for r, printed in PRINTED_DECIMALS.items():
            assert abs(limit_nu_closed(r) - printed) <= 1e-10, r
        assert round(limit_nu_closed(3), 10) == 0.1370814561
        assert round(limit_nu_closed(4), 10) == 0.0773922912
        for r in range(1, 6):
            ar = limit_nu_area(r, terms=100_000)
            assert abs(ar.value - limit_nu_closed(r)) <= ar.tail_bound + 1e-10, r
        for r in range(6, 21):
            ar = limit_nu_area(r)
            assert ar.exact == limit_nu_closed_fraction(r), r
        assert tail_identity_check() == F(2, 189)
        total = sum(limit_nu_closed(r) for r in range(0, 6)) + float(F(2, 189))
        assert abs(total - 1.0) <= 1e-10


# criterion 7 ---------------------------------------------------------------


def test_criterion_7_empirical_convergence():
    with criterion(7, "empirical proportions at Q=5000 within 0.01 for r<=8", 60.0):
        for c0 in (1, 2):
            hist = gap_histogram(5000, 3, c0, rmax=64)
            for r in range(0, 9):
                diff = abs(empirical_nu(hist, r) - limit_nu_closed(r, c0))
                assert diff <= 0.01, (c0, r, diff)
        zero_hist = gap_histogram(5000, 3, 0, rmax=64)
        assert zero_hist.counts.get(0, 0) == 0


# criterion 8 ---------------------------------------------------------------


def test_criterion_8_dynamics_consistency():
    with criterion(8, "map matches Farey stream at Q=500; centroid itineraries", 60.0):
        q_max = 500
        prev2 = prev = None
        for _, q in farey_iter(q_max):
            if prev2 is not None:
                x, y = F(prev2, q_max), F(prev, q_max)
                assert bcz_map((x, y)) == (y, F(q, q_max))
            prev2, prev = prev, q
        for t in enumerate_nonempty(max_len=5, kmax=12):
            assert itinerary(cell(t).centroid(), len(t)) == t, t


# criterion 9 ---------------------------------------------------------------


def test_criterion_9_continuant_tables():
    with criterion(9, "continuant families and table columns up to 40", 1.0):
        for family in FAMILY_NAMES:
            takes_k = family not in ("pow2", "three_pow2")
            for n in range(0, 13):
                if not takes_k:
                    assert family_continuant(family, n) == continuant(expand_family(family, n))
                    continue
                for k in range(1, 41):
                    expanded = expand_family(family, n, k)
                    assert family_continuant(family, n, k) == continuant(expanded)
        for spec in (ResidueSpec(3, 1, 2), ResidueSpec(3, 1, 0)):
            for r in range(1, 13):
                for row in closed_families(r, spec):
                    if isinstance(row, FixedRow):
                        for t, expected in zip(row.tuples, row.continuants):
                            assert continuant(t) == expected, t
                    else:
                        for k in row.ks(40):
                            assert continuant(row.make(k)) == row.continuant_form(k), (row.shape, k)
