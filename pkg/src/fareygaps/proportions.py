"""Limit proportions of gap orders for modulus 3, by two independent routes.

``limit_nu_closed`` evaluates the closed forms (combinations of pi/sqrt(3)
and ln 3 for r <= 5, a rational for r >= 6).  ``limit_nu_area`` rebuilds the
same numbers from scratch: it sums exact cell areas over the closed tuple
families, and where a family is infinite it switches, beyond the collapse
threshold, to the single-index areas 4/(k(k+1)(k+2)) summed as a series
with a rigorous truncation bound.  Agreement of the two routes (within the
tail bound) is the headline consistency check of the whole package.

The limits are identical for colored residues 1 and 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .farey import GapHistogram, empirical_nu, gap_histogram
from .geometry import area, cell
from .tuple_sets import FixedRow, ParamRow, ResidueSpec, closed_families

SQRT3 = math.sqrt(3.0)
PI_OVER_SQRT3 = math.pi / SQRT3
LN3 = math.log(3.0)

#: the two tuple-set specs whose area sums make up the limit for c0 = 1
_AREA_SPECS = (ResidueSpec(3, 1, 2), ResidueSpec(3, 1, 0))


def _check_c0(c0: int) -> None:
    if c0 not in (1, 2):
        raise ValueError("closed limits exist for colored residues 1 and 2 only")


def limit_nu_closed_fraction(r: int) -> Fraction:
    """Exact rational limit for r >= 6: 8 / (3(2r-5)(2r-3)(2r-1))."""
    if r < 6:
        raise ValueError("the rational closed form holds for r >= 6")
    return Fraction(8, 3 * (2 * r - 5) * (2 * r - 3) * (2 * r - 1))


def limit_nu_closed(r: int, c0: int = 1) -> float:
    """Limiting share of gaps of order r among colored-endpoint gaps."""
    _check_c0(c0)
    if r < 0:
        raise ValueError("gap order r must be >= 0")
    if r == 0:
        return 1.0 / 3.0
    if r == 1:
        return (2.0 / 3.0) * (PI_OVER_SQRT3 - LN3 - 0.5)
    if r == 2:
        return (8.0 / 3.0) * (LN3 - 1.0)
    if r == 3:
        return 626.0 / 105.0 - 2.0 * PI_OVER_SQRT3 - 2.0 * LN3
    if r == 4:
        return (4.0 / 3.0) * (PI_OVER_SQRT3 - 23.0 / 35.0 - LN3)
    if r == 5:
        return (4.0 / 3.0) * LN3 - 193.0 / 135.0
    return float(limit_nu_closed_fraction(r))


def tail_identity_check(r_stop: int = 40) -> Fraction:
    """Exact sum of all r >= 6 limits: telescoping gives 2/189.

    The partial sum to ``r_stop`` is accumulated term by term and closed
    with the telescoped remainder (2/3)/((2*r_stop-3)(2*r_stop-1)); the
    result is independent of r_stop.
    """
    if r_stop < 6:
        raise ValueError("r_stop must be >= 6")
    partial = sum((limit_nu_closed_fraction(r) for r in range(6, r_stop + 1)), Fraction(0))
    remainder = Fraction(2, 3) / ((2 * r_stop - 3) * (2 * r_stop - 1))
    return partial + remainder


@dataclass(frozen=True)
class AreaLimit:
    """Area-route limit value with its rigorous series truncation bound.

    ``exact`` carries the Fraction when no series had to be truncated
    (finite families only, i.e. r >= 6); otherwise it is None and ``value``
    is finite parts plus truncated series.
    """

    value: float
    tail_bound: float
    exact: Fraction | None = None


def _series_sum(k_first: int, terms: int) -> float:
    """sum of 4/(k(k+1)(k+2)) over k = k_first, k_first+3, ... (terms terms).

    Each term is rounded once from the exact integer product, and the sum
    uses math.fsum, so the float error is far below the truncation bound.
    """
    return math.fsum(
        4.0 / (k * (k + 1) * (k + 2))
        for k in range(k_first, k_first + 3 * terms, 3)
    )


@lru_cache(maxsize=None)
def limit_nu_area(r: int, c0: int = 1, terms: int = 100_000) -> AreaLimit:
    """Reconstruct the limit by summing cell areas over the closed families.

    Finite families (and the below-threshold heads of infinite ones) are
    summed exactly through the polygon engine.  Beyond its collapse
    threshold an infinite family's term equals the single-index area, and
    the series over k ≡ a (mod 3) is truncated after ``terms`` terms with
    tail bound 2/(3*terms - 1)^2 per series.  r = 0 is obtained as the
    complement 1 - sum(r = 1..5) - 2/189.
    """
    _check_c0(c0)
    if terms < 10:
        raise ValueError("terms must be >= 10")
    if r < 0:
        raise ValueError("gap order r must be >= 0")
    if r == 0:
        subs = [limit_nu_area(i, c0, terms) for i in range(1, 6)]
        tail_from_6 = tail_identity_check()
        value = 1.0 - math.fsum(s.value for s in subs) - float(tail_from_6)
        bound = math.fsum(s.tail_bound for s in subs)
        return AreaLimit(value=value, tail_bound=bound)

    exact = Fraction(0)
    series = 0.0
    tail = Fraction(0)
    truncated = False
    per_series_tail = Fraction(2, (3 * terms - 1) ** 2)
    for spec in _AREA_SPECS:
        for row in closed_families(r, spec):
            if isinstance(row, FixedRow):
                exact += sum((area(cell(t)) for t in row.tuples), Fraction(0))
            elif row.k_max is not None:
                exact += sum((area(cell(row.make(k))) for k in row.ks()), Fraction(0))
            else:
                assert isinstance(row, ParamRow) and row.tail_from is not None
                k = row.k_min
                while k < row.tail_from or k % 3 != row.residue:
                    if k % 3 == row.residue:
                        exact += area(cell(row.make(k)))
                    k += 1
                series += _series_sum(k, terms)
                tail += per_series_tail
                truncated = True

    scaled_exact = Fraction(2, 3) * exact
    value = float(scaled_exact) + (2.0 / 3.0) * series
    bound = float(Fraction(2, 3) * tail)
    return AreaLimit(
        value=value,
        tail_bound=bound,
        exact=None if truncated else scaled_exact,
    )


@dataclass(frozen=True)
class ReportRow:
    r: int
    nu_hat: float | None
    nu_closed: float | None
    nu_area: float | None
    tail_bound: float | None
    emp_error: float | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "nu_hat": self.nu_hat,
            "nu_closed": self.nu_closed,
            "nu_area": self.nu_area,
            "tail_bound": self.tail_bound,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class ProportionReport:
    """Per-order comparison of empirical, closed-form and area-route values."""

    q_max: int
    c0: int
    rmax: int
    terms: int
    tol: float
    rows: tuple[ReportRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(row.passed for row in self.rows)

    def to_json_list(self) -> list[dict]:
        return [row.to_json_dict() for row in self.rows]

    def to_csv(self) -> str:
        lines = ["r,nu_hat,nu_closed,nu_area,tail_bound,pass"]
        for row in self.rows:
            cells = [str(row.r)]
            for v in (row.nu_hat, row.nu_closed, row.nu_area, row.tail_bound):
                cells.append("" if v is None else repr(v))
            cells.append(str(row.passed).lower())
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"


# slack for float evaluation on top of the rigorous series tail bound
_FLOAT_SLACK = 1e-10


def verify_report(
    q_max: int,
    rmax: int,
    terms: int = 10_000,
    c0: int = 1,
    tol: float = 0.01,
) -> ProportionReport:
    """Empirical histogram at q_max versus both limit routes, row per order.

    A row passes when |nu_hat - nu_closed| <= tol and the two limit routes
    agree within the series tail bound plus float slack.  With c0 = 0 only
    the r = 0 row is meaningful (it must be exactly zero); the other rows
    carry no limit values.
    """
    if q_max < 100:
        raise ValueError("q_max must be >= 100 for a meaningful comparison")
    if rmax < 0:
        raise ValueError("rmax must be >= 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    hist = gap_histogram(q_max, 3, c0, rmax=max(rmax, 64))
    rows = []
    for r in range(rmax + 1):
        nu_hat = empirical_nu(hist, r)
        if c0 == 0:
            passed = (nu_hat == 0.0) if r == 0 else True
            rows.append(ReportRow(r, nu_hat, None, None, None, None, passed))
            continue
        closed = limit_nu_closed(r, c0)
        ar = limit_nu_area(r, c0, terms)
        emp_err = abs(nu_hat - closed)
        routes_ok = abs(ar.value - closed) <= ar.tail_bound + _FLOAT_SLACK
        passed = emp_err <= tol and routes_ok
        rows.append(ReportRow(r, nu_hat, closed, ar.value, ar.tail_bound, emp_err, passed))
    return ProportionReport(q_max=q_max, c0=c0, rmax=rmax, terms=terms, tol=tol, rows=tuple(rows))
