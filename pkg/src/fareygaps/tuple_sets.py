"""Membership tests and generators for the residue-selected index-tuple sets.

A tuple (k1..kr) enters the "circ" set of (modulus, c0, c1) when its cell is
non-empty, the mixed continuant residues c1*K(k1..ki) - c0*K(k2..ki) avoid
c0 (mod modulus) for i < r, and the final one hits c0.  The "star" variant
negates the final condition.  In gap terms: starting from a denominator
residue c0 followed by c1, "circ" tuples are exactly those whose (r+1)-th
denominator is the first to return to residue c0.

The brute-force enumerator works for any residue data and is the check of
record; closed-form tables are provided for modulus 3 with c0 in {1, 2}
(c1 in {0} or the other nonzero residue), including the one-parameter tail
families that stabilize for large r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterator

from .continuant import KTuple, as_ktuple, continuant
from .geometry import is_empty


@dataclass(frozen=True)
class ResidueSpec:
    """Residue data (modulus, c0, c1): colored class c0, follower class c1."""

    modulus: int
    c0: int
    c1: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if not 0 <= self.c0 < self.modulus:
            raise ValueError("c0 must lie in [0, modulus)")
        if not 0 <= self.c1 < self.modulus:
            raise ValueError("c1 must lie in [0, modulus)")
        if self.c1 == self.c0:
            raise ValueError("c1 must differ from c0")

    @property
    def coprime_follower(self) -> bool:
        """gcd(c1, gcd(c0, modulus)) == 1, the condition under which the
        class contributes to the limit sums."""
        return gcd(self.c1, gcd(self.c0, self.modulus)) == 1


def _residue(k: KTuple, i: int, spec: ResidueSpec) -> int:
    return (spec.c1 * continuant(k[:i]) - spec.c0 * continuant(k[1:i])) % spec.modulus


def satisfies_circ(k, spec: ResidueSpec) -> bool:
    """Residue conditions only (geometry not consulted): first r-1 steps
    avoid c0, final step hits it."""
    t = as_ktuple(k)
    if not t:
        raise ValueError("tuple must have length >= 1")
    target = spec.c0 % spec.modulus
    r = len(t)
    if any(_residue(t, i, spec) == target for i in range(1, r)):
        return False
    return _residue(t, r, spec) == target


def satisfies_star(k, spec: ResidueSpec) -> bool:
    """All r residue steps avoid c0 (the final condition negated)."""
    t = as_ktuple(k)
    if not t:
        raise ValueError("tuple must have length >= 1")
    target = spec.c0 % spec.modulus
    return all(_residue(t, i, spec) != target for i in range(1, len(t) + 1))


@dataclass(frozen=True)
class TupleSetPage:
    """One enumeration result: the sorted tuples plus their provenance."""

    r: int
    spec: ResidueSpec
    kmax: int
    tuples: tuple[KTuple, ...]
    source: str  # "brute" or "closed"

    def to_json_dict(self) -> dict:
        return {
            "r": self.r,
            "modulus": self.spec.modulus,
            "c0": self.spec.c0,
            "c1": self.spec.c1,
            "kmax": self.kmax,
            "tuples": [list(t) for t in self.tuples],
            "source": self.source,
        }


def _enumerate(r: int, spec: ResidueSpec, kmax: int, final_hits: bool) -> list[KTuple]:
    if r < 1 or kmax < 1:
        raise ValueError("r and kmax must be >= 1")
    target = spec.c0 % spec.modulus
    found: list[KTuple] = []

    def extend(prefix: KTuple) -> None:
        depth = len(prefix) + 1
        last = depth == r
        for e in range(1, kmax + 1):
            t = prefix + (e,)
            if is_empty(t):  # prefix emptiness kills every extension too
                continue
            hit = _residue(t, depth, spec) == target
            if last:
                if hit == final_hits:
                    found.append(t)
            elif not hit:
                extend(t)

    extend(())
    return found


def enumerate_circ(r: int, spec: ResidueSpec, kmax: int) -> TupleSetPage:
    """Brute-force "circ" set over entries <= kmax, lexicographically sorted.

    Prefixes are pruned both by the residue conditions and by cell
    emptiness, so moderate r stays fast even for kmax in the thirties.
    """
    tuples = tuple(sorted(_enumerate(r, spec, kmax, final_hits=True)))
    return TupleSetPage(r=r, spec=spec, kmax=kmax, tuples=tuples, source="brute")


def enumerate_star(r: int, spec: ResidueSpec, kmax: int) -> TupleSetPage:
    """Brute-force "star" set (no return to c0 within r steps)."""
    tuples = tuple(sorted(_enumerate(r, spec, kmax, final_hits=False)))
    return TupleSetPage(r=r, spec=spec, kmax=kmax, tuples=tuples, source="brute")


@dataclass(frozen=True)
class FixedRow:
    """Finitely many explicit tuples with their known continuants."""

    tuples: tuple[KTuple, ...]
    continuants: tuple[int, ...]


@dataclass(frozen=True)
class ParamRow:
    """One-parameter family make(k) for k in [k_min, k_max] (k_max None =
    unbounded), optionally restricted to k ≡ residue (mod 3).

    ``continuant_form`` is the closed form of the family's continuant.  For
    unbounded families, ``tail_from`` is the k from which the cell area
    collapses to the single-index area 4/(k(k+1)(k+2)); the limit machinery
    sums those tails as series.
    """

    shape: str
    make: Callable[[int], KTuple] = field(compare=False)
    k_min: int
    k_max: int | None
    residue: int | None
    continuant_form: Callable[[int], int] = field(compare=False)
    tail_from: int | None = None

    def ks(self, kmax: int | None = None) -> Iterator[int]:
        hi = self.k_max if kmax is None else (
            kmax if self.k_max is None else min(self.k_max, kmax)
        )
        if hi is None:
            raise ValueError("unbounded family needs a kmax to iterate")
        for k in range(self.k_min, hi + 1):
            if self.residue is None or k % 3 == self.residue:
                yield k


def _fixed(*pairs: tuple[KTuple, int]) -> FixedRow:
    return FixedRow(tuple(t for t, _ in pairs), tuple(c for _, c in pairs))


def _rows_c1_nonzero(r: int) -> tuple:
    """Closed description when both residues are nonzero ({c0,c1} = {1,2})."""
    if r == 1:
        return (
            ParamRow("(k)", lambda k: (k,), 1, None, 1, lambda k: k, tail_from=2),
        )
    if r == 2:
        return (
            ParamRow("(k,1)", lambda k: (k, 1), 2, None, 2, lambda k: k - 1, tail_from=5),
            _fixed(((2, 2), 3), ((2, 3), 5), ((2, 4), 7)),
        )
    if r == 3:
        return (
            ParamRow("(k,1,2)", lambda k: (k, 1, 2), 6, None, 0, lambda k: k - 2, tail_from=9),
            ParamRow("(3,1,k)", lambda k: (3, 1, k), 4, 8, None, lambda k: 2 * k - 3),
            _fixed(((6, 1, 3), 9)),
        )
    if r == 4:
        return (
            ParamRow("(3,2,1,k)", lambda k: (3, 2, 1, k), 7, 12, None, lambda k: 2 * k - 5),
        )
    # r >= 5: the single window family (3, 2^(r-3), 1, k)
    run = (3,) + (2,) * (r - 3)
    return (
        ParamRow(
            f"(3,2^{r - 3},1,k)",
            lambda k, _run=run: _run + (1, k),
            4 * r - 10,
            4 * r - 4,
            None,
            lambda k, _r=r: 2 * k - 2 * _r + 3,
        ),
    )


def _rows_c1_zero(r: int) -> tuple:
    """Closed description when the follower class is 0 (c1 = 0, c0 in {1,2})."""
    if r == 1:
        return ()
    if r == 2:
        return (
            ParamRow("(1,k)", lambda k: (1, k), 2, None, 2, lambda k: k - 1, tail_from=5),
            _fixed(((2, 2), 3), ((3, 2), 5), ((4, 2), 7)),
        )
    if r == 3:
        return (
            ParamRow("(1,k,1)", lambda k: (1, k, 1), 3, None, 0, lambda k: k - 2, tail_from=6),
            ParamRow("(2,1,k)", lambda k: (2, 1, k), 6, None, 0, lambda k: k - 2, tail_from=9),
            _fixed(((1, 3, 2), 3), ((2, 3, 1), 3), ((2, 3, 2), 8), ((3, 1, 6), 9)),
            ParamRow("(k,1,3)", lambda k: (k, 1, 3), 4, 8, None, lambda k: 2 * k - 3),
        )
    if r == 4:
        return (
            ParamRow("(1,k,1,2)", lambda k: (1, k, 1, 2), 7, None, 1, lambda k: k - 3, tail_from=9),
            ParamRow("(2,1,k,1)", lambda k: (2, 1, k, 1), 7, None, 1, lambda k: k - 3, tail_from=9),
            _fixed(
                ((1, 4, 1, 3), 3), ((3, 1, 4, 1), 3),
                ((1, 4, 1, 4), 5), ((4, 1, 4, 1), 5),
                ((1, 4, 1, 5), 7), ((5, 1, 4, 1), 7),
                ((2, 4, 1, 3), 8), ((3, 1, 4, 2), 8),
                ((1, 7, 1, 3), 9), ((3, 1, 7, 1), 9),
                ((2, 4, 1, 4), 13), ((4, 1, 4, 2), 13),
            ),
            ParamRow("(k,1,2,3)", lambda k: (k, 1, 2, 3), 7, 12, None, lambda k: 2 * k - 5),
        )
    if r == 5:
        return (
            ParamRow(
                "(2,1,k,1,2)", lambda k: (2, 1, k, 1, 2), 8, None, 2,
                lambda k: k - 4, tail_from=9,
            ),
            ParamRow("(k,1,2,2,3)", lambda k: (k, 1, 2, 2, 3), 10, 16, None, lambda k: 2 * k - 7),
            ParamRow("(k,1,2,4,1)", lambda k: (k, 1, 2, 4, 1), 6, 8, None, lambda k: 2 * k - 5),
            ParamRow("(1,4,2,1,k)", lambda k: (1, 4, 2, 1, k), 6, 8, None, lambda k: 2 * k - 5),
            _fixed(
                ((2, 1, 8, 1, 3), 9),
                ((3, 1, 5, 1, 3), 8),
                ((3, 1, 5, 1, 4), 13),
                ((3, 1, 8, 1, 2), 9),
                ((4, 1, 5, 1, 3), 13),
            ),
        )
    # r >= 6: the single window family (k, 1, 2^(r-3), 3)
    run = (1,) + (2,) * (r - 3) + (3,)
    return (
        ParamRow(
            f"(k,1,2^{r - 3},3)",
            lambda k, _run=run: (k,) + _run,
            4 * r - 10,
            4 * r - 4,
            None,
            lambda k, _r=r: 2 * k - 2 * _r + 3,
        ),
    )


def closed_families(r: int, spec: ResidueSpec) -> tuple:
    """Structured closed-form rows of the "circ" set for the supported specs.

    Supported: modulus 3 with (c0, c1) one of (1,2), (2,1), (1,0), (2,0).
    The two nonzero-follower specs share one table, the zero-follower specs
    the other (each pair consists of the same tuples).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    if spec.modulus != 3 or spec.c0 not in (1, 2):
        raise ValueError(f"no closed-form table for {spec}")
    if spec.c1 == 0:
        return _rows_c1_zero(r)
    return _rows_c1_nonzero(r)


def closed_form_circ(r: int, spec: ResidueSpec, kmax: int) -> TupleSetPage:
    """Expand the closed-form rows, truncating parameters (and entries) at
    kmax; sorted lexicographically, duplicates collapsed."""
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    tuples: set[KTuple] = set()
    for row in closed_families(r, spec):
        if isinstance(row, FixedRow):
            tuples.update(row.tuples)
        else:
            tuples.update(row.make(k) for k in row.ks(kmax))
    tuples = {t for t in tuples if max(t) <= kmax}
    return TupleSetPage(r=r, spec=spec, kmax=kmax, tuples=tuple(sorted(tuples)), source="closed")


def continuant_column(page: TupleSetPage) -> list[int]:
    """Continuant of every tuple on the page, in page order."""
    return [continuant(t) for t in page.tuples]
