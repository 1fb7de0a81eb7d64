"""Farey-sequence streaming and empirical gap statistics.

The stream uses the classic next-term recurrence: after a/q and a'/q' come
(k*a' - a)/(k*q' - q) with k = (Q + q) // q'.  Only the previous two
fractions are kept, so memory is O(1); Python integers are arbitrary
precision, so no overflow guard is needed.  The histogram pass colors the
fractions whose denominator lies in a fixed residue class and counts, for
each pair of consecutive colored fractions, how many uncolored ones sit
between them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator


def farey_iter(q_max: int) -> Iterator[tuple[int, int]]:
    """Yield (numerator, denominator) of every reduced fraction in [0, 1]
    with denominator <= q_max, in ascending order."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    a, q = 0, 1
    b, p = 1, q_max
    yield a, q
    while (a, q) != (1, 1):
        yield b, p
        k = (q_max + q) // p
        a, q, b, p = b, p, k * b - a, k * p - q


@dataclass
class GapHistogram:
    """Counts of gap orders between consecutive colored fractions.

    counts[r] is the number of maximal runs of exactly r uncolored
    fractions enclosed by colored ones; runs longer than rmax land in
    ``overflow``.  ``colored_total`` counts every colored fraction,
    endpoints 0/1 and 1/1 included when their denominator qualifies.
    """

    q_max: int
    modulus: int
    residue: int
    rmax: int
    counts: dict[int, int] = field(default_factory=dict)
    overflow: int = 0
    colored_total: int = 0

    def nu(self, r: int) -> float:
        return empirical_nu(self, r)

    def accounting_ok(self) -> bool:
        """Gaps are one fewer than colored fractions (when any are colored)."""
        total_gaps = sum(self.counts.values()) + self.overflow
        if self.colored_total == 0:
            return total_gaps == 0
        return total_gaps == self.colored_total - 1

    def to_csv(self) -> str:
        """Rows r,count,nu_hat for each nonzero count plus an overflow row."""
        denom = self.colored_total
        lines = ["r,count,nu_hat"]
        for r in sorted(self.counts):
            c = self.counts[r]
            if c:
                lines.append(f"{r},{c},{c / denom!r}")
        lines.append(f"overflow,{self.overflow},{(self.overflow / denom) if denom else 0.0!r}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "q": self.q_max,
            "modulus": self.modulus,
            "residue": self.residue,
            "rmax": self.rmax,
            "colored_total": self.colored_total,
            "counts": {str(r): self.counts[r] for r in sorted(self.counts) if self.counts[r]},
            "overflow": self.overflow,
        }


def gap_histogram(q_max: int, modulus: int, residue: int, rmax: int = 64) -> GapHistogram:
    """Single streaming pass over the Farey sequence of order q_max."""
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    if not 0 <= residue < modulus:
        raise ValueError("residue must lie in [0, modulus)")
    if rmax < 0:
        raise ValueError("rmax must be >= 0")
    counts: dict[int, int] = {}
    overflow = 0
    colored_total = 0
    run = 0
    seen_colored = False
    for _, q in farey_iter(q_max):
        if q % modulus == residue:
            if seen_colored:
                if run <= rmax:
                    counts[run] = counts.get(run, 0) + 1
                else:
                    overflow += 1
            seen_colored = True
            colored_total += 1
            run = 0
        else:
            run += 1
    return GapHistogram(
        q_max=q_max,
        modulus=modulus,
        residue=residue,
        rmax=rmax,
        counts=counts,
        overflow=overflow,
        colored_total=colored_total,
    )


def empirical_nu(hist: GapHistogram, r: int) -> float:
    """Share of colored fractions whose following gap has order exactly r."""
    if hist.colored_total == 0:
        raise ValueError("no colored fractions: empirical proportion undefined")
    return hist.counts.get(r, 0) / hist.colored_total
