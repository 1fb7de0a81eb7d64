"""Integer continuants with a minus-sign recurrence, plus closed families.

The recurrence here is K() = 1, K(k1) = k1, K(k1..kn) = kn*K(k1..k(n-1)) -
K(k1..k(n-2)).  Note the minus sign: this is *not* the classical
continued-fraction continuant.  These integers supply the coefficients of
the linear constraints bounding the index cells of the Farey triangle and
enter the residue conditions that pick out tuples for the gap statistics,
so everything in this module is exact integer arithmetic.

Several families built from runs of twos admit closed forms (and show up
all over the cell geometry); they are collected in ``family_continuant`` so
callers and tests can cross-check the recurrence against them.
"""

from __future__ import annotations

from typing import Iterable

KTuple = tuple[int, ...]


def as_ktuple(entries: Iterable[int]) -> KTuple:
    """Validate and freeze a sequence of cell indices (all entries >= 1)."""
    t = tuple(entries)
    for e in t:
        if not isinstance(e, int) or isinstance(e, bool) or e < 1:
            raise ValueError(f"tuple entries must be integers >= 1, got {e!r}")
    return t


def continuant(entries: Iterable[int]) -> int:
    """Continuant of the tuple; the empty tuple gives 1, a single entry itself.

    The value may legitimately be <= 0; that only happens for tuples whose
    cell is empty (non-empty cells always have continuant >= 1).
    """
    prev, cur = 0, 1
    for e in as_ktuple(entries):
        prev, cur = cur, e * cur - prev
    return cur


def _twos(n: int) -> KTuple:
    return (2,) * n


# family id -> (expander, closed form, takes a trailing k)
_FAMILIES = {
    "pow2": (lambda n, k: _twos(n), lambda n, k: n + 1, False),
    "pow2_k": (lambda n, k: _twos(n) + (k,), lambda n, k: k * (n + 1) - n, True),
    "pow2_1_k": (lambda n, k: _twos(n) + (1, k), lambda n, k: k - n - 1, True),
    "three_pow2": (lambda n, k: (3,) + _twos(n), lambda n, k: 2 * n + 3, False),
    "three_pow2_k": (
        lambda n, k: (3,) + _twos(n) + (k,),
        lambda n, k: k * (2 * n + 3) - (2 * n + 1),
        True,
    ),
    "three_pow2_1_k": (
        lambda n, k: (3,) + _twos(n) + (1, k),
        lambda n, k: 2 * k - 2 * n - 3,
        True,
    ),
}

FAMILY_NAMES = tuple(sorted(_FAMILIES))


def _family_args(family: str, n: int, k: int | None):
    try:
        expand, closed, takes_k = _FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown continuant family {family!r}") from None
    if n < 0:
        raise ValueError("run length n must be >= 0")
    if takes_k:
        if k is None:
            raise ValueError(f"family {family!r} needs a trailing entry k")
        if k < 1:
            raise ValueError("trailing entry k must be >= 1")
    elif k is not None:
        raise ValueError(f"family {family!r} takes no trailing entry")
    return expand, closed


def expand_family(family: str, n: int, k: int | None = None) -> KTuple:
    """Explicit tuple for a closed family, e.g. pow2_1_k(2, 5) -> (2, 2, 1, 5)."""
    expand, _ = _family_args(family, n, k)
    return expand(n, k)


def family_continuant(family: str, n: int, k: int | None = None) -> int:
    """Closed-form continuant of a family; equals continuant(expand_family(...))."""
    _, closed = _family_args(family, n, k)
    return closed(n, k)
