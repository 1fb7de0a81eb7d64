"""Exact tools for Farey-fraction gap statistics in residue classes.

The package computes, verifies and explores the distribution of gap orders
between Farey fractions whose denominators lie in a fixed residue class
(modulus 3 for the limit formulas, arbitrary moduli for the empirical
counter).  Everything structural is exact: continuants, polygon cells of
the triangle map, tuple-set enumeration and the rational parts of the
limit proportions.
"""

from .bcz import bcz_map, in_triangle, itinerary, kappa
from .continuant import (
    FAMILY_NAMES,
    KTuple,
    as_ktuple,
    continuant,
    expand_family,
    family_continuant,
)
from .farey import GapHistogram, empirical_nu, farey_iter, gap_histogram
from .geometry import (
    ConvexRegion,
    HalfPlane,
    area,
    base_cell,
    base_cell_area,
    cell,
    clip,
    constraint_pair,
    enumerate_nonempty,
    farey_triangle,
    is_empty,
    region_dump,
)
from .proportions import (
    AreaLimit,
    ProportionReport,
    ReportRow,
    limit_nu_area,
    limit_nu_closed,
    limit_nu_closed_fraction,
    tail_identity_check,
    verify_report,
)
from .tuple_sets import (
    FixedRow,
    ParamRow,
    ResidueSpec,
    TupleSetPage,
    closed_families,
    closed_form_circ,
    continuant_column,
    enumerate_circ,
    enumerate_star,
    satisfies_circ,
    satisfies_star,
)

__version__ = "0.1.0"

__all__ = [
    "AreaLimit",
    "ConvexRegion",
    "FAMILY_NAMES",
    "FixedRow",
    "GapHistogram",
    "HalfPlane",
    "KTuple",
    "ParamRow",
    "ProportionReport",
    "ReportRow",
    "ResidueSpec",
    "TupleSetPage",
    "area",
    "as_ktuple",
    "base_cell",
    "base_cell_area",
    "bcz_map",
    "cell",
    "clip",
    "closed_families",
    "closed_form_circ",
    "constraint_pair",
    "continuant",
    "continuant_column",
    "empirical_nu",
    "enumerate_circ",
    "enumerate_nonempty",
    "enumerate_star",
    "expand_family",
    "family_continuant",
    "farey_iter",
    "farey_triangle",
    "gap_histogram",
    "in_triangle",
    "is_empty",
    "itinerary",
    "kappa",
    "limit_nu_area",
    "limit_nu_closed",
    "limit_nu_closed_fraction",
    "region_dump",
    "satisfies_circ",
    "satisfies_star",
    "tail_identity_check",
    "verify_report",
]
