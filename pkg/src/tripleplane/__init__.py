"""Exact-arithmetic toolkit for special triple covers of the projective plane.

Cohomology of line and split bundles, nearly split rank-2 bundles given by
building data, admissibility of that data, invariants of the associated
triple covers, and exhaustive classification within bounds.  No floating
point anywhere: integers and exact rationals only.
"""

from .admissibility import (
    AdmissibilityLevel,
    AdmissibilityStatus,
    commensurable_status,
    connectedness,
    irreducibility_necessary,
    plane_status,
    split_admissible,
    split_necessary,
)
from .bundles import (
    NearlySplitData,
    SheafCohomology,
    ideal_power_h0,
    serre_path_chi,
    sym_cohomology,
)
from .classify import (
    Bucket,
    ClassRecord,
    EnumerationBounds,
    TableDiff,
    admissibility_label,
    enumerate_records,
    paper_table,
)
from .invariants import (
    CoverInvariants,
    GeneralSurfaceData,
    KappaEstimate,
    MinimalityResult,
    Plurigenus,
    closed_invariants,
    general_invariants,
    kodaira_profile,
    minimality_test,
    plane_invariants,
    plurigenus,
    slope,
)
from .plane import SplitBundle, line_chi, line_h

__all__ = [
    "AdmissibilityLevel",
    "AdmissibilityStatus",
    "Bucket",
    "ClassRecord",
    "CoverInvariants",
    "EnumerationBounds",
    "GeneralSurfaceData",
    "KappaEstimate",
    "MinimalityResult",
    "NearlySplitData",
    "Plurigenus",
    "SheafCohomology",
    "SplitBundle",
    "TableDiff",
    "admissibility_label",
    "closed_invariants",
    "commensurable_status",
    "connectedness",
    "enumerate_records",
    "general_invariants",
    "ideal_power_h0",
    "irreducibility_necessary",
    "kodaira_profile",
    "line_chi",
    "line_h",
    "minimality_test",
    "paper_table",
    "plane_invariants",
    "plane_status",
    "plurigenus",
    "serre_path_chi",
    "slope",
    "split_admissible",
    "split_necessary",
    "sym_cohomology",
]
