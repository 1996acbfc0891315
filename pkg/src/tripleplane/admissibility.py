"""Admissibility of building data: does the bundle belong to a smooth cover?

A rank-2 bundle is admissible when it is the Tschirnhausen bundle of a
smooth connected triple cover.  On the plane this is decided by explicit
inequalities in the building data, refined into a small lattice of levels:

    TriviallyAdmissible  =>  GciAdmissible  =>  admissible,

with GciAdmissibleIfSmooth for the one genuinely geometry-dependent case
(the smallest curve must be smooth where it meets the middle one).  A
degree-1 curve in the plane is a line, hence smooth, so that case is
auto-promoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bundles import NearlySplitData, ideal_power_h0, sym_cohomology
from .plane import line_h


class AdmissibilityLevel(Enum):
    TRIVIALLY_ADMISSIBLE = "TriviallyAdmissible"
    GCI_ADMISSIBLE = "GciAdmissible"
    GCI_ADMISSIBLE_IF_SMOOTH = "GciAdmissibleIfSmooth"
    NOT_ADMISSIBLE = "NotAdmissible"

    @property
    def strength(self) -> int:
        return _STRENGTH[self]


_STRENGTH = {
    AdmissibilityLevel.TRIVIALLY_ADMISSIBLE: 3,
    AdmissibilityLevel.GCI_ADMISSIBLE: 2,
    AdmissibilityLevel.GCI_ADMISSIBLE_IF_SMOOTH: 1,
    AdmissibilityLevel.NOT_ADMISSIBLE: 0,
}

_SMOOTHNESS_NOTE = (
    "requires the smallest-degree curve to be smooth at every point "
    "where it meets the middle-degree curve"
)


@dataclass(frozen=True)
class AdmissibilityStatus:
    level: AdmissibilityLevel
    smoothness_note: str | None = None

    def __post_init__(self):
        conditional = self.level is AdmissibilityLevel.GCI_ADMISSIBLE_IF_SMOOTH
        if conditional and self.smoothness_note is None:
            object.__setattr__(self, "smoothness_note", _SMOOTHNESS_NOTE)
        if not conditional and self.smoothness_note is not None:
            raise ValueError("smoothness note only applies to the conditional level")

    @property
    def is_admissible(self) -> bool:
        return self.level is not AdmissibilityLevel.NOT_ADMISSIBLE


def split_admissible(a1: int, a2: int) -> bool:
    """A split bundle O(a1) + O(a2) is admissible iff 0 < a2 <= a1 <= 2 a2."""
    a1, a2 = max(a1, a2), min(a1, a2)
    return 0 < a2 <= a1 <= 2 * a2


def split_necessary(a1: int, a2: int) -> bool:
    """Necessary section-space condition for admissible split data."""
    a1, a2 = max(a1, a2), min(a1, a2)
    return line_h(3 * a1 - a2, 0) != 0 and line_h(3 * a2 - a1, 0) != 0


def commensurable_status(d: int, c1: int, c2: int, c3: int) -> AdmissibilityStatus:
    """Case split for commensurable data with all three curves nonempty.

    The four branches are, in order: trivially admissible, gci-admissible,
    gci-admissible iff the smallest curve is smooth along the relevant
    intersection, and not admissible.
    """
    if c3 < 1:
        raise ValueError("all three curve degrees must be positive; use the split route")
    if not c1 >= c2 >= c3:
        raise ValueError("curve degrees must be weakly decreasing")
    if d + c3 >= c1 + c2 - c3:
        return AdmissibilityStatus(AdmissibilityLevel.TRIVIALLY_ADMISSIBLE)
    if d + c3 >= c1:
        return AdmissibilityStatus(AdmissibilityLevel.GCI_ADMISSIBLE)
    if c1 > d + c3 >= c2 and d - c1 + 2 * c2 - c3 >= 0:
        if c3 == 1:
            # a plane line is smooth everywhere
            return AdmissibilityStatus(AdmissibilityLevel.GCI_ADMISSIBLE)
        return AdmissibilityStatus(AdmissibilityLevel.GCI_ADMISSIBLE_IF_SMOOTH)
    return AdmissibilityStatus(AdmissibilityLevel.NOT_ADMISSIBLE)


def plane_status(data: NearlySplitData, generic: bool = True) -> AdmissibilityStatus:
    """Full admissibility verdict on the plane.

    Split data collapses to a boolean (trivially admissible or not: the
    relevant cubic bundle is then a sum of nonnegative line bundles).  With
    ``generic`` the conditional level is promoted, matching the convention
    that curves are general members of their linear systems.
    """
    c1, c2, c3 = data.c
    if c3 == 0:
        if split_admissible(*data.split_degrees):
            return AdmissibilityStatus(AdmissibilityLevel.TRIVIALLY_ADMISSIBLE)
        return AdmissibilityStatus(AdmissibilityLevel.NOT_ADMISSIBLE)
    status = commensurable_status(data.d, c1, c2, c3)
    if status.level is AdmissibilityLevel.GCI_ADMISSIBLE_IF_SMOOTH and generic:
        return AdmissibilityStatus(AdmissibilityLevel.GCI_ADMISSIBLE)
    return status


def connectedness(data: NearlySplitData) -> bool:
    """h^0(E^) = 0, the condition for covers to be connected."""
    return sym_cohomology(data, 1, -data.det_degree()).h0 == 0


def irreducibility_necessary(data: NearlySplitData) -> bool:
    """Necessary condition for an irreducible cover.

    For each way of singling out one curve, the cubic defining section must
    have a component vanishing to order three on the intersection of the
    other two; that section space must be nonzero.  Pairs involving an
    empty curve have empty intersection and reduce to a plain h^0 check.
    """
    d = data.d
    for i, j, k in ((0, 1, 2), (1, 0, 2), (2, 0, 1)):
        ci, cj, ck = data.c[i], data.c[j], data.c[k]
        m = d + 2 * (cj + ck) - ci
        if cj >= 1 and ck >= 1:
            ok = ideal_power_h0(cj, ck, 3, m) > 0
        else:
            ok = line_h(m, 0) > 0
        if not ok:
            return False
    return True
