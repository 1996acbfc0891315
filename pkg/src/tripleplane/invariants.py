"""Numerical invariants of the triple cover attached to building data.

K^2, chi and chi(2K) come from closed intersection-number forms; p_g, q
and the plurigenera are honest cohomology counts from the split
resolution.  Kodaira dimension is certified only when general type can be
read off (K^2 > 0 and P_2 > 0, or a positivity criterion); otherwise the
exact plurigenera up to a cutoff give an evidence level, never a proof.

The same three closed forms exist for an arbitrary base surface at the
level of an abstract intersection pairing on (K, L, C1, C2, C3); see
``GeneralSurfaceData``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .admissibility import AdmissibilityLevel, connectedness, plane_status
from .bundles import NearlySplitData, _h0, sym_cohomology
from .plane import line_h


class KappaEstimate(Enum):
    MINUS_INFINITY_EVIDENCE = "minus_infinity_evidence"
    ZERO_EVIDENCE = "zero_evidence"
    ONE_EVIDENCE = "one_evidence"
    TWO_CERTIFIED = "two_certified"
    UNKNOWN = "unknown"


class Plurigenus(NamedTuple):
    m: int
    value: int
    exact: bool


class MinimalityResult(NamedTuple):
    general_type: bool
    minimal: bool
    h1_2K: int


@dataclass(frozen=True)
class CoverInvariants:
    K2: int
    chi: int
    pg: int
    q: int
    chi2K: int
    plurigenera: tuple[Plurigenus, ...]
    kappa: KappaEstimate
    formal: bool  # True when the data is inadmissible and the values are formal


def closed_invariants(d: int, c: tuple[int, int, int]) -> tuple[int, int, int]:
    """(K^2, chi, chi(2K)) of the cover from the closed forms.

    The half-integer coefficients of chi and chi(2K) are evaluated exactly
    and must come out integral; on integer plane data they always do (each
    c_i^2 - 3 c_i is even).
    """
    sc = sum(c)
    sc2 = sum(ci * ci for ci in c)
    scc = c[0] * c[1] + c[0] * c[2] + c[1] * c[2]
    k2 = 27 - 12 * (2 * d + sc) + (5 * d * d + 5 * d * sc + 2 * sc2 + scc)
    chi2 = 6 + 2 * d * d - 6 * d + 2 * d * sc + sc2 - 3 * sc
    twok2 = 60 - 54 * d + 12 * d * d + 12 * d * sc - 27 * sc + 5 * sc2 + 2 * scc
    if chi2 % 2 or twok2 % 2:
        raise ValueError(f"parity violation in the closed forms for d={d}, c={c}")
    return k2, chi2 // 2, twok2 // 2


@lru_cache(maxsize=None)
def plurigenus(data: NearlySplitData, m: int) -> Plurigenus:
    """m-th plurigenus of the cover, with an exactness flag.

    The value is h^0(Sym^m E (-3m)) minus the h^0 of the subsheaf twisted
    by det E; it is the plurigenus itself whenever the subsheaf has no h^1
    (always for m <= 3), and a lower bound otherwise.
    """
    if m < 1:
        raise ValueError("plurigenera start at m = 1")
    e = data.det_degree()
    value = _h0(data, m, -3 * m) - _h0(data, m - 3, e - 3 * m)
    exact = m <= 2 or sym_cohomology(data, m - 3, e - 3 * m).h1 == 0
    return Plurigenus(m, value, exact)


@lru_cache(maxsize=None)
def minimality_test(data: NearlySplitData) -> MinimalityResult:
    """General type iff K^2 > 0 and P_2 > 0; minimal iff moreover h^1(2K) = 0."""
    k2, _, _ = closed_invariants(data.d, data.c)
    p2 = plurigenus(data, 2).value
    h1_2k = sym_cohomology(data, 2, -6).h1
    general_type = k2 > 0 and p2 > 0
    return MinimalityResult(general_type, general_type and h1_2k == 0, h1_2k)


def _classify_kappa(data: NearlySplitData, plist: tuple[Plurigenus, ...]) -> KappaEstimate:
    if minimality_test(data).general_type:
        return KappaEstimate.TWO_CERTIFIED
    c1, _, c3 = data.c
    # positivity criterion: the twisted bundle is globally generated
    if (c1 >= 1 and data.d + c3 >= 4) or (c3 == 0 and data.d + c1 >= 4):
        return KappaEstimate.TWO_CERTIFIED
    exact = [(p.m, p.value) for p in plist if p.exact]
    if not exact:
        return KappaEstimate.UNKNOWN
    values = [v for _, v in exact]
    if all(v == 0 for v in values):
        return KappaEstimate.MINUS_INFINITY_EVIDENCE
    if all(v in (0, 1) for v in values):
        return KappaEstimate.ZERO_EVIDENCE
    if len(exact) >= 2:
        (m0, v0), (m1, v1) = exact[0], exact[1]
        num, den = v1 - v0, m1 - m0
        if num > 0 and all((v - v0) * den == num * (m - m0) for m, v in exact):
            return KappaEstimate.ONE_EVIDENCE
    return KappaEstimate.UNKNOWN


@lru_cache(maxsize=None)
def kodaira_profile(
    data: NearlySplitData, M: int = 12
) -> tuple[tuple[Plurigenus, ...], KappaEstimate]:
    """Plurigenera up to M and the resulting Kodaira-dimension estimate.

    Evidence levels are certified-up-to-M only: they use exact plurigenera
    alone ("all zero", "bounded by one", or exactly linear growth).
    """
    if M < 3:
        raise ValueError("need at least the first three plurigenera")
    plist = tuple(plurigenus(data, m) for m in range(1, M + 1))
    return plist, _classify_kappa(data, plist)


@lru_cache(maxsize=None)
def plane_invariants(data: NearlySplitData, pluri_max: int = 12) -> CoverInvariants:
    """All invariants of the cover over the plane.

    Inadmissible data is still evaluated (the geography of the formulas is
    of independent interest) but flagged formal.  The closed forms for p_g
    and, under connectedness, q are recomputed and must agree with the
    cohomology engine; a mismatch would be an internal error.
    """
    if pluri_max < 1:
        raise ValueError("pluri_max must be at least 1")
    k2, chi, chi2k = closed_invariants(data.d, data.c)
    coh = sym_cohomology(data, 1, -3)
    pg, q = coh.h0, coh.h1
    closed_pg = sum(line_h(data.d + ci - 3, 0) for ci in data.c) - line_h(data.d - 3, 0)
    if pg != closed_pg:
        raise ArithmeticError(f"p_g closed form disagrees with the engine for {data}")
    if connectedness(data) and q != 1 + pg - chi:
        raise ArithmeticError(f"q closed form disagrees with the engine for {data}")
    plist = tuple(plurigenus(data, m) for m in range(1, pluri_max + 1))
    return CoverInvariants(
        K2=k2,
        chi=chi,
        pg=pg,
        q=q,
        chi2K=chi2k,
        plurigenera=plist,
        kappa=_classify_kappa(data, plist),
        formal=plane_status(data).level is AdmissibilityLevel.NOT_ADMISSIBLE,
    )


def slope(data: NearlySplitData, mode: str, m: int) -> Fraction | None:
    """K^2 / chi after scaling the data, as an exact rational.

    ``twist`` bumps d by m; ``curves`` bumps every curve degree by m.  The
    two limits for large m are 5 and 6.  Returns None when chi = 0.
    """
    if m < 0:
        raise ValueError("the shift must be nonnegative")
    if mode == "twist":
        shifted = NearlySplitData(data.d + m, data.c)
    elif mode == "curves":
        shifted = NearlySplitData(data.d, tuple(ci + m for ci in data.c))
    else:
        raise ValueError(f"mode must be 'twist' or 'curves', got {mode!r}")
    k2, chi, _ = closed_invariants(shifted.d, shifted.c)
    if chi == 0:
        return None
    return Fraction(k2, chi)


_BASIS = ("K", "L", "C1", "C2", "C3")


@dataclass(frozen=True)
class GeneralSurfaceData:
    """chi(O_S) and the intersection pairing of (K, L, C1, C2, C3).

    The pairing must be symmetric, and each curve must satisfy adjunction
    parity (C.C + K.C even); otherwise no smooth curve has these numbers
    and construction fails.
    """

    chiS: int
    pairing: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.pairing)
        if len(rows) != 5 or any(len(row) != 5 for row in rows):
            raise ValueError("pairing must be a 5x5 integer matrix over (K, L, C1, C2, C3)")
        object.__setattr__(self, "pairing", rows)
        for i in range(5):
            for j in range(i + 1, 5):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(
                        f"pairing matrix is not symmetric at ({_BASIS[i]}, {_BASIS[j]})"
                    )
        for i in range(2, 5):
            if (rows[i][i] + rows[0][i]) % 2:
                raise ValueError(f"adjunction parity fails for {_BASIS[i]}")

    @classmethod
    def from_plane(cls, data: NearlySplitData) -> GeneralSurfaceData:
        """The plane specialisation: K = -3H, L = dH, C_i = c_i H."""
        coeffs = (-3, data.d, *data.c)
        return cls(1, tuple(tuple(a * b for b in coeffs) for a in coeffs))


def general_invariants(g: GeneralSurfaceData) -> tuple[int, int, int]:
    """(K^2, chi, chi(2K)) of the cover over an arbitrary base surface.

    Evaluated over exact rationals; the half-integer coefficients combine
    to integers exactly because of adjunction parity.
    """
    p = g.pairing
    kk, kl, ll = p[0][0], p[0][1], p[1][1]
    kc = p[0][2] + p[0][3] + p[0][4]
    lc = p[1][2] + p[1][3] + p[1][4]
    cc_sq = p[2][2] + p[3][3] + p[4][4]
    cc_mix = p[2][3] + p[2][4] + p[3][4]
    k2 = 3 * kk + 4 * (2 * kl + kc) + 5 * ll + 5 * lc + 2 * cc_sq + cc_mix
    chi = 3 * g.chiS + ll + kl + lc + Fraction(cc_sq + kc, 2)
    chi2k = (
        3 * (g.chiS + kk)
        + 9 * kl
        + 6 * ll
        + 6 * lc
        + Fraction(9 * kc + 5 * cc_sq, 2)
        + cc_mix
    )
    if chi.denominator != 1 or chi2k.denominator != 1:
        raise ValueError("parity violation: chi or chi(2K) is not an integer")
    return k2, int(chi), int(chi2k)
