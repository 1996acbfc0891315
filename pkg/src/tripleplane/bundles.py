"""Nearly split rank-2 bundles on the plane and their exact cohomology.

The bundle E attached to building data (d; c1, c2, c3) is the cokernel of

    0 -> O(d) -> O(d+c1) + O(d+c2) + O(d+c3) -> E -> 0,

with the middle term denoted E~ below.  Since split bundles on the plane
have no h^1, taking sections of this resolution (and of its symmetric
powers) is exact on the right, so h^0 of Sym^k E twisted by anything is an
honest difference of two split h^0 counts, not a bound.  h^2 comes from
the rank-2 self-duality E^ = E (x) det(E)^(-1) plus Serre duality, and h^1
is whatever chi leaves over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .plane import SplitBundle, sym_degrees


def _h0_sum(degrees: tuple[int, ...], shift: int) -> int:
    total = 0
    for n in degrees:
        n += shift
        if n >= 0:
            total += (n + 1) * (n + 2)
    return total // 2


def _chi_sum(degrees: tuple[int, ...], shift: int) -> int:
    total = 0
    for n in degrees:
        n += shift
        total += (n + 1) * (n + 2)
    return total // 2


@dataclass(frozen=True)
class NearlySplitData:
    """Building data (d; c1 >= c2 >= c3 >= 0) of a nearly split rank-2 bundle.

    Curve degrees are normalised to weakly decreasing order, which is
    harmless: every formula in this package is symmetric in them.  c3 = 0
    marks the split case E = O(d+c1) + O(d+c2).  Negative d is accepted;
    the admissibility predicates impose their own constraints.
    """

    d: int
    c: tuple[int, int, int]

    def __post_init__(self):
        c = tuple(sorted(self.c, reverse=True))
        if len(c) != 3:
            raise ValueError(f"expected three curve degrees, got {self.c!r}")
        if c[-1] < 0:
            raise ValueError(f"curve degrees must be nonnegative, got {self.c!r}")
        object.__setattr__(self, "c", c)

    @property
    def is_split(self) -> bool:
        return self.c[2] == 0

    @property
    def split_degrees(self) -> tuple[int, int]:
        """(a1, a2) with E = O(a1) + O(a2); only meaningful when is_split."""
        return (self.d + self.c[0], self.d + self.c[1])

    def tilde_degrees(self) -> tuple[int, int, int]:
        return (self.d + self.c[0], self.d + self.c[1], self.d + self.c[2])

    def tilde(self) -> SplitBundle:
        """The covering split bundle O(d+c1) + O(d+c2) + O(d+c3)."""
        return SplitBundle(self.tilde_degrees())

    def chern(self) -> tuple[int, int]:
        """(c1(E), c2(E)) from the resolution's total Chern class."""
        d = self.d
        c1, c2, c3 = self.c
        first = 2 * d + c1 + c2 + c3
        second = d * d + d * (c1 + c2 + c3) + c1 * c2 + c1 * c3 + c2 * c3
        return (first, second)

    def det_degree(self) -> int:
        return self.chern()[0]


@dataclass(frozen=True)
class SheafCohomology:
    h0: int
    h1: int
    h2: int
    chi: int

    def __post_init__(self):
        if min(self.h0, self.h1, self.h2) < 0:
            raise ValueError(f"negative cohomology dimension: {self}")
        if self.chi != self.h0 - self.h1 + self.h2:
            raise ValueError(f"chi inconsistent with h0 - h1 + h2: {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.h0, self.h1, self.h2, self.chi)


def _h0(data: NearlySplitData, k: int, m: int) -> int:
    """h^0(Sym^k E (m)); the zero sheaf for k < 0."""
    if k < 0:
        return 0
    tilde = data.tilde_degrees()
    top = _h0_sum(sym_degrees(tilde, k), m)
    if k == 0:
        return top
    return top - _h0_sum(sym_degrees(tilde, k - 1), m + data.d)


def _chi(data: NearlySplitData, k: int, m: int) -> int:
    if k < 0:
        return 0
    tilde = data.tilde_degrees()
    top = _chi_sum(sym_degrees(tilde, k), m)
    if k == 0:
        return top
    return top - _chi_sum(sym_degrees(tilde, k - 1), m + data.d)


@lru_cache(maxsize=None)
def sym_cohomology(data: NearlySplitData, k: int, m: int) -> SheafCohomology:
    """Exact cohomology of Sym^k E (m).

    h^2 is routed through Sym^k E^ = Sym^k E (-k e) with e = det degree,
    rather than by dualising the resolution, which would break the
    left-exact split description.
    """
    if k < 0:
        raise ValueError("symmetric power must be nonnegative")
    h0 = _h0(data, k, m)
    chi = _chi(data, k, m)
    h2 = _h0(data, k, -m - 3 - k * data.det_degree())
    return SheafCohomology(h0=h0, h1=h0 + h2 - chi, h2=h2, chi=chi)


def ideal_power_h0(b: int, c: int, k: int, m: int) -> int:
    """h^0 of I_Z^k(m), Z the complete intersection of curves of degrees b, c.

    Uses the two-step free resolution of the ideal power; its first term is
    split with no h^1, so the difference below is exact.
    """
    if min(b, c, k) < 1:
        raise ValueError("curve degrees and the power must be positive")
    gens = sum(_line_h0(m - (k - i) * b - i * c) for i in range(k + 1))
    rels = sum(_line_h0(m - (k - i) * b - (i + 1) * c) for i in range(k))
    return gens - rels


def ideal_power_chi(b: int, c: int, k: int, m: int) -> int:
    """chi of I_Z^k(m) by additivity along the same resolution."""
    if min(b, c, k) < 1:
        raise ValueError("curve degrees and the power must be positive")
    gens = sum(_line_chi(m - (k - i) * b - i * c) for i in range(k + 1))
    rels = sum(_line_chi(m - (k - i) * b - (i + 1) * c) for i in range(k))
    return gens - rels


def _line_h0(n: int) -> int:
    return (n + 1) * (n + 2) // 2 if n >= 0 else 0


def _line_chi(n: int) -> int:
    return (n + 1) * (n + 2) // 2


def serre_path_chi(data: NearlySplitData, m: int, k: int) -> int:
    """chi(Sym^k E (m)) along the ideal-sheaf route, for k in {2, 3}.

    Splits off the largest line bundle and leaves an ideal-power twist
    supported on the intersection of the two smaller curves; must agree
    with sym_cohomology(...).chi, which goes through the split resolution
    instead.
    """
    if k not in (2, 3):
        raise ValueError("only squares and cubes are supported")
    c1, c2, c3 = data.c
    if c3 < 1:
        raise ValueError("split data degenerates this sequence; use the split route")
    sub = sym_cohomology(data, k - 1, m + data.d + c1).chi
    return sub + ideal_power_chi(c2, c3, k, k * (data.d + c2 + c3) + m)
