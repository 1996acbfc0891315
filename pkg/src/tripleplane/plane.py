"""Exact cohomology of line bundles and split bundles on the projective plane.

Everything is closed-form integer arithmetic: h^0(O(n)) is a binomial
coefficient, h^1 always vanishes, and h^2 is Serre-dual to h^0.  Split
bundles reduce to sums over their line-bundle summands, and symmetric
powers of split bundles are again split, with one summand per degree-k
monomial in the original summands.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement


def line_h(n: int, i: int) -> int:
    """h^i(O(n)) on the plane, for i in {0, 1, 2}."""
    if i == 0:
        return (n + 1) * (n + 2) // 2 if n >= 0 else 0
    if i == 1:
        return 0
    if i == 2:
        return line_h(-n - 3, 0)
    raise ValueError(f"cohomological degree must be 0, 1 or 2, got {i!r}")


def line_chi(n: int) -> int:
    """chi(O(n)) = (n+1)(n+2)/2, the Riemann-Roch polynomial, for every n."""
    return (n + 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def sym_degrees(degrees: tuple[int, ...], k: int) -> tuple[int, ...]:
    """Summand degrees of Sym^k of the split bundle with the given degrees."""
    if k < 0:
        raise ValueError("negative symmetric power has no summands; use sym_or_zero")
    return tuple(
        sorted(
            (sum(c) for c in combinations_with_replacement(degrees, k)),
            reverse=True,
        )
    )


@dataclass(frozen=True)
class SplitBundle:
    """A direct sum of line bundles, stored as weakly decreasing degrees.

    The empty sum is the zero bundle: rank 0, no cohomology.  Two bundles
    are equal iff their sorted degree lists agree.
    """

    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def twist(self, m: int) -> SplitBundle:
        return SplitBundle(tuple(n + m for n in self.degrees))

    def dual(self) -> SplitBundle:
        return SplitBundle(tuple(-n for n in self.degrees))

    def det_degree(self) -> int:
        return sum(self.degrees)

    def sym(self, k: int) -> SplitBundle:
        return SplitBundle(sym_degrees(self.degrees, k))

    def sym_or_zero(self, k: int) -> SplitBundle:
        """Sym^k with the convention Sym^(-1) = Sym^(-2) = ... = 0."""
        return SplitBundle() if k < 0 else self.sym(k)

    def h(self, i: int) -> int:
        return sum(line_h(n, i) for n in self.degrees)

    def chi(self) -> int:
        return sum(line_chi(n) for n in self.degrees)
