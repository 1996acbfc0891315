#!/usr/bin/env python3
"""Track K^2/chi while scaling building data; the limits are 5 and 6.

All values are exact rationals; the deviation column is |K^2/chi - limit|.
"""

from fractions import Fraction

from tripleplane.bundles import NearlySplitData
from tripleplane.invariants import slope

BASE = NearlySplitData(1, (1, 1, 1))
LIMITS = {"twist": Fraction(5), "curves": Fraction(6)}
SHIFTS = (0, 10, 100, 1000, 10**4, 10**5, 10**6)


def main() -> None:
    for mode, limit in LIMITS.items():
        print(f"mode={mode}  (limit {limit})")
        for m in SHIFTS:
            value = slope(BASE, mode, m)
            if value is None:
                print(f"  m={m:>8}  chi = 0, slope undefined")
                continue
            print(f"  m={m:>8}  K2/chi = {value}  deviation = {abs(value - limit)}")
        print()


if __name__ == "__main__":
    main()
