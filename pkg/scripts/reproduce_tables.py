#!/usr/bin/env python3
"""Re-derive the bundled classification tables and report any differences."""

import sys

from tripleplane.classify import TABLE_IDS, paper_table


def main() -> int:
    failed = False
    for table in TABLE_IDS:
        diff = paper_table(table)
        status = "ok" if diff.ok else "DIFF"
        print(f"{table}: {diff.matched} rows matched [{status}]")
        for line in diff.lines:
            failed = True
            print(f"  {line}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
