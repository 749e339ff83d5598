#!/usr/bin/env python3
"""Run every verification suite on the default desk-scale grid and print a
per-suite summary. Exit 0 iff nothing failed."""

import sys
import time

from derange import verify


def main() -> int:
    grid = verify.Grid()
    total_fail = 0
    for name in verify.SUITES:
        start = time.monotonic()
        cells = verify.run_suite(name, grid)
        elapsed = time.monotonic() - start
        fails = [c for c in cells if c.verdict == "fail"]
        skipped = sum(c.verdict == "skipped" for c in cells)
        total_fail += len(fails)
        print(f"{name:20s} {len(cells):5d} cells  "
              f"{len(fails)} fail  {skipped} skipped  ({elapsed:.2f}s)")
        for c in fails[:5]:
            print(f"  FAIL {c.params}: expected {c.expected}, got {c.actual}")
    return 1 if total_fail else 0


if __name__ == "__main__":
    sys.exit(main())
