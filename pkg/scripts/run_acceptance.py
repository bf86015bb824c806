"""Run the acceptance checks and print one line per criterion; exit 2 if any fail."""
from __future__ import annotations

import argparse
import sys

from monoidkit.acceptance import run_all


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("numbers", nargs="*", type=int, help="criterion numbers (default: all)")
    args = parser.parse_args()
    results = run_all(args.numbers or None)
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 2)


if __name__ == "__main__":
    main()
