"""Tabulate quantum chain LHS against the local bound for a range of d and N.

    python scripts/violation_curves.py --dmax 12 --Nmax 60 --out curves.csv
"""
import argparse
import sys

from chainbell.cli import ScanGrid, cmd_scan
from chainbell.chain import minimal_violating_n


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=12)
    ap.add_argument("--Nmax", type=int, default=60)
    ap.add_argument("--out", default="violation_curves.csv")
    args = ap.parse_args()

    grid = ScanGrid(tuple(range(2, args.dmax + 1)), tuple(range(2, args.Nmax + 1, 2)))
    cmd_scan(grid, args.out)
    for d in grid.dims:
        print(f"d={d:3d}  first violating N = {minimal_violating_n(d)}", file=sys.stderr)
    print(f"wrote {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
