"""Run the rotation-order comparison over a grid of (n, m) and write CSV.

    python3 scripts/run_conjecture_grid.py --n-max 6 --m-max 4 --out grid.csv
"""
import argparse
import csv
import sys

from multicover.strip import verify_conjecture


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=4)
    ap.add_argument("--reverse", action="store_true", help="apply the pair moves right to left")
    ap.add_argument("--out")
    args = ap.parse_args()

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["n", "m", "path_count", "injective", "order_iso", "elapsed_ms", "valid_delta_images"])
    failed = False
    for n in range(1, args.n_max + 1):
        for m in range(1, args.m_max + 1):
            r = verify_conjecture(n, m, args.reverse)
            row = r.row()
            w.writerow([*(str(v).lower() for v in row.values()), r.valid_delta_images])
            fh.flush()
            failed |= r.verdict != "isomorphic"
    if fh is not sys.stdout:
        fh.close()
    return 4 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
