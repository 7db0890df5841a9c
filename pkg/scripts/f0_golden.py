"""Regenerate tests/golden/f0_2n_ulrich.json: Ulrich line bundles on (F0, (2, n))."""

import argparse
import json
from pathlib import Path

from ulrich_calc import DivClass, enumerate_ulrich_lines, make_surface

OUT = Path(__file__).resolve().parents[1] / "tests" / "golden" / "f0_2n_ulrich.json"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    S = make_surface("F0")
    table = {
        str(n): [list(L) for L in enumerate_ulrich_lines(S, DivClass(2, n))]
        for n in range(1, args.n_max + 1)
    }
    args.out.write_text(json.dumps(table, indent=2) + "\n")
    print(f"wrote {args.out}")
    for n, lines in table.items():
        print(f"n={n}: {lines}")


if __name__ == "__main__":
    main()
