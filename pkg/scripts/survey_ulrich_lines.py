"""Tabulate every Ulrich line bundle on (F_a, (s0, t0)) over a grid of ample polarizations."""

import argparse

from ulrich_calc import DivClass, enumerate_ulrich_lines, make_surface


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a-max", type=int, default=4)
    ap.add_argument("--s-max", type=int, default=3)
    ap.add_argument("--width", type=int, default=6, help="t0 ranges over a*s0+1 .. a*s0+width")
    args = ap.parse_args()

    for a in range(args.a_max + 1):
        S = make_surface(f"F{a}")
        for s0 in range(1, args.s_max + 1):
            for t0 in range(a * s0 + 1, a * s0 + args.width + 1):
                found = enumerate_ulrich_lines(S, DivClass(s0, t0))
                shown = " ".join(f"({L})" for L in found) or "-"
                print(f"F{a}  H=({s0},{t0})  {shown}")


if __name__ == "__main__":
    main()
