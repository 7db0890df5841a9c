"""``ulrich-calc <surface> <H> <command> [args] [--format json|table] [--bound-cap N]``

Commands::

    invariants            numerical invariants of (S, H) and hypothesis flags
    cohomology L          h^i(L + jH) grid (alias: table); --range a..b, default 0..0
    is-ulrich L           four-vanishing Ulrich test with witnesses
    enumerate             all Ulrich line bundles of (S, H)
    ledger                dimension counts with their consistency checks
    cycles                0-cycle bounds on a curve in |K+2H|
    lm                    rank-2 candidate with det K+3H
    chow                  Chow-form Pfaffian sizes
    identity s            determinant-line t for (F_a, (2,n)) at the given s

Exit codes: 0 ok, 1 parse error, 2 precondition/parity failure, 3 unsupported surface.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from .errors import ParseError, PreconditionError, UlrichCalcError
from .reports import (
    chow_shape,
    dimension_ledger,
    invariant_report,
    lemma_cycles_report,
    to_jsonable,
)
from .surface import ChernData, DivClass, SurfaceModel, is_ample, make_surface
from .ulrich import (
    cohomology_table,
    default_cap,
    enumerate_ulrich_lines,
    hirzebruch_2n_identity,
    is_ulrich_line,
    lm_numerics,
)

COMMANDS = (
    "invariants",
    "cohomology",
    "table",
    "is-ulrich",
    "enumerate",
    "ledger",
    "cycles",
    "lm",
    "chow",
    "identity",
)
_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # keep "-3,-4" and "-2..0" as values, not option flags
        self._negative_number_matcher = re.compile(r"^-\d[-\d,.]*$")

    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ulrich-calc", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("surface", help="P2, F<a> or dP<r>")
    p.add_argument("H", help="polarization as comma-separated integers, e.g. 2,5")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("args", nargs="*")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--bound-cap", type=int, default=None)
    p.add_argument("--range", dest="jrange", default="0..0", help="twist range a..b for cohomology")
    return p


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise ParseError(f"bad range {text!r}; expected a..b")
    return int(m.group(1)), int(m.group(2))


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _kv_table(record: dict) -> str:
    width = max(len(k) for k in record)
    lines = []
    for k, v in record.items():
        if isinstance(v, list) and all(isinstance(x, int) for x in v):
            v = ",".join(str(x) for x in v)
        elif isinstance(v, dict):
            v = "; ".join(f"{a}: {b}" for a, b in v.items())
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines) + "\n"


def _one_arg(args: Sequence[str], what: str) -> str:
    if len(args) != 1:
        raise ParseError(f"expected exactly one {what} argument, got {len(args)}")
    return args[0]


def run(argv: Sequence[str]) -> tuple[str, list[str]]:
    """Execute one invocation; return ``(stdout text, warnings)``."""
    ns = build_parser().parse_args(list(argv))
    S = make_surface(ns.surface)
    H = DivClass.parse(ns.H)
    S.check(H)
    if ns.bound_cap is not None and ns.bound_cap < 1:
        raise PreconditionError("--bound-cap must be >= 1")
    warnings = []
    if is_ample(S, H) is False:
        warnings.append(f"warning: H={H} is not very ample on {S}; results are formal")
    as_json = ns.format == "json"
    cmd = ns.command

    if cmd == "invariants":
        rec = to_jsonable(invariant_report(S, H))
    elif cmd in ("cohomology", "table"):
        L = DivClass.parse(_one_arg(ns.args, "line bundle"))
        S.check(L)
        lo, hi = parse_range(ns.jrange)
        tab = cohomology_table(S, H, ChernData(1, L), lo, hi)
        if not as_json:
            return tab.render() + "\n", warnings
        rec = {
            "surface": str(S),
            "H": list(H),
            "L": list(L),
            "j": list(tab.js),
            "rows": {str(i): list(v) for i, v in tab.rows},
            "chi": list(tab.chi),
        }
    elif cmd == "is-ulrich":
        L = DivClass.parse(_one_arg(ns.args, "line bundle"))
        v = is_ulrich_line(S, H, L)
        rec = {
            "surface": str(S),
            "H": list(H),
            "L": list(L),
            "is_ulrich": v.is_ulrich,
            "mode": v.mode,
            "filter_passed": v.filter_passed,
            "witnesses": None if v.witnesses is None else list(v.witnesses),
        }
    elif cmd == "enumerate":
        cap = ns.bound_cap if ns.bound_cap is not None else default_cap(H)
        found = enumerate_ulrich_lines(S, H, cap)
        if not as_json:
            return "".join(f"{L}\n" for L in found), warnings
        rec = {"surface": str(S), "H": list(H), "bound_cap": cap, "ulrich_lines": [list(L) for L in found]}
    elif cmd == "ledger":
        rec = to_jsonable(dimension_ledger(S, H))
    elif cmd == "cycles":
        rec = to_jsonable(lemma_cycles_report(S, H))
    elif cmd == "lm":
        rec = to_jsonable(lm_numerics(S, H))
    elif cmd == "chow":
        shape = chow_shape(S, H)
        if not as_json:
            return shape.describe() + "\n", warnings
        rec = to_jsonable(shape)
    else:  # identity
        if not S.is_hirzebruch or H[0] != 2:
            raise PreconditionError("identity needs a Hirzebruch surface with H = (2, n)")
        try:
            s = int(_one_arg(ns.args, "s"))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        ident = hirzebruch_2n_identity(S.param, H[1], s)
        rec = {
            "a": ident.a,
            "n": ident.n,
            "s": ident.s,
            "t": str(ident.t),
            "integral": ident.integral,
            "chi_factored": str(ident.chi_factored),
            "chi_check": ident.chi_check,
        }
    return (dump_json(rec) if as_json else _kv_table(rec)), warnings


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().print_help()
        return 0
    try:
        out, warnings = run(argv)
    except UlrichCalcError as exc:
        print(f"ulrich-calc: {exc}", file=sys.stderr)
        return exc.exit_code
    for w in warnings:
        print(w, file=sys.stderr)
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
