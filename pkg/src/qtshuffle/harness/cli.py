"""Command line: verify suites, tabulate Catalan numbers, expand operators, list paths.

Exit codes: 0 when every gate passes, 2 when only conjecture findings were
made, 1 on a proved-identity failure or any error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from math import gcd

from ..coeffs import render, specialize
from ..limits import LimitError
from ..operators import OpExpr, Q, apply, build_F, compositional_op, conjecture_sign
from ..ratpark import Filter, area, dinv_path, enum_parks, enum_paths, to_csv
from ..symfunc.sym import SymF, e
from .cases import COUNTEREXAMPLE, ERROR, FAIL, PASS, SKIPPED
from .config import ConfigError, load_config
from .goldens import GoldenError
from .runner import SUITES, UnknownSuiteError, combined_exit_code, run_suite
from .suites.catalan import METHODS, catalan_by
from .suites.common import Selection

EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qtshuffle", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite and write reports")
    v.add_argument("--suite", required=True, choices=[*SUITES, "all"])
    v.add_argument("--m", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--alpha", type=_int_list, help="composition, e.g. 1,2")
    v.add_argument("--config", help="versioned key = value config file")
    v.add_argument("--out", help="directory for the JSON and CSV reports")
    v.add_argument("--golden", help="directory overriding the packaged golden files")
    v.add_argument("--jobs", type=int, help="worker processes (overrides the config)")
    v.add_argument("--quiet", action="store_true", help="print only the summary")

    c = sub.add_parser("catalan", help="rational q,t-Catalan number by several methods")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--methods", type=lambda s: tuple(x.strip() for x in s.split(",") if x.strip()),
                   default=METHODS, help=f"comma separated subset of {','.join(METHODS)}")

    x = sub.add_parser("expand", help="apply an operator and print the result as JSON")
    x.add_argument("--op", required=True,
                   help="Q(m,n), D(k), e(a,b), C(a,b;alpha) or B(a,b;alpha), e.g. 'C(2,4;1,1)'")
    x.add_argument("--apply-to", default="(-1)^n",
                   help="an integer constant, or (-1)^n for the operator's own sign convention")
    x.add_argument("--words", action="store_true", help="print the word expansion in the D_k instead")

    p = sub.add_parser("paths", help="list (km,kn)-Dyck paths or export parking functions")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--alpha", type=_int_list, help="keep paths with this diagonal composition")
    p.add_argument("--csv", action="store_true", help="one row per parking function, ';' separated")
    return ap


# verify ---------------------------------------------------------------------------------

_MARK = {PASS: "ok", FAIL: "FAIL", COUNTEREXAMPLE: "FINDING", ERROR: "ERROR", SKIPPED: "skipped"}


def _cmd_verify(args) -> int:
    config = load_config(args.config)
    if args.jobs is not None:
        config = config.with_(jobs=args.jobs)
    selection = Selection(args.m, args.n, args.k, args.alpha)
    names = list(SUITES) if args.suite == "all" else [args.suite]

    def progress(case):
        if not args.quiet or case.result not in (PASS, SKIPPED):
            detail = case.payload.get("first_difference") or case.payload.get("error") or ""
            line = f"{_MARK[case.result]:8} {case.case_id}"
            print(f"{line}  {detail}" if detail else line, flush=True)

    runs = []
    for name in names:
        run = run_suite(name, config, args.out, args.golden, selection, progress)
        runs.append(run)
        counts = {}
        for case in run.cases:
            counts[case.result] = counts.get(case.result, 0) + 1
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        print(f"[{name}] {len(run.cases)} cases: {summary or 'none selected'}; exit {run.exit_code}")
        for path in run.paths:
            print(f"[{name}] wrote {path}")
    return combined_exit_code(runs)


# catalan --------------------------------------------------------------------------------

def _cmd_catalan(args) -> int:
    unknown = set(args.methods) - set(METHODS)
    if unknown:
        raise ValueError(f"unknown methods {sorted(unknown)}; choose from {', '.join(METHODS)}")
    config = load_config(None)
    values = {}
    width = max(len(m) for m in args.methods)
    for method in args.methods:
        values[method] = catalan_by(method, args.m, args.n, config.limits())
        val = values[method]
        print(f"{method:<{width}}  C(1,1) = {specialize(val, 1, 1)}  {render(val)}")
    proved = [values[m] for m in ("ct", "tableaux", "pairing") if m in values]
    if any(v != proved[0] for v in proved[1:]):
        print("disagreement between proved methods")
        return EXIT_ERROR
    if len(set(map(render, values.values()))) > 1:
        print("path sum differs from the operator side")
        return EXIT_FINDING
    print(f"all {len(values)} methods agree")
    return EXIT_OK


# expand ---------------------------------------------------------------------------------

_OP = re.compile(r"^\s*([QDeCB])\s*\(\s*([-\d,\s]*?)\s*(?:;\s*([\d,\s]+))?\)\s*$")


def parse_op(text: str, limits) -> tuple[OpExpr, int]:
    """An operator and the sign its (-1)^n convention applies to."""
    match = _OP.match(text)
    if not match:
        raise ValueError(f"cannot parse operator {text!r}")
    name, args, alpha = match.group(1), _int_list(match.group(2)), match.group(3)
    if name == "D":
        if len(args) != 1:
            raise ValueError("D takes one index")
        return OpExpr.letter(args[0]), 1
    if len(args) != 2:
        raise ValueError(f"{name} takes two indices")
    a, b = args
    if name == "Q":
        return Q(a, b, limits), (-1) ** b
    g = gcd(a, b)
    if g == 0:
        raise ValueError("indices must not both vanish")
    m, n = a // g, b // g
    sign = conjecture_sign(n, g)
    if name == "e":
        return build_F(e(g), m, n, limits), sign
    if alpha is None:
        raise ValueError(f"{name} needs a composition after ';', e.g. {name}({a},{b};1,1)")
    return compositional_op(name, _int_list(alpha), m, n, g, limits), sign


def _cmd_expand(args) -> int:
    limits = load_config(None).limits()
    op, sign = parse_op(args.op, limits)
    if args.words:
        print(json.dumps({"op": args.op, "words": op.to_json()}, indent=2))
        return EXIT_OK
    target = args.apply_to.strip()
    if target == "(-1)^n":
        value = sign
    else:
        try:
            value = int(target)
        except ValueError:
            raise ValueError(f"--apply-to must be an integer or (-1)^n, got {target!r}") from None
    result = apply(op, SymF.one().scale(value), limits)
    print(json.dumps({"op": args.op, "apply_to": value, "value": result.to_json("s")}, indent=2))
    return EXIT_OK


# paths ----------------------------------------------------------------------------------

def _cmd_paths(args) -> int:
    limits = load_config(None).limits()
    filt = Filter.hits_exactly(args.alpha) if args.alpha else Filter.all()
    if args.csv:
        sys.stdout.write(to_csv(args.m, args.n, args.k, filt, limits))
        return EXIT_OK
    print("u;area;dinv_path;parking_functions")
    for path in enum_paths(args.m, args.n, args.k, limits):
        if filt.accepts(path):
            u = ",".join(map(str, path.u))
            print(f"{u};{area(path)};{dinv_path(path)};{len(enum_parks(path))}")
    return EXIT_OK


COMMANDS = {"verify": _cmd_verify, "catalan": _cmd_catalan, "expand": _cmd_expand, "paths": _cmd_paths}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ConfigError, GoldenError, LimitError, UnknownSuiteError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
