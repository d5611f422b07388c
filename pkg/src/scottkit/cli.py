"""Command-line front door.

    scottkit verify --scenario NAME | --all  [--seed N] [--json] [--out PATH]
    scottkit table [--json] [--strict]
    scottkit trace product|irreducibility [--format human|json]
    scottkit product-run --poset-left omega+1 --poset-right omega+1 --open up:3,3 --start 5,4
    scottkit fixtures check [PATH ...]

Exit codes: 0 when every check passes, 1 on a failed check, 2 on bad arguments.
"""

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import InvalidArgument, OracleNotScottOpen, PreconditionViolation, ScottkitError
from .gallery import SCENARIOS, Check, VerificationReport, run_scenario
from .ideals import omega_plus_one
from .jia import jia_poset
from .lattice import REFERENCE_TABLE, _ORDER, compare_tables, intersection_table
from .poset import dumps, loads
from .pposet import ScottOpenP, irreducibility_trace, parse_P
from .product import run_stages, upclosure_is_scott_open

DEFAULT_SEED = 7
POSETS = {"omega+1": omega_plus_one, "jia": jia_poset}
TOPS = {"omega+1": "w"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _seed(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return v


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _default_seed():
    env = os.environ.get("SCOTTKIT_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return _seed(env)
    except argparse.ArgumentTypeError as exc:
        raise InvalidArgument(f"SCOTTKIT_SEED: {exc}") from None


def _emit(text, out):
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# -- verify -------------------------------------------------------------------------

def _human(report):
    lines = [f"{report.scenario}: {'PASS' if report.passed else 'FAIL'} "
             f"(seed {report.seed}, {report.elapsed:.2f}s)"]
    for c in report.checks:
        extra = ", ".join(f"{k}={v}" for k, v in c.details.items() if k != "counterexamples")
        lines.append(f"  [{c.status}] {c.name}" + (f"  {extra}" if extra else ""))
        for ce in c.details.get("counterexamples", []):
            lines.append(f"      counterexample: {ce}")
    return "\n".join(lines)


def cmd_verify(args):
    if args.all == bool(args.scenario):
        raise InvalidArgument("give exactly one of --scenario NAME or --all")
    if args.scenario and args.scenario not in SCENARIOS:
        raise InvalidArgument(f"unknown scenario {args.scenario!r}; "
                              f"known: {', '.join(sorted(SCENARIOS))}")
    names = sorted(SCENARIOS) if args.all else [args.scenario]
    params = {k: v for k, v in (("col_max", args.col_max), ("seq_weight_max", args.seq_weight_max),
                                ("stages", args.stages), ("depth", args.depth)) if v is not None}
    reports = [run_scenario(n, params, args.seed) for n in names]
    if args.json:
        if args.all:
            text = json.dumps([r.to_dict() for r in reports], sort_keys=True, indent=2)
        else:
            text = reports[0].to_json()
    else:
        text = "\n".join(_human(r) for r in reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


# -- table --------------------------------------------------------------------------

def cmd_table(args):
    cmp = compare_tables(intersection_table(reference=REFERENCE_TABLE))
    exact = all(s == "exact" for s, _, _ in cmp.values())
    if args.json:
        rows = [{"row": a, "col": b, "status": s, "computed": got, "reference": ref}
                for (a, b), (s, got, ref) in sorted(cmp.items(), key=lambda kv: _rank(kv[0]))]
        text = json.dumps({"schema": 1, "cells": rows, "exact": exact}, sort_keys=True, indent=2)
    else:
        lines = []
        for (a, b), (s, got, ref) in sorted(cmp.items(), key=lambda kv: _rank(kv[0])):
            lines.append(f"{a:>6} x {b:<6} {s:<8} computed {{{', '.join(got)}}}"
                         + ("" if s == "exact" else f"  reference {{{', '.join(ref)}}}"))
        counts = {}
        for s, _, _ in cmp.values():
            counts[s] = counts.get(s, 0) + 1
        lines.append("cells: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
        text = "\n".join(lines)
    _emit(text, args.out)
    return 1 if args.strict and not exact else 0


def _rank(key):
    return tuple(_ORDER.index(k) for k in key)


# -- traces -------------------------------------------------------------------------

def _stage_details(st):
    return {
        "stages": [{"n": r.n, "E": list(r.E), "F": list(r.F),
                    "A": [str(x) for x in r.A], "B": [str(x) for x in r.B]}
                   for r in st.history],
    }


def _parse_open(text, left, right):
    pl, pr = POSETS[left](), POSETS[right]()
    if text == "everything":
        return lambda pair: True
    if text == "top-only":
        if left not in TOPS or right not in TOPS:
            raise InvalidArgument("top-only needs posets with a top element")
        tl, tr = pl.parse(TOPS[left]), pr.parse(TOPS[right])
        return lambda pair: pl.leq(tl, pair[0]) and pr.leq(tr, pair[1])
    if text.startswith("up:"):
        parts = text[3:].split(",")
        x, y = _pair(text[3:], pl, pr) if len(parts) == 2 else _jia_pair(text[3:], pl, pr)
        return lambda pair: pl.leq(x, pair[0]) and pr.leq(y, pair[1])
    raise InvalidArgument(f"unknown open {text!r}; use up:x,y, everything or top-only")


def _jia_pair(text, pl, pr):
    # jia elements contain commas: "(1,2,3),(1,1,inf)"
    head, sep, tail = text.partition("),")
    if not sep:
        raise InvalidArgument(f"expected two elements in {text!r}")
    return pl.parse(head + ")"), pr.parse(tail)


def _pair(text, pl, pr):
    parts = text.split(",")
    if len(parts) != 2:
        return _jia_pair(text, pl, pr)
    return pl.parse(parts[0]), pr.parse(parts[1])


def _product_report(left, right, open_spec, start, stages, seed):
    for name in (left, right):
        if name not in POSETS:
            raise InvalidArgument(f"unknown poset {name!r}; known: {', '.join(POSETS)}")
    if stages < 1:
        raise InvalidArgument("--stages must be >= 1")
    pl, pr = POSETS[left](), POSETS[right]()
    u = _parse_open(open_spec, left, right)
    a, b = _pair(start, pl, pr)
    params = {"left": left, "right": right, "open": open_spec, "start": start, "stages": stages}
    try:
        st = run_stages(pl, pr, u, (a, b), stages)
    except OracleNotScottOpen as exc:
        det = {"stage": exc.stage, "ideal": exc.ideal, "message": str(exc)}
        return VerificationReport("product-run", params, seed, [Check("stages", "fail", det)])
    checks = [
        Check("stages", "pass", _stage_details(st)),
        Check("up-A-open", "pass" if upclosure_is_scott_open(pl, st.union_A(), st) else "fail"),
        Check("up-B-open", "pass" if upclosure_is_scott_open(pr, st.union_B(), st) else "fail"),
    ]
    return VerificationReport("product-run", params, seed, checks)


def _irreducibility_report(u_text, v_text, seed):
    a, b = parse_P(u_text), parse_P(v_text)
    tr = irreducibility_trace(a, b, ScottOpenP((a,)), ScottOpenP((b,)))
    det = {
        "point": str(tr.point), "same_column": tr.same_column, "swapped": tr.swapped,
        "chain": list(tr.chain), "steps": [[c, str(x)] for c, x in tr.steps],
    }
    params = {"u": u_text, "v": v_text}
    return VerificationReport("irreducibility-witness", params, seed, [Check("trace", "pass", det)])


def _trace_human(report):
    lines = [f"{report.scenario} {report.parameters}"]
    for c in report.checks:
        if c.name == "stages" and "stages" in c.details:
            for r in c.details["stages"]:
                lines.append(f"  stage {r['n']}: E={r['E']} F={r['F']} "
                             f"A={{{', '.join(r['A'])}}} B={{{', '.join(r['B'])}}}")
        elif c.name == "trace":
            d = c.details
            lines.append(f"  chain a = {d['chain']}")
            for clause, x in d["steps"]:
                lines.append(f"  {clause}: {x}")
            lines.append(f"  point in both opens: {d['point']}")
        else:
            lines.append(f"  [{c.status}] {c.name} {c.details or ''}".rstrip())
    return "\n".join(lines)


def cmd_trace(args):
    if args.kind in ("product", "product-omega"):
        rep = _product_report("omega+1", "omega+1", "up:3,3", "5,4", args.stages or 4, args.seed)
    else:
        rep = _irreducibility_report(args.u, args.v, args.seed)
    text = rep.to_json() if args.format == "json" else _trace_human(rep)
    _emit(text, args.out)
    return 0 if rep.passed else 1


def cmd_product_run(args):
    rep = _product_report(args.poset_left, args.poset_right, args.open, args.start,
                          args.stages, args.seed)
    text = rep.to_json() if args.json else _trace_human(rep)
    _emit(text, args.out)
    return 0 if rep.passed else 1


# -- fixtures -----------------------------------------------------------------------

def cmd_fixtures(args):
    paths = []
    for p in args.paths or ["tests/fixtures"]:
        p = Path(p)
        if not p.exists():
            raise InvalidArgument(f"no such file or directory: {p}")
        paths += sorted(p.glob("*.poset")) + sorted(p.glob("*.json")) if p.is_dir() else [p]
    bad = 0
    for path in paths:
        try:
            text = path.read_text()
            if path.suffix == ".json":
                data = json.loads(text)
                for d in data if isinstance(data, list) else [data]:
                    VerificationReport.from_dict(d)
            else:
                p = loads(text)
                if loads(dumps(p)).table.tolist() != p.table.tolist():
                    raise InvalidArgument("does not survive a dump/load round trip")
            print(f"ok    {path}")
        except (InvalidArgument, ValueError, KeyError) as exc:
            bad += 1
            print(f"FAIL  {path}: {exc}")
    return 1 if bad else 0


# -- entry point --------------------------------------------------------------------

def build_parser():
    ap = _Parser(prog="scottkit", description="Checks on a countable non-sober complete lattice.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--seed", type=_seed, default=None)
        p.add_argument("--out", default=None)

    v = sub.add_parser("verify", help="run verification scenarios")
    v.add_argument("--scenario")
    v.add_argument("--all", action="store_true")
    v.add_argument("--json", action="store_true")
    for flag in ("--col-max", "--seq-weight-max", "--stages", "--depth"):
        v.add_argument(flag, type=_positive)
    common(v)

    t = sub.add_parser("table", help="intersection table against the reference tables")
    t.add_argument("--json", action="store_true")
    t.add_argument("--strict", action="store_true", help="exit 1 unless every cell agrees")
    common(t)

    tr = sub.add_parser("trace", help="stage or witness trace")
    tr.add_argument("kind", choices=["product", "product-omega", "irreducibility",
                                     "irreducibility-P"])
    tr.add_argument("--format", choices=["human", "json"], default="human")
    tr.add_argument("--stages", type=_positive)
    tr.add_argument("--u", default="(1|s:1)", help="seed of the first open set")
    tr.add_argument("--v", default="(2|n:1)", help="seed of the second open set")
    common(tr)

    pr = sub.add_parser("product-run", help="run the product stages on named posets")
    pr.add_argument("--poset-left", default="omega+1")
    pr.add_argument("--poset-right", default="omega+1")
    pr.add_argument("--open", default="up:3,3")
    pr.add_argument("--start", default="5,4")
    pr.add_argument("--stages", type=_positive, default=4)
    pr.add_argument("--json", action="store_true")
    common(pr)

    fx = sub.add_parser("fixtures", help="validate fixture files")
    fx.add_argument("action", choices=["check"])
    fx.add_argument("paths", nargs="*")
    return ap


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "trace": cmd_trace,
            "product-run": cmd_product_run, "fixtures": cmd_fixtures}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "seed", 0) is None:
            args.seed = _default_seed()
        return COMMANDS[args.command](args)
    except (InvalidArgument, PreconditionViolation) as exc:
        print(f"scottkit: error: {exc}", file=sys.stderr)
        return 2
    except ScottkitError as exc:
        print(f"scottkit: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
