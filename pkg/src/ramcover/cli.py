"""Command-line entry point.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(the failing item is in the report), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
from importlib import resources
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import bounds, certify, induced, tables
from .perm import Caps, CapExceeded, GeneratorSet, classify_alternating, current_caps, group_order, parse_caps
from .ramdata import InputError, RamificationData, data_from_json_text, parse_partition, rh_genus, to_csv

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    caps: Caps = field(default_factory=Caps)
    seed: int = 0
    format: str = "json"


def load_schema(name: str = "report") -> dict:
    """The shipped JSON schema: "report" for CLI output, "ramdata" for input."""
    text = resources.files("ramcover").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def _frac(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _read_data(args) -> RamificationData:
    if args.data and args.branches:
        raise UsageError("give either --data or --branches, not both")
    if args.data:
        try:
            with open(args.data, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.data}: {exc.strerror}") from None
        return data_from_json_text(text)
    if args.branches:
        parts = [parse_partition(s.strip(), args.degree) for s in args.branches.split(";") if s.strip()]
        if not parts:
            raise InputError("no branches given")
        degree = args.degree or parts[0].degree
        return RamificationData(degree, tuple(parts))
    raise UsageError("one of --data or --branches is required")


def _data_args(p):
    p.add_argument("--data", help="JSON file {\"degree\": N, \"branches\": [[...], ...]}")
    p.add_argument("--branches", help="compact partitions separated by ';', e.g. '13;3,10;2,1^*'")
    p.add_argument("--degree", type=int, help="degree for starred compact items")


def _ell_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B") from None
    if a > b:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


# ---------------------------------------------------------------------------
# Handlers; each returns (exit code, output text)


def _tables_gen(cfg: RunConfig):
    a = cfg.args
    ell = a.ell
    if a.table == "two-set":
        entries = tables.gen_two_set_table(ell)
    elif a.table == "f":
        entries = tables.gen_f_table(ell)
    elif a.table == "solvable":
        entries = tables.gen_solvable_table(ell)
    else:
        entries = tables.gen_nonexistence_table(ell)
    if cfg.format == "csv":
        return EXIT_OK, to_csv((e.key(), e.data) for e in entries)
    if cfg.format == "text":
        return EXIT_OK, "".join(f"{e.key()}: {e.data}\n" for e in entries)
    return EXIT_OK, _json({"table": a.table, "ell": ell, "count": len(entries),
                           "entries": [e.to_json() for e in entries]})


def _tables_count(cfg: RunConfig):
    rows = []
    for ell in _ell_range(cfg.args.ell_range):
        if ell < 13:
            raise UsageError("table counts need l >= 13")
        row = tables.table_counts(ell)
        row["ok"] = row["f_types"] == row["predicted"]
        rows.append(row)
    code = EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAIL
    return code, _json({"counts": rows})


def _bounds_gx2(cfg: RunConfig):
    d = _read_data(cfg.args)
    if d.degree < 5:
        raise UsageError("the identity needs degree at least 5")
    g = bounds.g_X2_formula(d, cfg.args.gy1)
    return (EXIT_OK if g.denominator == 1 else EXIT_FAIL), _json({"g_x2": _frac(g)})


def _bounds_classify(cfg: RunConfig):
    d = _read_data(cfg.args)
    alpha = cfg.args.alpha
    points = [bounds.classify_point(e, alpha).to_json() for e in d.branches]
    try:
        cover = bounds.classify_cover(d, alpha).to_json()
    except ValueError as exc:
        return EXIT_FAIL, _json({"points": points, "case": None, "M": None, "error": str(exc)})
    cover["points"] = points
    return EXIT_OK, _json(cover)


def _bounds_filter(cfg: RunConfig):
    d = _read_data(cfg.args)
    report = bounds.decomposability_filter(d).to_json()
    report["triggered"] = bool(report["conditions"])
    return EXIT_OK, _json(report)


def _bounds_oracle(cfg: RunConfig):
    ledger = bounds.run_oracles(cfg.args.max_degree, cfg.args.max_t, cfg.caps)
    return (EXIT_OK if not ledger.failures else EXIT_FAIL), _json(ledger.to_json())


def _certify_run(cfg: RunConfig):
    a = cfg.args
    built = certify.build_tuple(a.label, a.ell, a=a.a, m=a.m, n=a.n, caps=cfg.caps)
    report = certify.certify(built, built.expected, caps=cfg.caps)
    out = report.to_json()
    out["params"] = dict(built.params)
    return (EXIT_OK if report.ok else EXIT_FAIL), _json(out)


def _certify_all(cfg: RunConfig):
    reports = certify.certify_all(cfg.args.max_ell, cfg.caps)
    reports.sort(key=lambda r: (r.label, r.ell))
    ok = all(r.ok for r in reports)
    return (EXIT_OK if ok else EXIT_FAIL), _json({"reports": [r.to_json() for r in reports], "ok": ok})


def _certify_refute(cfg: RunConfig):
    d = _read_data(cfg.args)
    report = certify.exhaustive_refute(d, cfg.args.cap, cfg.caps)
    return EXIT_OK, _json(report.to_json())


def _generators(args) -> GeneratorSet:
    if not args.perm:
        raise UsageError("give at least one --perm")
    try:
        return GeneratorSet.parse(args.perm, args.degree)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _induce_lift(cfg: RunConfig):
    d = _read_data(cfg.args)
    lifted = induced.lift_table_entry(d)
    g = rh_genus(lifted)
    return EXIT_OK, _json({"degree": lifted.degree, "branches": [list(b.parts) for b in lifted.branches],
                           "rh_genus": g.to_json()})


def _induce_genera(cfg: RunConfig):
    g = _generators(cfg.args)
    try:
        b = induced.BranchTuple.of(g.gens)
    except ValueError as exc:
        return EXIT_FAIL, _json({"error": str(exc)})
    report = induced.quotient_genera(b, cfg.args.t, cfg.caps)
    return EXIT_OK, _json(report.to_json())


def _perm_classify(cfg: RunConfig):
    g = _generators(cfg.args)
    verdict = classify_alternating(g, cfg.caps)
    out = verdict.to_json()
    if out["order"] is None and g.degree <= cfg.caps.chain_degree:
        out["order"] = group_order(g, cfg.caps, seed=cfg.seed)
    return EXIT_OK, _json(out)


HANDLERS = {
    "tables gen": _tables_gen,
    "tables count": _tables_count,
    "bounds gx2": _bounds_gx2,
    "bounds classify": _bounds_classify,
    "bounds filter": _bounds_filter,
    "bounds oracle": _bounds_oracle,
    "certify run": _certify_run,
    "certify all": _certify_all,
    "certify refute": _certify_refute,
    "induce lift": _induce_lift,
    "induce genera": _induce_genera,
    "perm classify": _perm_classify,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ramcover", description="Monodromy, genus and ramification-table checks.")
    p.add_argument("--caps", default="", help="cap overrides, e.g. chain=64,induced=10000000,search=10")
    p.add_argument("--seed", type=int, default=0)
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    t = top.add_parser("tables").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = t.add_parser("gen")
    s.add_argument("--table", choices=["two-set", "f", "solvable", "nonexist"], required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--format", choices=["json", "csv", "text"], default="json")
    s = t.add_parser("count")
    s.add_argument("--ell-range", required=True, help="A..B")

    b = top.add_parser("bounds").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = b.add_parser("gx2")
    _data_args(s)
    s.add_argument("--gy1", type=int, required=True)
    s = b.add_parser("classify")
    _data_args(s)
    s.add_argument("--alpha", type=int, required=True)
    s = b.add_parser("filter")
    _data_args(s)
    s = b.add_parser("oracle")
    s.add_argument("--max-degree", type=int, required=True)
    s.add_argument("--max-t", type=int, required=True)

    c = top.add_parser("certify").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = c.add_parser("run")
    s.add_argument("--label", required=True, choices=list(certify.LABELS))
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--a", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s = c.add_parser("all")
    s.add_argument("--max-ell", type=int, required=True)
    s = c.add_parser("refute")
    _data_args(s)
    s.add_argument("--cap", type=int)

    i = top.add_parser("induce").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = i.add_parser("lift")
    _data_args(s)
    s = i.add_parser("genera")
    s.add_argument("--perm", action="append", help="cycle notation, 1-indexed; repeat per branch")
    s.add_argument("--degree", type=int)
    s.add_argument("--t", type=int, default=2)

    g = top.add_parser("perm").add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    s = g.add_parser("classify")
    s.add_argument("--perm", action="append", help="cycle notation, 1-indexed; repeat per generator")
    s.add_argument("--degree", type=int)
    return p


def dispatch(cfg: RunConfig) -> tuple[int, str]:
    return HANDLERS[cfg.command](cfg)


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        caps = parse_caps(args.caps, current_caps())
        cfg = RunConfig(f"{args.group} {args.cmd}", args, caps, args.seed, getattr(args, "format", "json"))
        code, text = dispatch(cfg)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        err.write(f"input error: {exc}\n")
        return EXIT_USAGE
    except (tables.Inadmissible, CapExceeded, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    out.write(text if text.endswith("\n") else text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
