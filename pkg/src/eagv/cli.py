"""Command-line entry point: ``eagv <command> ...``.

Exit codes: 0 success, 1 table mismatch or witness not found, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import asymptotic as asy
from .bounds import BoundParamsNew, BoundParamsOld, InvalidParameters, check_new, check_old
from .gf import FieldError, make_field
from .pareto import TABLE1, pareto_new, pareto_old, reproduce_table1
from .symplectic import (
    BudgetExceeded,
    MatrixError,
    analyze_code,
    detection_check,
    read_matrix,
    write_matrix,
)
from .witness import EXHAUSTIVE, RANDOM, SearchConfig, SearchError, search_witness


class UsageError(Exception):
    pass


@dataclass
class Output:
    data: dict
    rows: list[dict] = field(default_factory=list)
    code: int = 0


def _pairs(f) -> list[list[int]]:
    return [list(p) for p in f]


def _pairs_text(pairs) -> str:
    return " ".join(f"({a}, {b})" for a, b in pairs)


def cmd_bound(args) -> Output:
    if args.which == "new":
        ok, lhs = check_new(BoundParamsNew(args.q, args.n, args.l, args.c, args.dx, args.dz))
    else:
        ok, lhs = check_old(BoundParamsOld(args.q, args.n, args.k1, args.k2, args.c, args.dz, args.dx))
    data = {"satisfied": ok, **lhs.to_json()}
    return Output(data, [data])


def cmd_pareto(args) -> Output:
    if args.which == "new":
        fr = pareto_new(args.q, args.n, args.l, args.c)
    else:
        fr = pareto_old(args.q, args.n, args.k1, args.k2, args.c)
    data = {"source": fr.source, "params": fr.params, "pairs": _pairs(fr)}
    return Output(data, [{"d1": a, "d2": b} for a, b in fr])


def cmd_table1(args) -> Output:
    if args.row is not None and not 1 <= args.row <= len(TABLE1):
        raise UsageError(f"row must be in 1..{len(TABLE1)}")
    report = reproduce_table1(None if args.row is None else [args.row - 1])
    rows = []
    for r in report.rows:
        rows.append({
            "q": r.q, "n": r.n, "k1": r.k1, "k2": r.k2, "c": r.c,
            "frontier_old": json.dumps(r.actual_old and _pairs(r.actual_old), separators=(",", ":")),
            "frontier_new": json.dumps(r.actual_new and _pairs(r.actual_new), separators=(",", ":")),
            "match": "match" if r.match else "MISMATCH",
            "improves": r.improves,
        })
    data = report.to_dict()
    for r, d in zip(report.rows, data["rows"]):
        diff = r.differences()
        if diff:
            d["differences"] = {k: {kk: _pairs(vv) for kk, vv in v.items()} for k, v in diff.items()}
    return Output(data, rows, 0 if report.success else 1)


def cmd_code(args) -> Output:
    f, n, H = read_matrix(args.file)
    cs = analyze_code(f, n, H)
    if args.which == "analyze":
        data = {
            "q": f.q, "n": n, "ell": cs.ell, "c": cs.c,
            "dim_intersection": cs.dim_intersection, "dual_dim": cs.dual_dim,
            "params": f"[[{n}, {n - cs.ell + cs.c}; {cs.c}]]_{f.q}",
        }
        return Output(data, [data])
    res = detection_check(cs, args.dx, args.dz, args.budget)
    data = {
        "ok": res.ok,
        "counterexample": None if res.counterexample is None else res.counterexample.concat().tolist(),
        "candidates": res.candidates,
    }
    if res.ok:
        data["params"] = f"[[{n}, {n - cs.ell + cs.c}, {args.dx}/{args.dz}; {cs.c}]]_{f.q}"
    row = dict(data, counterexample="" if res.counterexample is None else str(res.counterexample))
    return Output(data, [row])


def cmd_search(args) -> Output:
    p = BoundParamsNew(args.q, args.n, args.l, args.c, args.dx, args.dz)
    cfg = SearchConfig(p, args.mode, args.trials, args.seed, args.budget)
    rep = search_witness(cfg)
    if rep.found and args.out:
        write_matrix(args.out, make_field(p.q), p.n, rep.witness,
                     comment=f"witness l={p.ell} c={p.c} dx={p.d_x} dz={p.d_z}")
    data = rep.to_dict()
    row = {k: v for k, v in data.items() if k not in ("witness", "stats")}
    row.update(rep.stats)
    return Output(data, [row], 0 if rep.found else 1)


def cmd_asymptotic(args) -> Output:
    if args.which == "check":
        p = asy.AsymptoticParams(args.q, args.L, args.lam, args.dx, args.dz)
        data = {
            "feasible": asy.check_asymptotic(p),
            "status": asy.classify_asymptotic(p),
            "margin": f"{asy.asymptotic_margin(p):.12g}",
            "rate": f"{p.rate:.12g}",
        }
        return Output(data, [data])
    curve = asy.tradeoff_curve(args.q, args.L, args.points)
    text = asy.curve_csv(curve)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    rows = [{"delta_x": f"{a:.12g}", "delta_z_max": f"{b:.12g}"} for a, b in curve]
    return Output({"q": args.q, "L": args.L, "points": len(curve), "curve": [[r["delta_x"], r["delta_z_max"]] for r in rows]}, rows)


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.data, separators=(",", ":"))
    rows = out.rows or [out.data]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        w.writerows({k: _csv_cell(v) for k, v in r.items()} for r in rows)
        return buf.getvalue().rstrip("\n")
    cols = list(rows[0])
    cells = [[_cell(r[c]) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines)


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    return "" if v is None else v


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return _pairs_text(v) if v and isinstance(v[0], list) else json.dumps(v)
    if v is None:
        return "-"
    return str(v)


def _default_seed() -> int:
    env = os.environ.get("GV_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"GV_SEED={env!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "table"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="eagv", parents=[common],
                                 description="GV-type bounds for entanglement-assisted asymmetric quantum codes")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(parent, name, **kw):
        return parent.add_parser(name, parents=[common], **kw)

    bound = add(sub, "bound", help="evaluate one inequality").add_subparsers(dest="which", required=True)
    b = add(bound, "new")
    for flag in ("q", "n", "l", "c", "dx", "dz"):
        b.add_argument("--" + flag, type=int, required=True)
    b = add(bound, "old")
    for flag in ("q", "n", "k1", "k2", "c", "dz", "dx"):
        b.add_argument("--" + flag, type=int, required=True)

    pareto = add(sub, "pareto", help="maximal distance pairs").add_subparsers(dest="which", required=True)
    b = add(pareto, "new")
    for flag in ("q", "n", "l", "c"):
        b.add_argument("--" + flag, type=int, required=True)
    b = add(pareto, "old")
    for flag in ("q", "n", "k1", "k2", "c"):
        b.add_argument("--" + flag, type=int, required=True)

    t = add(sub, "table1", help="recompute the comparison table")
    t.add_argument("--row", type=int, help="1-based row index")

    code = add(sub, "code", help="inspect a generator matrix file").add_subparsers(dest="which", required=True)
    b = add(code, "analyze")
    b.add_argument("--file", required=True)
    b = add(code, "detect")
    b.add_argument("--file", required=True)
    b.add_argument("--dx", type=int, required=True)
    b.add_argument("--dz", type=int, required=True)
    b.add_argument("--budget", type=int, default=10**7)

    s = add(sub, "search", help="look for an explicit witness code")
    for flag in ("q", "n", "l", "c", "dx", "dz"):
        s.add_argument("--" + flag, type=int, required=True)
    s.add_argument("--mode", choices=[RANDOM, EXHAUSTIVE], default=RANDOM)
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--budget", type=int, default=10**7)
    s.add_argument("--out")

    asym = add(sub, "asymptotic", help="entropy form of the bound").add_subparsers(dest="which", required=True)
    b = add(asym, "check")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--L", type=float, required=True)
    b.add_argument("--lambda", dest="lam", type=float, default=0.0)
    b.add_argument("--dx", type=float, required=True)
    b.add_argument("--dz", type=float, required=True)
    b = add(asym, "curve")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--L", type=float, required=True)
    b.add_argument("--points", type=int, default=512)
    b.add_argument("--out")
    return ap


COMMANDS = {
    "bound": cmd_bound,
    "pareto": cmd_pareto,
    "table1": cmd_table1,
    "code": cmd_code,
    "search": cmd_search,
    "asymptotic": cmd_asymptotic,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    fmt = getattr(args, "format", "table")
    try:
        if not hasattr(args, "seed"):
            args.seed = _default_seed()
        out = COMMANDS[args.command](args)
    except (InvalidParameters, FieldError, MatrixError, UsageError, SearchError, BudgetExceeded,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(render(out, fmt), file=stdout)
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
