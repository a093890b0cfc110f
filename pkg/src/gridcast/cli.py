"""Command-line front end: verify, search, table, conjecture, bound, render."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .feasibility import deficit_report
from .lattice import BroadcastSpec, GridPoint, PatternParams
from .render import Viewport, render_ascii, render_svg
from .search import (
    ConjectureComparison,
    SearchResult,
    conjecture_scan,
    feasibility_table,
    min_density_search,
)
from .signals import density_bound

TABLE_FORMATS = ("plain", "csv", "json", "markdown")
REPORT_FORMATS = ("plain", "json")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def any_int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")


def frac_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def frac_json(value: Fraction | None) -> dict | None:
    if value is None:
        return None
    return {"num": value.numerator, "den": value.denominator}


def cell_str(res: SearchResult) -> str:
    return f"T({res.best_d},{res.best_e})" if res.feasible else "N/A"


def result_json(res: SearchResult, *, witnesses: bool = False) -> dict:
    obj = {
        "t": res.spec.t,
        "r": res.spec.r,
        "d": res.best_d if res.feasible else None,
        "e": res.best_e,
        "density": frac_json(res.density),
        "feasible": res.feasible,
    }
    if witnesses:
        obj["witnesses"] = list(res.witnesses)
    return obj


def result_csv_row(res: SearchResult) -> list:
    if not res.feasible:
        return [res.spec.t, res.spec.r, "", "", "", ""]
    assert res.density is not None
    return [res.spec.t, res.spec.r, res.best_d, res.best_e,
            res.density.numerator, res.density.denominator]


CSV_HEADER = ["t", "r", "d", "e", "density_num", "density_den"]


def csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def grid_cells(results: list[SearchResult]) -> tuple[list[int], list[int], dict]:
    ts = sorted({res.spec.t for res in results})
    rs = sorted({res.spec.r for res in results})
    cells = {(res.spec.t, res.spec.r): cell_str(res) for res in results}
    return ts, rs, cells


def table_markdown(results: list[SearchResult]) -> str:
    ts, rs, cells = grid_cells(results)
    lines = ["| t\\r | " + " | ".join(str(r) for r in rs) + " |"]
    lines.append("| --- |" + " --- |" * len(rs))
    for t in ts:
        lines.append(f"| {t} | " + " | ".join(cells[(t, r)] for r in rs) + " |")
    return "\n".join(lines)


def table_plain(results: list[SearchResult]) -> str:
    ts, rs, cells = grid_cells(results)
    header = ["t\\r"] + [str(r) for r in rs]
    rows = [[str(t)] + [cells[(t, r)] for r in rs] for t in ts]
    widths = [max(len(row[i]) for row in [header] + rows) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join(fmt.format(*row) for row in [header] + rows)


def emit(text: str, output: str | None) -> None:
    if output is None:
        print(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def cmd_verify(args: argparse.Namespace) -> int:
    spec = BroadcastSpec(args.t, args.r)
    params = PatternParams(args.d, args.e)
    record = deficit_report(spec, params)
    if args.format == "json":
        obj = {
            "t": spec.t,
            "r": spec.r,
            "d": params.d,
            "e": params.e,
            "feasible": record.feasible,
            "row_totals": [{"x": v.x, "y": v.y, "total": s} for v, s in record.row_totals],
        }
        print(json.dumps(obj, indent=2))
    else:
        relation = "is" if record.feasible else "is not"
        print(f"T({params.d},{params.e}) {relation} a ({spec.t},{spec.r}) broadcast")
        print("signal totals:")
        for v, s in record.row_totals:
            deficit = f"  (deficit, needs {spec.r})" if s < spec.r else ""
            print(f"  ({v.x},{v.y}) {s}{deficit}")
    return EXIT_OK if record.feasible else EXIT_NEGATIVE


def cmd_search(args: argparse.Namespace) -> int:
    res = min_density_search(BroadcastSpec(args.t, args.r))
    if args.format == "json":
        print(json.dumps(result_json(res, witnesses=args.all_witnesses), indent=2))
    elif args.format == "csv":
        print(csv_text(CSV_HEADER, [result_csv_row(res)]))
    elif args.format == "markdown":
        print(table_markdown([res]))
    else:
        if res.feasible:
            assert res.density is not None
            print(f"{cell_str(res)} density {frac_str(res.density)}")
            if args.all_witnesses:
                print("witnesses: " + ", ".join(str(e) for e in res.witnesses))
        else:
            print("N/A")
    return EXIT_OK if res.feasible else EXIT_NEGATIVE


def cmd_table(args: argparse.Namespace) -> int:
    results = feasibility_table(args.t_max, args.r_max, jobs=args.threads)
    if args.format == "json":
        text = json.dumps([result_json(res) for res in results], indent=2)
    elif args.format == "csv":
        text = csv_text(CSV_HEADER, [result_csv_row(res) for res in results])
    elif args.format == "markdown":
        text = table_markdown(results)
    else:
        text = table_plain(results)
    emit(text, args.output)
    return EXIT_OK


def comparison_plain(cmp: ConjectureComparison) -> str:
    base = "N/A" if cmp.base_density is None else frac_str(cmp.base_density)
    lifted = "N/A" if cmp.lifted_density is None else frac_str(cmp.lifted_density)
    return (
        f"({cmp.base.t},{cmp.base.r}) -> ({cmp.lifted.t},{cmp.lifted.r}): "
        f"{base} vs {lifted}: {cmp.verdict.value}"
    )


def comparison_json(cmp: ConjectureComparison) -> dict:
    return {
        "base": {"t": cmp.base.t, "r": cmp.base.r},
        "lifted": {"t": cmp.lifted.t, "r": cmp.lifted.r},
        "base_density": frac_json(cmp.base_density),
        "lifted_density": frac_json(cmp.lifted_density),
        "verdict": cmp.verdict.value,
    }


def cmd_conjecture(args: argparse.Namespace) -> int:
    comparisons = conjecture_scan(args.t_max, args.r_max, jobs=args.threads)
    if args.format == "json":
        print(json.dumps([comparison_json(c) for c in comparisons], indent=2))
    elif args.format == "csv":
        header = ["base_t", "base_r", "lifted_t", "lifted_r",
                  "base_density_num", "base_density_den",
                  "lifted_density_num", "lifted_density_den", "verdict"]
        rows = []
        for c in comparisons:
            bd = ["", ""] if c.base_density is None else [c.base_density.numerator, c.base_density.denominator]
            ld = ["", ""] if c.lifted_density is None else [c.lifted_density.numerator, c.lifted_density.denominator]
            rows.append([c.base.t, c.base.r, c.lifted.t, c.lifted.r, *bd, *ld, c.verdict.value])
        print(csv_text(header, rows))
    elif args.format == "markdown":
        lines = ["| base | lifted | base density | lifted density | verdict |",
                 "| --- | --- | --- | --- | --- |"]
        for c in comparisons:
            base = "N/A" if c.base_density is None else frac_str(c.base_density)
            lifted = "N/A" if c.lifted_density is None else frac_str(c.lifted_density)
            lines.append(
                f"| ({c.base.t},{c.base.r}) | ({c.lifted.t},{c.lifted.r}) "
                f"| {base} | {lifted} | {c.verdict.value} |"
            )
        print("\n".join(lines))
    else:
        for c in comparisons:
            print(comparison_plain(c))
    found = any(c.verdict.is_counterexample for c in comparisons)
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_bound(args: argparse.Namespace) -> int:
    spec = BroadcastSpec(args.t, args.r)
    bound = density_bound(spec)
    if args.format == "json":
        obj = {
            "t": spec.t,
            "r": spec.r,
            "usable": bound.usable,
            "delta_min": frac_json(bound.delta_min),
            "d_max": bound.d_max,
        }
        print(json.dumps(obj, indent=2))
    else:
        print(f"usable signal per tower: {bound.usable}")
        print(f"density lower bound: {frac_str(bound.delta_min)}")
        print(f"d_max: {bound.d_max}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    if args.t is None and args.r is not None:
        raise ValueError("--r requires --t")
    # Coverage drawing only depends on t; r is accepted for symmetry.
    spec = BroadcastSpec(args.t, args.r if args.r is not None else 1) if args.t is not None else None
    params = PatternParams(args.d, args.e)
    vp = Viewport(
        width=args.width,
        height=args.height,
        origin=GridPoint(args.origin_x, args.origin_y),
        translation=GridPoint(args.shift_x, args.shift_y),
    )
    if args.format == "svg":
        text = render_svg(params, vp, spec)
    else:
        text = render_ascii(params, vp, spec)
    emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridcast",
        description="Best periodic (t,r) broadcast dominating patterns on the infinite grid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check whether T(d,e) is a (t,r) broadcast")
    p.add_argument("--t", type=positive_int, required=True, help="tower strength")
    p.add_argument("--r", type=positive_int, required=True, help="required signal")
    p.add_argument("--d", type=positive_int, required=True, help="lattice period")
    p.add_argument("--e", type=any_int, required=True, help="row offset (normalized mod d)")
    p.add_argument("--format", choices=REPORT_FORMATS, default="plain")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="find the sparsest feasible lattice for (t,r)")
    p.add_argument("--t", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.add_argument("--all-witnesses", action="store_true",
                   help="also list every feasible offset at the best period")
    p.add_argument("--format", choices=TABLE_FORMATS, default="plain")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="best lattices for every (t,r) up to the given maxima")
    p.add_argument("--t-max", type=positive_int, required=True)
    p.add_argument("--r-max", type=positive_int, required=True)
    p.add_argument("--format", choices=TABLE_FORMATS, default="plain")
    p.add_argument("--threads", type=positive_int, default=1,
                   help="worker processes; any value produces identical output")
    p.add_argument("--output", default=None, help="write to this file instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("conjecture", help="compare (t,r) vs (t+1,r+2) best densities")
    p.add_argument("--t-max", type=positive_int, required=True)
    p.add_argument("--r-max", type=positive_int, required=True)
    p.add_argument("--format", choices=TABLE_FORMATS, default="plain")
    p.add_argument("--threads", type=positive_int, default=1)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("bound", help="usable signal, density lower bound, and d_max")
    p.add_argument("--t", type=positive_int, required=True)
    p.add_argument("--r", type=positive_int, required=True)
    p.add_argument("--format", choices=REPORT_FORMATS, default="plain")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("render", help="draw a lattice (and optionally its signal coverage)")
    p.add_argument("--d", type=positive_int, required=True)
    p.add_argument("--e", type=any_int, required=True)
    p.add_argument("--t", type=positive_int, default=None,
                   help="draw signal coverage for towers of this strength")
    p.add_argument("--r", type=positive_int, default=None)
    p.add_argument("--width", type=positive_int, required=True)
    p.add_argument("--height", type=positive_int, required=True)
    p.add_argument("--origin-x", type=any_int, default=0)
    p.add_argument("--origin-y", type=any_int, default=0)
    p.add_argument("--shift-x", type=any_int, default=0,
                   help="sample the lattice shifted by this many columns")
    p.add_argument("--shift-y", type=any_int, default=0)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
