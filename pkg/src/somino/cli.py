"""Command-line interface.

Exit status: 0 success, 1 failed verification, 2 usage error or rejected
input.  Errors go to stderr as ``somino: error: <message>``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import checks, exact, mseries
from . import rowconvex as rc
from .dyck import DyckPath, PathError, path_to_tower, tower_to_path, validate_path
from .enumerator import DEFAULT_CAP, EnumSpec, count, enumerate_towers
from .render import tower_svg
from .series import DEFAULT_ORDER
from .tower import ClassSpec, Tower, TowerError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_tower(text: str) -> Tower:
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    elif text == "-":
        text = sys.stdin.read()
    try:
        return Tower.from_json(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"tower is not valid JSON: {exc}")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _nvec(args) -> list[int]:
    if args.nvec is None:
        raise UsageError("--nvec is required")
    if len(args.nvec) != len(args.widths):
        raise UsageError(f"--nvec has {len(args.nvec)} entries for {len(args.widths)} widths")
    return args.nvec


def cmd_count(args) -> int:
    nv = _nvec(args)
    kind = args.kind or ("wb" if args.b is not None else "total")
    if kind == "wb":
        if args.b is None:
            raise UsageError("--kind wb needs --b")
        value = exact.count_Wb(args.widths, nv, args.b)
    elif kind == "total":
        value = exact.count_total(args.widths, nv, args.method)
    elif kind == "u":
        value = exact.count_U(args.widths, nv)
    else:
        value = exact.count_dyck(exact.HnSpec.from_towers(args.widths, nv))
    _emit(args, f"{value}\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = EnumSpec(args.widths, _nvec(args), ClassSpec.parse(args.cls), args.restricted, args.row_convex)
    if args.count_only:
        _emit(args, f"{count(spec, args.cap)}\n")
    else:
        towers = enumerate_towers(spec, args.cap, workers=args.workers)
        _emit(args, "".join(t.to_json() + "\n" for t in towers))
    return EXIT_OK


def _gf(args) -> mseries.MSeries:
    ws, N = args.widths, args.order
    if args.gf == "U":
        return mseries.solve_U(ws, N)
    if args.gf == "V":
        return mseries.V_series(ws, args.s, N)
    if args.gf == "H":
        return mseries.H_series(ws, args.s, N)
    if args.gf == "W":
        return mseries.W_series(ws, args.b or 1, N)
    total = mseries.W_total(ws, N)
    return mseries.restricted_transform(total) if args.gf == "restricted" else total


def cmd_series(args) -> int:
    s = mseries.require_counting_series(_gf(args), args.gf)
    if args.format == "csv":
        _emit(args, s.to_csv())
    else:
        _emit(args, json.dumps(s.to_dict()) + "\n")
    return EXIT_OK


def cmd_rowconvex(args) -> int:
    N, k = args.order, args.k
    if k < 2 or N < 1:
        raise UsageError("need --k >= 2 and --order >= 1")
    ells = args.ell or ([] if args.g else [1])
    columns: dict[str, list[int]] = {}
    if args.dp:
        columns.update({f"f_{l}": [rc.f_dp(l, n, k) for n in range(N)] for l in ells})
        if args.g:
            columns["g"] = [0] + [rc.g_dp(n, k) for n in range(1, N)]
    else:
        columns.update({f"f_{l}": rc.F_series(l, k, N).integers() for l in ells})
        if args.g:
            columns["g"] = rc.G_series(k, N).integers()
    start = 1 if args.g and not ells else 0
    names = list(columns)
    records = [[n] + [columns[c][n] for c in names] for n in range(start, N)]
    if args.format == "json":
        _emit(args, json.dumps([dict(zip(["n"] + names, r)) for r in records]) + "\n")
    else:
        _emit(args, _csv([["n"] + names] + records))
    return EXIT_OK


def cmd_bijection(args) -> int:
    if args.roundtrip_check:
        spec = EnumSpec(args.widths, _nvec(args), ClassSpec.U())
        towers = enumerate_towers(spec, args.cap)
        bad = [t for t in towers if path_to_tower(tower_to_path(t), args.widths) != t]
        expected = exact.count_dyck(exact.HnSpec.from_towers(args.widths, spec.nvec))
        ok = not bad and len(towers) == expected
        _emit(args, json.dumps({"towers": len(towers), "dyck_paths": expected, "failures": len(bad), "passed": ok}) + "\n")
        return EXIT_OK if ok else EXIT_FAIL
    if args.tower:
        _emit(args, str(tower_to_path(_read_tower(args.tower))) + "\n")
        return EXIT_OK
    if args.path is not None:
        word = args.path
        ups = sorted({c for c in word if c})
        pairs = [(word.count(l), l) for l in ups]
        path = DyckPath(exact.HnSpec(pairs), word)
        if not validate_path(path):
            raise UsageError(f"not a generalised Dyck path: {args.path}")
        widths = args.widths if args.widths_given else None
        _emit(args, path_to_tower(path, widths).to_json() + "\n")
        return EXIT_OK
    raise UsageError("bijection needs --tower, --path or --roundtrip-check")


def _colour(ok: bool) -> str:
    word = "PASS" if ok else "FAIL"
    if sys.stdout.isatty() and "NO_COLOR" not in os.environ:
        return f"\033[{32 if ok else 31}m{word}\033[0m"
    return word


def cmd_verify(args) -> int:
    results = checks.run_suite(args.suite)
    lines = [f"{_colour(r.passed)}  {r.name}  ({r.detail})" for r in results]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_render(args) -> int:
    _emit(args, tower_svg(_read_tower(args.tower)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="somino", description="Count, enumerate and cross-check S-omino towers.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, widths=True, nvec=True):
        if widths:
            sp.add_argument("--widths", type=_ints, default=[2], help="comma-separated distinct widths (default 2)")
        if nvec:
            sp.add_argument("--nvec", type=_ints, help="comma-separated block counts per width")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")

    sp = sub.add_parser("count", help="closed-form tower counts")
    common(sp)
    sp.add_argument("--b", type=int, help="blocks in the bottom row")
    sp.add_argument("--kind", choices=["wb", "total", "u", "dyck"])
    sp.add_argument("--method", choices=["sum", "hyp2f1"], default="sum")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="list towers of a class as JSON lines")
    common(sp)
    sp.add_argument("--class", dest="cls", default="any", help="W<b>, U, V<l>, H<l>, RC<l> or any (default)")
    sp.add_argument("--restricted", action="store_true")
    sp.add_argument("--row-convex", action="store_true")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("series", help="multivariate generating-function coefficients")
    common(sp, nvec=False)
    sp.add_argument("--gf", choices=["U", "V", "H", "W", "total", "restricted"], default="total")
    sp.add_argument("--b", type=int, default=1)
    sp.add_argument("--s", type=int, default=1, help="platform width for V and H")
    sp.add_argument("--order", type=int, default=8, help="maximum total degree")
    sp.add_argument("--format", choices=["json", "csv"], default="json")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("rowconvex", help="row-convex k-omino tower counts")
    common(sp, widths=False, nvec=False)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--order", type=int, default=DEFAULT_ORDER, help="coefficients n < order")
    sp.add_argument("--ell", type=int, action="append", help="platform width in units of k (repeatable)")
    sp.add_argument("--g", action="store_true", help="include g(n)")
    sp.add_argument("--dp", action="store_true", help="use the recurrence instead of the closed form")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.set_defaults(func=cmd_rowconvex)

    sp = sub.add_parser("bijection", help="towers of U <-> generalised Dyck paths")
    common(sp)
    sp.add_argument("--tower", help="tower JSON, @file or - for stdin")
    sp.add_argument("--path", type=_ints, help="comma-separated path word")
    sp.add_argument("--roundtrip-check", action="store_true")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_bijection)

    sp = sub.add_parser("verify", help="run the cross-check suite")
    sp.add_argument("--suite", choices=sorted(checks.SUITES), default="all")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="draw a tower as SVG")
    sp.add_argument("--tower", required=True, help="tower JSON, @file or - for stdin")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)
    args.widths_given = "--widths" in argv
    try:
        return args.func(args)
    except (UsageError, TowerError, PathError, ValueError, OSError) as exc:
        print(f"somino: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
