"""Command line front end: ``hookbias <verb> [flags]``.

Verbs: compute, verify, search, bijection-check, export, import.
Exit status is 0 on pass or informational output, 1 when a theorem-grade
check fails, 2 on usage errors, 3 on I/O errors and 4 on corrupt tables.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from pathlib import Path

from . import analysis, bijections, hookgf
from .report import CheckReport
from .tables import CoefficientTable, CorruptTable, read_table, table_filename, write_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_CORRUPT = 0, 1, 2, 3, 4
MAX_N = 20000
CACHE_ENV = "HOOKBIAS_CACHE_DIR"

SERIES_ALIASES = {
    "b_t1": "b_t1", "bt1": "b_t1",
    "b_32": "b_32", "b32": "b_32",
    "diff_32_31": "diff_32_31", "diff3231": "diff_32_31",
    "b_2i": "b_2i", "b2i": "b_2i",
    "t_series": "t_series", "t": "t_series",
    "s_series": "s_series", "s": "s_series",
    "diff_2k": "diff_2k", "diff2k": "diff_2k",
}
_SERIES_PARAM = {"b_t1": "t", "b_2i": "i", "diff_2k": "k"}

CAMPAIGNS = ("theorem1", "lemma23", "odd-k", "even-k", "at-bt", "decomp45", "decomp67",
             "t7s7", "positivity", "oracle", "s-ratio", "q-asymptotic", "negative-tail",
             "bijections")


class UsageError(Exception):
    pass


def series_label(name: str, args) -> str:
    key = _SERIES_PARAM.get(name)
    if key is None:
        return name
    value = getattr(args, key)
    if value is None:
        raise UsageError(f"series {name} needs --{key}")
    return f"{name}[{key}={value}]"


def _check_N(N: int, force: bool):
    if N < 0:
        raise UsageError("--N must be non-negative")
    if N > MAX_N and not force:
        raise UsageError(f"--N {N} exceeds {MAX_N}; products are quadratic in N, pass --force")


def build_table(args) -> CoefficientTable:
    name = SERIES_ALIASES.get(args.series)
    if name is None:
        raise UsageError(f"unknown series {args.series!r}")
    _check_N(args.N, args.force)
    label = series_label(name, args)
    cache = os.environ.get(CACHE_ENV)
    cached = Path(cache) / table_filename(label, args.N) if cache else None
    if cached is not None and cached.exists():
        table = read_table(cached)
        if table.name == label and table.trunc == args.N:
            return table
    s = hookgf.gf(name, args.N, t=args.t, i=args.i, k=args.k)
    table = CoefficientTable.from_series(label, s)
    if cached is not None:
        cached.parent.mkdir(parents=True, exist_ok=True)
        write_table(cached, table)
    return table


def render_table(table: CoefficientTable, fmt: str, params: dict, timestamp: bool) -> str:
    if fmt == "tsv":
        return table.dumps()
    if fmt == "json":
        obj = {"series": table.name, "trunc": table.trunc, "params": params,
               "coeffs": [str(c) for c in table.coeffs]}
        if timestamp:
            obj["generated"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        return json.dumps(obj, sort_keys=True) + "\n"
    width = max(len(str(table.trunc)), 1)
    head = f"# {table.name}  N={table.trunc}  " + " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return head + "\n" + "".join(f"{n:>{width}}  {c}\n" for n, c in enumerate(table.coeffs))


def render_reports(reports: list[CheckReport], fmt: str, params: dict, timestamp: bool) -> str:
    if fmt == "json":
        out = []
        for r in reports:
            d = r.to_dict()
            d["command"] = params
            if timestamp:
                d["generated"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
            out.append(json.dumps(d, sort_keys=True))
        return "\n".join(out) + "\n"
    head = "# " + " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return head + "\n" + "\n".join(r.to_table() for r in reports) + "\n"


def _emit(text: str, output):
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(output).write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise OSError(f"cannot write {output}: {exc}") from exc


def _resolved(args) -> dict:
    skip = {"func", "output", "format", "timestamp"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def cmd_compute(args) -> int:
    table = build_table(args)
    _emit(render_table(table, args.format, _resolved(args), args.timestamp), args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    table = build_table(args)
    target = Path(args.output) if args.output else Path(args.dir) / table_filename(table.name, table.trunc)
    if target.is_dir():
        target = target / table_filename(table.name, table.trunc)
    write_table(target, table)
    sys.stdout.write(f"{target}\n")
    return EXIT_OK


def cmd_import(args) -> int:
    table = read_table(args.path)
    if args.reexport:
        write_table(args.reexport, table)
    obj = {"series": table.name, "trunc": table.trunc, "status": "ok",
           "coefficient-sum": str(sum(table.coeffs))}
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    return EXIT_OK


def run_campaign(args) -> list[CheckReport]:
    c, N = args.campaign, args.N

    def need(name):
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"campaign {c} needs --{name}")
        return v

    if N is not None:
        _check_N(N, args.force)
    if c == "theorem1":
        return [analysis.verify_theorem1(N or 1000)]
    if c == "lemma23":
        return [analysis.verify_lemma23(N or 300)]
    if c == "odd-k":
        return [analysis.find_counterexamples_odd(need("k"), N or 2000)]
    if c == "even-k":
        ks = [args.k] if args.k is not None else list(range(4, 21, 2))
        return [analysis.verify_even_k(k, N or 2000) for k in ks]
    if c == "at-bt":
        ts = [args.t] if args.t is not None else [1, 2, 3, 4, 5]
        return [hookgf.verify_At_Bt_identity(t, N or 200) for t in ts]
    if c == "decomp45":
        return [hookgf.decompose_b24_b25(N or 200)]
    if c == "decomp67":
        return [hookgf.decompose_b26_b27(N or 200)]
    if c == "t7s7":
        return [bijections.t7_vs_s7(args.lo or 152, args.hi or N or 600)]
    if c == "positivity":
        return [analysis.positivity_scans(N or 2000)]
    if c == "oracle":
        return [analysis.oracle_equivalence(N or 40)]
    if c == "s-ratio":
        return [analysis.S_ratio_scan(N or 500, args.k if args.k is not None else 1)]
    if c == "q-asymptotic":
        return [analysis.Q_asymptotic_check(N or 1000)]
    if c == "negative-tail":
        return [analysis.negative_tail_check(need("t"), N or 2000)]
    if c == "bijections":
        lo, hi = args.lo or 3, args.hi or N or 60
        return [bijections.verify_bijection_suite(i, n) for i in range(1, 7) for n in range(lo, hi + 1)]
    raise UsageError(f"unknown campaign {c!r}")


def _report_exit(reports) -> int:
    return EXIT_FAIL if any(r.assertion_failure for r in reports) else EXIT_OK


def cmd_verify(args) -> int:
    reports = run_campaign(args)
    _emit(render_reports(reports, args.format, _resolved(args), args.timestamp), args.output)
    return _report_exit(reports)


def cmd_search(args) -> int:
    _check_N(args.N, args.force)
    reports = [analysis.find_counterexamples_odd(args.k, args.N)]
    _emit(render_reports(reports, args.format, _resolved(args), args.timestamp), args.output)
    return _report_exit(reports)


def cmd_bijection_check(args) -> int:
    report = bijections.verify_bijection_suite(args.i, args.n)
    _emit(render_reports([report], args.format, _resolved(args), args.timestamp), args.output)
    return _report_exit([report])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hookbias", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, formats, default):
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--output", "-o", default=None, help="file path, or - for stdout")
        sp.add_argument("--timestamp", action="store_true", help="add a generation time (JSON only)")
        sp.add_argument("--force", action="store_true", help="allow N above the safety cap")

    def series_flags(sp):
        sp.add_argument("--series", required=True, choices=sorted(SERIES_ALIASES))
        sp.add_argument("--t", type=int)
        sp.add_argument("--i", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--N", type=int, required=True)

    sp = sub.add_parser("compute", help="print a coefficient table")
    series_flags(sp)
    common(sp, ("tsv", "json", "table"), "tsv")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("export", help="write a coefficient table file")
    series_flags(sp)
    sp.add_argument("--dir", default=".")
    sp.add_argument("--output", "-o", default=None)
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("import", help="validate a coefficient table file")
    sp.add_argument("path")
    sp.add_argument("--reexport", default=None, help="write the parsed table back out")
    sp.set_defaults(func=cmd_import)

    sp = sub.add_parser("verify", help="run a verification campaign")
    sp.add_argument("--campaign", required=True, choices=CAMPAIGNS)
    sp.add_argument("--N", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--t", type=int)
    sp.add_argument("--lo", type=int)
    sp.add_argument("--hi", type=int)
    common(sp, ("json", "table"), "table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="odd-k counterexample search")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--N", type=int, default=2000)
    common(sp, ("json", "table"), "table")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("bijection-check", help="check one bijection at one weight")
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp, ("json", "table"), "table")
    sp.set_defaults(func=cmd_bijection_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except CorruptTable as exc:
        print(f"hookbias: corrupt table: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except (ValueError, ArithmeticError) as exc:
        print(f"hookbias: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hookbias: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
