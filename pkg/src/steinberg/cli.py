"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification mismatch, 3 internal
arithmetic inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

from .brauer import dkq_general, psi_delta, psi_st_value, regular_classes
from .closed_forms import dkq_closed
from .digits import PrimePower
from .errors import GuardError, InconsistencyError, UnsupportedModulus

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3

FIELDS = ["k", "q", "dim_Lk", "d_general", "d_closed", "d_oracle", "agree"]
METHODS = ("general", "closed", "oracle")


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def prime_power(text: str) -> PrimePower:
    try:
        return PrimePower.from_q(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a prime power") from None


def nonneg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if k < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return k


def compute_record(k: int, pp: PrimePower, methods=("general", "closed"), timings=False) -> dict:
    """One OutputRecord; None marks a method that is unsupported or guarded."""
    rec = {"k": k, "q": pp.q}
    times = {}
    t = time.perf_counter()
    res = dkq_general(k, pp)
    times["general"] = time.perf_counter() - t
    rec["dim_Lk"] = res.dim_Lk
    rec["d_general"] = res.d if "general" in methods else None
    rec["d_closed"] = None
    rec["d_oracle"] = None
    if "closed" in methods:
        t = time.perf_counter()
        try:
            rec["d_closed"] = dkq_closed(k, pp)
        except UnsupportedModulus:
            pass
        times["closed"] = time.perf_counter() - t
    if "oracle" in methods:
        from .oracle import hom_dim_oracle

        t = time.perf_counter()
        try:
            rec["d_oracle"] = hom_dim_oracle(k, pp)
        except GuardError:
            pass
        times["oracle"] = time.perf_counter() - t
    values = {v for key in ("d_general", "d_closed", "d_oracle") if (v := rec[key]) is not None}
    if "general" not in methods:
        values = {v for key in ("d_closed", "d_oracle") if (v := rec[key]) is not None}
    rec["agree"] = len(values) <= 1
    if timings:
        for m, s in times.items():
            rec[f"t_{m}"] = round(s, 6)
    return rec


def _record_job(args):
    return compute_record(*args)


def records(pp, ks, methods, timings=False, jobs=1):
    work = [(k, pp, methods, timings) for k in ks]
    if jobs <= 1:
        yield from map(_record_job, work)
        return
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        yield from ex.map(_record_job, work, chunksize=max(1, len(work) // (8 * jobs)))


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def write_rows(out, rows, fieldnames, fmt):
    rows = list(rows)
    if fmt == "json":
        json.dump(rows, out, indent=1)
        out.write("\n")
        return
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fieldnames)
    for r in rows:
        w.writerow([_cell(r.get(f)) for f in fieldnames])


@contextmanager
def output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _methods(args) -> tuple[str, ...]:
    ms = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    bad = [m for m in ms if m not in METHODS]
    if bad:
        raise UsageError(f"unknown method(s): {', '.join(bad)}")
    return ms


def _fields(timings, methods=METHODS):
    return FIELDS + ([f"t_{m}" for m in methods] if timings else [])


def cmd_dim(args) -> int:
    methods = ("general", "closed") + (("oracle",) if args.oracle else ())
    rec = compute_record(args.k, args.q_pos or args.q, methods, args.timings)
    with output(args.out) as out:
        if args.format == "csv":
            write_rows(out, [rec], _fields(args.timings, methods), "csv")
        else:
            json.dump(rec, out)
            out.write("\n")
    return EXIT_OK if rec["agree"] else EXIT_MISMATCH


def cmd_table(args) -> int:
    methods = ("general", "closed") + (("oracle",) if args.oracle else ())
    rows = list(records(args.q, range(args.kmax + 1), methods, args.timings, args.jobs))
    with output(args.out) as out:
        write_rows(out, rows, _fields(args.timings, methods), args.format)
    return EXIT_OK if all(r["agree"] for r in rows) else EXIT_MISMATCH


def cmd_verify(args) -> int:
    methods = _methods(args)
    if len(methods) < 2:
        raise UsageError("verify needs at least two methods")
    rows = list(records(args.q, range(args.kmax + 1), methods, False, args.jobs))
    compared = {m: 0 for m in methods}
    for r in rows:
        for m in methods:
            if r[f"d_{m}"] is not None:
                compared[m] += 1
    bad = [r for r in rows if not r["agree"]]
    with output(args.out) as out:
        out.write(f"q={args.q.q} k=0..{args.kmax} methods={','.join(methods)}\n")
        for m in methods:
            out.write(f"  {m}: {compared[m]} values\n")
        out.write(f"mismatches: {len(bad)}\n")
        for r in bad:
            out.write("  " + " ".join(f"{f}={_cell(r[f])}" for f in FIELDS) + "\n")
    return EXIT_MISMATCH if bad else EXIT_OK


def char_table_rows(pp: PrimePower) -> tuple[list[str], list[dict]]:
    fields = ["class", "kind", "size"]
    for i in range(1, pp.p):
        fields += [f"delta_{i}", f"delta_{i}_num"]
    fields += ["st", "st_num"]
    rows = []
    for cls in regular_classes(pp):
        row = {"class": cls.label(), "kind": cls.kind, "size": cls.size}
        for i in range(1, pp.p):
            v = psi_delta(i, cls)
            row[f"delta_{i}"] = v.serialize()
            row[f"delta_{i}_num"] = f"{v.numeric_embed().real:.12g}"
        st = psi_st_value(cls, pp)
        row["st"] = str(st)
        row["st_num"] = f"{float(st):.12g}"
        rows.append(row)
    return fields, rows


def cmd_char_table(args) -> int:
    fields, rows = char_table_rows(args.q)
    with output(args.out) as out:
        write_rows(out, rows, fields, args.format)
    return EXIT_OK


def parse_schedule(text: str, pp: PrimePower) -> list[int]:
    """``5,10,20`` gives k = p^M - 1 for each M; ``k:6,24`` lists k directly;
    ``random:5,10`` draws k with the given M (seeded)."""
    from .asymptotics import random_digit_schedule, top_digit_schedule

    kind, _, body = text.rpartition(":")
    try:
        nums = [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad schedule {text!r}") from None
    if kind == "k":
        return nums
    if kind == "random":
        return random_digit_schedule(pp, nums)
    if kind in ("", "M"):
        return top_digit_schedule(pp, nums)
    raise UsageError(f"bad schedule {text!r}")


def cmd_asymptotics(args) -> int:
    from .asymptotics import convergence_sweep

    ks = parse_schedule(args.schedule, args.q)
    try:
        reports = convergence_sweep(args.q, ks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fields = ["k", "q", "M", "dim_Lk", "d", "ratio", "target", "deviation", "bound", "within"]
    rows = [
        {
            "k": r.k,
            "q": r.q,
            "M": r.M,
            "dim_Lk": r.dim_Lk,
            "d": r.d,
            "ratio": f"{r.ratio:.17g}",
            "target": f"{r.target:.17g}",
            "deviation": f"{r.deviation:.6e}",
            "bound": f"{r.bound:.6e}",
            "within": r.within,
        }
        for r in reports
    ]
    with output(args.out) as out:
        write_rows(out, rows, fields, "csv")
    return EXIT_OK if all(r.within for r in reports) else EXIT_MISMATCH


def cmd_classes(args) -> int:
    from .oracle import conjugacy_class_audit

    try:
        report = conjugacy_class_audit(args.q)
    except GuardError as exc:
        raise UsageError(str(exc)) from None
    with output(args.out) as out:
        out.write("\n".join(report.lines()) + "\n")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> Parser:
    parser = Parser(prog="steinberg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=Parser)

    def common(p, q_required=True):
        p.add_argument("--q", type=prime_power, required=q_required, help="prime power q")
        p.add_argument("--out", metavar="FILE", help="write to FILE instead of stdout")

    p = sub.add_parser("dim", help="d_{k,q} for one k")
    p.add_argument("k", type=nonneg)
    p.add_argument("q_pos", metavar="q", type=prime_power, nargs="?")
    common(p, q_required=False)
    p.add_argument("--oracle", action="store_true", help="also run the linear-algebra oracle")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("table", help="records for k = 0..kmax")
    common(p)
    p.add_argument("--kmax", type=nonneg, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--timings", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check methods for k = 0..kmax")
    common(p)
    p.add_argument("--kmax", type=nonneg, required=True)
    p.add_argument("--methods", default="general,closed", help="comma list of general,closed,oracle")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("char-table", help="Brauer characters of Delta_i and st")
    common(p)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("asymptotics", help="d/dim L_k against the limit and its error bound")
    common(p)
    p.add_argument("--schedule", default="5,10,20,40,80", help="M list, k:LIST or random:M-LIST")
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("classes", help="brute-force conjugacy class audit")
    common(p)
    p.set_defaults(func=cmd_classes)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "dim" and args.q_pos is None and args.q is None:
        parser.error("dim needs q (positional or --q)")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"steinberg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InconsistencyError as exc:
        print(f"steinberg: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
