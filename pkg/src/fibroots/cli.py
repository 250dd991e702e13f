"""Command-line front end.

    fibroots primes --limit 1301 --format csv
    fibroots integers --limit 1000
    fibroots roots 55
    fibroots quadratic 1 -1 -1 55
    fibroots constants --prime-limit 1301
    fibroots asymptotic --limit 100000
    fibroots verify --limit 10000

Exit status: 0 success, 1 bad arguments or I/O failure, 2 a failed
verification check.  Diagnostics go to stderr.
"""

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import analytics, fibroot, verify
from .modarith import carmichael_lambda, multiplicative_order

COMMANDS = ("primes", "integers", "roots", "constants", "asymptotic", "verify", "quadratic")
FORMATS = ("table", "csv", "json")

COLUMNS = {
    "primes": ("p", "root1", "root2", "class", "lift_witness"),
    "integers": ("n", "lambda", "roots", "f_value"),
    "roots": ("r", "order", "lambda", "primitive"),
    "quadratic": ("x",),
    "constants": ("name", "value", "prime_limit", "error_bound"),
    "asymptotic": ("which", "x", "exact", "predicted", "ratio"),
    "verify": ("check", "passed", "detail"),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    limit: int = 1301
    prime_limit: int = analytics.PAPER_X
    alpha_limit: int = analytics.ALPHA_LIMIT
    search_limit: int = analytics.CORRECTION_SEARCH
    output_format: str = "table"
    output_path: str | None = None
    workers: int = 1
    modulus: int | None = None
    coeffs: tuple = ()

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}")
        if self.workers < 1:
            raise UsageError("--workers must be at least 1")
        if self.command in ("primes", "integers", "asymptotic", "verify") and self.limit < 2:
            raise UsageError("--limit must be at least 2")


def _primes_rows(cfg):
    for rec in fibroot.enumerate_pf(cfg.limit, workers=cfg.workers):
        roots = list(rec.fib_primitive_roots) + [None]
        yield {"p": rec.p, "root1": roots[0], "root2": roots[1],
               "class": rec.prime_class.value, "lift_witness": rec.lift_witness}


def _integers_rows(cfg):
    for rec in fibroot.enumerate_nf(cfg.limit, workers=cfg.workers):
        yield {"n": rec.n, "lambda": rec.lambda_n, "roots": list(rec.roots), "f_value": rec.f_value}


def _roots_rows(cfg):
    n = cfg.modulus
    lam = carmichael_lambda(n)
    for r in fibroot.solve_fibonacci_roots(n):
        order = multiplicative_order(r, n)
        yield {"r": r, "order": order, "lambda": lam, "primitive": order == lam}


def _quadratic_rows(cfg):
    a, b, c = cfg.coeffs
    for x in fibroot.solve_general_quadratic(a, b, c, cfg.modulus):
        yield {"x": x}


def _constants_rows(cfg):
    report = analytics.compute_constants(cfg.prime_limit, cfg.alpha_limit, cfg.search_limit)
    for name, value, limit, err in report.rows():
        yield {"name": name, "value": value, "prime_limit": limit, "error_bound": err}


def _decades(limit):
    xs, x = [], 100
    while x < limit:
        xs.append(x)
        x *= 10
    return xs + [limit]


def _asymptotic_rows(cfg):
    report = analytics.compute_constants(cfg.prime_limit, cfg.alpha_limit, cfg.search_limit)
    xs = [x for x in _decades(cfg.limit) if x >= 5]
    for row in analytics.compare_asymptotics(xs, report, workers=cfg.workers):
        yield {"which": row.which, "x": row.x, "exact": row.exact_count,
               "predicted": row.predicted, "ratio": row.ratio}


def _verify_rows(cfg):
    for res in verify.run_all(cfg.limit, workers=cfg.workers):
        print(f"{res.name}: {res.seconds:.2f}s", file=sys.stderr)
        yield {"check": res.name, "passed": res.passed, "detail": res.detail}


HANDLERS = {
    "primes": _primes_rows,
    "integers": _integers_rows,
    "roots": _roots_rows,
    "quadratic": _quadratic_rows,
    "constants": _constants_rows,
    "asymptotic": _asymptotic_rows,
    "verify": _verify_rows,
}


def _num(v):
    if isinstance(v, float):
        return format(v, ".17g") if math.isfinite(v) else None
    return v


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ";".join(str(x) for x in v)
    return str(_num(v))


def _json_value(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        s = _num(v)
        return "null" if s is None else s
    if isinstance(v, list):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    return json.dumps(v)


def render(rows, columns, fmt):
    """Serialize a list of flat dict rows as table, csv or json text."""
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_csv_cell(row[c]) for c in columns])
        return buf.getvalue()
    if fmt == "json":
        items = ["  {" + ", ".join(f"{json.dumps(c)}: {_json_value(row[c])}" for c in columns) + "}"
                 for row in rows]
        return "[\n" + ",\n".join(items) + "\n]\n" if items else "[]\n"
    cells = [list(columns)] + [[_csv_cell(row[c]) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def run(cfg):
    """Execute a RunConfig; returns (exit status, serialized report)."""
    rows = list(HANDLERS[cfg.command](cfg))
    status = 0
    if cfg.command == "verify" and not all(r["passed"] for r in rows):
        status = 2
    return status, render(rows, COLUMNS[cfg.command], cfg.output_format)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _integer(text):
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed integer {text!r}")


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=FORMATS, default="table")
    common.add_argument("--output", dest="output_path", default=None)
    common.add_argument("--workers", type=_positive, default=fibroot.default_workers(),
                        help="process pool size (default: $FIBROOTS_WORKERS or 1)")
    consts = _Parser(add_help=False)
    consts.add_argument("--prime-limit", type=_positive, default=analytics.PAPER_X)
    consts.add_argument("--alpha-limit", type=_positive, default=analytics.ALPHA_LIMIT)
    consts.add_argument("--search-limit", type=_positive, default=analytics.CORRECTION_SEARCH)

    parser = _Parser(prog="fibroots", description="Fibonacci primitive roots toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("primes", "integers", "verify"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--limit", type=_positive, default=1301 if name != "verify" else 10**4)
    p = sub.add_parser("asymptotic", parents=[common, consts])
    p.add_argument("--limit", type=_positive, default=10**5)
    sub.add_parser("constants", parents=[common, consts])
    p = sub.add_parser("roots", parents=[common])
    p.add_argument("modulus", type=_positive)
    p = sub.add_parser("quadratic", parents=[common])
    for c in ("a", "b", "c"):
        p.add_argument(c, type=_integer)
    p.add_argument("modulus", type=_positive)
    return parser


def parse_config(argv):
    ns = vars(build_parser().parse_args(argv))
    if "a" in ns:
        ns["coeffs"] = (ns.pop("a"), ns.pop("b"), ns.pop("c"))
    if ns["command"] in ("roots", "quadratic") and ns["modulus"] < 2:
        raise UsageError("modulus must be at least 2")
    return RunConfig(**ns)


def main(argv=None):
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        status, text = run(cfg)
    except (UsageError, ValueError) as exc:
        print(f"fibroots: error: {exc}", file=sys.stderr)
        return 1
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"fibroots: error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
