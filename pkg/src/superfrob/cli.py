"""Command-line front end.

    superfrob char-table --r 4 --format csv
    superfrob expand --func q_row --k 2 --t q^-2 --basis p
    superfrob trace --partition 2,1 --m 1 --n 1
    superfrob verify --suite frobenius --r 3 --m 3 --n 3

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .frobenius import HeckeCharTable, Report, char_table, frobenius_element
from .heckesim import gamma_word, trace_d_pi, xy_substitute, zpoly_to_json
from .hl import hl_P, hl_Q, hl_q_lambda, hl_q_row, hl_tilde_q
from .partition import as_composition
from .scalar import parse_laurent
from .symring import BASES, SymFunc, basis_element
from .verify import SUITES, SuiteConfig, run_suite

FORMATS = ("json", "csv", "text")
FUNCS = ("q_row", "q_lambda", "tilde_q", "P", "Q", "frobenius") + BASES


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    r: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    format: str = "text"
    suite: str = "all"
    output: Optional[str] = None
    jobs: int = 1
    func: Optional[str] = None
    k: Optional[int] = None
    partition: Optional[str] = None
    t: str = "q"
    basis: Optional[str] = None


def dumps(data) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def emit(obj, fmt: str) -> str:
    """Serialize a table, report, symmetric function or polynomial payload."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if isinstance(obj, HeckeCharTable):
        return {"json": lambda: dumps(obj.to_json()), "csv": obj.to_csv, "text": obj.to_text}[fmt]()
    if isinstance(obj, Report):
        if fmt == "json":
            return dumps(obj.to_json())
        if fmt == "text":
            return obj.to_text()
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "passed", "detail"])
        for c in obj.checks:
            w.writerow([c.name, str(c.passed).lower(), c.detail])
        return buf.getvalue()
    if isinstance(obj, SymFunc):
        if fmt == "json":
            return dumps(obj.to_json())
        if fmt == "text":
            return str(obj)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition", "coeff"])
        for t in obj.to_json()["terms"]:
            w.writerow([",".join(map(str, t["partition"])), t["coeff"]])
        return buf.getvalue()
    if isinstance(obj, dict):
        if fmt == "json":
            return dumps(obj)
        if fmt == "text":
            return obj["text"]
        raise UsageError("csv output is not available for this command")
    raise TypeError(f"cannot emit {type(obj).__name__}")


def _parse_partition(text: Optional[str], what: str = "--partition") -> tuple:
    if text is None:
        raise UsageError(f"{what} is required")
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        return as_composition([int(x) for x in text.split(",")])
    except ValueError as exc:
        raise UsageError(f"bad {what} value {text!r}: {exc}") from None


def _require(value, flag: str, minimum: int = 0):
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < minimum:
        raise UsageError(f"{flag} must be at least {minimum}")
    return value


def _expand(cfg: RunConfig) -> SymFunc:
    func = cfg.func
    if func is None:
        raise UsageError("--func is required")
    try:
        t = parse_laurent(cfg.t)
    except ValueError as exc:
        raise UsageError(f"bad --t value: {exc}") from None
    if func == "q_row":
        f = hl_q_row(_require(cfg.k, "--k"), t)
    elif func == "tilde_q":
        f = hl_tilde_q(_require(cfg.k, "--k"))
    elif func == "q_lambda":
        f = hl_q_lambda(sorted(_parse_partition(cfg.partition), reverse=True), t)
    elif func in ("P", "Q"):
        lam = sorted(_parse_partition(cfg.partition), reverse=True)
        f = (hl_P if func == "P" else hl_Q)(lam, t)
    elif func == "frobenius":
        lam = sorted(_parse_partition(cfg.partition), reverse=True)
        if not lam:
            raise UsageError("frobenius needs a nonempty partition")
        f = frobenius_element(lam)
    elif func in BASES:
        f = basis_element(func, sorted(_parse_partition(cfg.partition), reverse=True))
    else:
        raise UsageError(f"unknown --func {func!r}; choose from {', '.join(FUNCS)}")
    if cfg.basis is not None:
        if cfg.basis not in BASES:
            raise UsageError(f"unknown --basis {cfg.basis!r}")
        f = f.convert(cfg.basis)
    return f


def _trace(cfg: RunConfig) -> dict:
    m = _require(cfg.m, "--m")
    n = _require(cfg.n, "--n")
    if m + n < 1:
        raise UsageError("--m + --n must be at least 1")
    if cfg.partition is not None:
        alpha = _parse_partition(cfg.partition)
    elif cfg.k is not None:
        alpha = (_require(cfg.k, "--k", 1),)
    else:
        alpha = (_require(cfg.r, "--r", 1),)
    if not alpha:
        raise UsageError("trace needs a nonempty composition")
    r = sum(alpha)
    z = trace_d_pi(gamma_word(alpha), r, m, n, jobs=cfg.jobs)
    xy = xy_substitute(z, m, n)
    return {
        "composition": list(alpha),
        "m": m,
        "n": n,
        "trace": zpoly_to_json(z),
        "xy": xy.to_json(),
        "text": f"z: {z}\nx/y: {xy}",
    }


def run(cfg: RunConfig) -> tuple:
    """Return ``(exit_status, payload_text)``."""
    if cfg.format not in FORMATS:
        raise UsageError(f"unknown format {cfg.format!r}")
    if cfg.jobs < 1:
        raise UsageError("--jobs must be positive")
    if cfg.command == "char-table":
        return 0, emit(char_table(_require(cfg.r, "--r", 1)), cfg.format)
    if cfg.command == "expand":
        return 0, emit(_expand(cfg), cfg.format)
    if cfg.command == "trace":
        return 0, emit(_trace(cfg), cfg.format)
    if cfg.command == "verify":
        if cfg.suite not in SUITES:
            raise UsageError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
        for flag, v in (("--r", cfg.r), ("--m", cfg.m), ("--n", cfg.n)):
            if v is not None and v < (1 if flag == "--r" else 0):
                raise UsageError(f"{flag} out of range")
        report = run_suite(cfg.suite, SuiteConfig(r=cfg.r, m=cfg.m, n=cfg.n, jobs=cfg.jobs))
        return (0 if report.passed else 1), emit(report, cfg.format)
    raise UsageError(f"unknown command {cfg.command!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superfrob", description="Hecke algebra characters from the super Frobenius formula")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, fmt=True):
        p.add_argument("--r", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--output", help="write here instead of standard output")
        if fmt:
            p.add_argument("--format", choices=FORMATS, default="text")

    common(sub.add_parser("char-table", help="character table of the Hecke algebra of degree r"))
    p = sub.add_parser("expand", help="expand a symmetric function in a basis")
    common(p)
    p.add_argument("--func", choices=FUNCS, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--partition")
    p.add_argument("--t", default="q", help="Laurent polynomial in q, e.g. q^-2")
    p.add_argument("--basis", choices=BASES)
    p = sub.add_parser("trace", help="trace of D_r times a cycle element on tensor space")
    common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--partition", help="composition, e.g. 2,1")
    p = sub.add_parser("verify", help="run a verification suite")
    common(p)
    p.add_argument("--suite", choices=SUITES, default="all")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fields = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in fields})


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = config_from_args(ns)
    try:
        status, text = run(cfg)
    except UsageError as exc:
        print(f"superfrob: error: {exc}", file=sys.stderr)
        return 2
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        try:
            with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"superfrob: error: cannot write {cfg.output}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
