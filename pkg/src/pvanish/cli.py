"""Command-line interface.

Subcommands fall into three groups: single evaluations (char, degree),
partition surgery (decompose, compose, core, quotient, padic), and sweeps
(vanishing, verify).  Exit codes: 0 means every requested check passed,
1 means a checked identity or classification failed and the output carries
a witness, 2 means the invocation itself was malformed.

All JSON payloads carry "schema_version": 1 at top level.  Text and JSON
render the same data in the same deterministic order (labels descending
lexicographically), so either stream can be diffed across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import verify as verify_mod
from .characters import character_value, degree
from .padic import p_adic_context, p_power_partition
from .partitions import (
    format_partition,
    from_core_and_quotient,
    parse_partition,
    r_decompose,
)
from .vanishing import check_conjectures, list_p_vanishing

SUITES = (
    "equivalence",
    "orthogonality",
    "degree-column",
    "conjugation-twist",
    "split-classifier",
    "structure",
    "factorization",
    "multichar",
    "conjectures",
)

# suite -> (default primes, default bound); bounds are sized so that
# `verify --suite all` finishes in about a minute on one core
_SUITE_DEFAULTS: dict[str, tuple[tuple[int, ...], int]] = {
    "equivalence": ((2, 3, 5), 14),
    "orthogonality": ((), 8),
    "degree-column": ((), 12),
    "conjugation-twist": ((), 10),
    "split-classifier": ((2, 3), 12),
    "structure": ((2, 3), 12),
    "factorization": ((), 9),
    "multichar": ((), 7),
    "conjectures": ((5,), 12),
}


@dataclass(frozen=True)
class RunConfig:
    """Resolved knobs shared by the sweep commands."""

    primes: tuple[int, ...]
    ns: tuple[int, ...]
    limit: int | None
    workers: int
    fmt: str  # "text" or "json"
    cache_mode: str  # "shared" or "per-worker"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        workers = getattr(args, "workers", None)
        if workers is None:
            raw = os.environ.get("PVANISH_WORKERS", "1").strip() or "1"
            try:
                workers = int(raw)
            except ValueError:
                raise ValueError(f"PVANISH_WORKERS must be an integer, got {raw!r}")
        if workers < 1:
            raise ValueError("worker count must be >= 1")
        cache_mode = getattr(args, "cache", None)
        if cache_mode is None:
            cache_mode = "shared" if workers == 1 else "per-worker"
        if cache_mode == "shared" and workers > 1:
            raise ValueError(
                "cache mode 'shared' runs in a single process; "
                "use --workers 1 or --cache per-worker"
            )
        primes: tuple[int, ...] = ()
        if getattr(args, "p", None) is not None:
            primes = _parse_primes(str(args.p))
        ns: tuple[int, ...] = ()
        if getattr(args, "n", None) is not None:
            ns = _parse_range(str(args.n))
        elif getattr(args, "max_n", None) is not None:
            ns = tuple(range(args.max_n + 1))
        return cls(
            primes=primes,
            ns=ns,
            limit=getattr(args, "limit", None),
            workers=workers,
            fmt="json" if getattr(args, "json", False) else "text",
            cache_mode=cache_mode,
        )


def _parse_range(text: str) -> tuple[int, ...]:
    """Accept a single value ("8") or an inclusive range ("0..7")."""
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi or lo < 0:
            raise ValueError(f"bad range {text!r}")
        return tuple(range(lo, hi + 1))
    value = int(text)
    if value < 0:
        raise ValueError("n must be non-negative")
    return (value,)


def _parse_primes(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(",") if part.strip())


def _emit(payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


# ---------------------------------------------------------------------------
# single evaluations
# ---------------------------------------------------------------------------


def _cmd_char(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    beta = parse_partition(args.beta)
    value = character_value(alpha, beta)
    payload = {
        "schema_version": 1,
        "alpha": list(alpha),
        "beta": list(beta),
        "value": value,
    }
    _emit(payload, [str(value)], args.json)
    return 0


def _cmd_degree(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    value = degree(alpha)
    payload = {"schema_version": 1, "alpha": list(alpha), "degree": value}
    _emit(payload, [str(value)], args.json)
    return 0


# ---------------------------------------------------------------------------
# partition surgery
# ---------------------------------------------------------------------------


def _quotient_text(quotient: tuple) -> str:
    return ";".join(format_partition(q) for q in quotient)


def _cmd_decompose(args: argparse.Namespace) -> int:
    alpha = parse_partition(args.alpha)
    dec = r_decompose(alpha, args.r)
    payload = {
        "schema_version": 1,
        "alpha": list(alpha),
        "r": args.r,
        "core": list(dec.core),
        "quotient": [list(q) for q in dec.quotient],
        "weight": dec.weight,
        "sign": dec.sign,
    }
    lines = [
        f"alpha={format_partition(alpha)} r={args.r}",
        f"core: {format_partition(dec.core)}",
        f"quotient: {_quotient_text(dec.quotient)}",
        f"weight: {dec.weight}",
        f"sign: {dec.sign:+d}",
    ]
    _emit(payload, lines, args.json)
    return 0


def _cmd_compose(args: argparse.Namespace) -> int:
    core = parse_partition(args.core)
    quotient = tuple(parse_partition(part) for part in args.quotient.split(";"))
    alpha = from_core_and_quotient(core, quotient, args.r)
    payload = {
        "schema_version": 1,
        "core": list(core),
        "quotient": [list(q) for q in quotient],
        "r": args.r,
        "alpha": list(alpha),
    }
    _emit(payload, [format_partition(alpha)], args.json)
    return 0


def _cmd_core(args: argparse.Namespace) -> int:
    dec = r_decompose(parse_partition(args.alpha), args.r)
    payload = {"schema_version": 1, "r": args.r, "core": list(dec.core)}
    _emit(payload, [format_partition(dec.core)], args.json)
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    dec = r_decompose(parse_partition(args.alpha), args.r)
    payload = {
        "schema_version": 1,
        "r": args.r,
        "quotient": [list(q) for q in dec.quotient],
    }
    _emit(payload, [_quotient_text(dec.quotient)], args.json)
    return 0


def _cmd_padic(args: argparse.Namespace) -> int:
    ctx = p_adic_context(args.n, args.p)
    divs = {t: ctx.div(t) for t in range(ctx.k + 2)}
    rems = {t: ctx.rem(t) for t in range(ctx.k + 2)}
    payload = {
        "schema_version": 1,
        "n": ctx.n,
        "p": ctx.p,
        "digits": list(ctx.digits),
        "p_power_partition": list(p_power_partition(ctx)),
        "div": divs,
        "rem": rems,
    }
    lines = [
        f"n={ctx.n} p={ctx.p}",
        "digits (low to high): " + ",".join(str(d) for d in ctx.digits),
        f"p-power partition: {format_partition(p_power_partition(ctx))}",
        "div: " + " ".join(f"t={t}:{v}" for t, v in divs.items()),
        "rem: " + " ".join(f"t={t}:{v}" for t, v in rems.items()),
    ]
    _emit(payload, lines, args.json)
    return 0


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def _cmd_vanishing(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    if len(config.primes) != 1:
        raise ValueError("vanishing takes exactly one prime")
    if not config.ns:
        raise ValueError("vanishing needs --n (a value or a range like 0..7)")
    p = config.primes[0]
    if args.check_conjecture and p < 5:
        raise ValueError(
            "--check-conjecture applies to p >= 5; "
            "for p in {2, 3} the classifier cross-check always runs"
        )

    reports = []
    scans = []
    for n in config.ns:
        ctx = p_adic_context(n, p)
        report = list_p_vanishing(
            ctx, limit=config.limit, workers=config.workers, audit=args.audit
        )
        if args.check_conjecture:
            scan = check_conjectures(ctx, limit=config.limit, workers=config.workers)
            report.counterexamples.extend(scan.counterexamples)
            scans.append(scan)
        reports.append(report)

    total = sum(len(r.vanishing) for r in reports)
    bad = sum(len(r.counterexamples) for r in reports)
    lines = [f"p={p} vanishing cycle types, n={args.n} ({total} classes)"]
    marked = False
    for report in reports:
        for entry in report.vanishing:
            mark = ""
            if not entry.p_adic_type:
                mark = " *"
                marked = True
            lines.append(f"  n={report.n:<3d} {format_partition(entry.parts)}{mark}")
        for item in report.counterexamples:
            lines.append(f"  COUNTEREXAMPLE n={report.n}: {json.dumps(item)}")
        for name, status in report.audits.items():
            if name == "structure":
                status = "pass" if status.get("passed") else "FAIL"
            elif status is True:
                continue  # agreement is the expected state; only failures are news
            lines.append(f"  audit n={report.n} {name}: {status}")
    if marked:
        lines.append("(* marks classes that are not of p-adic type)")
    if args.check_conjecture:
        for scan in scans:
            lines.append(scan.summary())

    payload = {
        "schema_version": 1,
        "p": p,
        "reports": [r.to_json_dict() for r in reports],
        "total_vanishing": total,
        "counterexample_count": bad,
    }
    _emit(payload, lines, args.json)
    return 1 if bad else 0


def _run_suite(name: str, config: RunConfig) -> verify_mod.SuiteResult:
    default_primes, default_bound = _SUITE_DEFAULTS[name]
    primes = list(config.primes or default_primes)
    bound = max(config.ns) if config.ns else default_bound
    if name == "equivalence":
        return verify_mod.equivalence_suite(primes, bound)
    if name == "orthogonality":
        return verify_mod.orthogonality_suite(bound)
    if name == "degree-column":
        return verify_mod.degree_column_suite(bound)
    if name == "conjugation-twist":
        return verify_mod.conjugation_twist_suite(bound)
    if name == "split-classifier":
        return verify_mod.split_classifier_suite(primes, bound, workers=config.workers)
    if name == "structure":
        return verify_mod.structure_suite(primes, bound)
    if name == "factorization":
        return verify_mod.factorization_suite(bound)
    if name == "multichar":
        return verify_mod.multichar_suite(bound)
    if name == "conjectures":
        return verify_mod.conjecture_suite(primes, bound, workers=config.workers)
    raise ValueError(f"unknown suite {name!r}")


def _cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = [_run_suite(name, config) for name in names]

    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "pass" if r.passed else "FAIL"
        lines.append(
            f"{r.name:<{width}}  {r.checks:>9d} checks  "
            f"{len(r.violations):>3d} violations  {r.elapsed:7.2f}s  {status}"
        )
        for item in r.violations[:10]:
            lines.append(f"  witness: {json.dumps(item)}")
        if len(r.violations) > 10:
            lines.append(f"  ... and {len(r.violations) - 10} more")
    failed = [r for r in results if not r.passed]
    lines.append(
        f"{len(results)} suite(s), {sum(r.checks for r in results)} checks, "
        f"{len(failed)} failed"
    )

    payload = {
        "schema_version": 1,
        "suites": [r.to_json_dict() for r in results],
        "failed": len(failed),
    }
    _emit(payload, lines, args.json)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_json(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def _add_sweep_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--workers",
        type=int,
        default=None,
        help="worker processes (default: PVANISH_WORKERS or 1)",
    )
    sub.add_argument(
        "--cache",
        choices=("shared", "per-worker"),
        default=None,
        help="shared: one process, one memo table; per-worker: fork a pool",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pvanish",
        description="Exact symmetric-group character values and p-vanishing classification.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("char", help="one character value, exactly")
    sub.add_argument("--alpha", required=True, help='label, e.g. "3,3,2" or "(4,2,1^3)"')
    sub.add_argument("--beta", required=True, help="cycle type of the class")
    _add_json(sub)
    sub.set_defaults(handler=_cmd_char)

    sub = commands.add_parser("degree", help="dimension of one representation")
    sub.add_argument("--alpha", required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_degree)

    sub = commands.add_parser("decompose", help="r-core, r-quotient, weight, sign")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--r", type=int, required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_decompose)

    sub = commands.add_parser("compose", help="rebuild a partition from core and quotient")
    sub.add_argument("--core", required=True)
    sub.add_argument(
        "--quotient",
        required=True,
        help='r components separated by ";", e.g. "(2);(0)"',
    )
    sub.add_argument("--r", type=int, required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_compose)

    sub = commands.add_parser("core", help="just the r-core")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--r", type=int, required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_core)

    sub = commands.add_parser("quotient", help="just the r-quotient")
    sub.add_argument("--alpha", required=True)
    sub.add_argument("--r", type=int, required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_quotient)

    sub = commands.add_parser("padic", help="base-p digits and derived data for n")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--p", type=int, required=True)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_padic)

    sub = commands.add_parser("vanishing", help="classify p-vanishing cycle types")
    sub.add_argument("--p", required=True, help="one prime")
    sub.add_argument("--n", required=True, help='a value or an inclusive range "0..7"')
    sub.add_argument("--limit", type=int, default=None, help="opt-in cap for large sweeps")
    sub.add_argument("--audit", action="store_true", help="run the structure audits too")
    sub.add_argument(
        "--check-conjecture",
        action="store_true",
        help="for p >= 5, hunt for conjecture counterexamples",
    )
    _add_sweep_args(sub)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_vanishing)

    sub = commands.add_parser("verify", help="batch self-verification sweeps")
    sub.add_argument("--suite", choices=SUITES + ("all",), required=True)
    sub.add_argument("--p", default=None, help='comma list, e.g. "2,3,5"')
    sub.add_argument("--max-n", type=int, default=None, help="inclusive size bound")
    _add_sweep_args(sub)
    _add_json(sub)
    sub.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own message
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
