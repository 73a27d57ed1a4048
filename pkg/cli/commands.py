"""
commands.py

Command handlers: validate arguments, call services, render results to stdout

Key features:
- cmd_pd, cmd_verify, cmd_grid, cmd_converge, cmd_profiles, cmd_sample(args, messages) -> exit code
- Every handler checks n >= 2 and b >= 2 before computing
- Library errors propagate as PalindromicDensityError; main() maps them to exit codes
"""
from __future__ import annotations

import argparse
from typing import Callable, Dict, Optional

from config import EXIT_OK, MIN_PARAM, MessageKey, MessageProvider, settings
from domain import CellFailed, CellVerified, GridSpec, SpaceParams, SweepFinished
from services import analysis, exact_core, sampler, verification
from utils import ValidationError, VerificationError, format_decimal, format_fraction, logger

def _validate_params(
    messages: MessageProvider,
    *,
    exact: bool = True,
    workers: Optional[int] = None,
    **params: int,
) -> None:
    """Reject values below 2, above EXACT_PARAM_CAP when exact is set, and workers below 1"""
    if workers is not None and workers < 1:
        raise ValidationError(messages.get(MessageKey.WORKERS_TOO_SMALL), workers=workers)
    for name, value in params.items():
        if value < MIN_PARAM:
            raise ValidationError(messages.format(MessageKey.PARAM_TOO_SMALL, name=name), **{name: value})
        if exact and value > settings.EXACT_PARAM_CAP:
            raise ValidationError(
                messages.format(MessageKey.PARAM_TOO_LARGE, name=name, max=str(settings.EXACT_PARAM_CAP)),
                **{name: value},
            )

def cmd_pd(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Print 'count/size = reduced ≈ decimal' for one space"""
    _validate_params(messages, workers=args.workers, n=args.n, b=args.b)
    report = exact_core.density_report(SpaceParams(n=args.n, b=args.b), args.mode)
    logger.debug(f"pd n={args.n} b={args.b} provenance={report.provenance.value}")
    print(f"{report.count}/{report.size} = {format_fraction(report.value)} ≈ {report.decimal}")
    return EXIT_OK

def _render_matrix(status: Dict[tuple, str], max_n: int, max_b: int) -> str:
    header = "n\\b " + " ".join(f"{b:>3}" for b in range(2, max_b + 1))
    lines = [header]
    for n in range(2, max_n + 1):
        lines.append(f"{n:>3} " + " ".join(f"{status.get((n, b), '?'):>3}" for b in range(2, max_b + 1)))
    return "\n".join(lines)

def cmd_verify(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Cross-check every cell, print per-cell results and a pass/fail matrix; VerificationError (exit 1) on any mismatch"""
    _validate_params(messages, exact=False, workers=args.workers, n=args.max_n, b=args.max_b)
    status: Dict[tuple, str] = {}
    first_failure: Optional[CellFailed] = None
    summary: Optional[SweepFinished] = None

    for event in verification.sweep(args.max_n, args.max_b, cap=args.cap, workers=args.workers):
        if isinstance(event, CellVerified):
            status[(event.n, event.b)] = "."
            print(f"{event.n:>4} {event.b:>4}  {event.palindromic}/{event.total}  pass")
        elif isinstance(event, CellFailed):
            status[(event.n, event.b)] = "X"
            first_failure = first_failure or event
            print(f"{event.n:>4} {event.b:>4}  FAIL {event.check}: expected {event.expected}, got {event.actual}")
        elif isinstance(event, SweepFinished):
            summary = event

    print(_render_matrix(status, args.max_n, args.max_b))
    if first_failure is not None:
        raise VerificationError(
            messages.format(
                MessageKey.VERIFY_FAILED,
                n=str(first_failure.n),
                b=str(first_failure.b),
                check=first_failure.check,
                expected=first_failure.expected,
                actual=first_failure.actual,
            ),
            n=first_failure.n,
            b=first_failure.b,
        )
    print(messages.format(MessageKey.VERIFY_PASSED, cells=str(summary.cells if summary else 0)))
    return EXIT_OK

def cmd_grid(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Write the density surface over [n_min, n_max] x [b_min, b_max]"""
    # pd_num and pd_den are exact in both modes
    _validate_params(messages, workers=args.workers, n=args.n_min, b=args.b_min)
    _validate_params(messages, n=args.n_max, b=args.b_max)
    spec = GridSpec(
        n_min=args.n_min,
        n_max=args.n_max,
        b_min=args.b_min,
        b_max=args.b_max,
        mode=args.mode,
        format=args.format,
    )
    if spec.cells > settings.GRID_CELL_CAP:
        raise ValidationError(
            messages.format(MessageKey.GRID_TOO_LARGE, cells=str(spec.cells), max=str(settings.GRID_CELL_CAP)),
            cells=spec.cells,
        )
    rows = analysis.grid_rows(spec, workers=args.workers)
    analysis.write_output(analysis.render_grid(rows, spec.format), args.out)
    return EXIT_OK

def cmd_converge(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Print PD, delta and tail gap for k = 1..k_max, then the limit"""
    _validate_params(messages, workers=args.workers, b=args.b)
    if args.k_max < 1:
        raise ValidationError("k-max must be at least 1", k_max=args.k_max)
    rows, limit = analysis.convergence_table(args.b, args.parity, args.k_max)

    print(f"{'k':>6} {'n':>7} {'pd':>24} {'delta':>24} {'gap':>24}")
    for row in rows:
        flag = "" if row.monotone else "  !"
        print(
            f"{row.k:>6} {row.n:>7} {format_decimal(float(row.pd)):>24} "
            f"{format_decimal(float(row.delta)):>24} {format_decimal(float(row.gap)):>24}{flag}"
        )
        if not row.monotone:
            print(messages.format(MessageKey.MONOTONICITY_VIOLATION, k=str(row.k)))
    print(messages.format(MessageKey.LIMIT, limit=format_fraction(limit), decimal=format_decimal(float(limit))))
    return EXIT_OK

def cmd_profiles(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Print every multiplicity profile with its class size and palindromic flag, then the totals"""
    _validate_params(messages, workers=args.workers, n=args.n, b=args.b)
    rows, palindromic, total = analysis.profile_table(SpaceParams(n=args.n, b=args.b), cap=args.cap)
    for row in rows:
        parts = "(" + ",".join(str(x) for x in row.parts) + ")"
        print(f"{parts:<24} {row.class_size:>16} {'palindromic' if row.palindromic else '-'}")
    print(f"total palindromic {palindromic} of {total}")
    return EXIT_OK

def cmd_sample(args: argparse.Namespace, messages: MessageProvider) -> int:
    """Print a seeded Monte Carlo estimate with its Wilson interval"""
    _validate_params(messages, exact=False, workers=args.workers, n=args.n, b=args.b)
    if args.draws is not None and args.draws < 1:
        raise ValidationError(messages.get(MessageKey.DRAWS_TOO_SMALL), draws=args.draws)
    report = sampler.estimate_pd(
        SpaceParams(n=args.n, b=args.b),
        args.model,
        draws=args.draws,
        seed=args.seed,
        workers=args.workers,
    )
    density = sampler.density_from_sample(report)
    lo, hi = report.interval
    print(f"model: {report.model.value}")
    print(f"draws: {report.draws}")
    print(f"hits: {report.hits}")
    print(f"estimate: {density.count}/{density.size} = {format_fraction(density.value)} ≈ {density.decimal}")
    print(f"interval ({settings.CONFIDENCE:.0%}): [{format_decimal(lo)}, {format_decimal(hi)}]")
    print(f"seed: {report.seed}")
    return EXIT_OK

COMMANDS: Dict[str, Callable[[argparse.Namespace, MessageProvider], int]] = {
    "pd": cmd_pd,
    "verify": cmd_verify,
    "grid": cmd_grid,
    "converge": cmd_converge,
    "profiles": cmd_profiles,
    "sample": cmd_sample,
}
