"""
verification.py

Cross-check of every closed form against the enumeration oracle

Key features:
- verify_cell(n, b): counts, odd-step identity, profile sums, product form, doubling and centre-insertion bijections
- sweep(max_n, max_b) yields Event stream (CellVerified, CellFailed, SweepFinished) in (n, b) order
- Cells are independent; WORKERS > 1 evaluates them on a thread pool without changing the order
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Generator, List, Optional

from config import settings
from domain import CellFailed, CellVerified, Event, Multiset, SpaceParams, SweepFinished
from utils import CapExceededError, ValidationError, logger

from . import exact_core, oracle

def _doubling_failures(p: SpaceParams, cap: Optional[int]) -> List[str]:
    """Doubling X_b^(n/2) -> P_b^n is injective, onto the palindromic subset, and undone by halve"""
    failures = []
    palindromic = {m for m in oracle.enumerate_multisets(p, cap) if oracle.is_palindromic(m)}
    image = set()
    for counts in oracle.iter_count_vectors(p.n // 2, p.b):
        m = Multiset(counts)
        doubled = oracle.double(m)
        if oracle.halve(doubled) != m:
            failures.append(f"halve(double({counts}))")
        image.add(doubled)
    if image != palindromic:
        failures.append("double image")
    return failures

def _centre_failures(p: SpaceParams, cap: Optional[int]) -> List[str]:
    """Centre insertion P_b^(n-1) x alphabet -> P_b^n is injective and onto"""
    palindromic = {m for m in oracle.enumerate_multisets(p, cap) if oracle.is_palindromic(m)}
    smaller = [
        Multiset(counts)
        for counts in oracle.iter_count_vectors(p.n - 1, p.b)
        if sum(c % 2 for c in counts) == 0
    ]
    image = {oracle.add_center(m, x) for m in smaller for x in range(p.b)}
    failures = []
    if len(image) != len(smaller) * p.b:
        failures.append("add_center injective")
    if image != palindromic:
        failures.append("add_center image")
    return failures

def verify_cell(n: int, b: int, cap: Optional[int] = None) -> List[Event]:
    """
    Run every check for one (n, b) cell

    Returns:
        [CellVerified] when everything agrees, otherwise one CellFailed per failing check
    """
    p = SpaceParams(n=n, b=b)
    report = oracle.oracle_report(p, cap)
    total, palindromic = report.size, report.count
    failures: List[CellFailed] = []

    def check(name: str, expected, actual) -> None:
        if expected != actual:
            failures.append(CellFailed(n=n, b=b, check=name, expected=str(expected), actual=str(actual)))

    size = exact_core.space_size(p)
    count = exact_core.palindromic_count(p)
    check("space_size", size, total)
    check("palindromic_count", count, palindromic)

    # at most space_size(p) profiles, so the enumeration cap bounds them too
    rows = oracle.profiles(p, cap=n)
    check("profile total", size, sum(r.class_size for r in rows))
    check("profile palindromic", count, sum(r.class_size for r in rows if r.palindromic))

    check("oracle density", exact_core.pd_exact(p), report.value)
    check("product form", exact_core.pd_exact(p), exact_core.pd_product(p))

    if n % 2 == 0:
        check("double", [], _doubling_failures(p, cap))
    else:
        check("odd step", b * exact_core.palindromic_count(SpaceParams(n=n - 1, b=b)), count)
        check("add_center", [], _centre_failures(p, cap))
        if b == 2:
            check("b=2 odd density", Fraction(1), exact_core.pd_exact(p))

    if failures:
        return list(failures)
    return [CellVerified(n=n, b=b, total=total, palindromic=palindromic)]

def sweep(
    max_n: int,
    max_b: int,
    *,
    min_n: int = 2,
    min_b: int = 2,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
) -> Generator[Event, None, None]:
    """
    Verify every cell of [min_n, max_n] x [min_b, max_b]

    Yields:
        Event: CellVerified / CellFailed per cell in (n, b) order, then SweepFinished

    Raises:
        ValidationError: on an empty or invalid range
        CapExceededError: when the largest space in range exceeds cap (before any cell runs)
    """
    if min_n < 2 or min_b < 2:
        raise ValidationError("n and b must be at least 2", n=min_n, b=min_b)
    if max_n < min_n or max_b < min_b:
        raise ValidationError(f"empty range n<={max_n}, b<={max_b}", n=max_n, b=max_b)
    cap = settings.ENUMERATION_CAP if cap is None else cap
    largest = exact_core.space_size(SpaceParams(n=max_n, b=max_b))
    if largest > cap:
        raise CapExceededError(
            f"Multiset space of size {largest} exceeds the enumeration cap of {cap}",
            size=largest,
            cap=cap,
        )
    workers = settings.WORKERS if workers is None else workers

    cells = [(n, b) for n in range(min_n, max_n + 1) for b in range(min_b, max_b + 1)]
    logger.info(f"verify sweep: {len(cells)} cells, workers={workers}")
    failures = 0
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for events in pool.map(lambda cell: verify_cell(cell[0], cell[1], cap), cells):
            for event in events:
                if isinstance(event, CellFailed):
                    failures += 1
                    logger.warning(f"verify failed n={event.n} b={event.b}: {event.check}")
                yield event
    yield SweepFinished(cells=len(cells), failures=failures)
