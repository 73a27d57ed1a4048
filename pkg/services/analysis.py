"""
analysis.py

Tabulations built on the exact core: surface grids, convergence tables and profile tables

Key features:
- grid_rows(spec): one GridRow per (n, b), n ascending then b ascending
- render_grid(rows, format): CSV (n,b,pd_num,pd_den,pd_float) or JSON array, byte-identical for identical input
- write_output(text, path): stdout or file, OSError -> OutputError
- convergence_table(b, parity, k_max): PD, delta(k, b) and tail gap per k, plus the limit
- profile_table(p): multiplicity profiles with palindromic and total sums
"""
from __future__ import annotations

import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from config import CSV_HEADER, JSON_SAFE_INTEGER, settings
from domain import (
    ConvergenceRow,
    EvaluationMode,
    GridFormat,
    GridRow,
    GridSpec,
    Parity,
    Profile,
    SpaceParams,
)
from utils import CapExceededError, OutputError, ValidationError, format_decimal, logger

from . import exact_core, oracle

def _grid_line(n: int, spec: GridSpec) -> List[GridRow]:
    rows = []
    for b in range(spec.b_min, spec.b_max + 1):
        p = SpaceParams(n=n, b=b)
        count = exact_core.palindromic_count(p)
        size = exact_core.space_size(p)
        if spec.mode is EvaluationMode.EXACT:
            pd_float = float(Fraction(count, size))
        else:
            pd_float = exact_core.pd_product(p, EvaluationMode.FLOAT)
        rows.append(GridRow(n=n, b=b, count=count, size=size, pd_float=pd_float))
    return rows

def grid_rows(spec: GridSpec, cell_cap: Optional[int] = None, workers: Optional[int] = None) -> List[GridRow]:
    """
    Evaluate every cell of the grid

    Raises:
        CapExceededError: when the grid has more than cell_cap cells (default settings.GRID_CELL_CAP)
    """
    cell_cap = settings.GRID_CELL_CAP if cell_cap is None else cell_cap
    if spec.cells > cell_cap:
        raise CapExceededError(
            f"Grid of {spec.cells} cells exceeds the cap of {cell_cap}",
            size=spec.cells,
            cap=cell_cap,
        )
    workers = settings.WORKERS if workers is None else workers
    logger.info(f"grid {spec.cells} cells, mode={spec.mode.value}, workers={workers}")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        lines = pool.map(lambda n: _grid_line(n, spec), range(spec.n_min, spec.n_max + 1))
        return [row for line in lines for row in line]

def _json_integer(value: int) -> Union[int, str]:
    return value if abs(value) <= JSON_SAFE_INTEGER else str(value)

def render_grid(rows: List[GridRow], fmt: Union[GridFormat, str] = GridFormat.CSV) -> str:
    """
    Render rows as CSV or JSON text

    CSV: header n,b,pd_num,pd_den,pd_float, LF line endings, one terminating LF per row.
    JSON: array of {n, b, num, den, pd}; num/den become decimal strings above 2^53 - 1.
    """
    fmt = GridFormat(fmt)
    if fmt is GridFormat.JSON:
        payload = [
            {
                "n": row.n,
                "b": row.b,
                "num": _json_integer(row.count),
                "den": _json_integer(row.size),
                "pd": row.pd_float,
            }
            for row in rows
        ]
        return json.dumps(payload, indent=1) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([row.n, row.b, row.count, row.size, format_decimal(row.pd_float)])
    return buffer.getvalue()

def write_output(text: str, path: Optional[Union[str, Path]] = None) -> None:
    """
    Write text to path, or to stdout when path is None or '-'

    Raises:
        OutputError: when the file cannot be written; extra carries path
    """
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    try:
        with open(target, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    except OSError as e:
        raise OutputError(f"Cannot write {target}: {e.strerror or e}", path=str(target)) from e
    logger.info(f"wrote {len(text)} characters to {target}")

def _expects_strict_decrease(b: int, parity: Parity) -> bool:
    return parity is Parity.EVEN or b > 2

def convergence_table(b: int, parity: Union[Parity, str], k_max: int) -> Tuple[List[ConvergenceRow], Fraction]:
    """
    PD(n_k, b), delta(k, b) and the tail gap for k = 1..k_max, n_k = 2k (even) or 2k + 1 (odd)

    A row is flagged non-monotone when PD fails to drop strictly from the previous row
    (or, for odd n with b = 2, fails to stay equal).

    Returns:
        (rows, limit_value(b, parity))
    """
    if b < 2:
        raise ValidationError(f"b must be at least 2, got {b}", b=b)
    if k_max < 1:
        raise ValidationError(f"k_max must be at least 1, got {k_max}", k_max=k_max)
    parity = Parity(parity)
    limit = exact_core.limit_value(b, parity)
    strict = _expects_strict_decrease(b, parity)

    rows: List[ConvergenceRow] = []
    previous: Optional[Fraction] = None
    for k in range(1, k_max + 1):
        n = 2 * k if parity is Parity.EVEN else 2 * k + 1
        pd = exact_core.pd_exact(SpaceParams(n=n, b=b))
        if previous is None:
            monotone = True
        else:
            monotone = pd < previous if strict else pd == previous
        if not monotone:
            logger.warning(f"monotonicity violated at k={k} (b={b}, {parity.value})")
        rows.append(ConvergenceRow(
            k=k,
            n=n,
            pd=pd,
            delta=exact_core.delta_factor(k, b, parity).value,
            gap=pd - limit,
            monotone=monotone,
        ))
        previous = pd
    return rows, limit

def profile_table(p: SpaceParams, cap: Optional[int] = None) -> Tuple[List[Profile], int, int]:
    """
    Multiplicity profiles of the space

    Returns:
        (profiles, palindromic total, overall total)
    """
    rows = oracle.profiles(p, cap)
    palindromic = sum(r.class_size for r in rows if r.palindromic)
    total = sum(r.class_size for r in rows)
    return rows, palindromic, total
