"""
sampler.py

Monte Carlo estimation of palindromic density

Key features:
- sample_counts / sample_multiset: uniform multisets via stars and bars, or tallies of independent picks
- wilson_interval: Wilson score interval for a binomial proportion
- estimate_pd: seeded, block-parallel estimate with a Wilson interval (SampleReport)
- density_from_sample: SampleReport as a DensityReport with sampled provenance

Draws are split into blocks of SAMPLE_BLOCK_SIZE; block i uses its own generator
seeded with seed + i, so the merged hit count does not depend on the worker count.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Tuple, Union

import numpy as np
from scipy import stats

from config import settings
from domain import DensityReport, Multiset, Provenance, SampleReport, SamplingModel, SpaceParams
from utils import ValidationError, format_decimal, logger

# Upper bound on array cells (rows x stars-and-bars positions) per vectorised chunk
_MAX_CHUNK_CELLS = 1 << 22

def _uniform_multiset_counts(p: SpaceParams, rng: np.random.Generator, size: int) -> np.ndarray:
    """
    Uniform (b - 1)-subsets of the n + b - 1 star/bar positions, decoded to count vectors

    Partial Fisher-Yates: position j swaps with a uniform position in [j, N) for j < b - 1.
    """
    positions = p.n + p.b - 1
    bars = p.b - 1
    rows = np.arange(size)
    pool = np.tile(np.arange(positions, dtype=np.int64), (size, 1))
    for j in range(bars):
        pick = j + rng.integers(0, positions - j, size=size)
        chosen = pool[rows, pick].copy()
        pool[rows, pick] = pool[rows, j]
        pool[rows, j] = chosen
    chosen_bars = np.sort(pool[:, :bars], axis=1)
    edges = np.concatenate(
        [np.full((size, 1), -1, dtype=np.int64), chosen_bars, np.full((size, 1), positions, dtype=np.int64)],
        axis=1,
    )
    return np.diff(edges, axis=1) - 1

def _uniform_picks_counts(p: SpaceParams, rng: np.random.Generator, size: int) -> np.ndarray:
    """n independent uniform symbols per row, tallied"""
    picks = rng.integers(0, p.b, size=(size, p.n))
    flat = picks + (np.arange(size, dtype=np.int64) * p.b)[:, None]
    return np.bincount(flat.ravel(), minlength=size * p.b).reshape(size, p.b)

def sample_counts(
    p: SpaceParams,
    model: Union[SamplingModel, str],
    rng: np.random.Generator,
    size: int,
) -> np.ndarray:
    """
    Draw a batch of multisets

    Args:
        p: Space parameters
        model: UNIFORM_MULTISET (every multiset equally likely) or UNIFORM_PICKS
        rng: numpy Generator owned by the caller
        size: Number of draws

    Returns:
        int array of shape (size, b); every row sums to n
    """
    model = SamplingModel(model)
    if model is SamplingModel.UNIFORM_MULTISET:
        return _uniform_multiset_counts(p, rng, size)
    return _uniform_picks_counts(p, rng, size)

def sample_multiset(
    p: SpaceParams,
    model: Union[SamplingModel, str],
    rng: np.random.Generator,
) -> Multiset:
    """Draw one multiset"""
    return Multiset(tuple(int(c) for c in sample_counts(p, model, rng, 1)[0]))

def _palindromic_hits(counts: np.ndarray) -> int:
    """Rows with at most one odd multiplicity"""
    return int(np.count_nonzero((counts % 2).sum(axis=1) <= 1))

def _block_hits(p: SpaceParams, model: SamplingModel, seed: int, draws: int) -> int:
    rng = np.random.default_rng(seed)
    width = p.n + p.b
    chunk = max(1, min(draws, _MAX_CHUNK_CELLS // width))
    hits = 0
    done = 0
    while done < draws:
        size = min(chunk, draws - done)
        hits += _palindromic_hits(sample_counts(p, model, rng, size))
        done += size
    return hits

def wilson_interval(hits: int, draws: int, confidence: Optional[float] = None) -> Tuple[float, float]:
    """
    Wilson score interval for a binomial proportion, clamped to [0, 1] and around hits / draws

    Args:
        hits: Number of successes
        draws: Number of trials, >= 1
        confidence: Confidence level; defaults to settings.CONFIDENCE (0.99)

    Returns:
        (lower, upper)
    """
    if draws < 1:
        raise ValidationError("draws must be at least 1", draws=draws)
    confidence = settings.CONFIDENCE if confidence is None else confidence
    z = float(stats.norm.ppf(1 - (1 - confidence) / 2))
    p_hat = hits / draws

    denominator = 1 + z**2 / draws
    center = (p_hat + z**2 / (2 * draws)) / denominator
    margin = (z / denominator) * np.sqrt(p_hat * (1 - p_hat) / draws + z**2 / (4 * draws**2))

    lower = max(0.0, min(float(center - margin), p_hat))
    upper = min(1.0, max(float(center + margin), p_hat))
    return lower, upper

def estimate_pd(
    p: SpaceParams,
    model: Union[SamplingModel, str] = SamplingModel.UNIFORM_MULTISET,
    draws: Optional[int] = None,
    seed: Optional[int] = None,
    *,
    workers: Optional[int] = None,
    block_size: Optional[int] = None,
    confidence: Optional[float] = None,
) -> SampleReport:
    """
    Estimate the palindromic density by sampling

    Args:
        p: Space parameters
        model: Sampling model
        draws: Number of draws (default settings.DEFAULT_DRAWS)
        seed: Unsigned 64-bit seed (default settings.DEFAULT_SEED)
        workers: Threads evaluating blocks (default settings.WORKERS); does not change the result
        block_size: Draws per seeded block (default settings.SAMPLE_BLOCK_SIZE)
        confidence: Wilson interval confidence (default settings.CONFIDENCE)

    Returns:
        SampleReport, identical for identical (p, model, draws, seed, block_size)
    """
    model = SamplingModel(model)
    draws = settings.DEFAULT_DRAWS if draws is None else draws
    seed = settings.DEFAULT_SEED if seed is None else seed
    workers = settings.WORKERS if workers is None else workers
    block_size = settings.SAMPLE_BLOCK_SIZE if block_size is None else block_size
    if draws < 1:
        raise ValidationError("draws must be at least 1", draws=draws)
    if not 0 <= seed < 2**64:
        raise ValidationError(f"seed must be an unsigned 64-bit integer, got {seed}", seed=seed)

    full, rest = divmod(draws, block_size)
    sizes = [block_size] * full + ([rest] if rest else [])
    logger.info(f"estimate_pd n={p.n} b={p.b} model={model.value} draws={draws} blocks={len(sizes)} workers={workers}")

    with ThreadPoolExecutor(max_workers=workers) as pool:
        hits = sum(pool.map(
            lambda item: _block_hits(p, model, seed + item[0], item[1]),
            enumerate(sizes),
        ))

    return SampleReport(
        params=p,
        model=model,
        draws=draws,
        hits=hits,
        estimate=hits / draws,
        interval=wilson_interval(hits, draws, confidence),
        seed=seed,
    )

def density_from_sample(report: SampleReport) -> DensityReport:
    """Express a sampling run as a DensityReport (hits / draws)"""
    value = Fraction(report.hits, report.draws)
    return DensityReport(
        params=report.params,
        count=report.hits,
        size=report.draws,
        value=value,
        decimal=format_decimal(report.estimate),
        provenance=Provenance.SAMPLED,
    )
