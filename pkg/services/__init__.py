"""
Services layer for the palindromic density toolkit

Key features:
- exact_core: closed forms, product form, delta factors, limits, bounds
- oracle: brute-force enumeration, palindromicity, profiles, bijections
- sampler: seeded Monte Carlo estimates with Wilson intervals
- verification: oracle cross-check sweeps as an Event stream
- analysis: grids, convergence tables, profile tables and output writing
"""

from . import exact_core, oracle, sampler
from . import verification, analysis

__all__ = [
    "exact_core",
    "oracle",
    "sampler",
    "verification",
    "analysis",
]
