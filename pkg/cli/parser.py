"""
parser.py

argparse definition of the command-line surface

Key features:
- build_parser(): subcommands pd, verify, grid, converge, profiles, sample
- Flags default to None so that unset flags fall back to PALIN_* settings
"""
from __future__ import annotations

import argparse

from domain import EvaluationMode, GridFormat, Parity, SamplingModel

def _common_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--workers", type=int, default=None, help="worker threads (default: PALIN_WORKERS or 1)")
    return parent

def build_parser() -> argparse.ArgumentParser:
    """Build the top-level parser with one subparser per command"""
    parser = argparse.ArgumentParser(
        prog="palindromic-density",
        description="Exact and sampled palindromic density of multiset spaces",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    common = _common_parent()

    pd = commands.add_parser("pd", parents=[common], help="density of one space")
    pd.add_argument("n", type=int, help="word length")
    pd.add_argument("b", type=int, help="alphabet size")
    mode = pd.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="mode", action="store_const", const=EvaluationMode.EXACT, help="decimal from the exact fraction (default)")
    mode.add_argument("--float", dest="mode", action="store_const", const=EvaluationMode.FLOAT, help="decimal from the float product form")
    pd.set_defaults(mode=EvaluationMode.EXACT)

    verify = commands.add_parser("verify", parents=[common], help="cross-check closed forms against enumeration")
    verify.add_argument("--max-n", type=int, default=8, help="largest word length (default 8)")
    verify.add_argument("--max-b", type=int, default=6, help="largest alphabet size (default 6)")
    verify.add_argument("--cap", type=int, default=None, help="enumeration cap (default: PALIN_ENUMERATION_CAP)")

    grid = commands.add_parser("grid", parents=[common], help="density surface as CSV or JSON")
    grid.add_argument("n_min", type=int)
    grid.add_argument("n_max", type=int)
    grid.add_argument("b_min", type=int)
    grid.add_argument("b_max", type=int)
    grid.add_argument("--mode", type=EvaluationMode, choices=list(EvaluationMode), default=EvaluationMode.EXACT, metavar="{exact,float}")
    grid.add_argument("--format", type=GridFormat, choices=list(GridFormat), default=GridFormat.CSV, metavar="{csv,json}")
    grid.add_argument("--out", default=None, help="output path (default stdout)")

    converge = commands.add_parser("converge", parents=[common], help="convergence of PD as n grows")
    converge.add_argument("b", type=int, help="alphabet size")
    converge.add_argument("--parity", type=Parity, choices=list(Parity), default=Parity.EVEN, metavar="{even,odd}")
    converge.add_argument("--k-max", type=int, default=50, help="last k (default 50)")

    profiles = commands.add_parser("profiles", parents=[common], help="multiplicity profile classes")
    profiles.add_argument("n", type=int)
    profiles.add_argument("b", type=int)
    profiles.add_argument("--cap", type=int, default=None, help="largest n (default: PALIN_PARTITION_CAP)")

    sample = commands.add_parser("sample", parents=[common], help="Monte Carlo estimate")
    sample.add_argument("n", type=int)
    sample.add_argument("b", type=int)
    sample.add_argument("--model", type=SamplingModel, choices=list(SamplingModel), default=SamplingModel.UNIFORM_MULTISET, metavar="{uniform-multiset,uniform-picks}")
    sample.add_argument("--draws", type=int, default=None, help="number of draws (default: PALIN_DEFAULT_DRAWS)")
    sample.add_argument("--seed", type=int, default=None, help="unsigned 64-bit seed (default: PALIN_DEFAULT_SEED)")

    return parser
