"""
Domain layer for the palindromic density toolkit

Key features:
- Re-export SpaceParams, Multiset, Profile, DeltaFactor and report models from models
- Re-export Event, CellVerified, CellFailed, SweepFinished from events
- Independent of services and CLI layers
"""

from .models import (
    Parity,
    SamplingModel,
    PalindromeMethod,
    EvaluationMode,
    Provenance,
    GridFormat,
    SpaceParams,
    Multiset,
    Profile,
    DeltaFactor,
    DensityReport,
    SampleReport,
    GridSpec,
    GridRow,
    ConvergenceRow,
)
from .events import (
    Event,
    CellVerified,
    CellFailed,
    SweepFinished,
)

__all__ = [
    "Parity",
    "SamplingModel",
    "PalindromeMethod",
    "EvaluationMode",
    "Provenance",
    "GridFormat",
    "SpaceParams",
    "Multiset",
    "Profile",
    "DeltaFactor",
    "DensityReport",
    "SampleReport",
    "GridSpec",
    "GridRow",
    "ConvergenceRow",
    "Event",
    "CellVerified",
    "CellFailed",
    "SweepFinished",
]
