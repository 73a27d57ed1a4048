"""
events.py

Event types emitted by verification sweeps

Key features:
- verification.sweep() yields Event; the CLI renders them in (n, b) order
- Event, CellVerified, CellFailed, SweepFinished
"""
from __future__ import annotations

from dataclasses import dataclass

@dataclass(frozen=True)
class Event:
    """Base event; all sweep events subclass this and are immutable"""
    pass

@dataclass(frozen=True)
class CellVerified(Event):
    """Every check passed for one (n, b) cell"""
    n: int
    b: int
    total: int
    palindromic: int

@dataclass(frozen=True)
class CellFailed(Event):
    """One check failed for an (n, b) cell"""
    n: int
    b: int
    check: str
    expected: str
    actual: str

@dataclass(frozen=True)
class SweepFinished(Event):
    """Sweep summary"""
    cells: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0
