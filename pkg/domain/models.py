"""
models.py

Domain models for multiset spaces, their palindromic density and the reports built on it

Key features:
- SpaceParams: the (n, b) pair naming a multiset space, n, b >= 2
- Multiset: count vector over the b-letter alphabet (frozen dataclass, enumeration hot path)
- Profile: multiplicity profile class with its size and palindromic flag
- DeltaFactor: exact ratio PD(n + 2) / PD(n) as alpha / beta
- DensityReport, SampleReport, GridSpec, GridRow, ConvergenceRow: results handed to the CLI
- Enums for parity, sampling model, palindrome method, evaluation mode, provenance, grid format
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

class Parity(str, Enum):
    """Parity of the word length n"""
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n: int) -> Parity:
        return cls.EVEN if n % 2 == 0 else cls.ODD

class SamplingModel(str, Enum):
    """
    How a random multiset is drawn

    UNIFORM_MULTISET gives every multiset of the space equal probability;
    UNIFORM_PICKS draws n independent symbols and tallies them
    """
    UNIFORM_MULTISET = "uniform-multiset"
    UNIFORM_PICKS = "uniform-picks"

class PalindromeMethod(str, Enum):
    """Decision procedure for palindromicity"""
    COUNTS = "counts"
    SEARCH = "search"

class EvaluationMode(str, Enum):
    """Exact rational or float evaluation of the product form"""
    EXACT = "exact"
    FLOAT = "float"

class Provenance(str, Enum):
    """Where a density value came from"""
    CLOSED_FORM = "closed-form"
    PRODUCT = "product"
    ORACLE = "oracle"
    SAMPLED = "sampled"

class GridFormat(str, Enum):
    """Output format of a grid dataset"""
    CSV = "csv"
    JSON = "json"

class SpaceParams(BaseModel):
    """
    Parameters (n, b) of the multiset space of n-element multisets over b letters
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2, description="Word length (cardinality of every multiset)")
    b: int = Field(..., ge=2, description="Alphabet size")

    @property
    def parity(self) -> Parity:
        return Parity.of(self.n)

    @property
    def k(self) -> int:
        """floor(n / 2)"""
        return self.n // 2

@dataclass(frozen=True)
class Multiset:
    """
    Multiset over the alphabet {0, ..., b - 1}, stored as its count vector

    counts[x] is the multiplicity of symbol x; len(counts) is the alphabet size
    """
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if not counts:
            raise ValueError("Multiset needs an alphabet of at least one symbol")
        if any(c < 0 for c in counts):
            raise ValueError(f"Multiplicities must be nonnegative, got {counts}")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], b: int) -> Multiset:
        """Build from a list of symbols, e.g. [1, 1, 2, 2, 3] over b = 4"""
        tally = Counter(symbols)
        if any(not 0 <= x < b for x in tally):
            raise ValueError(f"Symbols must lie in [0, {b - 1}], got {sorted(tally)}")
        return cls(tuple(tally.get(x, 0) for x in range(b)))

    @property
    def size(self) -> int:
        """Cardinality n"""
        return sum(self.counts)

    @property
    def alphabet_size(self) -> int:
        return len(self.counts)

    @property
    def odd_symbols(self) -> int:
        """Number of symbols with odd multiplicity"""
        return sum(c % 2 for c in self.counts)

    def symbols(self) -> Tuple[int, ...]:
        """Elements in non-decreasing order"""
        return tuple(x for x, c in enumerate(self.counts) for _ in range(c))

class Profile(BaseModel):
    """
    Multiplicity profile: the sorted positive counts shared by a class of multisets
    """
    model_config = ConfigDict(frozen=True)

    parts: Tuple[int, ...] = Field(..., min_length=1, description="Non-increasing positive parts summing to n")
    class_size: int = Field(..., ge=0, description="Number of multisets with this profile")
    palindromic: bool = Field(..., description="Whether the multisets of this class are palindromic")

    @field_validator("parts")
    @classmethod
    def validate_parts(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(p < 1 for p in v):
            raise ValueError(f"Parts must be positive, got {v}")
        if any(a < b for a, b in zip(v, v[1:])):
            raise ValueError(f"Parts must be non-increasing, got {v}")
        return v

    @model_validator(mode="after")
    def validate_palindromic_flag(self):
        odd = sum(p % 2 for p in self.parts)
        expected = odd <= 1 and odd % 2 == self.n % 2
        if self.palindromic != expected:
            raise ValueError(f"Profile {self.parts} has palindromic={self.palindromic}, expected {expected}")
        return self

    @property
    def n(self) -> int:
        return sum(self.parts)

class DeltaFactor(BaseModel):
    """
    Ratio delta(k, b) = PD(n + 2, b) / PD(n, b) with n = 2k (even) or 2k + 1 (odd), as alpha / beta
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1)
    b: int = Field(..., ge=2)
    parity: Parity
    alpha: int = Field(..., ge=1)
    beta: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validate_difference(self):
        """beta - alpha is b(b - 1) for even parity and (b - 2)(b - 1) for odd parity"""
        if self.parity is Parity.EVEN:
            expected = self.b * (self.b - 1)
        else:
            expected = (self.b - 2) * (self.b - 1)
        if self.beta - self.alpha != expected:
            raise ValueError(f"beta - alpha must be {expected}, got {self.beta - self.alpha}")
        return self

    @property
    def value(self) -> Fraction:
        return Fraction(self.alpha, self.beta)

class DensityReport(BaseModel):
    """
    A palindromic density with its unreduced count/size, decimal rendering and provenance
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: SpaceParams
    count: int = Field(..., ge=0, description="Numerator before reduction (palindromic multisets or hits)")
    size: int = Field(..., ge=1, description="Denominator before reduction (space size or draws)")
    value: Fraction
    decimal: str
    provenance: Provenance

    @model_validator(mode="after")
    def validate_value(self):
        if self.value != Fraction(self.count, self.size):
            raise ValueError(f"value {self.value} does not equal {self.count}/{self.size}")
        return self

class SampleReport(BaseModel):
    """
    Monte Carlo estimate of the palindromic density with a Wilson score interval
    """
    model_config = ConfigDict(frozen=True)

    params: SpaceParams
    model: SamplingModel
    draws: int = Field(..., ge=1)
    hits: int = Field(..., ge=0)
    estimate: float = Field(..., ge=0.0, le=1.0)
    interval: Tuple[float, float]
    seed: int = Field(..., ge=0, lt=2**64)

    @model_validator(mode="after")
    def validate_bounds(self):
        lo, hi = self.interval
        if self.hits > self.draws:
            raise ValueError(f"hits ({self.hits}) cannot exceed draws ({self.draws})")
        if not (0.0 <= lo <= self.estimate <= hi <= 1.0):
            raise ValueError(f"interval {self.interval} must bracket {self.estimate} inside [0, 1]")
        return self

class GridSpec(BaseModel):
    """
    Rectangle [n_min, n_max] x [b_min, b_max] of multiset spaces to tabulate
    """
    model_config = ConfigDict(frozen=True)

    n_min: int = Field(..., ge=2)
    n_max: int = Field(..., ge=2)
    b_min: int = Field(..., ge=2)
    b_max: int = Field(..., ge=2)
    mode: EvaluationMode = EvaluationMode.EXACT
    format: GridFormat = GridFormat.CSV

    @model_validator(mode="after")
    def validate_ranges(self):
        if self.n_min > self.n_max:
            raise ValueError(f"n_min ({self.n_min}) must not exceed n_max ({self.n_max})")
        if self.b_min > self.b_max:
            raise ValueError(f"b_min ({self.b_min}) must not exceed b_max ({self.b_max})")
        return self

    @property
    def cells(self) -> int:
        return (self.n_max - self.n_min + 1) * (self.b_max - self.b_min + 1)

class GridRow(BaseModel):
    """One (n, b) cell of a grid dataset: palindromic count over space size, unreduced"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=2)
    b: int = Field(..., ge=2)
    count: int = Field(..., ge=1)
    size: int = Field(..., ge=1)
    pd_float: float

    @property
    def value(self) -> Fraction:
        return Fraction(self.count, self.size)

class ConvergenceRow(BaseModel):
    """One k of a convergence table: PD at n = 2k or 2k + 1, delta(k, b) and the tail gap"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int
    n: int
    pd: Fraction
    delta: Fraction
    gap: Fraction
    monotone: bool
