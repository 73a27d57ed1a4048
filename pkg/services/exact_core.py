"""
exact_core.py

Exact combinatorics of palindromic density

Key features:
- binomial, space_size, palindromic_count, pd_exact: the closed forms (stars and bars, doubling, centre insertion)
- pd_product: the product form, exact or float (ascending factor order)
- delta_factor, limit_value, upper_bound, tail_gap: monotonicity, n -> infinity limits and b -> infinity bounds
- density_report, decreasing_in_b: report assembly and the b-monotonicity check

Every function is pure; integers are Python ints and rationals are fractions.Fraction (always reduced).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from domain import DeltaFactor, DensityReport, EvaluationMode, Parity, Provenance, SpaceParams
from utils import ValidationError, format_decimal

def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient C(n, k); zero when k > n

    Args:
        n: Nonnegative integer
        k: Nonnegative integer

    Returns:
        C(n, k) as an exact int
    """
    if n < 0 or k < 0:
        raise ValidationError(f"binomial needs nonnegative arguments, got ({n}, {k})", n=n, k=k)
    return math.comb(n, k)

def _multisets(size: int, b: int) -> int:
    """Number of multisets of the given size over b letters, size >= 0"""
    return binomial(size + b - 1, b - 1)

def _palindromic(n: int, b: int) -> int:
    if n % 2 == 0:
        return _multisets(n // 2, b)
    return b * _multisets((n - 1) // 2, b)

def space_size(p: SpaceParams) -> int:
    """|X_b^n| = C(n + b - 1, b - 1)"""
    return _multisets(p.n, p.b)

def palindromic_count(p: SpaceParams) -> int:
    """
    Number of palindromic multisets in the space

    Even n: the doubling bijection gives |X_b^(n/2)|.
    Odd n: centre insertion gives b * |X_b^((n-1)/2)|.
    """
    return _palindromic(p.n, p.b)

def pd_exact(p: SpaceParams) -> Fraction:
    """Palindromic density as a reduced fraction in (0, 1]"""
    return Fraction(palindromic_count(p), space_size(p))

def _product_range(p: SpaceParams) -> range:
    start = (p.n + 2) // 2 if p.parity is Parity.EVEN else (p.n + 1) // 2
    return range(start, p.n + 1)

def pd_product(p: SpaceParams, mode: Union[EvaluationMode, str] = EvaluationMode.EXACT) -> Union[Fraction, float]:
    """
    Evaluate the density through its product form

    Even n: prod_{i=(n+2)/2}^{n} i / (i + b - 1)
    Odd n:  b * prod_{i=(n+1)/2}^{n} i / (i + b - 1)

    Args:
        p: Space parameters
        mode: EXACT returns a Fraction equal to pd_exact(p); FLOAT multiplies float factors in ascending i

    Returns:
        Fraction in exact mode, float in float mode
    """
    mode = EvaluationMode(mode)
    leading = p.b if p.parity is Parity.ODD else 1
    indices = _product_range(p)

    if mode is EvaluationMode.EXACT:
        numerator = leading * math.prod(indices)
        denominator = math.prod(i + p.b - 1 for i in indices)
        return Fraction(numerator, denominator)

    value = float(leading)
    for i in indices:
        value *= i / (i + p.b - 1)
    return value

def _check_kb(k: int, b: int) -> None:
    if k < 1:
        raise ValidationError(f"k must be at least 1, got {k}", k=k)
    if b < 2:
        raise ValidationError(f"b must be at least 2, got {b}", b=b)

def delta_factor(k: int, b: int, parity: Union[Parity, str]) -> DeltaFactor:
    """
    Ratio delta(k, b) = PD(n + 2, b) / PD(n, b), n = 2k (even) or 2k + 1 (odd)

    Even: alpha = 4k^2 + (4b + 2)k + 2b,  beta = alpha + b(b - 1)
    Odd:  alpha = 4k^2 + (4b + 6)k + 6b,  beta = alpha + (b - 2)(b - 1)

    For odd parity with b = 2 the value is exactly 1 (the density is constantly 1).
    """
    _check_kb(k, b)
    parity = Parity(parity)
    if parity is Parity.EVEN:
        alpha = 4 * k * k + (4 * b + 2) * k + 2 * b
        beta = 4 * k * k + (4 * b + 2) * k + b * b + b
    else:
        alpha = 4 * k * k + (4 * b + 6) * k + 6 * b
        beta = 4 * k * k + (4 * b + 6) * k + b * b + 3 * b + 2
    return DeltaFactor(k=k, b=b, parity=parity, alpha=alpha, beta=beta)

def limit_value(b: int, parity: Union[Parity, str]) -> Fraction:
    """Limit of PD(n, b) as n -> infinity through the given parity: 1/2^(b-1) even, b/2^(b-1) odd"""
    if b < 2:
        raise ValidationError(f"b must be at least 2, got {b}", b=b)
    parity = Parity(parity)
    numerator = 1 if parity is Parity.EVEN else b
    return Fraction(numerator, 2 ** (b - 1))

def upper_bound(p: SpaceParams) -> Fraction:
    """
    Bound on the density that tends to 0 as b -> infinity

    Even n: n / (n + b - 1), attained at n = 2.
    Odd n:  n^((n+1)/2) / b^((n-1)/2), may exceed 1 for small b.
    """
    if p.parity is Parity.EVEN:
        return Fraction(p.n, p.n + p.b - 1)
    return Fraction(p.n ** ((p.n + 1) // 2), p.b ** ((p.n - 1) // 2))

def tail_gap(k: int, b: int, parity: Union[Parity, str]) -> Fraction:
    """PD(n, b) minus its n -> infinity limit, n = 2k (even) or 2k + 1 (odd)"""
    _check_kb(k, b)
    parity = Parity(parity)
    n = 2 * k if parity is Parity.EVEN else 2 * k + 1
    return pd_exact(SpaceParams(n=n, b=b)) - limit_value(b, parity)

def density_report(p: SpaceParams, mode: Union[EvaluationMode, str] = EvaluationMode.EXACT) -> DensityReport:
    """
    Bundle count/size, reduced value and decimal rendering

    Exact mode renders the closed form; float mode renders the float product evaluation.
    """
    mode = EvaluationMode(mode)
    count = palindromic_count(p)
    size = space_size(p)
    value = Fraction(count, size)
    if mode is EvaluationMode.EXACT:
        decimal, provenance = float(value), Provenance.CLOSED_FORM
    else:
        decimal, provenance = pd_product(p, EvaluationMode.FLOAT), Provenance.PRODUCT
    return DensityReport(
        params=p,
        count=count,
        size=size,
        value=value,
        decimal=format_decimal(decimal),
        provenance=provenance,
    )

def decreasing_in_b(n: int, b_max: int) -> bool:
    """True when PD(n, b) is strictly decreasing over 2 <= b <= b_max"""
    values = [pd_exact(SpaceParams(n=n, b=b)) for b in range(2, b_max + 1)]
    return all(later < earlier for earlier, later in zip(values, values[1:]))
