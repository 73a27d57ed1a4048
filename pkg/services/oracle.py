"""
oracle.py

Brute-force ground truth for the closed forms

Key features:
- iter_count_vectors / enumerate_multisets: every multiset of a space exactly once
- is_palindromic: odd-multiplicity criterion or exhaustive arrangement search
- find_palindromic_arrangement: search certificate (a word equal to its reversal)
- brute_force_counts, oracle_report: enumeration counts of the space and its palindromic subset
- profiles: multiplicity-profile classes with sizes
- double, halve, add_center: the bijections behind the even and odd counting results
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from config import settings
from domain import DensityReport, Multiset, PalindromeMethod, Profile, Provenance, SpaceParams
from utils import (
    CapExceededError,
    NotPalindromicError,
    SearchRefusedError,
    ValidationError,
    format_decimal,
    logger,
)

def _check_space_cap(size: int, cap: Optional[int]) -> None:
    cap = settings.ENUMERATION_CAP if cap is None else cap
    if size > cap:
        raise CapExceededError(
            f"Multiset space of size {size} exceeds the enumeration cap of {cap}",
            size=size,
            cap=cap,
        )

def _space_size(size: int, b: int) -> int:
    return math.comb(size + b - 1, b - 1)

def iter_count_vectors(size: int, b: int) -> Iterator[Tuple[int, ...]]:
    """
    Count vectors of length b summing to size

    Order: the first coordinate descends, then the rest recursively, i.e. the
    sorted-word order 00 < 01 < 11 of the elements. Each consumer gets a fresh generator.
    """
    if b == 1:
        yield (size,)
        return
    for first in range(size, -1, -1):
        for rest in iter_count_vectors(size - first, b - 1):
            yield (first,) + rest

def enumerate_multisets(p: SpaceParams, cap: Optional[int] = None) -> Iterator[Multiset]:
    """
    Yield every multiset of X_b^n exactly once

    Args:
        p: Space parameters
        cap: Maximum space size; defaults to settings.ENUMERATION_CAP

    Raises:
        CapExceededError: when the space is larger than cap (raised before anything is yielded)
    """
    _check_space_cap(_space_size(p.n, p.b), cap)
    return (Multiset(counts) for counts in iter_count_vectors(p.n, p.b))

def find_palindromic_arrangement(m: Multiset, max_n: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """
    Search all arrangements of the elements for one that equals its own reversal

    Positions are filled left to right; a placement in the second half must
    mirror its partner, so dead branches are cut as soon as they appear.

    Returns:
        The palindromic word, or None when no arrangement reads the same backwards

    Raises:
        SearchRefusedError: when n exceeds max_n (default settings.SEARCH_MAX_N)
    """
    max_n = settings.SEARCH_MAX_N if max_n is None else max_n
    n = m.size
    if n > max_n:
        raise SearchRefusedError(
            f"Arrangement search refused for n={n} (limit {max_n})",
            n=n,
            limit=max_n,
        )

    remaining = list(m.counts)
    word: List[int] = [0] * n

    def place(position: int) -> bool:
        if position == n:
            return word == word[::-1]
        mirror = n - 1 - position
        for symbol, left in enumerate(remaining):
            if left == 0:
                continue
            if mirror < position and word[mirror] != symbol:
                continue
            remaining[symbol] -= 1
            word[position] = symbol
            if place(position + 1):
                return True
            remaining[symbol] += 1
        return False

    return tuple(word) if place(0) else None

def is_palindromic(m: Multiset, method: Union[PalindromeMethod, str] = PalindromeMethod.COUNTS) -> bool:
    """
    Decide whether the elements of m can be arranged into a palindrome

    counts: at most one symbol has odd multiplicity (none when n is even)
    search: an explicit arrangement equal to its reversal exists (n <= SEARCH_MAX_N)
    """
    method = PalindromeMethod(method)
    if method is PalindromeMethod.SEARCH:
        return find_palindromic_arrangement(m) is not None
    return m.odd_symbols <= 1

def brute_force_counts(p: SpaceParams, cap: Optional[int] = None) -> Tuple[int, int]:
    """
    Count the space and its palindromic subset by enumeration

    Returns:
        (total, palindromic)
    """
    total = 0
    palindromic = 0
    for m in enumerate_multisets(p, cap):
        total += 1
        if is_palindromic(m):
            palindromic += 1
    logger.debug(f"brute force n={p.n} b={p.b}: {palindromic}/{total}")
    return total, palindromic

def oracle_report(p: SpaceParams, cap: Optional[int] = None) -> DensityReport:
    """Density computed from brute-force counts"""
    total, palindromic = brute_force_counts(p, cap)
    value = Fraction(palindromic, total)
    return DensityReport(
        params=p,
        count=palindromic,
        size=total,
        value=value,
        decimal=format_decimal(float(value)),
        provenance=Provenance.ORACLE,
    )

def _partitions(n: int, max_parts: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of n into at most max_parts parts of size <= max_part, non-increasing, ascending lexicographic"""
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, min(n, max_part) + 1):
        if first * max_parts < n:
            continue
        for rest in _partitions(n - first, max_parts - 1, first):
            yield (first,) + rest

def _class_size(parts: Tuple[int, ...], b: int) -> int:
    """b! / (prod_j m_j! * (b - r)!): assign distinct symbols to the r parts, up to equal parts"""
    repeats = math.prod(math.factorial(m) for m in Counter(parts).values())
    return math.perm(b, len(parts)) // repeats

def profiles(p: SpaceParams, cap: Optional[int] = None) -> List[Profile]:
    """
    One Profile per partition of n into at most b parts

    Class sizes sum to space_size(p); palindromic classes sum to palindromic_count(p).
    For (5, 10) the rows are (1,1,1,1,1), (2,1,1,1), (2,2,1), (3,1,1), (3,2), (4,1), (5).

    Raises:
        CapExceededError: when n exceeds cap (default settings.PARTITION_CAP)
    """
    cap = settings.PARTITION_CAP if cap is None else cap
    if p.n > cap:
        raise CapExceededError(
            f"Partition enumeration of n={p.n} exceeds the cap of {cap}",
            size=p.n,
            cap=cap,
        )
    result = []
    for parts in _partitions(p.n, p.b, p.n):
        odd = sum(x % 2 for x in parts)
        result.append(Profile(parts=parts, class_size=_class_size(parts, p.b), palindromic=odd <= 1))
    return result

def double(m: Multiset) -> Multiset:
    """Doubling map X_b^n -> P_b^(2n): every multiplicity doubled"""
    return Multiset(tuple(2 * c for c in m.counts))

def halve(m: Multiset) -> Multiset:
    """
    Inverse of double on even palindromic multisets

    Raises:
        ValidationError: when n is odd
        NotPalindromicError: when some multiplicity is odd
    """
    if m.size % 2:
        raise ValidationError(f"halve needs an even cardinality, got {m.size}", n=m.size)
    if m.odd_symbols:
        raise NotPalindromicError(f"Cannot halve {m.counts}: odd multiplicities", counts=m.counts)
    return Multiset(tuple(c // 2 for c in m.counts))

def add_center(m: Multiset, x: int) -> Multiset:
    """
    Centre insertion P_b^(n-1) x alphabet -> P_b^n for odd n: add one copy of x

    Raises:
        ValidationError: when x is outside the alphabet or m has odd cardinality
        NotPalindromicError: when m is not palindromic
    """
    if not 0 <= x < m.alphabet_size:
        raise ValidationError(f"Symbol {x} outside alphabet of size {m.alphabet_size}", symbol=x)
    if m.size % 2:
        raise ValidationError(f"add_center needs an even cardinality, got {m.size}", n=m.size)
    if not is_palindromic(m):
        raise NotPalindromicError(f"Cannot add a centre to {m.counts}", counts=m.counts)
    counts = list(m.counts)
    counts[x] += 1
    return Multiset(tuple(counts))
