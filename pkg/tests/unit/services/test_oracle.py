"""
test_oracle.py

Unit tests for services.oracle (enumeration, palindromicity, brute-force counts, profiles, bijections)
"""
import pytest

from domain import Multiset, PalindromeMethod, Profile, Provenance, SpaceParams
from services import exact_core, oracle
from utils import CapExceededError, NotPalindromicError, SearchRefusedError, ValidationError

def _palindromic_subset(p: SpaceParams) -> set:
    return {m for m in oracle.enumerate_multisets(p) if oracle.is_palindromic(m)}

class TestEnumerateMultisets:
    """Tests for enumerate_multisets and iter_count_vectors"""

    def test_binary_pairs(self):
        """X_2^2 in sorted-word order 00, 01, 11"""
        items = [m.counts for m in oracle.enumerate_multisets(SpaceParams(n=2, b=2))]
        assert items == [(2, 0), (1, 1), (0, 2)]

    def test_worked_example_size(self, worked_example):
        assert sum(1 for _ in oracle.enumerate_multisets(worked_example)) == 2002

    def test_small_space_size(self, small_space):
        assert len(list(oracle.enumerate_multisets(small_space))) == 15

    def test_every_vector_sums_to_n(self, small_grid):
        for p in small_grid:
            assert all(m.size == p.n and m.alphabet_size == p.b for m in oracle.enumerate_multisets(p))

    def test_strictly_monotone_no_duplicates(self, small_grid):
        """Consecutive count vectors strictly decrease lexicographically"""
        for p in small_grid:
            vectors = [m.counts for m in oracle.enumerate_multisets(p)]
            assert all(later < earlier for earlier, later in zip(vectors, vectors[1:]))
            assert len(set(vectors)) == exact_core.space_size(p)

    def test_cap_exceeded(self, worked_example):
        with pytest.raises(CapExceededError) as exc_info:
            oracle.enumerate_multisets(worked_example, cap=2001)
        assert exc_info.value.extra["size"] == 2002
        assert "2002" in exc_info.value.message

    def test_restartable(self, small_space):
        """Each call returns an independent generator"""
        first = oracle.enumerate_multisets(small_space)
        second = oracle.enumerate_multisets(small_space)
        next(first)
        assert len(list(second)) == 15

    def test_size_zero_vector(self):
        assert list(oracle.iter_count_vectors(0, 3)) == [(0, 0, 0)]

class TestIsPalindromic:
    """Tests for is_palindromic and find_palindromic_arrangement"""

    def test_palindromic_example(self, palindromic_multiset):
        assert oracle.is_palindromic(palindromic_multiset) is True
        assert oracle.is_palindromic(palindromic_multiset, PalindromeMethod.SEARCH) is True

    def test_certificate(self, palindromic_multiset):
        """{1, 1, 2, 2, 3} is written 12321"""
        assert oracle.find_palindromic_arrangement(palindromic_multiset) == (1, 2, 3, 2, 1)

    def test_non_palindromic_example(self, non_palindromic_multiset):
        assert oracle.is_palindromic(non_palindromic_multiset) is False
        assert oracle.is_palindromic(non_palindromic_multiset, "search") is False
        assert oracle.find_palindromic_arrangement(non_palindromic_multiset) is None

    def test_repeated_pair(self):
        pair = Multiset.from_symbols([0, 0], b=2)
        assert oracle.is_palindromic(pair)
        assert oracle.find_palindromic_arrangement(pair) == (0, 0)

    def test_search_refused_above_limit(self):
        with pytest.raises(SearchRefusedError):
            oracle.is_palindromic(Multiset((11, 0)), PalindromeMethod.SEARCH)

    def test_counts_method_has_no_limit(self):
        assert oracle.is_palindromic(Multiset((11, 0)))

    def test_methods_agree_exhaustively(self):
        """Odd-multiplicity criterion equals arrangement search for n <= 8, b <= 5"""
        for n in range(2, 9):
            for b in range(2, 6):
                for m in oracle.enumerate_multisets(SpaceParams(n=n, b=b)):
                    certificate = oracle.find_palindromic_arrangement(m)
                    assert oracle.is_palindromic(m) == (certificate is not None), m.counts
                    if certificate is not None:
                        assert certificate == certificate[::-1]
                        assert Multiset.from_symbols(certificate, b) == m

class TestBruteForceCounts:
    """Tests for brute_force_counts and oracle_report"""

    @pytest.mark.parametrize("n, b, expected", [(5, 10, (2002, 550)), (3, 2, (4, 4)), (4, 3, (15, 6))])
    def test_known_counts(self, n, b, expected):
        assert oracle.brute_force_counts(SpaceParams(n=n, b=b)) == expected

    def test_matches_closed_forms(self, small_grid):
        for p in small_grid:
            assert oracle.brute_force_counts(p) == (exact_core.space_size(p), exact_core.palindromic_count(p))

    def test_oracle_report(self, worked_example):
        report = oracle.oracle_report(worked_example)
        assert (report.count, report.size) == (550, 2002)
        assert report.value == exact_core.pd_exact(worked_example)
        assert report.provenance is Provenance.ORACLE

class TestProfiles:
    """Tests for profiles"""

    def test_worked_example_rows(self, worked_example):
        rows = oracle.profiles(worked_example)
        assert [r.parts for r in rows] == [
            (1, 1, 1, 1, 1),
            (2, 1, 1, 1),
            (2, 2, 1),
            (3, 1, 1),
            (3, 2),
            (4, 1),
            (5,),
        ]
        assert [r.class_size for r in rows] == [252, 840, 360, 360, 90, 90, 10]
        assert [r.palindromic for r in rows] == [False, False, True, False, True, True, True]

    def test_worked_example_sums(self, worked_example):
        rows = oracle.profiles(worked_example)
        assert sum(r.class_size for r in rows) == 2002
        assert sum(r.class_size for r in rows if r.palindromic) == 550

    def test_binary_pairs(self):
        rows = {r.parts: r for r in oracle.profiles(SpaceParams(n=2, b=2))}
        assert rows[(2,)] == Profile(parts=(2,), class_size=2, palindromic=True)
        assert rows[(1, 1)] == Profile(parts=(1, 1), class_size=1, palindromic=False)

    def test_at_most_b_parts(self):
        rows = oracle.profiles(SpaceParams(n=6, b=2))
        assert all(len(r.parts) <= 2 for r in rows)

    def test_sums_match_closed_forms(self, small_grid):
        for p in small_grid:
            rows = oracle.profiles(p)
            assert sum(r.class_size for r in rows) == exact_core.space_size(p)
            assert sum(r.class_size for r in rows if r.palindromic) == exact_core.palindromic_count(p)

    def test_class_size_matches_enumeration(self, small_space):
        """Class size counts the multisets whose sorted positive counts equal the parts"""
        for row in oracle.profiles(small_space):
            members = [
                m for m in oracle.enumerate_multisets(small_space)
                if tuple(sorted((c for c in m.counts if c), reverse=True)) == row.parts
            ]
            assert len(members) == row.class_size

    def test_cap_exceeded(self):
        with pytest.raises(CapExceededError):
            oracle.profiles(SpaceParams(n=30, b=3), cap=20)

class TestDoubleHalve:
    """Tests for double and halve"""

    def test_double(self):
        assert oracle.double(Multiset((1, 1, 0))) == Multiset((2, 2, 0))

    def test_halve(self):
        assert oracle.halve(Multiset((2, 2, 0))) == Multiset((1, 1, 0))

    def test_halve_rejects_odd_counts(self):
        with pytest.raises(NotPalindromicError):
            oracle.halve(Multiset((2, 1, 1)))

    def test_halve_rejects_odd_size(self):
        with pytest.raises(ValidationError):
            oracle.halve(Multiset((2, 1)))

    def test_round_trip(self):
        for n in range(1, 7):
            for b in range(2, 5):
                for counts in oracle.iter_count_vectors(n, b):
                    m = Multiset(counts)
                    assert oracle.halve(oracle.double(m)) == m

    def test_double_image_is_palindromic_subset(self):
        """Doubling X_b^(n/2) is a bijection onto the palindromic part of X_b^n"""
        for n in range(2, 7, 2):
            for b in range(2, 5):
                p = SpaceParams(n=n, b=b)
                domain = [Multiset(c) for c in oracle.iter_count_vectors(n // 2, b)]
                image = {oracle.double(m) for m in domain}
                assert len(image) == len(domain)
                assert image == _palindromic_subset(p)
                for m in image:
                    assert oracle.double(oracle.halve(m)) == m

    def test_small_space_image(self):
        image = {oracle.double(Multiset(c)) for c in oracle.iter_count_vectors(2, 3)}
        assert len(image) == 6 == exact_core.palindromic_count(SpaceParams(n=4, b=3))

class TestAddCenter:
    """Tests for add_center"""

    def test_add_center(self):
        assert oracle.add_center(Multiset((2, 0)), 1) == Multiset((2, 1))

    def test_rejects_non_palindromic(self):
        with pytest.raises(NotPalindromicError):
            oracle.add_center(Multiset((1, 1)), 0)

    def test_rejects_symbol_outside_alphabet(self):
        with pytest.raises(ValidationError):
            oracle.add_center(Multiset((2, 0)), 2)

    def test_binary_image(self):
        smaller = [Multiset(c) for c in oracle.iter_count_vectors(2, 2) if all(x % 2 == 0 for x in c)]
        image = {oracle.add_center(m, x) for m in smaller for x in range(2)}
        assert len(image) == 4 == exact_core.palindromic_count(SpaceParams(n=3, b=2))

    def test_decimal_image(self):
        smaller = [m for m in oracle.enumerate_multisets(SpaceParams(n=4, b=10)) if oracle.is_palindromic(m)]
        image = {oracle.add_center(m, x) for m in smaller for x in range(10)}
        assert len(image) == 10 * exact_core.palindromic_count(SpaceParams(n=4, b=10))

    def test_bijection_onto_odd_palindromes(self):
        for n in range(3, 7, 2):
            for b in range(2, 5):
                smaller = [m for m in oracle.enumerate_multisets(SpaceParams(n=n - 1, b=b)) if oracle.is_palindromic(m)]
                image = [oracle.add_center(m, x) for m in smaller for x in range(b)]
                assert len(set(image)) == len(image)
                assert set(image) == _palindromic_subset(SpaceParams(n=n, b=b))
