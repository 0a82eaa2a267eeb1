from itertools import permutations
from math import factorial

import numpy as np
import pytest

from circperm.enumerator import (
    AvoiderCount,
    avoidance_mask,
    circular_perm_array,
    count_avoiders,
    count_avoiders_at_position,
    count_avoiders_by_position,
    count_linear_avoiders,
    iter_circular_perms,
    list_avoiders,
)
from circperm.model import InvalidInputError, contains_circular, contains_linear, reversal

from conftest import canonical_words


def slow_count(n, ps):
    return sum(not any(contains_circular(c, p) for p in ps) for c in canonical_words(n))


class TestGeneration:
    def test_n3(self):
        assert list(iter_circular_perms(3)) == [(1, 2, 3), (2, 1, 3)]

    def test_n1(self):
        assert list(iter_circular_perms(1)) == [(1,)]

    def test_n5_lex(self):
        words = list(iter_circular_perms(5))
        assert len(words) == 24
        assert words[0] == (1, 2, 3, 4, 5)
        assert words == sorted(words)

    def test_array_matches_stream(self):
        for n in range(1, 8):
            assert circular_perm_array(n).tolist() == [list(c) for c in iter_circular_perms(n)]

    def test_prefix_partition(self):
        n = 6
        parts = [list(iter_circular_perms(n, (a,))) for a in range(1, n)]
        assert sum(parts, []) == list(iter_circular_perms(n))

    def test_bad_prefix(self):
        with pytest.raises(InvalidInputError):
            list(iter_circular_perms(4, (4,)))


class TestCounting:
    @pytest.mark.parametrize("n, ps, expected", [
        (4, ["1234"], 5),
        (5, ["1324"], 13),
    ])
    def test_examples(self, n, ps, expected):
        result = count_avoiders(n, ps)
        assert result.count == expected
        assert result.method == "brute"

    def test_only_identity_avoids_132(self):
        for n in range(1, 8):
            assert count_avoiders(n, ["132"]).count == 1
            assert list_avoiders(n, ["132"]) == [tuple(range(1, n + 1))]

    def test_list_examples(self):
        assert list_avoiders(4, ["1234"]) == [c for c in iter_circular_perms(4) if c != (1, 2, 3, 4)]
        assert list_avoiders(3, ["123"]) == [(2, 1, 3)]
        assert list_avoiders(2, ["1342"]) == [(1, 2)]

    def test_vectorized_matches_scalar(self, all_patterns_upto4):
        for n in range(1, 7):
            rows = circular_perm_array(n)
            for p in all_patterns_upto4:
                mask = avoidance_mask(rows, [p])
                scalar = [not contains_circular(r, p) for r in rows.tolist()]
                assert mask.tolist() == scalar, (n, p)

    def test_vectorized_long_patterns(self):
        for p in [(1, 2, 3, 4, 5), (2, 4, 1, 5, 3), (3, 1, 4, 2, 6, 5)]:
            for n in range(1, 8):
                assert count_avoiders(n, [p]).count == slow_count(n, [p])

    def test_multiple_patterns(self):
        for n in range(1, 7):
            assert count_avoiders(n, ["1234", "1342"]).count == slow_count(n, ["1234", "1342"])

    def test_at_most_total_equality_when_short(self):
        for n in range(1, 8):
            for p in ["1234", "1324", "1342", "12345"]:
                c = count_avoiders(n, [p]).count
                assert c <= factorial(n - 1)
                if n < len(p):
                    assert c == factorial(n - 1)

    def test_reversal_symmetry(self, all_patterns_upto4):
        for n in range(1, 8):
            for p in all_patterns_upto4:
                assert count_avoiders(n, [p]).count == count_avoiders(n, [reversal(p)]).count

    def test_parallel_determinism(self):
        for n in (7, 9):
            for p in ["1234", "1324", "1342"]:
                assert count_avoiders(n, [p], workers=2) == count_avoiders(n, [p])

    def test_avoider_count_validates_method(self):
        with pytest.raises(InvalidInputError):
            AvoiderCount(3, frozenset(), 1, "guess")


class TestStrata:
    @pytest.mark.parametrize("ps, k, expected", [
        (["1342"], 3, 4),
        (["1234"], 2, 8),
        (["1234"], 5, 1),
    ])
    def test_examples(self, ps, k, expected):
        s = count_avoiders_at_position(6, ps, k)
        assert (s.k, s.count) == (k, expected)

    def test_k_out_of_range(self):
        with pytest.raises(InvalidInputError):
            count_avoiders_at_position(6, ["1234"], 6)
        with pytest.raises(InvalidInputError):
            count_avoiders_at_position(6, ["1234"], 0)

    def test_additivity(self):
        for p in ["1234", "1324", "1342"]:
            for n in range(3, 10):
                strata = count_avoiders_by_position(n, [p])
                assert sum(strata.values()) == count_avoiders(n, [p]).count
                if n <= 7:
                    assert all(count_avoiders_at_position(n, [p], k).count == v
                               for k, v in strata.items())


class TestLinear:
    @pytest.mark.parametrize("n, expected", [(4, 8), (5, 16)])
    def test_prop1_examples(self, n, expected):
        assert count_linear_avoiders(n, ["213", "231"]).count == expected

    def test_n1(self):
        assert count_linear_avoiders(1, ["213"]).count == 1

    def test_against_scalar(self):
        for n in range(1, 7):
            want = sum(not (contains_linear(w, (2, 1, 3)) or contains_linear(w, (1, 3, 2)))
                       for w in permutations(range(1, n + 1)))
            assert count_linear_avoiders(n, ["213", "132"]).count == want


def test_mask_shape():
    rows = circular_perm_array(5)
    mask = avoidance_mask(rows, ["1234"])
    assert mask.dtype == np.bool_ and mask.shape == (24,)
