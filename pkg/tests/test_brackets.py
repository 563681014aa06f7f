from itertools import product

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from fusscat.brackets import GFC_METHODS, check_symmetry, enumerate_A, gfc
from fusscat.caps import SearchCapExceeded
from fusscat.exactmat import binomial, fuss_catalan


def brute_force_bracket(n, t, p):
    """Independent oracle: filter every candidate composition outright."""
    parts = p * t + 1
    total = p * (n - t)
    count = 0
    for alpha in product(range(total + 1), repeat=parts):
        if sum(alpha) != total:
            continue
        if all(sum(alpha[: k * t]) <= k * (n - t) for k in range(1, p)):
            count += 1
    return count


class TestEnumerateA:
    def test_reference_count(self):
        assert len(enumerate_A(3, 1, 3)) == 55

    def test_tiny_by_hand(self):
        assert enumerate_A(2, 1, 1) == [(0, 1), (1, 0)]

    def test_stars_and_bars_when_p_is_1(self):
        assert len(enumerate_A(5, 2, 1)) == binomial(5, 2)

    def test_elements_satisfy_invariants(self):
        for n, t, p in [(3, 1, 3), (4, 2, 2), (4, 3, 2)]:
            vecs = enumerate_A(n, t, p)
            assert vecs == sorted(vecs)
            assert len(set(vecs)) == len(vecs)
            for alpha in vecs:
                assert len(alpha) == p * t + 1
                assert all(x >= 0 for x in alpha)
                assert sum(alpha) == p * (n - t)
                for k in range(1, p):
                    assert sum(alpha[: k * t]) <= k * (n - t)

    def test_cap(self):
        with pytest.raises(SearchCapExceeded):
            enumerate_A(6, 3, 4, max_volume=10)

    @pytest.mark.parametrize("n,t,p", [(3, 0, 1), (3, 3, 1), (2, 1, 0)])
    def test_rejects_bad_parameters(self, n, t, p):
        with pytest.raises(ValueError):
            enumerate_A(n, t, p)


class TestBracket:
    def test_reference_values(self):
        assert gfc(3, 1, 3, "det") == 55
        assert gfc(3, 2, 3, "det") == 55

    def test_derived_value_all_methods(self):
        assert brute_force_bracket(4, 2, 2) == 53
        for method in GFC_METHODS:
            assert gfc(4, 2, 2, method) == 53

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown method"):
            gfc(3, 1, 3, "magic")

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 5), st.integers(1, 3), st.data())
    def test_methods_agree_and_match_oracle(self, n, p, data):
        t = data.draw(st.integers(1, n - 1))
        expected = brute_force_bracket(n, t, p)
        for method in GFC_METHODS:
            assert gfc(n, t, p, method) == expected

    def test_fuss_catalan_specialization(self):
        for n in range(2, 7):
            for p in range(1, 5):
                assert gfc(n, 1, p) == fuss_catalan(p + 1, n)

    def test_binomial_specialization(self):
        for n in range(2, 9):
            for t in range(1, n):
                assert gfc(n, t, 1) == binomial(n, t)

    def test_reflection_count(self):
        for n in range(2, 6):
            for p in range(1, 4):
                for t in range(1, n):
                    assert len(enumerate_A(n, t, p)) == len(enumerate_A(n, n - t, p))


class TestSymmetryReport:
    def test_reference_sweep(self):
        report = check_symmetry(3, 3)
        assert report["all_equal"]
        assert [pair["value"] for pair in report["pairs"]] == ["55", "55"]

    def test_self_paired(self):
        report = check_symmetry(2, 5)
        assert report["all_equal"]
        assert len(report["pairs"]) == 1
        assert report["pairs"][0]["mirror_t"] == 1

    def test_mixed_values(self):
        report = check_symmetry(4, 2)
        assert report["all_equal"]
        values = {pair["t"]: pair["value"] for pair in report["pairs"]}
        assert values[1] == values[3] == str(fuss_catalan(3, 4)) == "22"
        assert values[2] == "53"

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            check_symmetry(1, 1)
