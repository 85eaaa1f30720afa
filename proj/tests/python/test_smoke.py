"""Smoke tests for the python bindings."""

import math
from fractions import Fraction

import pytest

import permpack as pp


def test_count_known_values():
    assert pp.count([1, 2, 4, 3], [1, 2, 3, 4, 8, 7, 6, 5]) == 36
    assert pp.count([1, 2, 5, 4, 3], [2, 1, 4, 3, 6, 5, 10, 9, 8, 7]) == 48
    assert pp.count_layered([1, 1, 3], [2, 2, 2, 4]) == 48
    assert pp.count([1, 2], [1, 2, 3, 4, 5]) == 10


def test_decompose_build_roundtrip():
    assert pp.decompose([3, 2, 1, 5, 4, 9, 8, 7, 6]) == [3, 2, 4]
    assert pp.decompose([2, 3, 1]) is None
    assert pp.build([3, 2, 4]) == [3, 2, 1, 5, 4, 9, 8, 7, 6]
    assert pp.blocks_text([1, 1, 3]) == "A2,L3"
    assert pp.parse_blocks("A2,L3") == [1, 1, 3]
    assert pp.tau(2, 3) == [1, 2, 5, 4, 3]


def test_maximization():
    result = pp.max_over_all([1, 2, 4, 3], 8)
    assert result["max_count"] == 36
    assert [1, 2, 3, 4, 8, 7, 6, 5] in result["witnesses"]

    layered = pp.max_over_layered(pp.tau(2, 3), 14)
    assert layered["max_count"] == 840

    gk = pp.g_k(beta=3, n=10, k=1)
    assert gk["max_count"] == 120
    assert "A4,L6" in gk["witness_blocks"]


def test_formula_against_python_oracle():
    # independent recomputation with math.comb
    for n, beta in [(40, 3), (123, 4), (400, 5)]:
        expected = max(
            math.comb(x, 2) * math.comb(n - x, beta) for x in range(n + 1)
        )
        value, split = pp.g_formula_2beta(n, beta)
        assert value == expected
        assert math.comb(split, 2) * math.comb(n - split, beta) == expected
    assert pp.g_formula_alpha_alpha(10, 3) == math.comb(5, 3) ** 2


def test_exact_big_integers():
    value, _ = pp.g_formula_2beta(5000, 5)
    expected = max(
        math.comb(x, 2) * math.comb(5000 - x, 5) for x in range(5001)
    )
    assert value == expected
    assert value > 2**64  # exactness beyond machine words


def test_densities_and_split():
    assert pp.packing_density("2b", 3) == Fraction(1080, 3125)
    assert pp.packing_density("aa", 2) == Fraction(3, 8)
    assert pp.packing_density("2b", 2) == pp.packing_density("aa", 2)
    assert pp.optimal_split_fraction(3) == Fraction(2, 5)
    assert pp.density_2beta(3)["float"] == "0.345600000000"


def test_rewrites():
    moved = pp.move_point_to_last_layer([1, 1, 1, 1, 3], beta=3)
    assert moved["loss"] == 3
    assert moved["gain"] == 9
    assert moved["count_after"] - moved["count_before"] == 6
    assert moved["hypothesis_satisfied"]

    merged = pp.merge_first_layer_into_antilayer([1, 1, 3, 4], beta=3)
    assert merged["formula_delta"] == 11
    assert merged["after"] == "A5,L4"


def test_ratio_table():
    table = pp.galvin_ratios(pp.tau(2, 3), 200, mode="formula")
    assert table["nonincreasing"]
    last = Fraction(*table["rows"][-1]["ratio"])
    assert last >= Fraction(1080, 3125)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        pp.count([1, 3], [1, 2, 3])
    with pytest.raises(ValueError):
        pp.enumerate_all(15)
    with pytest.raises(ValueError):
        pp.max_over_layered([2, 3, 1], 6)
