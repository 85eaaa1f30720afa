"""Exact pattern packing for permutations, backed by the C++ core.

The heavy lifting lives in the compiled module; this wrapper adds small
conveniences (pattern constructors, Fraction views of exact rationals).
"""

from fractions import Fraction

from ._permpack import (
    absorb_isolated_points,
    binom_inequality,
    blocks_text,
    build,
    count,
    count_layered,
    decompose,
    density_2beta,
    density_alpha_alpha,
    enumerate_all,
    enumerate_layered,
    g_formula_2beta,
    g_formula_alpha_alpha,
    g_k,
    galvin_ratios,
    max_over_all,
    max_over_layered,
    merge_first_layer_into_antilayer,
    move_point_to_last_layer,
    parse_blocks,
    parse_permutation,
    push_antilayers_left,
    sort_layers,
)

__all__ = [
    "absorb_isolated_points",
    "binom_inequality",
    "blocks_text",
    "build",
    "count",
    "count_layered",
    "decompose",
    "density_2beta",
    "density_alpha_alpha",
    "enumerate_all",
    "enumerate_layered",
    "g_formula_2beta",
    "g_formula_alpha_alpha",
    "g_k",
    "galvin_ratios",
    "max_over_all",
    "max_over_layered",
    "merge_first_layer_into_antilayer",
    "move_point_to_last_layer",
    "parse_blocks",
    "parse_permutation",
    "push_antilayers_left",
    "sort_layers",
    "tau",
    "packing_density",
    "optimal_split_fraction",
]


def tau(alpha: int, beta: int) -> list:
    """One-line form of the layered pattern with layer sizes (1^alpha, beta)."""
    if alpha < 0 or beta < 1:
        raise ValueError("tau expects alpha >= 0 and beta >= 1")
    return build([1] * alpha + [beta])


def packing_density(family: str, param: int) -> Fraction:
    """Exact packing density; family is 'aa' or '2b'."""
    if family == "aa":
        report = density_alpha_alpha(param)
    elif family == "2b":
        report = density_2beta(param)
    else:
        raise ValueError("family must be 'aa' or '2b'")
    return Fraction(report["num"], report["den"])


def optimal_split_fraction(beta: int) -> Fraction:
    """Asymptotic antilayer fraction of the tau(2,beta) maximizer: 2/(beta+2)."""
    report = density_2beta(beta)
    return Fraction(report["xi_num"], report["xi_den"])
