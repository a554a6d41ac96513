from fractions import Fraction
from math import comb

import pytest
from conftest import graphs
from hypothesis import given, settings
from oracles import brute_count, brute_eulerian, brute_stable_set_count

from fracpoly.ehrhart import (
    DeltaVector,
    complete_graph_delta,
    complete_graph_numerator,
    delta_from_counts,
    delta_of_p,
    ehrhart_polynomial_p,
    eulerian,
    eulerian_number,
    is_alternatingly_increasing,
    quasi_polynomial,
    reciprocity_check,
    reciprocity_values,
    series_numerator_direct,
    series_numerator_theorem,
)
from fracpoly.graph import family, is_bipartite
from fracpoly.polynomial import Polynomial, is_symmetric, is_unimodal

C3_NUMERATOR = [1, 4, 7, 7, 4, 1]
C5_NUMERATOR = [1, 11, 51, 131, 206, 206, 131, 51, 11, 1]


def test_delta_k2():
    # i(P(K_2), 1) is the simplex count C(3, 2) = ... of {x, y >= 0, x + y <= 2}
    assert brute_count("p", family("complete", 2), 1) == 6
    assert delta_from_counts([1, 6], 2) == (1, 3)


def test_delta_c3():
    c3 = family("cycle", 3)
    counts = [brute_count("p", c3, n) for n in range(3)]
    assert counts == [1, 11, 42]
    assert delta_from_counts(counts, 3) == (1, 7, 4)


def test_delta_unit_point():
    assert delta_from_counts([1, 1, 1, 1], 0, length=4) == (1, 0, 0, 0)


def test_delta_inconsistent():
    with pytest.raises(ValueError):
        delta_from_counts([1, 2], 2)
    with pytest.raises(ValueError):
        # extra count that does not fit a degree-1 h*-polynomial
        delta_from_counts([1, 6, 16], 2)
    with pytest.raises(ValueError):
        DeltaVector((2, 1))


def test_interpolated_simplex():
    qp = quasi_polynomial(family("complete", 2))
    simplex = Polynomial([1, Fraction(3, 2), Fraction(1, 2)])
    assert qp.even == qp.odd == simplex
    assert all(qp(n) == comb(n + 2, 2) for n in range(10))


def test_quasi_c3():
    qp = quasi_polynomial(family("cycle", 3))
    assert qp.even(2) == 11 and qp.odd(1) == 4
    assert qp.even != qp.odd


def test_numerator_examples():
    assert series_numerator_direct(family("cycle", 3)) == C3_NUMERATOR
    assert series_numerator_direct(family("complete", 2)) == [1, 3, 3, 1]
    assert series_numerator_direct(family("cycle", 5)) == C5_NUMERATOR


def test_numerator_dfs_engine():
    assert series_numerator_direct(family("cycle", 5), engine="dfs") == C5_NUMERATOR


def test_theorem_interleaving():
    assert series_numerator_theorem((1, 7, 4)) == C3_NUMERATOR
    assert series_numerator_theorem(DeltaVector((1, 3))) == [1, 3, 3, 1]
    with pytest.raises(ValueError):
        series_numerator_theorem((1,))


@pytest.mark.parametrize("k", range(0, 9))
def test_eulerian_brute(k):
    assert list(eulerian(k)) == brute_eulerian(k)


def test_eulerian_examples():
    assert eulerian(1) == [1] and eulerian(3) == [1, 4, 1] and eulerian(4) == [1, 11, 11, 1]
    assert eulerian(0) == [1]
    assert eulerian_number(3, 5) == 0 and eulerian_number(3, -1) == 0


@pytest.mark.parametrize("k", range(11))
def test_eulerian_shape(k):
    assert is_symmetric(eulerian(k)) and is_unimodal(eulerian(k))


def test_complete_closed_forms():
    assert complete_graph_delta(2) == (1, 3)
    assert complete_graph_delta(3) == (1, 7, 4)
    assert complete_graph_numerator(3) == C3_NUMERATOR


@pytest.mark.parametrize("d", range(2, 7))
def test_complete_delta_matches_counts(d):
    assert complete_graph_delta(d) == delta_of_p(family("complete", d))


def test_shape_examples():
    assert is_alternatingly_increasing((1, 7, 4))
    assert not is_alternatingly_increasing((1, 3, 7))
    assert is_alternatingly_increasing((1, 3))


def test_reciprocity_examples():
    c3 = family("cycle", 3)
    a, b, c = reciprocity_values(c3, 0)
    assert a == b == c == 4
    # the cubic i(P(C_3), n) at n = -2
    assert -ehrhart_polynomial_p(c3)(-2) == 4
    assert reciprocity_check(family("complete", 2), 1)
    c5 = family("cycle", 5)
    assert reciprocity_values(c5, 0)[0] == 11 == brute_stable_set_count(c5)


@pytest.mark.parametrize("k", range(4))
def test_reciprocity_k2_closed_form(k):
    # i(FRAC(K_2), n) = (n+1)(n+2)/2 for every integer n, so i(P(K_2), n) = simplex(2n)
    def simplex(n):
        return Fraction((n + 1) * (n + 2), 2)

    assert reciprocity_values(family("complete", 2), k) == (simplex(2 * k + 1),) * 3
    assert simplex(-2 * k - 4) == simplex(2 * k + 1)


@given(graphs(max_d=5))
@settings(max_examples=40, deadline=None)
def test_ehrhart_properties(g):
    delta = delta_of_p(g)
    direct = series_numerator_direct(g)
    assert direct == series_numerator_theorem(delta)
    assert direct.degree == 2 * g.d - 1
    assert is_symmetric(direct) and is_unimodal(direct)
    assert is_alternatingly_increasing(delta)
    assert all(reciprocity_check(g, k) for k in range(4))
    qp = quasi_polynomial(g)
    if is_bipartite(g)[0]:
        assert qp.even == qp.odd
