"""Exact rational metrics and their max-combination."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regopen import FiniteMetric, combine_metric, dominates
from regopen.errors import NotAMetric, SizeMismatch

ZERO_ONE = FiniteMetric([[0, 1], [1, 0]])


def test_axioms_validated():
    with pytest.raises(NotAMetric) as exc:
        FiniteMetric([[0, 1], [2, 0]])
    assert exc.value.axiom == "symmetry"
    with pytest.raises(NotAMetric) as exc:
        FiniteMetric([[0, 0], [0, 0]])
    assert exc.value.axiom == "positivity"
    with pytest.raises(NotAMetric) as exc:
        FiniteMetric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert exc.value.axiom == "triangle"


def test_combine_equal_metrics_is_identity():
    assert combine_metric(ZERO_ONE, ZERO_ONE, [0, 1]) == ZERO_ONE


def test_combine_takes_pointwise_max():
    dy = FiniteMetric([[0, 3], [3, 0]])
    dz = combine_metric(ZERO_ONE, dy, [0, 1])
    assert dz(0, 1) == 3


def test_combine_respects_bijection():
    dx = FiniteMetric([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    dy = FiniteMetric([[0, 2, 1], [2, 0, 1], [1, 1, 0]])
    # tau sends 0 -> 2 and 1 -> 0, so dy(2, 0) applies between points 0 and 1
    dz = combine_metric(dx, dy, {0: 2, 1: 0, 2: 1})
    assert dz(0, 1) == dy(2, 0) == 1
    assert dz(1, 2) == dy(0, 1) == 2


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        combine_metric(ZERO_ONE, FiniteMetric([[0]]), [0, 1])


def test_non_bijection_rejected():
    with pytest.raises(ValueError):
        combine_metric(ZERO_ONE, ZERO_ONE, [0, 0])


def test_exact_fractions_survive():
    d = FiniteMetric([[0, Fraction(1, 3)], [Fraction(1, 3), 0]])
    assert combine_metric(d, ZERO_ONE, [0, 1])(0, 1) == 1
    assert combine_metric(d, d, [0, 1])(0, 1) == Fraction(1, 3)


@st.composite
def metric_in_unit_band(draw):
    # distances in [1, 2] satisfy the triangle inequality automatically
    n = 4
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rows[j][i] = 1 + Fraction(draw(st.integers(0, 16)), 16)
    return FiniteMetric(rows)


@given(metric_in_unit_band(), metric_in_unit_band(), st.permutations(range(4)))
@settings(max_examples=150)
def test_combination_is_metric_and_dominates(dx, dy, tau):
    dz = combine_metric(dx, dy, list(tau))  # constructor re-scans all axioms
    assert dominates(dz, dx)
    for i in range(4):
        for j in range(4):
            assert dz(i, j) == max(dx(i, j), dy(tau[i], tau[j]))
