"""Finite metric spaces over exact rationals and the max-combination of two metrics.

Distances are ``fractions.Fraction`` values so the metric axioms can be
checked exactly, never within a floating tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotAMetric, SizeMismatch

Rational = Fraction | int


class FiniteMetric:
    """An n-point metric given by its full distance matrix.

    Construction validates all axioms exhaustively: zero diagonal, symmetry,
    strict positivity off the diagonal, and the triangle inequality over
    every ordered triple.
    """

    __slots__ = ("n", "dist")

    def __init__(self, dist: Sequence[Sequence[Rational]]):
        n = len(dist)
        if n < 1:
            raise ValueError("a metric space needs at least one point")
        rows = tuple(tuple(Fraction(v) for v in row) for row in dist)
        if any(len(row) != n for row in rows):
            raise SizeMismatch("distance matrix must be square")
        for i in range(n):
            if rows[i][i] != 0:
                raise NotAMetric("identity", (i, i))
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NotAMetric("symmetry", (i, j))
                if rows[i][j] <= 0:
                    raise NotAMetric("positivity", (i, j))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if rows[i][k] > rows[i][j] + rows[j][k]:
                        raise NotAMetric("triangle", (i, j, k))
        self.n = n
        self.dist = rows

    def __eq__(self, other):
        return isinstance(other, FiniteMetric) and self.dist == other.dist

    def __hash__(self):
        return hash(self.dist)

    def __repr__(self):
        return f"FiniteMetric(n={self.n})"

    def __call__(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]


def combine_metric(
    dx: FiniteMetric, dy: FiniteMetric, tau: Sequence[int] | dict[int, int]
) -> FiniteMetric:
    """Pointwise max of ``dx`` and the pullback of ``dy`` along the bijection ``tau``.

    d(i, j) = max(dx(i, j), dy(tau(i), tau(j))). The result is validated
    against all metric axioms and dominates ``dx`` entrywise by construction.
    """
    if dx.n != dy.n:
        raise SizeMismatch(f"point counts differ: {dx.n} vs {dy.n}")
    t = [tau[i] for i in range(dx.n)]
    if sorted(t) != list(range(dx.n)):
        raise ValueError("tau must be a bijection of {0..n-1}")
    rows = [
        [max(dx.dist[i][j], dy.dist[t[i]][t[j]]) for j in range(dx.n)]
        for i in range(dx.n)
    ]
    return FiniteMetric(rows)


def dominates(a: FiniteMetric, b: FiniteMetric) -> bool:
    """True iff a(i,j) >= b(i,j) for every pair."""
    if a.n != b.n:
        raise SizeMismatch(f"point counts differ: {a.n} vs {b.n}")
    return all(
        a.dist[i][j] >= b.dist[i][j] for i in range(a.n) for j in range(a.n)
    )
