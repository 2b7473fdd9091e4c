"""Hurwitz matrix, exact leading minors, and the determinant criterion."""

from __future__ import annotations

from fractions import Fraction

import pytest

from routhkit import (DegreeTooSmall, ExactMatrix, Polynomial, build_array,
                      count_sign_changes, hurwitz_matrix, hurwitz_stable,
                      leading_minors)
from routhkit.corpus import random_polynomial


def F(x):
    return Fraction(x)


def cofactor_det(m: list[list[Fraction]]) -> Fraction:
    """Naive cofactor expansion: the independent oracle for minors."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def minors_by_cofactor(matrix: ExactMatrix) -> tuple[Fraction, ...]:
    return tuple(
        cofactor_det([list(row[: k + 1]) for row in matrix.entries[: k + 1]])
        for k in range(matrix.n))


class TestHurwitzMatrix:
    def test_cubic(self):
        m = hurwitz_matrix(Polynomial([4, 3, 2, 1]))
        assert m.entries == ((F(2), F(4), F(0)),
                             (F(1), F(3), F(0)),
                             (F(0), F(2), F(4)))

    def test_quadratic(self):
        m = hurwitz_matrix(Polynomial([1, 2, 1]))
        assert m.entries == ((F(2), F(0)), (F(1), F(1)))

    def test_linear(self):
        assert hurwitz_matrix(Polynomial([5, 1])).entries == ((F(5),),)

    def test_degree_too_small(self):
        with pytest.raises(DegreeTooSmall):
            hurwitz_matrix(Polynomial([3]))


class TestLeadingMinors:
    def test_cubic_example(self):
        m = hurwitz_matrix(Polynomial([4, 3, 2, 1]))
        assert leading_minors(m) == (F(2), F(2), F(8))

    def test_identity(self):
        eye = ExactMatrix(3, tuple(tuple(F(int(i == j)) for j in range(3))
                                   for i in range(3)))
        assert leading_minors(eye) == (F(1), F(1), F(1))

    def test_two_by_two(self):
        m = ExactMatrix(2, ((F(2), F(4)), (F(1), F(3))))
        assert leading_minors(m) == (F(2), F(2))

    def test_zero_pivot_fallback(self):
        m = ExactMatrix(2, ((F(0), F(1)), (F(1), F(0))))
        assert leading_minors(m) == (F(0), F(-1))

    def test_matches_cofactor_oracle(self, rng):
        for _ in range(120):
            n = rng.randint(1, 5)
            entries = tuple(tuple(F(rng.randint(-9, 9)) for _ in range(n))
                            for _ in range(n))
            m = ExactMatrix(n, entries)
            assert leading_minors(m) == minors_by_cofactor(m)

    def test_rational_entries(self, rng):
        for _ in range(40):
            n = rng.randint(1, 4)
            entries = tuple(
                tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                      for _ in range(n))
                for _ in range(n))
            m = ExactMatrix(n, entries)
            assert leading_minors(m) == minors_by_cofactor(m)


class TestHurwitzStable:
    def test_stable_cubic(self):
        decision = hurwitz_stable(Polynomial([4, 3, 2, 1]))
        assert decision.stable
        assert decision.minors == (F(2), F(2), F(8))

    def test_unstable_quartic(self):
        decision = hurwitz_stable(Polynomial([1, 0, 0, 0, 1]))
        assert not decision.stable
        assert any(v <= 0 for v in decision.minors)

    def test_stable_double_root(self):
        assert hurwitz_stable(Polynomial([1, 2, 1])).stable

    def test_equivalence_with_routh(self, rng):
        checked = 0
        while checked < 80:
            poly, _ = random_polynomial(rng, 8)
            array = build_array(poly)
            if array.events:
                continue
            checked += 1
            routh_stable = count_sign_changes(array)[1] == 0
            assert hurwitz_stable(poly).stable == routh_stable
