"""Shared helpers: deterministic random generators for property loops."""

from __future__ import annotations

from fractions import Fraction

import pytest

from routhkit import EpsPoly, EpsRat, Lcg64


def random_eps_poly(rng: Lcg64, max_degree: int = 2, bound: int = 6,
                    nonzero: bool = False) -> EpsPoly:
    while True:
        size = rng.randint(0, max_degree) + 1
        poly = EpsPoly([rng.randint(-bound, bound) for _ in range(size)])
        if not nonzero or not poly.is_zero:
            return poly


def random_eps_rat(rng: Lcg64, max_degree: int = 2, bound: int = 6) -> EpsRat:
    return EpsRat(random_eps_poly(rng, max_degree, bound),
                  random_eps_poly(rng, max_degree, bound, nonzero=True))


def random_fraction(rng: Lcg64, bound: int = 9, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


@pytest.fixture
def rng() -> Lcg64:
    return Lcg64(0xC0FFEE)
