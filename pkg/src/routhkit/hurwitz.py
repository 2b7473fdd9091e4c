"""Determinant route to stability: Hurwitz matrix and exact leading minors.

For a degree-n polynomial a_n s^n + ... + a_0 the n x n Hurwitz matrix is
H[i][j] = a_{n - 2j + i} (1-indexed; coefficients outside 0..n read as
zero).  The polynomial is stable exactly when all n leading principal
minors are positive.

Minors come from one fraction-free (Bareiss) elimination pass over an
integer-scaled copy of the matrix: after step k the (k, k) entry equals the
(k+1)-th leading minor, and every intermediate division is exact (checked).
A zero pivot stops the shared pass, in which case the remaining minors are
computed as independent exact determinants with row pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DegreeTooSmall, OriginRoot
from .polynomial import Polynomial


@dataclass(frozen=True)
class ExactMatrix:
    n: int
    entries: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class HurwitzDecision:
    stable: bool
    minors: tuple[Fraction, ...]


def hurwitz_matrix(p: Polynomial) -> ExactMatrix:
    if p.is_zero or p.degree < 1:
        raise DegreeTooSmall("Hurwitz matrix needs degree >= 1")
    if p.leading_coefficient < 0:
        raise ValueError("leading coefficient must be positive; normalize first")
    n = p.degree
    rows = tuple(
        tuple(p.coeff(n - 2 * (j + 1) + (i + 1)) for j in range(n))
        for i in range(n))
    return ExactMatrix(n=n, entries=rows)


def leading_minors(m: ExactMatrix) -> tuple[Fraction, ...]:
    """Exact k x k leading principal minors for k = 1..n."""
    scales = []
    work = []
    for row in m.entries:
        mult = lcm(*(c.denominator for c in row)) if row else 1
        scales.append(mult)
        work.append([int(c * mult) for c in row])

    ints = _bareiss_leading_minors(work)

    minors = []
    acc = 1
    for k in range(m.n):
        acc *= scales[k]
        minors.append(Fraction(ints[k], acc))
    return tuple(minors)


def hurwitz_stable(p: Polynomial) -> HurwitzDecision:
    """Stable iff every leading principal minor is positive."""
    if p.is_zero or p.degree < 1:
        raise DegreeTooSmall("stability test needs degree >= 1")
    if not p.constant_term:
        raise OriginRoot("constant term is zero; strip origin roots first")
    minors = leading_minors(hurwitz_matrix(p))
    return HurwitzDecision(stable=all(v > 0 for v in minors), minors=minors)


def _bareiss_leading_minors(a: list[list[int]]) -> list[int]:
    """Leading principal minors of an integer matrix, fraction-free.

    Falls back to per-minor determinants once a pivot (itself a leading
    minor) vanishes, because the shared elimination cannot continue past a
    zero pivot without row swaps that would change the leading submatrices.
    """
    n = len(a)
    pristine = [row[:] for row in a]
    minors = [0] * n
    prev = 1
    for k in range(n):
        minors[k] = a[k][k]
        if k == n - 1:
            break
        pivot = a[k][k]
        if pivot == 0:
            for t in range(k + 1, n):
                minors[t] = _det_int([row[: t + 1] for row in pristine[: t + 1]])
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q, r = divmod(pivot * a[i][j] - a[i][k] * a[k][j], prev)
                assert r == 0, "Bareiss division must be exact"
                a[i][j] = q
        prev = pivot
    return minors


def _det_int(a: list[list[int]]) -> int:
    """Exact determinant via Bareiss elimination with row pivoting."""
    a = [row[:] for row in a]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q, r = divmod(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
                assert r == 0, "Bareiss division must be exact"
                a[i][j] = q
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
