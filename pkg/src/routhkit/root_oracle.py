"""Independent numeric ground truth: all complex roots, counted by half-plane.

The solver iterates every root estimate simultaneously,

    z_i  <-  z_i - p(z_i) / prod_{j != i} (z_i - z_j),

on the monic-normalized polynomial, starting from (0.4 + 0.9j)^k for
k = 1..n.  No deflation ever happens, so there is no error accumulation and
each answer can be checked directly through its residual |p(z_i)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isfinite

from .errors import DegreeTooSmall
from .polynomial import Polynomial


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]
    max_residual: float
    converged: bool


@dataclass(frozen=True)
class HalfPlaneCounts:
    lhp: int
    rhp: int
    axis: int
    delta: float


def find_roots(p: Polynomial, tol: float = 1e-13, max_iter: int = 1000) -> RootSet:
    """All complex roots of p, sorted by (re, im).

    Convergence requires every per-iteration update to fall below
    tol * (1 + |z|); when max_iter passes without that, the current
    estimates are still returned with converged=False.
    """
    if p.is_zero or p.degree < 1:
        raise DegreeTooSmall("root finding needs degree >= 1")
    lead = float(p.leading_coefficient)
    mono = [float(c) / lead for c in p.coeffs]
    n = p.degree

    z = [(0.4 + 0.9j) ** k for k in range(1, n + 1)]
    converged = False
    for _ in range(max_iter):
        done = True
        for i in range(n):
            zi = z[i]
            den = 1.0 + 0j
            for j in range(n):
                if j != i:
                    den *= zi - z[j]
            if den == 0:
                # coincident estimates: deterministic nudge, retry next sweep
                z[i] = zi + 1e-12 * (1.0 + abs(zi)) * (1 + 1j)
                done = False
                continue
            step = _horner(mono, zi) / den
            nxt = zi - step
            if not (isfinite(nxt.real) and isfinite(nxt.imag)):
                done = False
                continue
            z[i] = nxt
            if abs(step) >= tol * (1.0 + abs(nxt)):
                done = False
        if done:
            converged = True
            break

    roots = tuple(sorted(z, key=lambda c: (c.real, c.imag)))
    max_residual = max(abs(_horner(mono, r)) for r in roots)
    return RootSet(roots=roots, max_residual=max_residual, converged=converged)


def half_plane_counts(root_set: RootSet, delta: float = 1e-8) -> HalfPlaneCounts:
    """Count roots left of, right of, and on the imaginary axis.

    The axis band is delta * max(1, |root|) wide so large roots are not
    misclassified by absolute tolerance.
    """
    lhp = rhp = axis = 0
    for r in root_set.roots:
        scale = max(1.0, abs(r))
        if r.real > delta * scale:
            rhp += 1
        elif r.real < -delta * scale:
            lhp += 1
        else:
            axis += 1
    return HalfPlaneCounts(lhp=lhp, rhp=rhp, axis=axis, delta=delta)


def _horner(ascending: list[float], z: complex) -> complex:
    acc = 0j
    for c in reversed(ascending):
        acc = acc * z + c
    return acc
