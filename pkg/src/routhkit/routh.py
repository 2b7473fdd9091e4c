"""Routh array construction, degenerate-row remedies, and the stability verdict.

The array for a degree-n polynomial has n+1 rows labelled by powers s^n down
to s^0; the row of power p holds floor(p/2)+1 entries.  The first two rows
interleave the coefficients (even and odd offsets from the leading term);
each later entry follows the cross-multiplication rule

    r[i][j] = (r[i-1][0]*r[i-2][j+1] - r[i-2][0]*r[i-1][j+1]) / r[i-1][0]

with entries beyond a row's width read as zero.  Entries live in the exact
field Q(e) of rational functions in a formal infinitesimal, so every sign in
the first column is decided exactly in the limit e -> 0+.

Two degeneracies can interrupt the recurrence, checked in this order the
moment a row is formed:

* a row that is entirely zero;
* a row whose first entry is zero but which is not entirely zero.

How each is repaired is the selectable :class:`Policy`:

* ``SINGLE_EPSILON`` substitutes e for a zero first entry and refuses a
  fully zero row.
* ``EPSILON_ROW`` substitutes e for a zero first entry and replaces *every*
  entry of a fully zero row with e.
* ``DERIVATIVE_ROW`` (the classical remedy, also used by ``AUTO``)
  substitutes e for a zero first entry; a fully zero row is replaced by the
  coefficients of the derivative of the auxiliary polynomial formed from the
  row above.

The number of sign changes down the first column equals the number of roots
in the open right half-plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegreeTooSmall, EpsContaminatedRow, OriginRoot, PolicyUnsupported
from .exact_arith import EPS_ZERO, EPSILON, EpsRat
from .polynomial import Polynomial
from .root_oracle import HalfPlaneCounts, RootSet, find_roots, half_plane_counts


class Policy(Enum):
    """Degenerate-case remedy selection; values double as CLI names."""

    SINGLE_EPSILON = "single-eps"
    EPSILON_ROW = "eps-row"
    DERIVATIVE_ROW = "derivative"
    AUTO = "auto"


class EventKind(Enum):
    ZERO_FIRST_ELEMENT = "ZeroFirstElement"
    ZERO_ROW = "ZeroRow"
    LEADING_SIGN_FLIP = "LeadingSignFlip"
    ORIGIN_ROOTS_STRIPPED = "OriginRootsStripped"


class Verdict(Enum):
    STABLE = "Stable"
    UNSTABLE = "Unstable"
    MARGINAL_OR_SYMMETRIC = "MarginalOrSymmetric"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class SpecialEvent:
    """One degeneracy (or input normalization) and the remedy applied.

    `row_power` is the s-power label of the affected row, or None for
    polynomial-level events (sign flip, origin-root stripping).
    """

    kind: EventKind
    row_power: Optional[int]
    remedy: str


@dataclass(frozen=True)
class RouthArray:
    degree: int
    rows: tuple[tuple[EpsRat, ...], ...]
    events: tuple[SpecialEvent, ...]
    policy: Policy

    @property
    def first_column(self) -> tuple[EpsRat, ...]:
        return tuple(row[0] for row in self.rows)

    def row_power(self, index: int) -> int:
        return self.degree - index


@dataclass(frozen=True)
class OracleSummary:
    """Independent numeric cross-check attached to a report."""

    root_set: RootSet
    counts: HalfPlaneCounts
    agreement: bool


@dataclass(frozen=True)
class StabilityReport:
    first_column_signs: tuple[int, ...]
    sign_changes: int
    rhp_count: int
    verdict: Verdict
    events: tuple[SpecialEvent, ...]
    oracle_check: Optional[OracleSummary]
    array: RouthArray


def auxiliary_polynomial(row: Sequence[EpsRat], power: int) -> Polynomial:
    """Polynomial sum(row[j] * s^(power - 2j)) built from an eps-free row.

    This is the polynomial whose derivative repairs a fully zero row; a row
    already carrying e has no rational coefficients to offer, which is
    reported as EpsContaminatedRow.
    """
    coeffs = [Fraction(0)] * (power + 1)
    for j, entry in enumerate(row):
        k = power - 2 * j
        if k < 0:
            raise ValueError(f"row of {len(row)} entries is too long for power {power}")
        if not entry.is_eps_free:
            raise EpsContaminatedRow(
                f"entry {entry} of the s^{power} auxiliary row is not eps-free")
        coeffs[k] = entry.as_fraction()
    return Polynomial(coeffs)


def build_array(p: Polynomial, policy: Policy = Policy.AUTO) -> RouthArray:
    """Build the full Routh array of p under the given policy.

    Requires degree >= 1, a nonzero constant term (strip origin roots
    first), and a positive leading coefficient (flip the sign first).
    """
    if p.is_zero or p.degree < 1:
        raise DegreeTooSmall("array construction needs degree >= 1")
    if not p.constant_term:
        raise OriginRoot("constant term is zero; strip origin roots first")
    if p.leading_coefficient < 0:
        raise ValueError("leading coefficient must be positive; normalize first")

    n = p.degree
    events: list[SpecialEvent] = []
    rows: list[list[EpsRat]] = []

    top = [EpsRat.from_rational(p.coeff(n - 2 * j)) for j in range(n // 2 + 1)]
    rows.append(top)  # leading coefficient > 0, so never degenerate

    second = [EpsRat.from_rational(p.coeff(n - 1 - 2 * j))
              for j in range((n - 1) // 2 + 1)]
    _remediate(second, n - 1, rows, policy, events)
    rows.append(second)

    for power in range(n - 2, -1, -1):
        above2, above = rows[-2], rows[-1]
        pivot = above[0]
        head = above2[0]
        row = []
        for j in range(power // 2 + 1):
            right2 = above2[j + 1]
            right = above[j + 1] if j + 1 < len(above) else EPS_ZERO
            row.append((pivot * right2 - head * right) / pivot)
        _remediate(row, power, rows, policy, events)
        rows.append(row)

    array = RouthArray(degree=n,
                       rows=tuple(tuple(r) for r in rows),
                       events=tuple(events),
                       policy=policy)
    assert all(r[0].sign() != 0 for r in array.rows)
    return array


def _remediate(row: list[EpsRat], power: int, rows: list[list[EpsRat]],
               policy: Policy, events: list[SpecialEvent]) -> None:
    """Repair a degenerate row in place, recording one event."""
    if all(e.is_zero for e in row):
        if policy is Policy.SINGLE_EPSILON:
            raise PolicyUnsupported(
                f"single-eps policy cannot handle the all-zero s^{power} row")
        if policy is Policy.EPSILON_ROW:
            for j in range(len(row)):
                row[j] = EPSILON
            events.append(SpecialEvent(EventKind.ZERO_ROW, power,
                                       "replaced every entry with e"))
        else:
            aux = auxiliary_polynomial(rows[-1], power + 1)
            deriv = aux.derivative()
            for j in range(len(row)):
                row[j] = EpsRat.from_rational(deriv.coeff(power - 2 * j))
            events.append(SpecialEvent(
                EventKind.ZERO_ROW, power,
                f"substituted coefficients of derivative {deriv} "
                f"of auxiliary polynomial {aux}"))
    elif row[0].is_zero:
        row[0] = EPSILON
        events.append(SpecialEvent(EventKind.ZERO_FIRST_ELEMENT, power,
                                   "replaced leading zero with e"))


def count_sign_changes(array: RouthArray) -> tuple[tuple[int, ...], int]:
    """First-column signs (each +1/-1) and the number of adjacent flips."""
    signs = tuple(entry.sign() for entry in array.first_column)
    changes = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return signs, changes


def classify(p: Polynomial, policy: Policy = Policy.AUTO,
             with_oracle: bool = False) -> StabilityReport:
    """Full analysis: normalize, build the array, count sign changes, judge.

    The verdict is Stable only for an event-free all-positive first column;
    a zero row or stripped origin roots with no sign changes yields
    MarginalOrSymmetric (symmetric or imaginary-axis roots are present, so
    asymptotic stability is ruled out even without right-half-plane roots).
    """
    if p.is_zero:
        raise ValueError("cannot classify the zero polynomial")

    events: list[SpecialEvent] = []
    k, q = p.strip_origin_roots()
    if k:
        mono = "s" if k == 1 else f"s^{k}"
        events.append(SpecialEvent(EventKind.ORIGIN_ROOTS_STRIPPED, None,
                                   f"factored out {mono}"))
    if q.leading_coefficient < 0:
        q = -q
        events.append(SpecialEvent(EventKind.LEADING_SIGN_FLIP, None,
                                   "multiplied polynomial by -1"))

    if q.degree == 0:
        array = RouthArray(degree=0,
                           rows=((EpsRat.from_rational(q.constant_term),),),
                           events=(), policy=policy)
    else:
        array = build_array(q, policy)

    signs, changes = count_sign_changes(array)
    all_events = tuple(events) + array.events

    if changes > 0:
        verdict = Verdict.UNSTABLE
    elif any(ev.kind in (EventKind.ZERO_ROW, EventKind.ORIGIN_ROOTS_STRIPPED)
             for ev in all_events):
        verdict = Verdict.MARGINAL_OR_SYMMETRIC
    else:
        verdict = Verdict.STABLE

    oracle = None
    if with_oracle:
        if p.degree >= 1:
            root_set = find_roots(p)
            counts = half_plane_counts(root_set)
        else:
            root_set = RootSet(roots=(), max_residual=0.0, converged=True)
            counts = HalfPlaneCounts(lhp=0, rhp=0, axis=0, delta=1e-8)
        oracle = OracleSummary(root_set=root_set, counts=counts,
                               agreement=(counts.rhp == changes))

    return StabilityReport(first_column_signs=signs,
                           sign_changes=changes,
                           rhp_count=changes,
                           verdict=verdict,
                           events=all_events,
                           oracle_check=oracle,
                           array=array)
