"""Exact scalars: arbitrary-precision rationals and rational functions in a
formal positive infinitesimal.

`Rational` is the standard-library `fractions.Fraction`: exact, always
canonical (positive denominator, gcd-reduced), totally ordered.

`EpsPoly` and `EpsRat` build the ordered field Q(e) of rational functions in
a formal symbol `e` that stands for an arbitrarily small positive number.
Every arithmetic operation is closed-form and exact; nothing is ever
truncated to a series or substituted with a float.  The sign of an `EpsRat`
is its sign in the limit e -> 0+, which is the sign of the lowest-order
nonzero numerator coefficient once the denominator is normalized to have a
positive lowest-order coefficient.  That limit sign agrees with the value of
the function at every sufficiently small real e > 0.

Canonical form of an `EpsRat`: numerator and denominator are coprime
polynomials and the lowest-order nonzero denominator coefficient is exactly
1.  Canonical form is unique, so equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd as _gcd
from typing import Iterable, Union

Rational = Fraction

_CoeffLike = Union[int, Fraction]


class _PoleAtZero:
    """Sentinel returned by :meth:`EpsRat.limit` when the value blows up."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "PoleAtZero"


PoleAtZero = _PoleAtZero
POLE_AT_ZERO = _PoleAtZero()


def _render_terms(coeffs: tuple[Fraction, ...], var: str) -> str:
    """Render a coefficient tuple (ascending powers) as `c + c*var + ...`."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class EpsPoly:
    """Polynomial in the infinitesimal `e` with Rational coefficients.

    Coefficients are stored ascending by power of e; trailing zeros are
    stripped, so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[_CoeffLike] = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "EpsPoly":
        """Wrap already-normalized Fraction coefficients without rechecking."""
        self = object.__new__(cls)
        self.coeffs = coeffs
        return self

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree in e; -1 denotes the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        """Index of the lowest-order nonzero coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("zero polynomial has no valuation")

    def lowest_coeff(self) -> Fraction:
        return self.coeffs[self.valuation]

    def constant(self) -> Fraction:
        """Coefficient of e^0."""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def scale(self, factor: Fraction) -> "EpsPoly":
        if not factor:
            return EpsPoly()
        return EpsPoly([c * factor for c in self.coeffs])

    def evaluate(self, value: Fraction) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other: "EpsPoly") -> "EpsPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return EpsPoly(out)

    def __neg__(self) -> "EpsPoly":
        return EpsPoly([-c for c in self.coeffs])

    def __sub__(self, other: "EpsPoly") -> "EpsPoly":
        return self + (-other)

    def __mul__(self, other: "EpsPoly") -> "EpsPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return EpsPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return EpsPoly(out)

    def __divmod__(self, other: "EpsPoly") -> tuple["EpsPoly", "EpsPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        dd = other.degree
        if self.degree < dd:
            return EpsPoly(), self
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        q = [Fraction(0)] * (self.degree - dd + 1)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + dd] / lead
            if c:
                q[k] = c
                for j, oc in enumerate(other.coeffs):
                    rem[k + j] -= c * oc
        return EpsPoly(q), EpsPoly(rem)

    def __floordiv__(self, other: "EpsPoly") -> "EpsPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "EpsPoly") -> "EpsPoly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EpsPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return _render_terms(self.coeffs, "e")

    def __repr__(self):
        return f"EpsPoly({list(self.coeffs)!r})"


def _canonicalize(num: EpsPoly, den: EpsPoly) -> tuple[EpsPoly, EpsPoly]:
    """Reduce a nonzero num/den pair to canonical form.

    The reduction runs over the integers: both polynomials are scaled to
    integer coefficients, divided by their primitive gcd (exact integer
    division, by Gauss's lemma), and rescaled so the denominator's
    lowest-order nonzero coefficient is exactly 1.
    """
    na, sn = _int_coeffs(num)
    da, sd = _int_coeffs(den)
    if len(na) > 1 and len(da) > 1:
        g = _int_gcd(na, da)
        if len(g) > 1:
            na = _int_div_exact(na, g)
            da = _int_div_exact(da, g)
    low = next(c for c in da if c)
    num_scale = Fraction(sd, sn * low)
    new_num = EpsPoly._raw(tuple(c * num_scale for c in na))
    new_den = EpsPoly._raw(tuple(Fraction(c, low) for c in da))
    return new_num, new_den


def _int_coeffs(p: EpsPoly) -> tuple[list[int], int]:
    """Integer coefficient list and the positive scale m with p = list/m."""
    mult = _lcm(*(c.denominator for c in p.coeffs))
    return [(c * mult).numerator for c in p.coeffs], mult


def _lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // _gcd(out, v)
    return out


def _primitive(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    g = 0
    for c in coeffs:
        g = _gcd(g, c)
        if g == 1:
            return coeffs
    return [c // g for c in coeffs]


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def _int_div_exact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (b divides a over Q and, being
    primitive, over Z)."""
    da, db = len(a) - 1, len(b) - 1
    rem = list(a)
    lead = b[-1]
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c, r = divmod(rem[k + db], lead)
        assert r == 0, "non-exact polynomial division"
        if c:
            q[k] = c
            for j in range(db + 1):
                rem[k + j] -= c * b[j]
    assert not any(rem), "non-exact polynomial division"
    return q


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Integer remainder of a by b up to a power of b's leading coefficient."""
    r = list(a)
    lead_b = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db:
        lead_r = r[-1]
        shift = len(r) - 1 - db
        r = [lead_b * c for c in r]
        for j in range(db + 1):
            r[shift + j] -= lead_r * b[j]
        del r[-1]
        while r and r[-1] == 0:
            r.pop()
    return r


_ZERO_P = EpsPoly()
_ONE_P = EpsPoly((1,))
_EPS_P = EpsPoly((0, 1))


@total_ordering
class EpsRat:
    """Element of the ordered field Q(e), held in canonical form.

    Supports +, -, *, / with other EpsRat values and with int/Fraction
    operands.  Ordering compares values in the limit e -> 0+.
    """

    __slots__ = ("num", "den", "_scalar")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("EpsRat with zero denominator")
        if num.is_zero:
            num, den = _ZERO_P, _ONE_P
        else:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        # cache the plain-rational value for the (dominant) eps-free case
        if den.coeffs == (Fraction(1),) and num.degree <= 0:
            self._scalar = num.constant()
        else:
            self._scalar = None

    @classmethod
    def from_rational(cls, value: _CoeffLike) -> "EpsRat":
        self = object.__new__(cls)
        v = value if type(value) is Fraction else Fraction(value)
        self.num = EpsPoly((v,)) if v else _ZERO_P
        self.den = _ONE_P
        self._scalar = v
        return self

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_eps_free(self) -> bool:
        """True when the value does not involve e at all."""
        return self._scalar is not None

    def as_fraction(self) -> Fraction:
        if self._scalar is None:
            raise ValueError(f"{self} is not eps-free")
        return self._scalar

    def sign(self) -> int:
        """Sign in the limit e -> 0+: -1, 0, or +1.

        Canonical form makes the denominator positive for small e, so the
        sign is that of the lowest-order nonzero numerator coefficient.
        """
        if self.num.is_zero:
            return 0
        return 1 if self.num.lowest_coeff() > 0 else -1

    def limit(self):
        """Value at e = 0, or POLE_AT_ZERO when the denominator vanishes."""
        d0 = self.den.constant()
        if not d0:
            return POLE_AT_ZERO
        return self.num.constant() / d0

    def evaluate(self, value: Fraction) -> Fraction:
        """Exact substitution of a rational value for e."""
        d = self.den.evaluate(value)
        if not d:
            raise ZeroDivisionError(f"denominator vanishes at e={value}")
        return self.num.evaluate(value) / d

    # -- field arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._scalar is not None and other._scalar is not None:
            return EpsRat.from_rational(self._scalar + other._scalar)
        return EpsRat(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        if self._scalar is not None:
            return EpsRat.from_rational(-self._scalar)
        return EpsRat(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._scalar is not None and other._scalar is not None:
            return EpsRat.from_rational(self._scalar * other._scalar)
        return EpsRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("EpsRat division by zero")
        if self._scalar is not None and other._scalar is not None:
            return EpsRat.from_rational(self._scalar / other._scalar)
        return EpsRat(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __bool__(self):
        return not self.num.is_zero

    def __hash__(self):
        if self._scalar is not None:
            return hash(self._scalar)
        return hash((self.num.coeffs, self.den.coeffs))

    def __str__(self):
        """Render per the output grammar: plain fraction when eps-free,
        otherwise `(<poly>)/(<poly>)`, e.g. `(6 - 7*e)/(e)`."""
        if self._scalar is not None:
            return str(self._scalar)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"EpsRat({self})"


def _as_poly(value) -> EpsPoly:
    if isinstance(value, EpsPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return EpsPoly((value,))
    raise TypeError(f"cannot build EpsPoly from {type(value).__name__}")


def _coerce(value):
    if isinstance(value, EpsRat):
        return value
    if isinstance(value, (int, Fraction)):
        return EpsRat.from_rational(value)
    return NotImplemented


#: The formal positive infinitesimal.
EPSILON = EpsRat(_EPS_P)

EPS_ZERO = EpsRat.from_rational(0)
