"""Tour of the exact infinitesimal field.

Array entries live in Q(e): rational functions of a formal symbol `e` that
stands for an arbitrarily small positive number.  Arithmetic is exact and
closed (no series truncation), and signs are decided in the limit e -> 0+,
so no numeric tolerance can ever flip a stability verdict.
"""

from fractions import Fraction

from routhkit import EPSILON, POLE_AT_ZERO, EpsRat

one = EpsRat.from_rational(1)

print("the infinitesimal itself:", EPSILON)
print("its reciprocal blows up: ", one / EPSILON)
print()

# Exact field arithmetic: everything cancels exactly.
x = (6 - 7 * EPSILON) / EPSILON
print("a typical array entry x =", x)
print("x * e + 7*e              =", x * EPSILON + 7 * EPSILON)
print("x - x                    =", x - x)
print()

# Signs in the limit e -> 0+.
for value in (x, -EPSILON, 2 * EPSILON, EpsRat.from_rational(-1)):
    print(f"sign({value}) = {value.sign():+d}")
print()

# Values at e = 0: finite limits vs poles.
y = (EPSILON + 3) / (1 + EPSILON)
print(f"limit of {y} at e=0:", y.limit())
print(f"limit of {x} at e=0:", x.limit())
assert x.limit() is POLE_AT_ZERO

# The limit sign agrees with evaluation at any small enough positive e.
point = Fraction(1, 10 ** 9)
print(f"\nx evaluated exactly at e = {point}:", x.evaluate(point))
print("same sign as the limit:", (x.evaluate(point) > 0) == (x.sign() > 0))
