"""The determinant route: Hurwitz matrix and exact leading minors.

A polynomial with positive leading coefficient is stable exactly when all
leading principal minors of its Hurwitz matrix are positive.  Minors are
computed exactly by fraction-free elimination, so this is a genuinely
independent second opinion on every Routh verdict.
"""

from routhkit import (Polynomial, classify, hurwitz_matrix, hurwitz_stable,
                      leading_minors)

for text in ("s^3 + 2*s^2 + 3*s + 4", "s^4 + 1", "s^2 + 2*s + 1",
             "s^3 - 7*s - 6"):
    poly = Polynomial.parse(text)
    matrix = hurwitz_matrix(poly)
    print(f"p(s) = {poly}")
    for row in matrix.entries:
        print("   [" + "  ".join(f"{str(c):>4}" for c in row) + "]")
    print("  leading minors:", [str(m) for m in leading_minors(matrix)])
    decision = hurwitz_stable(poly)
    routh = classify(poly)
    print(f"  hurwitz says {'stable' if decision.stable else 'not stable'};"
          f" routh verdict is {routh.verdict.value}")
    print()
