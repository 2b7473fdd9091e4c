"""Building Routh arrays and reading off right-half-plane root counts.

The first column's sign changes count the roots with positive real part:
zero changes means every root is in the open left half-plane (stable).
`classify` handles the bookkeeping first: origin roots are factored out and
a negative leading coefficient is flipped, each recorded as an event.
"""

from routhkit import Polynomial, classify


def show(text: str) -> None:
    poly = Polynomial.parse(text)
    report = classify(poly)
    array = report.array
    print(f"p(s) = {poly}")
    for i, row in enumerate(array.rows):
        label = f"s^{array.row_power(i)}"
        print(f"  {label:>4} | " + "  ".join(str(e) for e in row))
    for event in report.events:
        print(f"  event: {event.kind.value} -> {event.remedy}")
    rendered = " ".join("+" if s > 0 else "-" for s in report.first_column_signs)
    print(f"  first column: {rendered}   sign changes: {report.sign_changes}")
    print(f"  verdict: {report.verdict.value}  (rhp roots: {report.rhp_count})")
    print()


# A stable cubic: all first-column entries positive.
show("s^3 + 2*s^2 + 3*s + 4")

# One right-half-plane root: (s+1)(s+2)(s-3).
show("s^3 - 7*s - 6")

# Two right-half-plane roots: (s-1)(s-2)(s+3).
show("s^3 - 7*s + 6")

# Origin roots are factored out first and block a Stable verdict.
show("s^3 + s^2")
