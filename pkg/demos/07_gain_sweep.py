"""Classic use-case: for which controller gains K is the loop stable?

The closed-loop characteristic polynomial s^3 + 3s^2 + 3s + K is stable
exactly for 0 < K < 9 (work the array by hand: the s^1 entry is (9 - K)/3
and the s^0 entry is K).  The sweep samples K exactly and recovers that
interval to one step of resolution.
"""

from fractions import Fraction

from routhkit import run_sweep

result = run_sweep("1,3,3,K", Fraction(0), Fraction(12), steps=1200)
print("template: s^3 + 3*s^2 + 3*s + K, K in [0, 12], 1200 samples")
for lo, hi in result.intervals:
    print(f"  stable for K in [{float(lo):.6f}, {float(hi):.6f}]"
          f"   (exact sample values {lo} .. {hi})")

# Verdicts at and around the boundaries:
for value, verdict in result.samples[:2] + result.samples[898:901]:
    print(f"  K = {float(value):10.6f}: {verdict}")

# A polynomial that is never stable: s^2 + K has no damping term.
flat = run_sweep("1,0,K", Fraction(0), Fraction(1), steps=10)
print(f"\ns^2 + K over [0, 1]: stable intervals = {list(flat.intervals)}")
