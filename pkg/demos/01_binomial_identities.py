"""The three exact binomial identities behind the quotient congruences.

Everything in this package reduces, sooner or later, to one of three
combinatorial collapses.  This script expands each one exactly and shows
the cancellation happening - no numerics, no tolerance.
"""

from fractions import Fraction

from voazhu import binom
from voazhu.formal import LaurentPoly, binom_poly
from voazhu.identities import (alternating_binomial_sum,
                               verify_bivariate_binomial_cancellation,
                               verify_telescoping_binomial_sum)

# 1. The telescoping sum.  Term by term it is a genuine Laurent polynomial
# with poles up to order 2N+1; summed over m, everything but the constant
# 1 cancels.
N = 3
print(f"telescoping sum at N={N}:")
total = LaurentPoly()
top = binom_poly(N + 1)
for m in range(N + 1):
    coeff = binom(Fraction(m + N), N)
    term = ((top * Fraction((-1) ** m)) - (binom_poly(m) * Fraction((-1) ** N))) * coeff
    term = term.shift(-(N + m + 1))
    low = min(term.coeffs) if term.coeffs else 0
    print(f"  m={m}: {len(term.coeffs)} monomials, lowest exponent {low}")
    total = total + term
print(f"  sum = {total!r}")
assert verify_telescoping_binomial_sum(N)

# 2. The alternating sum: 1 at i=0, then dead zero across the whole range.
print("\nalternating sums, N=6:")
print(" ", [str(alternating_binomial_sum(6, i)) for i in range(7)])

# 3. The two-variable cancellation, checked for a few levels.
for n in range(5):
    assert verify_bivariate_binomial_cancellation(n)
print("\nbivariate cancellation holds for N = 0..4")
