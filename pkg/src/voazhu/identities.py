"""The three binomial identities the algebraic congruence proofs rest on.

Each verifier expands its left-hand side exactly (Laurent polynomials over
the rationals, never series approximations) and compares with the claimed
closed form.  They are exposed both for the test suite and for the
``verify-identities`` command.
"""

from __future__ import annotations

from fractions import Fraction

from .formal import BivariatePoly, LaurentPoly, binom, binom_poly


def verify_telescoping_binomial_sum(n: int) -> bool:
    """Check that the weighted telescoping sum

        sum_{m=0}^{n} C(m+n, n) * [ (-1)^m (1+x)^(n+1) - (-1)^n (1+x)^m ] / x^(n+m+1)

    collapses to the constant 1.  All negative powers of x must cancel
    exactly; this is the identity behind the left/right action swap on the
    quotient bimodules.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = LaurentPoly()
    top = binom_poly(n + 1)
    for m in range(n + 1):
        coeff = binom(Fraction(m + n), n)
        numerator = (top * Fraction((-1) ** m)) - (binom_poly(m) * Fraction((-1) ** n))
        total = total + (numerator * coeff).shift(-(n + m + 1))
    return total == 1


def verify_bivariate_binomial_cancellation(n: int) -> bool:
    """Check that

        sum_{m=0}^{n} (-1)^m C(m+n, n) *
            [ sum_{i=0}^{n-m} sum_{j=0}^{m} C(-n-m-1, i) C(m, j) (-1)^i x2^(i+j) x1^(-m-i)
              - x1^(-m) ]

    vanishes identically as a two-variable Laurent polynomial.  The inner
    j-sum is finite because C(m, j) = 0 for j > m.  This cancellation is
    what makes the right action associative on the quotient.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = BivariatePoly()
    for m in range(n + 1):
        outer = Fraction((-1) ** m) * binom(Fraction(m + n), n)
        inner = BivariatePoly()
        for i in range(n - m + 1):
            ci = binom(Fraction(-n - m - 1), i) * Fraction((-1) ** i)
            for j in range(m + 1):
                c = ci * binom(Fraction(m), j)
                inner = inner + BivariatePoly.monomial(-m - i, i + j, c)
        inner = inner - BivariatePoly.monomial(-m, 0)
        total = total + inner * outer
    return total.is_zero()


def alternating_binomial_sum(n: int, i: int) -> Fraction:
    """Exact value of  sum_{m=0}^{i} C(m+n, n) C(-n-m-1, i-m)  for 0 <= i <= n.

    Equals 1 at i = 0 (a single term, with the 0**0 = 1 convention) and 0
    for 1 <= i <= n; this is the collapse that reduces the weight-mixing
    double sum in the induced-homomorphism computation to its diagonal.
    """
    if not (0 <= i <= n):
        raise ValueError("need 0 <= i <= n")
    total = Fraction(0)
    for m in range(i + 1):
        total += binom(Fraction(m + n), n) * binom(Fraction(-n - m - 1), i - m)
    return total
