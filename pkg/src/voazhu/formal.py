"""Exact formal calculus: rationals, Laurent polynomials, truncated series.

Everything here is immutable after construction and exact; there is no
floating point anywhere in this package.  A ``TruncSeries`` distinguishes
"coefficient is zero" from "coefficient is unknown beyond the truncation
order": reading past the order raises instead of silently returning 0,
because a silent zero would corrupt residue extraction.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnderdeterminedError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    """Coerce ints / strings like '3/4' / Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot treat {x!r} as an exact rational")


def binom(a, k: int) -> Fraction:
    """Generalized binomial coefficient a(a-1)...(a-k+1)/k! for rational a.

    binom(a, 0) = 1 (empty product); k must be a nonnegative integer.
    """
    if k < 0:
        raise ValueError("binom: k must be nonnegative")
    a = as_scalar(a)
    num = ONE
    for i in range(k):
        num *= a - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den


def _clean(coeffs: dict) -> dict:
    return {e: c for e, c in coeffs.items() if c != 0}


class LaurentPoly:
    """Sparse Laurent polynomial over the rationals in one variable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=None, var: str = "x"):
        raw = {} if coeffs is None else {int(e): as_scalar(c) for e, c in dict(coeffs).items()}
        self.coeffs = _clean(raw)
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff=ONE, var: str = "x") -> "LaurentPoly":
        return cls({exponent: coeff}, var=var)

    @classmethod
    def one(cls, var: str = "x") -> "LaurentPoly":
        return cls({0: ONE}, var=var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> Fraction:
        return self.coeffs.get(exponent, ZERO)

    def residue(self) -> Fraction:
        return self.coeffs.get(-1, ZERO)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return LaurentPoly(out, var=self.var)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, ZERO) - c
        return LaurentPoly(out, var=self.var)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()}, var=self.var)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out: dict = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    out[e] = out.get(e, ZERO) + c1 * c2
            return LaurentPoly(out, var=self.var)
        c = as_scalar(other)
        return LaurentPoly({e: c0 * c for e, c0 in self.coeffs.items()}, var=self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var**k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()}, var=self.var)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _clean({0: as_scalar(other)})
        return NotImplemented

    def __hash__(self):
        return hash((self.var, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{e}")
        return " + ".join(parts)


def binom_poly(a: int, var: str = "x") -> LaurentPoly:
    """(1+x)**a for a *nonnegative integer* a, as an exact Laurent polynomial."""
    if a < 0:
        raise ValueError("binom_poly needs a >= 0; use binom_expand for general exponents")
    return LaurentPoly({j: binom(a, j) for j in range(a + 1)}, var=var)


class TruncSeries:
    """Laurent series known exactly up to (and including) ``truncation_order``.

    Coefficients at exponents above the order are *unknown*, not zero;
    asking for one raises :class:`UnderdeterminedError`.  Arithmetic tracks
    the tightest truncation order valid for the result.
    """

    __slots__ = ("coeffs", "lowest_exponent", "truncation_order", "var")

    def __init__(self, coeffs, lowest_exponent: int, truncation_order: int, var: str = "x"):
        if truncation_order < lowest_exponent - 1:
            # allow the "empty window" degenerate case exactly one notch below
            raise ValueError("truncation_order below lowest_exponent")
        raw = {int(e): as_scalar(c) for e, c in dict(coeffs).items()}
        for e in raw:
            if not (lowest_exponent <= e <= truncation_order):
                raise ValueError(f"stored exponent {e} outside [{lowest_exponent}, {truncation_order}]")
        self.coeffs = _clean(raw)
        self.lowest_exponent = lowest_exponent
        self.truncation_order = truncation_order
        self.var = var

    @classmethod
    def from_poly(cls, p: LaurentPoly, truncation_order: int) -> "TruncSeries":
        low = min(p.coeffs) if p.coeffs else 0
        keep = {e: c for e, c in p.coeffs.items() if e <= truncation_order}
        return cls(keep, min(low, truncation_order), truncation_order, var=p.var)

    def coefficient(self, exponent: int) -> Fraction:
        if exponent > self.truncation_order:
            raise UnderdeterminedError(
                f"coefficient of {self.var}^{exponent} beyond truncation order {self.truncation_order}"
            )
        return self.coeffs.get(exponent, ZERO)

    def residue(self) -> Fraction:
        return self.coefficient(-1)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.truncation_order, other.truncation_order)
        low = min(self.lowest_exponent, other.lowest_exponent)
        out: dict = {}
        for e, c in self.coeffs.items():
            if e <= order:
                out[e] = out.get(e, ZERO) + c
        for e, c in other.coeffs.items():
            if e <= order:
                out[e] = out.get(e, ZERO) + c
        return TruncSeries(out, low, order, var=self.var)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries({e: -c for e, c in self.coeffs.items()},
                           self.lowest_exponent, self.truncation_order, var=self.var)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            # c_e of the product is fully determined iff every split e = e1+e2
            # with e1, e2 in the known windows has both factors known:
            order = min(self.truncation_order + other.lowest_exponent,
                        other.truncation_order + self.lowest_exponent)
            low = self.lowest_exponent + other.lowest_exponent
            out: dict = {}
            for e1, c1 in self.coeffs.items():
                for e2, c2 in other.coeffs.items():
                    e = e1 + e2
                    if e <= order:
                        out[e] = out.get(e, ZERO) + c1 * c2
            return TruncSeries(out, low, order, var=self.var)
        if isinstance(other, LaurentPoly):
            return self * TruncSeries.from_poly(
                other, (max(other.coeffs) if other.coeffs else 0))
        c = as_scalar(other)
        return TruncSeries({e: c0 * c for e, c0 in self.coeffs.items()},
                           self.lowest_exponent, self.truncation_order, var=self.var)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncSeries":
        return TruncSeries({e + k: c for e, c in self.coeffs.items()},
                           self.lowest_exponent + k, self.truncation_order + k, var=self.var)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return (self.coeffs == other.coeffs
                    and self.truncation_order == other.truncation_order)
        return NotImplemented

    def __repr__(self):
        body = repr(LaurentPoly(self.coeffs, var=self.var))
        return f"{body} + O({self.var}^{self.truncation_order + 1})"


def binom_expand(a, trunc: int, var: str = "x") -> TruncSeries:
    """(1+x)**a as a truncated binomial series, exact through x**trunc."""
    if trunc < 0:
        raise ValueError("binom_expand: trunc must be >= 0")
    a = as_scalar(a)
    return TruncSeries({j: binom(a, j) for j in range(trunc + 1)}, 0, trunc, var=var)


def residue(s) -> Fraction:
    """Coefficient of x**(-1); raises on an underdetermined TruncSeries."""
    if isinstance(s, (LaurentPoly, TruncSeries)):
        return s.residue()
    raise TypeError(f"residue: unsupported operand {type(s).__name__}")


class BivariatePoly:
    """Sparse Laurent polynomial in two variables, keyed by exponent pairs."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        raw = {} if coeffs is None else {
            (int(e1), int(e2)): as_scalar(c) for (e1, e2), c in dict(coeffs).items()
        }
        self.coeffs = _clean(raw)

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff=ONE) -> "BivariatePoly":
        return cls({(e1, e2): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) + c
        return BivariatePoly(out)

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, ZERO) - c
        return BivariatePoly(out)

    def __mul__(self, other):
        if isinstance(other, BivariatePoly):
            out: dict = {}
            for (a1, a2), c1 in self.coeffs.items():
                for (b1, b2), c2 in other.coeffs.items():
                    k = (a1 + b1, a2 + b2)
                    out[k] = out.get(k, ZERO) + c1 * c2
            return BivariatePoly(out)
        c = as_scalar(other)
        return BivariatePoly({k: c0 * c for k, c0 in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, BivariatePoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{c}*x1^{e1}*x2^{e2}" for (e1, e2), c in sorted(self.coeffs.items())
        )
