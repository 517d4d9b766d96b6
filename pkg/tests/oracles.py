"""Independent oracles the tests check library results against.

Each oracle recomputes a quantity along a different route than the library
takes: series bookkeeping instead of closed-form binomial sums, direct
normal-ordered quadratic expressions instead of the iterate recursion,
dense Fraction elimination instead of fraction-free sparse elimination.
Expected values frozen in the test files were produced by these.
"""

from fractions import Fraction

from voazhu import binom


def series_modes(module, u, w, lo):
    """Nonzero modes {n: Y_n(u)w} for n >= lo (the series is not lower bounded)."""
    out = {}
    for n in range(lo, module.mode_vanishing_bound(u, w)):
        v = module.mode_action(u, n, w)
        if not v.is_zero():
            out[n] = v
    return out


def residue_oracle(module, u, w, exponent_offset, x_power):
    """Res_x x^(x_power) (1+x)^(wt u + offset) Y(u,x) w by series bookkeeping.

    Multiplies out the two series coefficientwise and extracts the x^(-1)
    coefficient; no closed-form reindexed sums.
    """
    total = module.zero()
    for wt, comp in u.homogeneous_components().items():
        a = wt + exponent_offset
        # term x^j * x^(x_power) * x^(-n-1) contributes iff j + x_power - n - 1 = -1
        modes = series_modes(module, comp, w, lo=x_power)
        for n, vec in modes.items():
            c = binom(a, n - x_power)
            if c != 0:
                total = total + vec * c
    return total


def star_oracle(module, u, w, N):
    total = module.zero()
    for m in range(N + 1):
        c = Fraction((-1) ** m) * binom(Fraction(m + N), N)
        total = total + residue_oracle(module, u, w, N, -N - m - 1) * c
    return total


def ywv_series_oracle(module, w, u, n):
    """Coefficient of x^(-n-1) in e^{xL(-1)} Y(u,-x) w via explicit series."""
    omega = module.algebra.omega()
    acc = module.zero()
    # Y(u,-x) w = sum_m Y_m(u) w (-1)^(m+1) x^(-m-1); apply exp(x L(-1)) termwise
    modes = series_modes(module, u, w, lo=n)
    for m, vec in modes.items():
        j = m - n  # x^j from the exponential must bring x^(-m-1) up to x^(-n-1)
        if j < 0:
            continue
        fact = Fraction(1)
        for t in range(2, j + 1):
            fact *= t
        cur = vec
        for _ in range(j):
            cur = module.mode_action(omega, 0, cur)
        acc = acc + cur * (Fraction((-1) ** (m + 1)) / fact)
    return acc


def sugawara_mode(module, k, w):
    """L(k) on a Heisenberg-algebra module, from the quadratic expression

        L(k) = (1/2) sum_{j} :alpha(j) alpha(k-j):

    applied directly with normal ordering, truncated by the module depth.
    """
    bound = w.max_depth() + abs(k) + 2
    acc = module.zero()
    for j in range(-bound, bound + 1):
        a, b = j, k - j
        lo, hi = (a, b) if a <= b else (b, a)  # normal order: creation first
        step = module.gen_action("a", hi, w)
        if step.is_zero():
            continue
        step = module.gen_action("a", lo, step)
        if step.is_zero():
            continue
        acc = acc + step * Fraction(1, 2)
    return acc


def dense_rref(rows, ncols):
    """Plain dense Fraction Gauss-Jordan; returns (rank, pivot columns)."""
    mat = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]
    rank = 0
    pivots = []
    for col in range(ncols):
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        pv = mat[rank][col]
        mat[rank] = [x / pv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        pivots.append(col)
        rank += 1
    return rank, pivots


class LogLaurent:
    """Formal sums c_{n,k} x^(-n-1) (log x)^k for the derivative-rule oracle."""

    def __init__(self, coeffs=None):
        self.coeffs = dict(coeffs or {})

    def differentiate(self):
        out = {}
        for (n, k), c in self.coeffs.items():
            # d/dx [x^(-n-1) (log x)^k] = (-n-1) x^(-n-2) log^k + k x^(-n-2) log^(k-1)
            key1 = (n + 1, k)
            out[key1] = out.get(key1, Fraction(0)) + c * (-n - 1)
            if k >= 1:
                key2 = (n + 1, k - 1)
                out[key2] = out.get(key2, Fraction(0)) + c * k
        return LogLaurent({k: v for k, v in out.items() if v != 0})

    def coefficient(self, n, k):
        return self.coeffs.get((n, k), Fraction(0))
