"""Lower-bounded graded modules presented by generator-mode action rules.

A module knows how its generator modes (the Heisenberg current or the
Virasoro field) act on canonical basis monomials; every composite mode
action is derived from those base rules through the iterate formula

    (a_(m) u)_(n) w = sum_{i>=0} (-1)^i C(m,i)
                      [ a_(m-i) u_(n+i) w  -  (-1)^m u_(m+n-i) a_(i) w ],

with both inner sums finite because the module is lower bounded.  Instances
are immutable after construction; the per-instance mode caches only ever
map a key to one value, so concurrent readers always observe identical
results.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .basis import BasisVector, GradedVector, accumulate, canonical_modes, sort_key
from .errors import UnknownGeneratorError
from .formal import as_scalar, binom


@lru_cache(maxsize=None)
def partitions(total: int, min_part: int = 1, max_part: int | None = None) -> tuple:
    """All non-increasing tuples of integers >= min_part summing to total."""
    if total == 0:
        return ((),)
    if total < min_part:
        return ()
    cap = total if max_part is None else min(max_part, total)
    out = []
    for first in range(cap, min_part - 1, -1):
        for rest in partitions(total - first, min_part, first):
            out.append((first,) + rest)
    return tuple(out)


class GenModule:
    """Base class: a lower-bounded generalized module in a single weight coset."""

    def __init__(self, module_id: str, lowest_weight, algebra=None, min_part: int = 1):
        self.module_id = module_id
        self.lowest_weight = as_scalar(lowest_weight)
        self.algebra = algebra if algebra is not None else self
        self.min_part = min_part
        self._mode_cache: dict = {}
        self._gen_cache: dict = {}

    # --- presentation supplied by subclasses -------------------------------

    def generator_tags(self) -> dict:
        """tag -> weight of the generating field."""
        raise NotImplementedError

    def gen_action_basis(self, tag: str, p: int, bv: BasisVector) -> GradedVector:
        """Action of the generator mode with physics index p on one monomial."""
        raise NotImplementedError

    def kind(self) -> str:
        raise NotImplementedError

    def params(self) -> dict:
        raise NotImplementedError

    # --- basis bookkeeping --------------------------------------------------

    def zero(self) -> GradedVector:
        return GradedVector(self)

    def lw(self) -> GradedVector:
        """The lowest weight vector as a GradedVector."""
        return GradedVector(self, {BasisVector(self.module_id, ()): Fraction(1)})

    def basis_vector(self, modes) -> BasisVector:
        bv = BasisVector(self.module_id, canonical_modes(modes))
        self._validate(bv)
        return bv

    def monomial(self, modes, coeff=1) -> GradedVector:
        return GradedVector(self, {self.basis_vector(modes): as_scalar(coeff)})

    def _validate(self, bv: BasisVector) -> None:
        tags = self.generator_tags()
        for g, m in bv.modes:
            if g not in tags:
                raise UnknownGeneratorError(f"module {self.module_id} has no generator {g!r}")
            if -m < self.min_part:
                raise ValueError(f"mode {g}({m}) below the module's minimal lowering {self.min_part}")

    def basis_at_depth(self, d: int) -> list:
        tag = next(iter(self.generator_tags()))
        return [
            BasisVector(self.module_id, tuple((tag, -part) for part in parts))
            for parts in partitions(d, self.min_part)
        ]

    def dim_at_depth(self, d: int) -> int:
        return len(partitions(d, self.min_part))

    def weight_of(self, bv: BasisVector) -> Fraction:
        return self.lowest_weight + bv.depth

    def l0n(self, gv: GradedVector) -> GradedVector:
        """Nilpotent part of L(0); identically zero for all shipped instances."""
        return self.zero()

    def descriptor(self, depth_max: int | None = None) -> dict:
        d = {"module_id": self.module_id, "kind": self.kind(), "params": self.params()}
        if depth_max is not None:
            d["depth_max"] = depth_max
        return d

    # --- generator action, linear extension --------------------------------

    def gen_action(self, tag: str, p: int, w) -> GradedVector:
        if isinstance(w, BasisVector):
            key = (tag, p, w)
            hit = self._gen_cache.get(key)
            if hit is None:
                hit = self.gen_action_basis(tag, p, w)
                self._gen_cache[key] = hit
            return hit
        acc: dict = {}
        for bv, c in w.terms.items():
            accumulate(acc, self.gen_action(tag, p, bv), c)
        return GradedVector(self, acc)

    # --- composite mode action ----------------------------------------------

    def mode_action(self, u: GradedVector, n: int, w: GradedVector) -> GradedVector:
        """(Y_W)_n(u) w for u in the algebra, computed exactly."""
        if u.module.module_id != self.algebra.module_id:
            raise ValueError("mode_action: u must live in the algebra")
        n = int(n)
        acc: dict = {}
        for u_bv, cu in u.terms.items():
            for w_bv, cw in w.terms.items():
                accumulate(acc, self._mode_basis(u_bv, n, w_bv), cu * cw)
        return GradedVector(self, acc)

    def _mode_basis(self, u_bv: BasisVector, n: int, w_bv: BasisVector) -> GradedVector:
        key = (u_bv, n, w_bv)
        hit = self._mode_cache.get(key)
        if hit is not None:
            return hit
        out = self._mode_basis_compute(u_bv, n, w_bv)
        if __debug__ and out.terms:
            want = u_bv.depth - n - 1 + w_bv.depth
            assert all(bv.depth == want for bv in out.terms), \
                f"weight bookkeeping broken for Y_{n}({u_bv}) on {w_bv}"
        self._mode_cache[key] = out
        return out

    def _mode_basis_compute(self, u_bv: BasisVector, n: int, w_bv: BasisVector) -> GradedVector:
        if not u_bv.modes:
            # vacuum: Y_(-1)(1) = id, all other modes vanish
            if n == -1:
                return GradedVector(self, {w_bv: Fraction(1)})
            return self.zero()
        tag, p0 = u_bv.modes[0]
        gen_wt = self.algebra.generator_tags()[tag]
        m = p0 + gen_wt - 1  # algebra mode index of the leading generator factor
        rest = BasisVector(self.algebra.module_id, u_bv.modes[1:])
        rest_wt = rest.depth
        acc: dict = {}

        # first sum: a_(m-i) u_(n+i) w, truncated by lower-boundedness of W
        i_top = rest_wt + w_bv.depth - n - 1
        if m >= 0:
            i_top = min(i_top, m)
        for i in range(0, i_top + 1):
            c = binom(Fraction(m), i) * ((-1) ** i)
            if c == 0:
                continue
            inner = self._mode_basis(rest, n + i, w_bv)
            if inner.is_zero():
                continue
            accumulate(acc, self.gen_action(tag, (m - i) - gen_wt + 1, inner), c)

        # second sum: u_(m+n-i) a_(i) w, truncated by a_(i) w = 0 for deep i
        sign = 1 if m % 2 else -1  # -(-1)**m
        i_top2 = gen_wt - 1 + w_bv.depth
        for i in range(0, i_top2 + 1):
            c = binom(Fraction(m), i) * ((-1) ** i) * sign
            if c == 0:
                continue
            aw = self.gen_action(tag, i - gen_wt + 1, w_bv)
            if aw.is_zero():
                continue
            for bv2, c2 in aw.terms.items():
                accumulate(acc, self._mode_basis(rest, m + n - i, bv2), c * c2)
        return GradedVector(self, acc)

    # --- truncation helpers --------------------------------------------------

    def mode_vanishing_bound(self, u: GradedVector, w: GradedVector) -> int:
        """Smallest b with mode_action(u, n, w) = 0 for all n >= b."""
        if u.is_zero() or w.is_zero():
            return 0
        top = max(u_bv.depth - 1 + w_bv.depth
                  for u_bv in u.terms for w_bv in w.terms)
        return top + 1

    def __repr__(self):
        return f"<{type(self).__name__} {self.module_id}>"


class VOAlgebra(GenModule):
    """A vertex operator algebra, presented as a module over itself."""

    def __init__(self, module_id: str, central_charge, min_part: int = 1):
        super().__init__(module_id, 0, algebra=None, min_part=min_part)
        self.central_charge = as_scalar(central_charge)

    def vacuum_bv(self) -> BasisVector:
        return BasisVector(self.module_id, ())

    def one(self) -> GradedVector:
        return self.lw()

    def omega(self) -> GradedVector:
        raise NotImplementedError

    def virasoro_mode(self, module: GenModule, k: int, w: GradedVector) -> GradedVector:
        """L(k) acting on a vector of any module over this algebra."""
        return module.mode_action(self.omega(), k + 1, w)


def module_weight(gv: GradedVector) -> Fraction:
    return gv.weight()


def homogeneous_pieces(gv: GradedVector):
    """Iterate (weight, component) pairs of a vector, lowest weight first."""
    return sorted(gv.homogeneous_components().items())


def basis_window(module: GenModule, depth: int) -> list:
    """All basis monomials of depth 0..depth in canonical order."""
    out = []
    for d in range(depth + 1):
        out.extend(sorted(module.basis_at_depth(d), key=sort_key))
    return out
