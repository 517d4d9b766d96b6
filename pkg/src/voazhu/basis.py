"""Canonical normal-ordered basis monomials and sparse graded vectors.

A :class:`BasisVector` is a string of lowering modes applied to the lowest
weight vector of a module, in canonical order (most negative mode first,
ties broken by generator tag).  A :class:`GradedVector` is a finite rational
linear combination of basis vectors of a single module; zero coefficients
are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .formal import ZERO, as_scalar


class BasisVector(NamedTuple):
    module_id: str
    modes: tuple  # tuple of (generator tag, negative mode index), canonical order

    @property
    def depth(self) -> int:
        """Total lowering below the lowest weight vector."""
        return -sum(m for _, m in self.modes)

    def partition(self) -> tuple:
        """The multiset of lowering amounts, largest first."""
        return tuple(-m for _, m in self.modes)

    def __str__(self):
        if not self.modes:
            return "lw"
        return " ".join(f"{g}({m})" for g, m in self.modes)


def canonical_modes(modes: Iterable) -> tuple:
    """Sort raw (tag, mode) pairs into canonical normal order."""
    pairs = [(str(g), int(m)) for g, m in modes]
    for g, m in pairs:
        if m >= 0:
            raise ValueError(f"basis modes must be negative, got {g}({m})")
    pairs.sort(key=lambda p: (p[1], p[0]))
    return tuple(pairs)


def sort_key(bv: BasisVector):
    """Total order on basis vectors: by depth, then by mode string."""
    return (bv.depth, bv.modes)


class GradedVector:
    """Sparse rational linear combination of basis vectors of one module."""

    __slots__ = ("module", "terms")

    def __init__(self, module, terms=None):
        self.module = module
        clean = {}
        if terms:
            for bv, c in terms.items():
                c = as_scalar(c)
                if c != 0:
                    if bv.module_id != module.module_id:
                        raise ValueError(
                            f"basis vector {bv} belongs to {bv.module_id}, not {module.module_id}"
                        )
                    clean[bv] = c
        self.terms = clean

    # --- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, bv: BasisVector) -> Fraction:
        return self.terms.get(bv, ZERO)

    def max_depth(self) -> int:
        return max((bv.depth for bv in self.terms), default=0)

    def weights(self) -> set:
        h = self.module.lowest_weight
        return {h + bv.depth for bv in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> Fraction:
        """Weight of a homogeneous vector (raises if mixed or zero)."""
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError(f"vector is not homogeneous: weights {sorted(ws)}")
        return ws.pop()

    def homogeneous_components(self) -> dict:
        """Split into weight -> homogeneous GradedVector."""
        h = self.module.lowest_weight
        parts: dict = {}
        for bv, c in self.terms.items():
            parts.setdefault(h + bv.depth, {})[bv] = c
        return {w: GradedVector(self.module, t) for w, t in sorted(parts.items())}

    # --- arithmetic -------------------------------------------------------

    def __add__(self, other: "GradedVector") -> "GradedVector":
        if other.module is not self.module and other.module.module_id != self.module.module_id:
            raise ValueError("cannot add vectors of different modules")
        out = dict(self.terms)
        for bv, c in other.terms.items():
            s = out.get(bv, ZERO) + c
            if s == 0:
                out.pop(bv, None)
            else:
                out[bv] = s
        return GradedVector(self.module, out)

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def __neg__(self) -> "GradedVector":
        return GradedVector(self.module, {bv: -c for bv, c in self.terms.items()})

    def __mul__(self, scalar) -> "GradedVector":
        c = as_scalar(scalar)
        if c == 0:
            return GradedVector(self.module)
        return GradedVector(self.module, {bv: c0 * c for bv, c0 in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedVector):
            return (self.module.module_id == other.module.module_id
                    and self.terms == other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.module.module_id, tuple(sorted(self.terms.items(), key=lambda t: sort_key(t[0])))))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for bv in sorted(self.terms, key=sort_key):
            c = self.terms[bv]
            parts.append(f"({c})*[{bv}]")
        return " + ".join(parts)


def accumulate(acc: dict, gv: GradedVector, scale=1) -> None:
    """In-place ``acc += scale * gv`` on a plain term dictionary."""
    c = as_scalar(scale)
    if c == 0 or gv.is_zero():
        return
    for bv, c0 in gv.terms.items():
        s = acc.get(bv, ZERO) + c0 * c
        if s == 0:
            acc.pop(bv, None)
        else:
            acc[bv] = s
