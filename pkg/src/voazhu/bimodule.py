"""The two-sided quotient A_N(W) = W/O_N(W) of a lower-bounded module.

Left and right actions of the algebra on W:

    u *_N w = sum_m (-1)^m C(m+N,N) Res_x x^(-N-m-1) Y_W((1+x)^(L(0)_s+N) u, x) w
    w *_N u = sum_m (-1)^m C(m+N,N) Res_x x^(-N-m-1) Y_WV((1+x)^(L(0)_s+N) w, x) u

with O_N(W) spanned by (L(-1) + L(0)_s) w and by
u o_N w = Res_x x^(-2N-2) Y_W((1+x)^(L(0)_s+N) u, x) w.  The alternative
right action *_N' uses only Y_W modes and agrees with *_N on the quotient.
All congruences asserted about these actions are certified through the
windowed membership oracle; the checks here assemble the exact difference
vectors and ask for a witness.
"""

from __future__ import annotations

from fractions import Fraction

from .basis import GradedVector, accumulate
from .formal import binom
from .linalg import ModuleWindow, WindowSubspace
from .modules import GenModule, VOAlgebra
from .ops import ywv_mode
from .zhu import (CERTIFIED, INCONCLUSIVE, MembershipCert, circ_residue,
                  lp_element, star_product, weighted_residue_modes)


def weighted_residue_ywv(module: GenModule, w: GradedVector, u: GradedVector,
                         binom_exponent_offset, x_power: int) -> GradedVector:
    """Res_x x^(x_power) Y_WV((1+x)^(L(0)_s + offset) w, x) u, exactly."""
    acc: dict = {}
    for wt, comp in w.homogeneous_components().items():
        a = wt + binom_exponent_offset
        j_top = module.mode_vanishing_bound(u, comp) - x_power
        for j in range(0, max(0, j_top)):
            c = binom(a, j)
            if c == 0:
                continue
            term = ywv_mode(module, comp, j + x_power, u)
            if term.is_zero():
                continue
            accumulate(acc, term, c)
    return GradedVector(module, acc)


def left_star(module: GenModule, u: GradedVector, w: GradedVector, N: int) -> GradedVector:
    """u *_N w (left action of the algebra on the module)."""
    return star_product(module, u, w, N)


def right_star(module: GenModule, w: GradedVector, u: GradedVector, N: int) -> GradedVector:
    """w *_N u (right action, through the module-to-algebra operator)."""
    out = module.zero()
    for m in range(N + 1):
        c = Fraction((-1) ** m) * binom(Fraction(m + N), N)
        out = out + weighted_residue_ywv(module, w, u, N, -N - m - 1) * c
    return out


def right_star_alt(module: GenModule, w: GradedVector, u: GradedVector, N: int) -> GradedVector:
    """The alternative right action w *_N' u, using only Y_W modes."""
    out = module.zero()
    sign = Fraction((-1) ** N)
    for m in range(N + 1):
        c = sign * binom(Fraction(m + N), N)
        out = out + weighted_residue_modes(module, u, w, m - 1, -N - m - 1) * c
    return out


def circ_w(module: GenModule, u: GradedVector, w: GradedVector, N: int,
           p: int = 0, q: int = 0) -> GradedVector:
    """u o_N w, or its deep-power variant Res_x x^(-2N-2-p) (1+x)^(L(0)_s+N+q)."""
    if p < q or q < 0:
        raise ValueError("deep-power variant needs p >= q >= 0")
    return weighted_residue_modes(module, u, w, N + q, -2 * N - 2 - p)


def circ_wv(module: GenModule, w: GradedVector, u: GradedVector, N: int,
            p: int = 0, q: int = 0) -> GradedVector:
    """w o_N u (membership in O_N(W) is a theorem, certified in the tests)."""
    if p < q or q < 0:
        raise ValueError("deep-power variant needs p >= q >= 0")
    return weighted_residue_ywv(module, w, u, N + q, -2 * N - 2 - p)


class BimoduleContext:
    """Windowed O_N(W) data for a module W over its algebra.

    ``families`` chooses which spanning families are enumerated: "lp" for
    the (L(-1) + L(0)_s) w elements and "circ" for the residue elements
    u o_N w.  The full quotient uses both; the ideal that the induced map
    of an intertwining operator provably kills is the "circ" span alone
    (the lowest-weight family is *not* killed in general; see the
    discrepancy notes in the tests).
    """

    def __init__(self, module: GenModule, N: int, depth: int,
                 include_deep_powers: bool = False,
                 families: tuple = ("lp", "circ")):
        self.module = module
        self.algebra: VOAlgebra = module.algebra
        self.N = N
        self.depth = depth
        self.include_deep_powers = include_deep_powers
        self.families = tuple(families)
        self.window = ModuleWindow(module, depth)
        self.subspace = WindowSubspace(self.window, track=True)
        self.labels: list[str] = []
        self._enumerate()

    def _enumerate(self) -> None:
        mod, alg, N, D = self.module, self.algebra, self.N, self.depth
        if "lp" in self.families:
            for b in range(0, D):
                for w_bv in mod.basis_at_depth(b):
                    w = GradedVector(mod, {w_bv: Fraction(1)})
                    self._add(lp_element(mod, w), f"lp[{w_bv}]")
        if "circ" not in self.families:
            return
        for a in range(1, D - 2 * N):
            for b in range(0, D - a - 2 * N):
                # u o_N w tops out at depth wt u + depth w + 2N + 1
                for u_bv in alg.basis_at_depth(a):
                    u = GradedVector(alg, {u_bv: Fraction(1)})
                    for w_bv in mod.basis_at_depth(b):
                        w = GradedVector(mod, {w_bv: Fraction(1)})
                        self._add(circ_w(mod, u, w, N), f"circ[{u_bv};{w_bv}]")
                        if self.include_deep_powers:
                            for p in range(1, D - 2 * N - 1 - a - b + 1):
                                self._add(circ_w(mod, u, w, N, p=p, q=0),
                                          f"deep[{u_bv};{w_bv};p={p}]")

    def _add(self, gv: GradedVector, label: str) -> None:
        self.subspace.add_generator(gv)
        self.labels.append(label)

    def membership(self, x: GradedVector) -> MembershipCert:
        witness = self.subspace.witness(x)
        if witness is None:
            return MembershipCert(INCONCLUSIVE, self.depth)
        if __debug__:
            rebuilt = self.module.zero()
            for i, c in witness.items():
                rebuilt = rebuilt + self.subspace.gens[i] * c
            assert rebuilt == x, "bimodule membership witness failed to reproduce the vector"
        labels = tuple(self.labels[i] for i in witness)
        return MembershipCert(CERTIFIED, self.depth, witness, labels)

    # window-checked action shorthands -------------------------------------

    def left(self, u: GradedVector, w: GradedVector) -> GradedVector:
        out = left_star(self.module, u, w, self.N)
        self.window.row_of(out)
        return out

    def right(self, w: GradedVector, u: GradedVector) -> GradedVector:
        out = right_star(self.module, w, u, self.N)
        self.window.row_of(out)
        return out

    def right_alt(self, w: GradedVector, u: GradedVector) -> GradedVector:
        out = right_star_alt(self.module, w, u, self.N)
        self.window.row_of(out)
        return out

    def quotient_dims(self) -> list:
        return self.subspace.quotient_dims_by_depth()


_bimodule_cache: dict = {}


def bimodule_context(module: GenModule, N: int, depth: int,
                     include_deep_powers: bool = False,
                     families: tuple = ("lp", "circ")) -> BimoduleContext:
    key = (module.module_id, N, depth, include_deep_powers, tuple(families))
    ctx = _bimodule_cache.get(key)
    if ctx is None or ctx.module is not module:
        ctx = BimoduleContext(module, N, depth, include_deep_powers, families)
        _bimodule_cache[key] = ctx
    return ctx


def intertwiner_ideal_context(module: GenModule, N: int, depth: int) -> BimoduleContext:
    """Windowed span of the residue family alone - the relations any
    intertwining operator's induced map is guaranteed to annihilate."""
    return bimodule_context(module, N, depth, families=("circ",))


def certify_bimodule_membership(module: GenModule, N: int, x: GradedVector,
                                depth: int, retries=(2, 4)) -> MembershipCert:
    cert = bimodule_context(module, N, depth).membership(x)
    for extra in retries:
        if cert.certified:
            return cert
        cert = bimodule_context(module, N, depth + extra).membership(x)
    return cert


# --- assembled congruence checks ---------------------------------------------

def action_swap_defect(module: GenModule, u: GradedVector, w: GradedVector,
                       N: int, mirrored: bool = False) -> GradedVector:
    """Left action minus its rewriting through the other operator family.

    Plain:      u *_N w - sum_m C(m+N,N)(-1)^N Res_x x^(-N-m-1)
                          Y_WV((1+x)^(L(0)_s+m-1) w, x) u
    Mirrored:   w *_N u - w *_N' u.
    Both lie in O_N(W).
    """
    if mirrored:
        return right_star(module, w, u, N) - right_star_alt(module, w, u, N)
    out = left_star(module, u, w, N)
    sign = Fraction((-1) ** N)
    for m in range(N + 1):
        c = sign * binom(Fraction(m + N), N)
        out = out - weighted_residue_ywv(module, w, u, m - 1, -N - m - 1) * c
    return out


def deep_residue_element(module: GenModule, u: GradedVector, w: GradedVector,
                         N: int, p: int = 0, q: int = 0,
                         mirrored: bool = False) -> GradedVector:
    """Res_x x^(-2N-2-p) of either operator family; a member of O_N(W)."""
    if mirrored:
        return circ_wv(module, w, u, N, p=p, q=q)
    return circ_w(module, u, w, N, p=p, q=q)


def commutator_defect(module: GenModule, u: GradedVector, w: GradedVector,
                      N: int, mirrored: bool = False) -> GradedVector:
    """u *_N w - w *_N u - Res_x Y_W((1+x)^(L(0)_s - 1) u, x) w (or mirrored)."""
    if mirrored:
        return (right_star(module, w, u, N) - left_star(module, u, w, N)
                - weighted_residue_ywv(module, w, u, -1, 0))
    return (left_star(module, u, w, N) - right_star(module, w, u, N)
            - weighted_residue_modes(module, u, w, -1, 0))


AXIOM_IDS = (
    "lw_left",        # (L(-1)w + L(0)_s w) *_N u in O_N(W)
    "lw_right",       # u *_N (L(-1)w + L(0)_s w) in O_N(W)
    "circ_left",      # (u o_N w) *_N v in O_N(W)
    "circ_right",     # v *_N (u o_N w) in O_N(W)
    "ideal_left",     # (L(-1)u + L(0)u) *_N w in O_N(W)
    "ideal_right",    # w *_N (L(-1)u + L(0)u) in O_N(W)
    "ideal_circ_left",   # (u o_N,1 v) *_N w in O_N(W)
    "ideal_circ_right",  # w *_N (v o_N,1 u) in O_N(W)
    "assoc_left",     # u *_N (v *_N w) == (u *_N v) *_N w mod O_N(W)
    "assoc_right",    # w *_N (v *_N u) == (w *_N v) *_N u mod O_N(W)
    "actions_commute",  # (u *_N w) *_N v == u *_N (w *_N v) mod O_N(W)
    "right_agreement",  # w *_N u == w *_N' u mod O_N(W)
)


def axiom_defect(module: GenModule, axiom_id: str, u: GradedVector,
                 v: GradedVector, w: GradedVector, N: int) -> GradedVector:
    """The exact vector whose ideal membership expresses the named axiom."""
    alg = module.algebra
    if axiom_id == "lw_left":
        return right_star(module, lp_element(module, w), u, N)
    if axiom_id == "lw_right":
        return left_star(module, u, lp_element(module, w), N)
    if axiom_id == "circ_left":
        return right_star(module, circ_w(module, u, w, N), v, N)
    if axiom_id == "circ_right":
        return left_star(module, v, circ_w(module, u, w, N), N)
    if axiom_id == "ideal_left":
        return left_star(module, lp_element(alg, u), w, N)
    if axiom_id == "ideal_right":
        return right_star(module, w, lp_element(alg, u), N)
    if axiom_id == "ideal_circ_left":
        return left_star(module, circ_residue(alg, u, v, N, 1), w, N)
    if axiom_id == "ideal_circ_right":
        return right_star(module, w, circ_residue(alg, v, u, N, 1), N)
    if axiom_id == "assoc_left":
        return (left_star(module, u, left_star(module, v, w, N), N)
                - left_star(module, star_product(alg, u, v, N), w, N))
    if axiom_id == "assoc_right":
        return (right_star(module, w, star_product(alg, v, u, N), N)
                - right_star(module, right_star(module, w, v, N), u, N))
    if axiom_id == "actions_commute":
        return (right_star(module, left_star(module, u, w, N), v, N)
                - left_star(module, u, right_star(module, w, v, N), N))
    if axiom_id == "right_agreement":
        return action_swap_defect(module, u, w, N, mirrored=True)
    raise ValueError(f"unknown axiom id {axiom_id!r}")


def axiom_window_depth(module: GenModule, axiom_id: str, u, v, w, N: int,
                       margin: int = 2) -> int:
    """A window depth guaranteed to contain the axiom's defect vector."""
    du = max((bv.depth for bv in u.terms), default=0)
    dv = max((bv.depth for bv in v.terms), default=0)
    dw = max((bv.depth for bv in w.terms), default=0)
    two_sided = {"assoc_left", "assoc_right", "actions_commute",
                 "circ_left", "circ_right", "ideal_circ_left", "ideal_circ_right"}
    base = du + dv + dw + (4 * N if axiom_id in two_sided else 2 * N)
    extra = 2 if axiom_id.startswith(("circ", "ideal_circ")) else 1
    return base + extra + margin


def check_axiom(module: GenModule, axiom_id: str, u, v, w, N: int,
                margin: int = 2, retries=(2, 4)) -> MembershipCert:
    defect = axiom_defect(module, axiom_id, u, v, w, N)
    depth = max(axiom_window_depth(module, axiom_id, u, v, w, N, margin),
                defect.max_depth() + 1)
    return certify_bimodule_membership(module, N, defect, depth, retries)


def check_bimodule_axioms(module: GenModule, u, v, w, N: int,
                          margin: int = 2, retries=(2, 4)) -> list:
    """Run every axiom on one sample; returns a list of report entries."""
    report = []
    for axiom_id in AXIOM_IDS:
        cert = check_axiom(module, axiom_id, u, v, w, N, margin, retries)
        report.append({
            "axiom_id": axiom_id,
            "inputs": {"u": repr(u), "v": repr(v), "w": repr(w), "N": N},
            "status": cert.status,
            "window_D": cert.window_depth,
            "witness_size": cert.witness_size(),
        })
    return report
