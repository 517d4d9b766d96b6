"""Text and JSON forms for scalars, monomials, vectors, and modules.

Monomial grammar: whitespace-separated factors ``tag(mode)`` or
``tag(mode)^power`` applied to the lowest weight vector, e.g.
``a(-1)^2 a(-3)`` or ``L(-2) L(-2)``; the empty string, ``1`` and ``lw``
all denote the lowest weight vector itself.  Scalars print as ``p`` or
``p/q``.  Element files are JSON lists of [monomial, scalar] pairs.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .basis import BasisVector, GradedVector, sort_key
from .formal import as_scalar
from .instances import fock, heisenberg_voa, verma, virasoro_voa
from .modules import GenModule

_FACTOR = re.compile(r"^([A-Za-z]+)\((-\d+)\)(?:\^(\d+))?$")


def scalar_str(c) -> str:
    c = as_scalar(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def monomial_str(bv: BasisVector) -> str:
    if not bv.modes:
        return "lw"
    out = []
    run_tag = run_mode = None
    count = 0
    for g, m in bv.modes:
        if (g, m) == (run_tag, run_mode):
            count += 1
            continue
        if run_tag is not None:
            out.append(f"{run_tag}({run_mode})" + (f"^{count}" if count > 1 else ""))
        run_tag, run_mode, count = g, m, 1
    out.append(f"{run_tag}({run_mode})" + (f"^{count}" if count > 1 else ""))
    return " ".join(out)


def parse_monomial(module: GenModule, text: str) -> BasisVector:
    text = text.strip()
    if text in ("", "1", "lw"):
        return BasisVector(module.module_id, ())
    modes = []
    for token in text.split():
        m = _FACTOR.match(token)
        if not m:
            raise ValueError(f"bad monomial factor {token!r}")
        tag, mode, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        modes.extend([(tag, mode)] * power)
    return module.basis_vector(modes)


def vector_to_pairs(gv: GradedVector) -> list:
    return [[monomial_str(bv), scalar_str(c)]
            for bv, c in sorted(gv.terms.items(), key=lambda t: sort_key(t[0]))]


def pairs_to_vector(module: GenModule, pairs) -> GradedVector:
    out = module.zero()
    for mono, coeff in pairs:
        out = out + GradedVector(module, {parse_monomial(module, mono): as_scalar(coeff)})
    return out


def parse_module_spec(spec: str) -> GenModule:
    """Parse CLI module notation.

    heisenberg | fock:LAMBDA | virasoro:c=C | verma:c=C,h=H
    """
    spec = spec.strip()
    if spec == "heisenberg":
        return heisenberg_voa()
    if spec.startswith("fock:"):
        return fock(Fraction(spec.split(":", 1)[1]))
    if spec.startswith("virasoro:"):
        body = spec.split(":", 1)[1]
        kv = dict(p.split("=", 1) for p in body.split(","))
        return virasoro_voa(Fraction(kv["c"]))
    if spec.startswith("verma:"):
        body = spec.split(":", 1)[1]
        kv = dict(p.split("=", 1) for p in body.split(","))
        return verma(Fraction(kv["c"]), Fraction(kv["h"]))
    raise ValueError(f"unknown module spec {spec!r}")
