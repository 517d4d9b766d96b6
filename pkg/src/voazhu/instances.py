"""Shared registry of algebra and module instances.

Mode-action caches live on the instances, so reusing one instance across a
whole session (CLI run, test suite) is what makes repeated checks cheap.
"""

from __future__ import annotations

from .formal import as_scalar
from .heisenberg import FockModule, HeisenbergVOA
from .virasoro import VermaModule, VirasoroVOA

_registry: dict = {}


def heisenberg_voa() -> HeisenbergVOA:
    key = ("heis",)
    if key not in _registry:
        _registry[key] = HeisenbergVOA()
    return _registry[key]


def fock(momentum) -> FockModule:
    momentum = as_scalar(momentum)
    key = ("fock", momentum)
    if key not in _registry:
        _registry[key] = FockModule(heisenberg_voa(), momentum)
    return _registry[key]


def virasoro_voa(c) -> VirasoroVOA:
    c = as_scalar(c)
    key = ("vir", c)
    if key not in _registry:
        _registry[key] = VirasoroVOA(c)
    return _registry[key]


def verma(c, h) -> VermaModule:
    c, h = as_scalar(c), as_scalar(h)
    key = ("verma", c, h)
    if key not in _registry:
        _registry[key] = VermaModule(virasoro_voa(c), h)
    return _registry[key]


def module_from_descriptor(desc: dict):
    """Rebuild a module from its JSON descriptor."""
    kind = desc["kind"]
    params = desc.get("params", {})
    if kind == "heisenberg_fock":
        lam = as_scalar(params.get("lambda", "0"))
        return heisenberg_voa() if lam == 0 and desc.get("module_id") == "heis" else fock(lam)
    if kind == "virasoro_vacuum":
        return virasoro_voa(params["c"])
    if kind == "virasoro_verma":
        return verma(params["c"], params["h"])
    raise ValueError(f"unknown module kind {kind!r}")
