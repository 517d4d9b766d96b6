"""Fusion-dimension upper bounds on free-boson triples."""

from fractions import Fraction

import pytest

from voazhu.instances import fock, heisenberg_voa
from voazhu.intertwiner import fusion_dim, fusion_report


@pytest.fixture(scope="module")
def V():
    return heisenberg_voa()


def test_momentum_conserving_channel(V):
    rep = fusion_report(V, fock(1), fock(2), fock(3), 0, windows=(6, 8))
    assert rep["dims"] == [1, 1]
    assert rep["stabilized"] and rep["fusion_dim_upper"] == 1


def test_weight_obstructed_channels(V):
    for nu in (4, 2):
        rep = fusion_report(V, fock(1), fock(2), fock(nu), 0, windows=(6, 8))
        assert rep["dims"] == [0, 0]
        assert rep["stabilized"]


def test_half_momenta(V):
    rep = fusion_report(V, fock("1/2"), fock("1/2"), fock(1), 0, windows=(6, 8))
    assert rep["dims"] == [1, 1] and rep["stabilized"]
    for nu in (2, 0):
        rep = fusion_report(V, fock("1/2"), fock("1/2"), fock(nu), 0, windows=(6, 8))
        assert rep["dims"] == [0, 0]


def test_vacuum_module_acts_as_identity_channel(V):
    """W1 = F_0 (the algebra as a module): the module operator spans Hom."""
    for lam in (Fraction(1), Fraction(1, 2)):
        dim = fusion_dim(V, fock(0), fock(lam), fock(lam), 0, window=6)
        assert dim == 1
        assert fusion_dim(V, fock(0), fock(lam), fock(lam + 1), 0, window=6) == 0


def test_fusion_monotone_in_window(V):
    dims = [fusion_dim(V, fock(1), fock(2), fock(3), 0, window=w) for w in (4, 6, 8)]
    assert dims[0] >= dims[1] >= dims[2]
    assert dims[-1] == 1


def test_fusion_level_one_is_a_sound_upper_bound(V):
    """At level 1 the bound is valid but not tight: the induced map of the
    free-boson operator is always a solution, so the conserving channel
    reports at least 1; the stabilized value is an upper bound only."""
    rep = fusion_report(V, fock(1), fock(2), fock(3), 1, windows=(6, 8))
    assert rep["dims"][0] >= rep["dims"][1] >= 1


def test_degenerate_empty_bottom_slice(V):
    assert fusion_dim(V, fock(1), fock(2), fock(3), 0, window=0) in (0, 1)
