from fractions import Fraction

import pytest

from voazhu.basis import GradedVector, canonical_modes, sort_key
from voazhu.errors import UnknownGeneratorError
from voazhu.instances import module_from_descriptor
from voazhu.modules import basis_window, partitions


def test_canonical_mode_ordering():
    modes = canonical_modes([("a", -1), ("a", -3), ("a", -1)])
    assert modes == (("a", -3), ("a", -1), ("a", -1))
    with pytest.raises(ValueError):
        canonical_modes([("a", 1)])


def test_partitions_counts():
    # partition numbers p(0..8)
    assert [len(partitions(d, 1)) for d in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    # parts >= 2 (Virasoro vacuum dimensions)
    assert [len(partitions(d, 2)) for d in range(9)] == [1, 0, 1, 1, 2, 2, 4, 4, 7]


def test_depth_and_weight(fock_half):
    bv = fock_half.basis_vector([("a", -3), ("a", -1)])
    assert bv.depth == 4
    assert fock_half.weight_of(bv) == Fraction(1, 8) + 4


def test_unknown_generator_rejected(fock_half):
    with pytest.raises(UnknownGeneratorError):
        fock_half.basis_vector([("b", -1)])


def test_min_part_enforced(vir_half):
    with pytest.raises(ValueError):
        vir_half.basis_vector([("L", -1)])  # vacuum algebra needs parts >= 2


def test_graded_vector_arithmetic(heis):
    u = heis.monomial([("a", -1)], 2)
    v = heis.monomial([("a", -2)], Fraction(1, 3))
    w = u + v
    assert w.coefficient(heis.basis_vector([("a", -1)])) == 2
    assert (w - u - v).is_zero()
    assert (w * 0).is_zero()
    assert -w + w == heis.zero()
    assert w * Fraction(3) == u * 3 + v * 3


def test_homogeneous_components(fock_one):
    x = fock_one.lw() + fock_one.monomial([("a", -2)], 5)
    comps = x.homogeneous_components()
    assert sorted(comps) == [Fraction(1, 2), Fraction(5, 2)]
    assert not x.is_homogeneous()
    with pytest.raises(ValueError):
        x.weight()
    assert comps[Fraction(5, 2)] == fock_one.monomial([("a", -2)], 5)


def test_basis_window_ordering(heis):
    window = basis_window(heis, 3)
    depths = [bv.depth for bv in window]
    assert depths == sorted(depths)
    assert len(window) == 1 + 1 + 2 + 3
    assert window == sorted(window, key=sort_key)


def test_module_descriptor_roundtrip(fock_half, verma_ising):
    for module in (fock_half, verma_ising):
        desc = module.descriptor(depth_max=10)
        again = module_from_descriptor(desc)
        assert again is module  # registry returns the shared instance
        assert desc["depth_max"] == 10


def test_cross_module_vectors_rejected(fock_one, fock_half):
    bv = fock_one.basis_vector([("a", -1)])
    with pytest.raises(ValueError):
        GradedVector(fock_half, {bv: Fraction(1)})
    with pytest.raises(ValueError):
        fock_one.lw() + fock_half.lw()
