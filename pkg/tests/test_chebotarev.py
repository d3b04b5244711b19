from fractions import Fraction

import pytest

from polebound.algebra import CaseSpec, SideSpec
from polebound.chebotarev import (
    InstantiationError, build_group, example_dihedral1,
    example_dihedral2, example_tetrahedral, fibered_subgroup, density,
    model_oracle, omega_coset, qmul, verify_property_P_Z4, _q8_mod_i,
)

D = "dihedral"


def test_group_construction_and_axioms():
    q8 = build_group("Q8")
    assert len(q8) == 8
    bt = build_group("binary_tetrahedral")
    assert len(bt) == 24
    z1 = build_group("cyclic", 1)
    assert len(z1) == 1
    with pytest.raises(ValueError):
        build_group("S5")


def test_quaternion_traces():
    q8 = build_group("Q8")
    vals = sorted(q8.trace2(x) for x in q8.elements)
    assert vals == [0, 0, 0, 0, 0, 0, 2, 2]  # +-1 give 2, the rest 0
    bt = build_group("binary_tetrahedral")
    ones = [x for x in bt.elements if bt.trace2(x) == 1]
    assert len(ones) == 16


def test_omega_coset_is_homomorphism():
    bt = build_group("binary_tetrahedral")
    for x in bt.elements:
        for y in bt.elements[:8]:
            assert omega_coset(qmul(x, y)) == \
                (omega_coset(x) + omega_coset(y)) % 3


def test_fibered_sizes():
    bt = build_group("binary_tetrahedral")
    h = fibered_subgroup(bt, omega_coset, bt, omega_coset, 3)
    assert len(h) == 24 * 24 // 3 == 192
    q8 = build_group("Q8")
    h2 = fibered_subgroup(q8, _q8_mod_i, q8, _q8_mod_i, 2)
    assert len(h2) == 32
    h3 = fibered_subgroup(q8, lambda x: 0, q8, lambda x: 0, 1)
    assert len(h3) == 64
    with pytest.raises(ValueError):
        fibered_subgroup(q8, lambda x: 0, q8, _q8_mod_i, 2)


def test_density_partition():
    q8 = build_group("Q8")
    h = fibered_subgroup(q8, _q8_mod_i, q8, _q8_mod_i, 2)
    gt = density(h, "gt")
    eq = density(h, "eq")
    swapped = fibered_subgroup(q8, _q8_mod_i, q8, _q8_mod_i, 2)
    lt = density(swapped, "gt")  # same group and trace table both sides
    assert gt + lt + eq == 1
    assert gt == lt  # symmetric example
    assert density(h, "neq") == gt + lt


def test_examples_match_published_densities():
    assert example_tetrahedral() == {"size": 192, "gt": Fraction(1, 16),
                                     "neq": Fraction(1, 8)}
    assert example_dihedral1() == {"size": 32, "gt": Fraction(1, 8),
                                   "neq": Fraction(1, 4)}
    assert example_dihedral2() == {"size": 64, "gt": Fraction(3, 16),
                                   "neq": Fraction(3, 8)}


def test_z4_property_p_checks():
    assert all(verify_property_P_Z4().values())


def test_oracle_reference_values():
    assert model_oracle({"n": 4, "nu1": 2, "nu2": 1}, (2, 0)) == 3
    assert model_oracle({"n": 6, "nu1": 2, "nu2": 1}, (2, 0)) == 2
    assert model_oracle({"n1": 5, "nu1": 1, "n2": 5, "nu2": 1}, (1, 1)) == 0
    assert model_oracle({"n": 5, "nu1": 1, "nu2": 2}, (0, 0)) == 1


def test_oracle_rejects_bad_instantiations():
    spec = CaseSpec(SideSpec(D, "P"), SideSpec(D, "Q"), True)
    with pytest.raises(InstantiationError):
        model_oracle({"n": 6, "nu1": 2, "nu2": 2}, (1, 1), spec)  # P wants ord 2
    with pytest.raises(InstantiationError):  # twist-equivalent pair
        bad = CaseSpec(SideSpec(D, "Q"), SideSpec(D, "Q"), True)
        model_oracle({"n": 3, "nu1": 1, "nu2": 2}, (1, 1), bad)
    with pytest.raises(InstantiationError):  # wrong field wiring
        model_oracle({"n1": 4, "nu1": 2, "n2": 3, "nu2": 1}, (1, 1), spec)
