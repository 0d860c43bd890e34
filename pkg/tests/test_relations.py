from __future__ import annotations

import random

import pytest

from chevalley_b import RootSystem, TorusCharacter, x_elem
from chevalley_b.relations import (CON_NAMES, check_commutator, check_con_suite, check_involution_commuting,
                                   check_torus_conjugation, check_weyl_conjugation, commutator_constants,
                                   perturb, weyl_block, weyl_sign)

from conftest import ring


def _constants(rs, a, b):
    return {str(g): c for _, _, g, c in commutator_constants(rs, a, b)}


def test_short_short_commutators_carry_two():
    # [x_{e_i}(t), x_{e_j}(1)] = x_{e_i+e_j}(+-2t): +2 for i > j, -2 for i < j
    for l in (2, 3, 4):
        rs = RootSystem(l)
        for i in range(1, l + 1):
            for j in range(1, l + 1):
                if i == j:
                    continue
                assert _constants(rs, f"e{i}", f"-e{j}") == {str(rs.root(f"e{i}-e{j}")): 2}
                assert _constants(rs, f"e{i}", f"e{j}") == {str(rs.root(f"e{i}+e{j}")): 2 if i > j else -2}


def test_long_short_commutator_has_two_terms():
    rs = RootSystem(2)
    consts = commutator_constants(rs, "e1-e2", "e2")
    assert [(i, j) for i, j, _, _ in consts] == [(1, 1), (1, 2)]
    assert all(abs(c) == 1 for *_, c in consts)


def test_orthogonal_long_roots_commute():
    rs = RootSystem(3)
    assert commutator_constants(rs, "e1-e2", "e1+e2") == []
    f = ring("GF(7)")
    assert check_commutator(rs, "e1-e2", "e1+e2", f(3), f(5))


def test_commutator_constants_reject_opposite():
    rs = RootSystem(2)
    with pytest.raises(ValueError):
        commutator_constants(rs, "e1", "-e1")


@pytest.mark.parametrize("l", [2, 3])
def test_commutators_sampled(any_ring, l):
    rs = RootSystem(l)
    rng = random.Random(l)
    roots = rs.roots
    for _ in range(12):
        a, b = rng.sample(roots, 2)
        if a == -b:
            continue
        assert check_commutator(rs, a, b, any_ring.random(rng), any_ring.random(rng))


def test_weyl_signs_are_units_and_self_sign_is_minus_one():
    rs = RootSystem(3)
    for a in rs.roots:
        assert weyl_sign(rs, a, a) == -1
        for b in rs.roots:
            assert weyl_sign(rs, a, b) in (1, -1)


@pytest.mark.parametrize("l", [2, 3])
def test_weyl_conjugation_sampled(any_ring, l):
    rs = RootSystem(l)
    rng = random.Random(11)
    for _ in range(10):
        a, b = rng.choice(rs.roots), rng.choice(rs.roots)
        assert check_weyl_conjugation(rs, a, b, any_ring.random(rng))


def test_torus_conjugation():
    rs = RootSystem(3)
    f = ring("GF(7)")
    chi = TorusCharacter(rs, [2, 3, 5], f)
    for b in rs.roots:
        assert check_torus_conjugation(chi, b, 4)


def test_con_report_only_con4_fails(any_ring):
    r = check_con_suite(any_ring)
    assert list(r.results) == list(CON_NAMES)
    assert r.failures() == ["Con4"]


def test_rescaled_x1_breaks_con7():
    # h_2 inverts every x_{alpha_1}(t), so Con1 cannot see the parameter; Con7 can
    rs = RootSystem(3)
    f = ring("GF(7)")
    assert check_con_suite(f, x1=x_elem(rs, rs.simple[0], f(2))).failures() == ["Con4", "Con7"]
    # t = -1 repairs Con4 at the cost of Con7
    assert check_con_suite(f, x1=x_elem(rs, rs.simple[0], f(-1))).failures() == ["Con7"]


def test_x1_perturbations_break_more_than_con4():
    f = ring("GF(7)")
    rs = RootSystem(3)
    base = x_elem(rs, rs.simple[0], 1, f)
    for b in rs.roots:
        r = check_con_suite(f, x1=perturb(base, "x", b, f(1)))
        assert set(r.failures()) - {"Con4"}, str(b)
    r = check_con_suite(f, x1=perturb(base, "h", None, f(1)))
    assert set(r.failures()) - {"Con4"}


def test_some_x3_perturbations_are_invisible():
    # the suite does not pin x_3 down: these two leave only Con4 failing
    f = ring("GF(7)")
    rs = RootSystem(3)
    base = x_elem(rs, rs.simple[2], 1, f)
    for b in ("e1+e2", "e1+e3"):
        r = check_con_suite(f, x3=perturb(base, "x", rs.root(b), f(1)))
        assert r.failures() == ["Con4"]


@pytest.mark.parametrize("l", [2, 3, 4, 5])
def test_involution_commuting_equivalence(l):
    rs = RootSystem(l)
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            if i != j:
                commute, split = check_involution_commuting(rs, i, j)
                assert commute == split
                assert commute == (abs(i - j) > 1)


def test_involution_commuting_rejects_equal_indices():
    with pytest.raises(ValueError):
        check_involution_commuting(RootSystem(4), 2, 2)


def test_weyl_block_is_involution():
    rs = RootSystem(4)
    import numpy as np
    for i in range(1, 5):
        w = weyl_block(rs, i)
        assert np.array_equal(w.dot(w), np.eye(4, dtype=object))
