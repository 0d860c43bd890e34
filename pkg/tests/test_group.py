from __future__ import annotations

import random

import pytest

from chevalley_b import (GroupElement, NonUnit, RootSystem, TorusCharacter, commutator, conj, h_char,
                         h_elem, inv, mul, w_elem, x_elem)
from chevalley_b.group import is_radical_congruent

from conftest import ring


def test_x_zero_and_h_one_are_identity():
    rs = RootSystem(2)
    f = ring("GF(7)")
    for a in rs.roots:
        assert x_elem(rs, a, 0, f).is_identity()
        assert h_elem(rs, a, 1, f).is_identity()
    assert h_char(TorusCharacter(rs, [1, 1], f)).is_identity()


def test_h_alpha1_minus_one_b3():
    rs = RootSystem(3)
    f = ring("GF(7)")
    d = h_elem(rs, rs.simple[0], -1, f).matrix.diagonal_entries()
    expected = [1, 1, -1, -1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1]
    assert d == [f(x) for x in expected]


@pytest.mark.parametrize("l", [2, 3])
def test_weyl_element_identities(l):
    rs = RootSystem(l)
    f = ring("Z/9")
    for a in rs.roots:
        w = w_elem(rs, a, 1, f)
        assert mul(w, w) == h_elem(rs, a, -1, f)
        assert mul(w, w_elem(rs, a, -1, f)).is_identity()
        for t in (2, 4, 5):
            assert mul(w_elem(rs, a, t, f), inv(w)) == h_elem(rs, a, t, f)


def test_one_parameter_subgroup(any_ring):
    rs = RootSystem(2)
    rng = random.Random(7)
    for a in rs.roots:
        t, u = any_ring.random(rng), any_ring.random(rng)
        assert mul(x_elem(rs, a, t), x_elem(rs, a, u)) == x_elem(rs, a, t + u)


def test_unipotent_nilpotency():
    rs = RootSystem(2)
    f = ring("GF(7)")
    from chevalley_b import Matrix
    one = Matrix.identity(f, rs.n)
    for a in rs.roots:
        d = x_elem(rs, a, 3, f).matrix - one
        assert (d @ d @ d).is_zero()


def test_residue_commutes_with_x():
    rs = RootSystem(2)
    z = ring("Z/27")
    for a in rs.roots:
        g = x_elem(rs, a, 13, z)
        assert g.residue().matrix == x_elem(rs, a, z(13).residue()).matrix


def test_word_inverse_matches_matrix_inverse():
    rs = RootSystem(2)
    f = ring("GF(7)[eps]")
    g = mul(mul(x_elem(rs, "e1", f.parse("2+eps")), w_elem(rs, "e1-e2", 3, f)), h_elem(rs, "e2", 5, f))
    plain = GroupElement(rs, g.matrix)
    assert inv(g) == inv(plain)
    assert mul(g, inv(g)).is_identity()
    assert g.evaluate_word() == g.matrix


def test_conjugation_basics():
    rs = RootSystem(3)
    f = ring("GF(7)")
    e = GroupElement.identity(rs, f)
    x = x_elem(rs, rs.simple[0], 1, f)
    assert conj(e, x) == x
    assert conj(w_elem(rs, rs.simple[1], 1, f), x) == x_elem(rs, "e1-e3", -1, f)
    assert commutator(x, x).is_identity()


def test_units_required():
    rs = RootSystem(2)
    z = ring("Z/9")
    with pytest.raises(NonUnit):
        w_elem(rs, "e1", 3, z)
    with pytest.raises(NonUnit):
        h_elem(rs, "e1", 0, z)


def test_radical_congruence():
    rs = RootSystem(2)
    z = ring("Z/9")
    assert is_radical_congruent(GroupElement.identity(rs, z))
    assert is_radical_congruent(x_elem(rs, "e1", 3, z))
    assert not is_radical_congruent(h_elem(rs, "e1-e2", -1, z))


def test_last_simple_h_minus_one_is_trivial():
    # <beta, e_l> is even for every root beta of B_l
    for l in (2, 3):
        rs = RootSystem(l)
        assert h_elem(rs, rs.simple[-1], -1, ring("GF(7)")).is_identity()


def test_torus_character_values():
    rs = RootSystem(3)
    f = ring("GF(7)")
    chi = TorusCharacter(rs, [2, 3, 5], f)
    assert chi(rs.root("e1+e2")) == f(2) * f(3) ** 2 * f(5) ** 2
    assert chi.inverse()(rs.root("e1")) == chi(rs.root("e1")).inverse()
    assert TorusCharacter.of_root(rs, "e1-e2", f(3))(rs.root("e1-e2")) == 9
