from __future__ import annotations

import pytest

from chevalley_b import GroupElement, conj, NonUnit, RootSystem, h_elem, mul, w_elem, x_elem
from chevalley_b.automorphisms import (NotNormalizing, RingAutomorphism, apply, central_aut, check_lift,
                                       composite, inner_aut, is_central, lift_exponents, lift_torus, ring_aut)
from chevalley_b.rings import RingError

from conftest import ring


def test_dual_scale_rescales_eps():
    rs = RootSystem(2)
    d = ring("GF(7)[eps]")
    a = ring_aut("dual-scale", d.base(3))
    x = x_elem(rs, "e1", d.parse("2+eps"))
    assert apply(a, x) == x_elem(rs, "e1", d.parse("2+3*eps"))


def test_dual_scale_needs_unit():
    d = ring("GF(7)[eps]")
    with pytest.raises(NonUnit):
        RingAutomorphism("dual-scale", d.base(0))


def test_ring_aut_is_a_homomorphism():
    rs = RootSystem(2)
    d = ring("GF(7)[eps]")
    a = ring_aut("dual-scale", d.base(5))
    g = x_elem(rs, "e1-e2", d.parse("1+eps"))
    h = w_elem(rs, "e2", d.parse("3+2*eps"))
    assert apply(a, mul(g, h)) == mul(apply(a, g), apply(a, h))


def test_sqrt_conjugate_and_kind_checks():
    rs = RootSystem(2)
    q = ring("GF(7)[sqrt3]")
    s = q.sqrt
    x = x_elem(rs, "e1", s)
    assert apply(ring_aut("sqrt-conjugate"), x) == x_elem(rs, "e1", -s)
    with pytest.raises(RingError):
        apply(ring_aut("sqrt-conjugate"), x_elem(rs, "e1", 1, ring("GF(7)")))
    with pytest.raises(ValueError):
        RingAutomorphism("nonsense")


def test_inner_by_torus():
    rs = RootSystem(2)
    f = ring("GF(7)")
    t = h_elem(rs, "e1-e2", 3, f)
    a = inner_aut(t)
    # <e1, e1-e2> = 1
    assert apply(a, x_elem(rs, "e1", 2, f)) == x_elem(rs, "e1", 6, f)


def test_composite_and_central():
    rs = RootSystem(2)
    d = ring("GF(7)[eps]")
    g = w_elem(rs, "e1", 1, d)
    a = composite([ring_aut("dual-scale", d.base(2)), inner_aut(g), central_aut()])
    x = x_elem(rs, "e2", d.parse("1+eps"))
    assert apply(a, x) == conj(g, x_elem(rs, "e2", d.parse("1+2*eps")))


def test_is_central():
    rs = RootSystem(3)
    f = ring("GF(7)")
    assert is_central(GroupElement.identity(rs, f))
    assert not is_central(h_elem(rs, rs.simple[0], -1, f))
    # h_{alpha_l}(-1) is the identity in the adjoint representation
    assert is_central(h_elem(rs, rs.simple[-1], -1, f))


def test_non_normalizing_conjugation_rejected():
    rs = RootSystem(2)
    q = ring("GF(7)[sqrt3]")
    g = x_elem(rs, "e1", q.sqrt)
    with pytest.raises(NotNormalizing):
        apply(inner_aut(g, ring("GF(7)"), check=False), x_elem(rs, "e2", 1, ring("GF(7)")))


def test_lift_exponents():
    rs = RootSystem(3)
    assert lift_exponents(rs, 1) == [(1, 2), (2, 2), (3, 1)]
    assert lift_exponents(rs, 3) == [(1, 2), (2, 4), (3, 3)]
    with pytest.raises(ValueError):
        lift_exponents(rs, 2)


@pytest.mark.parametrize("l", [2, 3])
@pytest.mark.parametrize("kind", ["first", "last"])
def test_lift_torus(l, kind):
    rs = RootSystem(l)
    k = 1 if kind == "first" else l
    f = ring("GF(7)")
    for r in (3, 5, 6):
        assert check_lift(rs, k, f(r), [f(1), f(4)]) == []


def test_lift_torus_lives_over_extension():
    rs = RootSystem(2)
    z = ring("Z/9")
    S, t = lift_torus(rs, 1, z(2))
    assert S.sqrt ** 2 == S(2)
    assert t.ctx == S
    with pytest.raises(NonUnit):
        lift_torus(rs, 1, z(3))
