from __future__ import annotations

import pytest

from chevalley_b import Matrix, RootSystem, ring_from_descriptor
from chevalley_b.lie import BasisIndex
from chevalley_b.matrix_units import generate_all, h_block_combination, seed_long

from conftest import ring


@pytest.fixture(scope="module")
def b2_table():
    return generate_all(RootSystem(2), ring("Z/9"))


def test_b2_over_z9_is_complete(b2_table):
    assert b2_table.complete()
    assert len(b2_table) == 100
    assert b2_table.certify_all() == []


def test_seed_is_minus_two_unit():
    rs = RootSystem(2)
    f = ring("GF(7)")
    m, table = seed_long(rs, f)
    bi = BasisIndex(rs)
    a1 = rs.simple[0]
    assert m == Matrix.unit(f, rs.n, bi.root_index(a1), bi.root_index(-a1)).scale(f(-2))
    assert len(table) == 1


def test_span_rebuilds_a_matrix(b2_table):
    z = ring("Z/9")
    target = Matrix.from_integers(z, [[(3 * i + j) % 9 for j in range(10)] for i in range(10)])
    assert b2_table.span(target) == target


def test_recipes_are_described(b2_table):
    text = b2_table.describe(0, 0)
    assert text.startswith("[")


@pytest.mark.parametrize("l", [3, 4])
def test_cartan_block_products(l):
    rep = h_block_combination(RootSystem(l), ring("Z/27"))
    checks = rep.checks()
    for name in ("B", "C_2", "C", "C_1") + tuple(f"C_{k}" for k in range(3, l + 1)):
        assert checks[name], name
    assert rep.block("B") == {(1, 1): -4, (1, 2): 2}
    assert rep.block("C_1-B") == {(2, 1): -2}
    assert not checks["C_1+B"]


def test_b2_cartan_block_products():
    rep = h_block_combination(RootSystem(2), ring("Z/9"))
    checks = rep.checks()
    assert checks["B"] and checks["C_2"]


def test_needs_one_half():
    with pytest.raises(ValueError):
        generate_all(RootSystem(2), ring_from_descriptor("zmod(2,2)"))


def test_b3_over_gf7_is_complete():
    table = generate_all(RootSystem(3), ring("GF(7)"))
    assert len(table) == 21 * 21
