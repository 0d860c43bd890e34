from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chevalley_b import NonUnit, RingError, adjoin_sqrt, ring_from_descriptor
from chevalley_b.rings import ContextMismatch

from conftest import ring


def test_modular_addition_and_radical_product():
    z9 = ring("Z/9")
    assert z9(5) + z9(7) == 3
    assert z9(3) * z9(3) == 0


def test_dual_numbers():
    d = ring("GF(7)[eps]")
    assert d.parse("1+3*eps") + d.parse("6+4*eps") == 0
    assert d.parse("2+eps") * d.parse("3+eps") == d.parse("6+5*eps")
    assert d.parse("1+eps").inverse() == d.parse("1+6*eps")


def test_localization():
    z = ring("Z_(5)")
    assert z.parse("1/2") + z.parse("1/3") == z.parse("5/6")
    assert z.parse("3/7").is_unit()
    assert z.parse("2/3").residue() == z.residue_context(4)
    with pytest.raises(RingError):
        z.parse("1/5")


def test_inverse_and_non_unit():
    z9 = ring("Z/9")
    assert z9(2).inverse() == 5
    with pytest.raises(NonUnit):
        z9(3).inverse()
    assert ring("Z/27")(6).in_radical()


def test_field_radical_is_zero():
    f = ring("GF(7)")
    assert [x for x in f.enumerate() if x.in_radical()] == [f.zero]


def test_residues():
    assert ring("Z/9")(7).residue() == ring_from_descriptor("gfp(3)")(1)
    assert ring("GF(7)[eps]").parse("3+5*eps").residue() == ring("GF(7)")(3)


def test_adjoin_sqrt():
    z9 = ring("Z/9")
    s = adjoin_sqrt(z9, z9(2))
    assert sum(1 for _ in s.enumerate()) == 81
    assert s.sqrt ** 2 == s(2)
    assert (1 + s.sqrt) ** 2 == s.parse("3+2*sqrt")
    f = ring("GF(7)")
    assert adjoin_sqrt(f, f(4)).sqrt ** 2 == 4
    with pytest.raises(NonUnit):
        adjoin_sqrt(z9, z9(3))


def test_descriptors_round_trip():
    for text in ['{"kind": "zmod", "p": 3, "k": 2}', "gfp(7)", "zloc(5)", "dual(gfp(7))",
                 "sqrt-ext(zmod(3,2),2)"]:
        ctx = ring_from_descriptor(text)
        assert ring_from_descriptor(ctx.descriptor()) == ctx


def test_bad_descriptors():
    for text in ["foo(3)", "gfp(2)", "gfp(9)", "{\"kind\": \"zmod\"}"]:
        with pytest.raises((RingError, ValueError, KeyError)):
            ring_from_descriptor(text)


def test_literals_round_trip(any_ring):
    rng = random.Random(3)
    for _ in range(50):
        x = any_ring.random(rng)
        assert any_ring.parse(any_ring.format(x)) == x


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        ring("Z/9")(1) + ring("Z/27")(1)


def test_radical_nilpotency_bound():
    rng = random.Random(0)
    for name in ("Z/9", "Z/27", "GF(7)[eps]"):
        ctx = ring(name)
        n = ctx.radical_nilpotency
        for _ in range(50):
            prod = ctx.one
            for _ in range(n):
                prod = prod * ctx.random_radical(rng)
            assert prod == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**6, 10**6), st.integers(1, 10**6).filter(lambda d: d % 5))
def test_zloc_matches_fractions(a, d):
    z = ring("Z_(5)")
    x = z(Fraction(a, d))
    assert x.is_unit() != x.in_radical()
    if x.is_unit():
        assert x * x.inverse() == 1
