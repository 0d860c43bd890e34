"""Standard automorphisms of E_ad(B_l, R) and the torus lift into R[sqrt r].

B_l has no graph automorphisms, and central automorphisms are trivial on the
elementary adjoint group, so in practice a standard automorphism is a ring
automorphism followed by a conjugation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .group import Factor, GroupElement, TorusCharacter, conj, h_elem, inv, mul, x_elem
from .matrices import Matrix
from .rings import (ContextMismatch, DualNumbers, NonUnit, PrimeField, QuadraticExtension, RingContext,
                    RingError, RingValue, adjoin_sqrt)
from .roots import Root, RootSystem


class NotNormalizing(ValueError):
    pass


# --- ring automorphisms -------------------------------------------------------

@dataclass(frozen=True)
class RingAutomorphism:
    """identity, dual-scale (eps -> u eps), sqrt-conjugate (sqrt -> -sqrt) or frobenius."""

    kind: str = "identity"
    u: RingValue | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("identity", "dual-scale", "sqrt-conjugate", "frobenius"):
            raise ValueError(f"unknown ring automorphism {self.kind!r}")
        if self.kind == "dual-scale" and (self.u is None or not self.u.is_unit()):
            raise NonUnit("dual-scale needs a unit u of the base ring")

    def __call__(self, x: RingValue) -> RingValue:
        ctx = x.ctx
        if self.kind in ("identity", "frobenius"):
            # x -> x^p is the identity on a prime field; on the other rings here
            # the only such map taken is the identity
            if self.kind == "frobenius" and not isinstance(ctx, PrimeField):
                raise RingError("frobenius is only offered on prime fields")
            return x
        if self.kind == "dual-scale":
            if not isinstance(ctx, DualNumbers):
                raise RingError("dual-scale needs a dual-number ring")
            a0, a1 = ctx.split(x)
            return ctx.join(a0, a1 * self.u)
        if not isinstance(ctx, QuadraticExtension):
            raise RingError("sqrt-conjugate needs a quadratic extension")
        return ctx.conjugate(x)

    def on_matrix(self, m: Matrix) -> Matrix:
        return m.map_entries(self)


# --- standard automorphisms ---------------------------------------------------

@dataclass
class StandardAutomorphism:
    """kind is "ring", "inner", "central" or "composite"."""

    kind: str
    sigma: RingAutomorphism | None = None
    g: GroupElement | None = None
    parts: list[StandardAutomorphism] = field(default_factory=list)

    def __str__(self) -> str:
        if self.kind == "ring":
            return f"ring({self.sigma.kind})"
        if self.kind == "inner":
            return "inner"
        if self.kind == "central":
            return "central(trivial)"
        return " then ".join(map(str, self.parts))


def ring_aut(sigma: RingAutomorphism | str = "identity", u: RingValue | None = None) -> StandardAutomorphism:
    if isinstance(sigma, str):
        sigma = RingAutomorphism(sigma, u)
    return StandardAutomorphism("ring", sigma=sigma)


def inner_aut(g: GroupElement, base: RingContext | None = None, check: bool = True) -> StandardAutomorphism:
    """Conjugation x -> g x g^-1; ``g`` may live over an extension of ``base``."""
    if check:
        check_normalizes(g, base or g.ctx)
    return StandardAutomorphism("inner", g=g)


def central_aut() -> StandardAutomorphism:
    return StandardAutomorphism("central")


def composite(parts: Sequence[StandardAutomorphism]) -> StandardAutomorphism:
    """Apply ``parts`` in order, left to right."""
    return StandardAutomorphism("composite", parts=list(parts))


def _map_word(word, fn: Callable[[RingValue], RingValue]):
    if word is None:
        return None
    out = []
    for f in word:
        if f.kind == "chi":
            p = TorusCharacter(f.param.rs, [fn(v) for v in f.param.values])
        else:
            p = fn(f.param)
        out.append(Factor(f.kind, f.root, p))
    return out


def _conjugate_into(g: GroupElement, x: GroupElement) -> GroupElement:
    """g x g^-1 computed over g's ring and restricted back to x's ring."""
    if g.ctx == x.ctx:
        return conj(g, x)
    if not g.ctx.contains_subring(x.ctx):
        raise ContextMismatch(f"{g.ctx!r} does not contain {x.ctx!r}")
    big = GroupElement(x.rs, x.matrix.change_ring(g.ctx))
    y = mul(mul(g, big), inv(g))
    try:
        return GroupElement(x.rs, y.matrix.change_ring(x.ctx))
    except RingError as exc:
        raise NotNormalizing(f"conjugate leaves the base ring: {exc}") from None


def apply(a: StandardAutomorphism, x: GroupElement) -> GroupElement:
    if a.kind == "ring":
        m = a.sigma.on_matrix(x.matrix)
        return GroupElement(x.rs, m, _map_word(x.word, a.sigma))
    if a.kind == "inner":
        return _conjugate_into(a.g, x)
    if a.kind == "central":
        return x
    if a.kind == "composite":
        for part in a.parts:
            x = apply(part, x)
        return x
    raise ValueError(f"unknown automorphism kind {a.kind!r}")


def generators(rs: RootSystem, ctx: RingContext) -> list[GroupElement]:
    """x_{+-alpha_i}(1): they generate E_ad(B_l, R) for a local ring R."""
    return [x_elem(rs, s * a, 1, ctx) for a in rs.simple for s in (1, -1)]


def check_normalizes(g: GroupElement, base: RingContext) -> None:
    """Spot-check that conjugation by ``g`` maps E_ad(Phi, base) into itself.

    The determinant must be a unit, each conjugate of x_{+-alpha_i}(+-1) and of
    w_{alpha_i}(1) must have entries in ``base``, and, when a conjugate is
    congruent to the original generator modulo J, the quotient must be an
    element lambda * E_ad(Phi, base, J) recognized by the prod2 reconstruction.
    """
    from .radical import NotRadicalCongruent, UnsupportedRing, compose, reconstruct

    if not g.det().is_unit():
        raise NotNormalizing("determinant is not a unit")
    rs = g.rs
    tests = [x_elem(rs, s * a, e, base) for a in rs.simple for s in (1, -1) for e in (1, -1)]
    for x in tests:
        y = _conjugate_into(g, x)
        q = mul(y, inv(x))
        try:
            c = reconstruct(q.matrix, rs)
        except (NotRadicalCongruent, UnsupportedRing):
            continue
        if compose(rs, c, check=False) != q.matrix:
            raise NotNormalizing(f"conjugate of {x.word[0]} is not in the group")


def is_central(g: GroupElement) -> bool:
    """True iff g commutes with every x_{+-alpha_i}(1)."""
    return all(mul(g, x) == mul(x, g) for x in generators(g.rs, g.ctx))


# --- lifting torus elements ----------------------------------------------------

def lift_exponents(rs: RootSystem, kind: int) -> list[tuple[int, int]]:
    """(i, e): t = prod h_{alpha_i}(s^e) for kind 1 or kind l.

    kind 1: exponents 2, ..., 2, 1; kind l: 2, 4, ..., 2(l-1), l.
    """
    l = rs.rank
    if kind == 1:
        return [(i, 2) for i in range(1, l)] + [(l, 1)]
    if kind == l:
        return [(i, 2 * i) for i in range(1, l)] + [(l, l)]
    raise ValueError(f"kind must be 1 or {l}, got {kind}")


def lift_torus(rs: RootSystem, kind: int, r: RingValue) -> tuple[QuadraticExtension, GroupElement]:
    """S = R[s]/(s^2 - r) and t in the torus over S acting as chi_{alpha_kind}(r).

    Conjugation by t multiplies the parameter of x_alpha by r^k, k the
    coefficient of alpha_kind in alpha.
    """
    if not r.is_unit():
        raise NonUnit(f"{r} is not a unit")
    S = adjoin_sqrt(r.ctx, r)
    s = S.sqrt
    t = GroupElement.identity(rs, S)
    for i, e in lift_exponents(rs, kind):
        t = mul(t, h_elem(rs, rs.simple[i - 1], s ** e))
    return S, t


def expected_torus_action(rs: RootSystem, kind: int, r: RingValue, alpha: Root, xi: RingValue) -> GroupElement:
    k = rs.simple_coefficients(alpha)[kind - 1]
    return x_elem(rs, alpha, r ** k * xi)


def check_lift(rs: RootSystem, kind: int, r: RingValue, xis: Sequence[RingValue]) -> list[str]:
    """Failures of t x_alpha(xi) t^-1 = x_alpha(r^k xi) over all roots and given xi."""
    S, t = lift_torus(rs, kind, r)
    bad = []
    for alpha in rs.roots:
        for xi in xis:
            got = _conjugate_into(t, x_elem(rs, alpha, xi))
            if got != expected_torus_action(rs, kind, r, alpha, xi):
                bad.append(f"{alpha}, xi={xi}")
    return bad
