"""Executable checks of the group relations used throughout.

Every check multiplies actual matrices; nothing is assumed from a
presentation.  The commutator constants C_ij and the Weyl signs eta are read
off from the group itself, so they always agree with the basis in use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .group import (GroupElement, TorusCharacter, commutator, conj, h_char, h_elem, inv, mul,
                    w_elem, x_elem)
from .lie import BasisIndex, ad_matrix, divided_square
from .matrices import Matrix
from .rings import PrimeField, RingContext, RingValue
from .roots import Root, RootError, RootSystem


def root_parameter(g: GroupElement, gamma: Root) -> RingValue:
    """The t with x_gamma(t) matching g at the (v_gamma, V_h) entries.

    (ad x_gamma)^2 kills the Cartan part and products of different root
    vectors leave the gamma-row there, so for a product of commuting root
    elements this reads off the gamma-parameter exactly.
    """
    rs = g.rs
    bi = BasisIndex(rs)
    ad = ad_matrix(rs, gamma)
    row = bi.root_index(gamma)
    best = None
    for i in range(1, rs.rank + 1):
        c = int(ad[row, bi.h_index(i)])
        if c and (best is None or abs(c) < abs(best[1])):
            best = (bi.h_index(i), c)
    col, c = best
    return g.matrix[row, col] / g.ctx(c)


def check_torus_conjugation(chi: TorusCharacter, beta: Root | str, xi) -> bool:
    """h(chi) x_beta(xi) h(chi)^-1 == x_beta(chi(beta) xi)."""
    rs = chi.rs
    beta = rs.root(beta)
    xi = chi.ctx(xi) if not isinstance(xi, RingValue) else xi
    lhs = conj(h_char(chi), x_elem(rs, beta, xi))
    return lhs == x_elem(rs, beta, chi(beta) * xi)


def _combos(rs: RootSystem, alpha: Root, beta: Root) -> list[tuple[int, int, Root]]:
    out = []
    for i in range(1, 4):
        for j in range(1, 4):
            g = i * alpha + j * beta
            if g in rs:
                out.append((i, j, g))
    out.sort(key=lambda c: (c[0] + c[1], c[0]))
    return out


@lru_cache(maxsize=None)
def _constants_over(ctx: RingContext, rank: int, alpha: Root, beta: Root) -> tuple[tuple[int, int, Root, int], ...]:
    rs = RootSystem(rank)
    one = ctx.one
    c = commutator(x_elem(rs, alpha, one), x_elem(rs, beta, one))
    out = []
    for i, j, g in _combos(rs, alpha, beta):
        out.append((i, j, g, _lift(root_parameter(c, g))))
    return tuple(out)


def _lift(v: RingValue) -> int:
    """Integer representative in the symmetric range (or the exact rational)."""
    q = v.ctx.modulus
    c = v.c[0]
    if any(v.c[1:]):
        raise ArithmeticError(f"{v} is not a base-ring integer")
    if q is None:
        f = Fraction(c)
        if f.denominator != 1:
            raise ArithmeticError(f"commutator constant {f} is not an integer")
        return int(f)
    c = int(c) % q
    return c - q if c > q // 2 else c


def commutator_constants(rs: RootSystem, alpha: Root | str, beta: Root | str,
                         ctx: RingContext | None = None) -> list[tuple[int, int, Root, int]]:
    """(i, j, i alpha + j beta, C_ij) for every root i alpha + j beta.

    With the commutator [g, h] = g h g^-1 h^-1:
    [x_alpha(t), x_beta(u)] = prod x_{i alpha + j beta}(C_ij t^i u^j),
    factors ordered by i + j (they commute pairwise in B_l).  Derived at
    t = u = 1 over ``ctx`` (default GF(1009); the constants are small
    integers, so the symmetric lift recovers them).
    """
    alpha, beta = rs.root(alpha), rs.root(beta)
    if alpha == beta or alpha == -beta:
        raise RootError("commutator constants need alpha != +-beta")
    ctx = ctx or PrimeField(1009)
    return list(_constants_over(ctx, rs.rank, alpha, beta))


def commutator_product(rs: RootSystem, alpha: Root, beta: Root, t: RingValue, u: RingValue) -> GroupElement:
    """The right-hand side prod x_{i alpha + j beta}(C_ij t^i u^j)."""
    out = GroupElement.identity(rs, t.ctx)
    for i, j, g, c in commutator_constants(rs, alpha, beta):
        out = mul(out, x_elem(rs, g, t.ctx(c) * t ** i * u ** j))
    return out


def check_commutator(rs: RootSystem, alpha: Root | str, beta: Root | str, t: RingValue, u: RingValue) -> bool:
    alpha, beta = rs.root(alpha), rs.root(beta)
    lhs = commutator(x_elem(rs, alpha, t), x_elem(rs, beta, u))
    return lhs == commutator_product(rs, alpha, beta, t, u)


@lru_cache(maxsize=None)
def _eta(rank: int, alpha: Root, beta: Root) -> int:
    rs = RootSystem(rank)
    ctx = PrimeField(1009)
    g = conj(w_elem(rs, alpha, 1, ctx), x_elem(rs, beta, 1, ctx))
    return _lift(root_parameter(g, rs.reflect(alpha, beta)))


def weyl_sign(rs: RootSystem, alpha: Root | str, beta: Root | str) -> int:
    """eta(alpha, beta) with w_alpha(1) x_beta(t) w_alpha(1)^-1 = x_{s_alpha beta}(eta t)."""
    return _eta(rs.rank, rs.root(alpha), rs.root(beta))


def check_weyl_conjugation(rs: RootSystem, alpha: Root | str, beta: Root | str, t: RingValue) -> bool:
    alpha, beta = rs.root(alpha), rs.root(beta)
    eta = weyl_sign(rs, alpha, beta)
    if eta not in (1, -1):
        return False
    lhs = conj(w_elem(rs, alpha, 1, t.ctx), x_elem(rs, beta, t))
    return lhs == x_elem(rs, rs.reflect(alpha, beta), t.ctx(eta) * t)


# --- the condition suite for B_3 ------------------------------------------

CON_NAMES = ("Con1", "Con2", "Con3", "Con4", "Con5", "Con6", "Con7")


@dataclass
class ConReport:
    results: dict[str, bool] = field(default_factory=dict)

    @property
    def all_true(self) -> bool:
        return all(self.results.values())

    def failures(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]


def con_generators(ctx: RingContext, x1: GroupElement | None = None,
                   w_params: tuple = (1, 1, 1), x3: GroupElement | None = None) -> dict[str, GroupElement]:
    """x_1, x_3, x_4, x_2, x_7, x_5, h_2 built from w_i = w_{alpha_i}(w_params[i]).

    ``x1`` and ``x3`` default to x_{alpha_1}(1) and x_{alpha_3}(1).
    """
    rs = RootSystem(3)
    a = rs.simple
    w = [w_elem(rs, a[i], w_params[i], ctx) for i in range(3)]
    x1 = x1 if x1 is not None else x_elem(rs, a[0], 1, ctx)
    x3 = x3 if x3 is not None else x_elem(rs, a[2], 1, ctx)
    x4 = conj(w[1], x1)
    x2 = conj(w[0], x4)
    x7 = conj(w[2], x2)
    x5 = conj(w[1], x3)
    h2 = h_elem(rs, a[1], -1, ctx)
    return {"x1": x1, "x2": x2, "x3": x3, "x4": x4, "x5": x5, "x7": x7, "h2": h2}


def evaluate_con(g: dict[str, GroupElement]) -> ConReport:
    x1, x2, x3, x4, x5, x7, h2 = (g[k] for k in ("x1", "x2", "x3", "x4", "x5", "x7", "h2"))

    def prod(*fs: GroupElement) -> GroupElement:
        out = fs[0]
        for f in fs[1:]:
            out = mul(out, f)
        return out

    def is_one(e: GroupElement) -> bool:
        return e.is_identity()

    r = ConReport()
    r.results["Con1"] = is_one(prod(h2, x1, h2, x1))
    r.results["Con2"] = prod(x1, x4) == prod(x4, x1)
    r.results["Con3"] = prod(x1, x3) == prod(x3, x1)
    r.results["Con4"] = prod(x1, x2) == prod(x4, x2, x1)
    r.results["Con5"] = prod(x7, x3) == prod(x3, x7)
    r.results["Con6"] = is_one(prod(h2, x3, h2, x3))
    r.results["Con7"] = prod(x7, x7, x3, x5) == prod(x5, x3)
    return r


def check_con_suite(ctx: RingContext, x1: GroupElement | None = None,
                    x3: GroupElement | None = None) -> ConReport:
    """Con1..Con7 on the generators with w_i = w_{alpha_i}(1), in rank 3."""
    return evaluate_con(con_generators(ctx, x1, x3=x3))


def perturb(g: GroupElement, kind: str, root: Root | None, j: RingValue) -> GroupElement:
    """g x_root(j) (kind "x") or g h(chi) with chi(alpha_k) = 1 + j at k = 1 (kind "h")."""
    rs = g.rs
    if kind == "x":
        return mul(g, x_elem(rs, root, j))
    one = j.ctx.one
    return mul(g, h_char(TorusCharacter(rs, [one + j] + [one] * (rs.rank - 1))))


def con_suite_variants(ctx: RingContext) -> dict[tuple, ConReport]:
    """The suite for every sign choice w_i = w_{alpha_i}(+-1) (diagnostic)."""
    out = {}
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                out[(s1, s2, s3)] = evaluate_con(con_generators(ctx, w_params=(s1, s2, s3)))
    return out


# --- involutions on the Cartan block ---------------------------------------

def cartan_block(g: GroupElement) -> np.ndarray:
    """The l x l block of g on V_{h_1}, ..., V_{h_l}, as integers."""
    rs = g.rs
    lo = 2 * rs.m
    out = np.zeros((rs.rank, rs.rank), dtype=object)
    for i in range(rs.rank):
        for j in range(rs.rank):
            out[i, j] = _lift(g.matrix[lo + i, lo + j])
    return out


@lru_cache(maxsize=None)
def _weyl_blocks(rank: int) -> tuple[np.ndarray, ...]:
    # w_alpha(1) has integer entries, so plain integer products are exact here
    rs = RootSystem(rank)
    one = np.eye(rs.n, dtype=np.int64)
    out = []
    for a in rs.simple:
        xp = one + ad_matrix(rs, a) + divided_square(rs, a)
        xm = one - ad_matrix(rs, -a) + divided_square(rs, -a)
        w = xp @ xm @ xp
        lo = 2 * rs.m
        out.append(w[lo:, lo:].astype(object))
    return tuple(out)


def weyl_block(rs: RootSystem, i: int) -> np.ndarray:
    """w~_i: the Cartan block of w_{alpha_i}(1), 1-based ``i``."""
    return _weyl_blocks(rs.rank)[i - 1].copy()


def eigen_projectors(w: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(e, 1 - e) with e = (1 + w)/2; their images are V_0 and V_1."""
    n = w.shape[0]
    one = np.eye(n, dtype=object)
    if not np.array_equal(w.dot(w), one):
        raise ValueError("not an involution")
    e = (one + w) * Fraction(1, 2)
    return e, one - e


def _contained(p_small: np.ndarray, p_big: np.ndarray) -> bool:
    """image(p_small) inside image(p_big) for idempotents: p_big p_small = p_small."""
    return np.array_equal(p_big.dot(p_small), p_small)


def check_involution_commuting(rs: RootSystem, i: int, j: int) -> tuple[bool, bool]:
    """(w~_i and w~_j commute, V_1^i in V_0^j and V_1^j in V_0^i).

    The two entries agree exactly when the equivalence holds for (i, j).
    """
    if i == j:
        raise ValueError("check_involution_commuting needs i != j")
    wi, wj = weyl_block(rs, i), weyl_block(rs, j)
    e0i, e1i = eigen_projectors(wi)
    e0j, e1j = eigen_projectors(wj)
    commute = np.array_equal(wi.dot(wj), wj.dot(wi))
    split = _contained(e1i, e0j) and _contained(e1j, e0i)
    return bool(commute), bool(split)
