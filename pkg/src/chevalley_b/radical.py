"""Products lambda * torus * positive unipotents * negative unipotents near 1.

An element congruent to 1 modulo the radical J is written as

    X = lambda t_{alpha_1}(s_1) ... t_{alpha_l}(s_l)
        x_{alpha_1}(t_1) ... x_{alpha_m}(t_m) x_{-alpha_1}(u_1) ... x_{-alpha_m}(u_m)

with lambda, s_k in 1 + J and t_i, u_i in J.  Exactly n + 1 entries of X
determine all coefficients.  They are read along the chain gamma_1, ...,
gamma_{2l-1} (see ``RootSystem.gamma_sequence``):

* the diagonal (-gamma_s, -gamma_s) for s <= l + 1 (these fix lambda, s_k);
* (-gamma_i, -gamma_s) and (-gamma_s, -gamma_i) whenever gamma_i - gamma_s
  is a root not met before (parameters of -+(gamma_i - gamma_s));
* (-beta, V_h) and (V_h, -beta) for the gammas not met as such a difference,
  then for any positive root that is neither (this last group is empty for
  l <= 3; the chain does not reach every root of B_l once l >= 4).

The linear part of the entry map at the identity is invertible whenever 2 is
a unit, so the coefficients are recovered by the chord iteration
c <- c + L^-1 (X - F(c)) on those entries.  If J^N = 0 the error after k
sweeps lies in J^(k+1), hence at most N sweeps are needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .group import GroupElement, TorusCharacter, h_char, mul, x_elem
from .lie import BasisIndex, ad_matrix
from .matrices import Matrix
from .rings import RingContext, RingError, RingValue
from .roots import Root, RootSystem


class NotRadicalCongruent(ValueError):
    pass


class UnsupportedRing(ValueError):
    pass


@dataclass(frozen=True)
class RadicalCoefficients:
    """lambda, s_1..s_l in 1 + J and t_1..t_m, u_1..u_m in J (positive-root order)."""

    lam: RingValue
    s: tuple[RingValue, ...]
    t: tuple[RingValue, ...]
    u: tuple[RingValue, ...]

    @property
    def ctx(self) -> RingContext:
        return self.lam.ctx

    @classmethod
    def trivial(cls, rs: RootSystem, ctx: RingContext) -> RadicalCoefficients:
        one, zero = ctx.one, ctx.zero
        return cls(one, (one,) * rs.rank, (zero,) * rs.m, (zero,) * rs.m)

    @classmethod
    def random(cls, rs: RootSystem, ctx: RingContext, rng) -> RadicalCoefficients:
        one = ctx.one
        return cls(one + ctx.random_radical(rng),
                   tuple(one + ctx.random_radical(rng) for _ in range(rs.rank)),
                   tuple(ctx.random_radical(rng) for _ in range(rs.m)),
                   tuple(ctx.random_radical(rng) for _ in range(rs.m)))

    def as_vector(self) -> list[RingValue]:
        """Additive coordinates: lambda - 1, s_k - 1, t_i, u_i."""
        one = self.ctx.one
        return [self.lam - one, *(x - one for x in self.s), *self.t, *self.u]

    @classmethod
    def from_vector(cls, rs: RootSystem, vec: Sequence[RingValue]) -> RadicalCoefficients:
        l, m = rs.rank, rs.m
        one = vec[0].ctx.one
        return cls(one + vec[0], tuple(one + x for x in vec[1:l + 1]),
                   tuple(vec[l + 1:l + 1 + m]), tuple(vec[l + 1 + m:]))

    def validate(self, rs: RootSystem) -> None:
        if len(self.s) != rs.rank or len(self.t) != rs.m or len(self.u) != rs.m:
            raise ValueError(f"need {rs.rank} s, {rs.m} t and {rs.m} u values")
        vals = [self.lam, *self.s, *self.t, *self.u]
        if any(v.ctx != self.ctx for v in vals):
            raise RingError("coefficients from different rings")
        one = self.ctx.one
        for name, v in [("lambda", self.lam), *(("s", x) for x in self.s)]:
            if not (v - one).in_radical():
                raise ValueError(f"{name} = {v} is not congruent to 1 modulo J")
        for name, v in [*(("t", x) for x in self.t), *(("u", x) for x in self.u)]:
            if not v.in_radical():
                raise ValueError(f"{name} = {v} is not in the radical")

    def to_json(self) -> dict:
        f = self.ctx.format
        return {"lambda": f(self.lam), "s": [f(x) for x in self.s],
                "t": [f(x) for x in self.t], "u": [f(x) for x in self.u]}

    @classmethod
    def from_json(cls, ctx: RingContext, data: dict | str) -> RadicalCoefficients:
        if isinstance(data, str):
            data = json.loads(data)
        p = lambda x: ctx.parse(str(x))
        return cls(p(data.get("lambda", "1")), tuple(map(p, data["s"])),
                   tuple(map(p, data["t"])), tuple(map(p, data["u"])))


def torus_factor(rs: RootSystem, k: int, s: RingValue) -> GroupElement:
    """t_{alpha_k}(s): the torus element with chi(alpha_k) = s, chi(alpha_j) = 1 otherwise."""
    one = s.ctx.one
    return h_char(TorusCharacter(rs, [s if j == k else one for j in range(1, rs.rank + 1)]))


def compose(rs: RootSystem, c: RadicalCoefficients, check: bool = True) -> Matrix:
    if check:
        c.validate(rs)
    g = h_char(TorusCharacter(rs, list(c.s)))   # t_{alpha_1}(s_1)...t_{alpha_l}(s_l)
    for r, t in zip(rs.positive, c.t):
        if t:
            g = mul(g, x_elem(rs, r, t))
    for r, u in zip(rs.positive, c.u):
        if u:
            g = mul(g, x_elem(rs, -r, u))
    return g.matrix.scale(c.lam)


# --- designated positions ---------------------------------------------------

@dataclass(frozen=True)
class Position:
    row: int
    col: int
    role: str   # "diag", or the coefficient it leads: "t[e1-e2]", "u[e1-e2]"


def _cartan_entry(rs: RootSystem, beta: Root, row_side: bool) -> int:
    """h_k with the smallest nonzero entry of ad x_{-beta} at (v_-beta, V_h_k) (row_side)
    or of ad x_beta at (V_h_k, v_-beta)."""
    bi = BasisIndex(rs)
    r = bi.root_index(-beta)
    if row_side:
        x = ad_matrix(rs, -beta)
        vals = {k: int(x[r, bi.h_index(k)]) for k in range(1, rs.rank + 1)}
    else:
        x = ad_matrix(rs, beta)
        vals = {k: int(x[bi.h_index(k), r]) for k in range(1, rs.rank + 1)}
    return min((k for k, v in vals.items() if v), key=lambda k: (abs(vals[k]), k))


@lru_cache(maxsize=None)
def _positions(rank: int) -> tuple[Position, ...]:
    rs = RootSystem(rank)
    bi = BasisIndex(rs)
    g = rs.gamma_sequence()
    R = bi.root_index
    out = [Position(R(-g[0]), R(-g[0]), "diag")]
    seen: set[Root] = set()
    for s in range(1, len(g)):
        for i in range(s):
            d = g[i] - g[s]
            if d in rs and d not in seen:
                seen.add(d)
                out.append(Position(R(-g[i]), R(-g[s]), f"u[{d}]"))
                out.append(Position(R(-g[s]), R(-g[i]), f"t[{d}]"))
        if s <= rank:
            out.append(Position(R(-g[s]), R(-g[s]), "diag"))
    rest = [r for r in list(g) + list(rs.positive) if r not in seen]
    for b in dict.fromkeys(rest):
        out.append(Position(R(-b), bi.h_index(_cartan_entry(rs, b, True)), f"u[{b}]"))
        out.append(Position(bi.h_index(_cartan_entry(rs, b, False)), R(-b), f"t[{b}]"))
    return tuple(out)


def designated_positions(rs: RootSystem) -> list[tuple[str, str]]:
    """The n + 1 entries (row label, column label) read by ``reconstruct``, in order."""
    bi = BasisIndex(rs)
    return [(bi.label(p.row), bi.label(p.col)) for p in _positions(rs.rank)]


def position_roles(rs: RootSystem) -> list[Position]:
    return list(_positions(rs.rank))


@lru_cache(maxsize=None)
def _linearization(rank: int) -> tuple[tuple[Fraction, ...], ...]:
    """Inverse of the linear part L of the designated entries at the identity."""
    rs = RootSystem(rank)
    bi = BasisIndex(rs)
    cols = [np.eye(rs.n, dtype=np.int64)]
    for k in range(1, rank + 1):
        cols.append(np.diag([0 if bi.weight(j) is None else rs.simple_coefficients(bi.weight(j))[k - 1]
                             for j in range(rs.n)]))
    cols += [ad_matrix(rs, b) for b in rs.positive]
    cols += [ad_matrix(rs, -b) for b in rs.positive]
    pos = _positions(rank)
    L = [[Fraction(int(c[p.row, p.col])) for c in cols] for p in pos]
    return tuple(tuple(row) for row in _invert_rational(L))


def _invert_rational(a: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if p is None:
            raise ArithmeticError("designated positions are not independent")
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def linearization_denominators(rs: RootSystem) -> set[int]:
    """Denominators in L^-1; all are powers of 2."""
    return {x.denominator for row in _linearization(rs.rank) for x in row}


def reconstruct(x: Matrix, rs: RootSystem, max_sweeps: int | None = None) -> RadicalCoefficients:
    """The unique coefficients whose product agrees with ``x`` on the designated entries."""
    ctx = x.ctx
    if x.n != rs.n:
        raise ValueError(f"matrix size {x.n} does not match n = {rs.n}")
    nil = ctx.radical_nilpotency
    if nil is None:
        raise UnsupportedRing(f"{ctx!r}: the radical is not nilpotent")
    if not ctx.is_unit(ctx(2)):
        raise UnsupportedRing(f"{ctx!r}: 2 is not a unit")
    d = x - Matrix.identity(ctx, rs.n)
    for i, j in d.nonzero():
        if not d[i, j].in_radical():
            raise NotRadicalCongruent(f"entry ({i}, {j}) = {x[i, j]} is not congruent to the identity")
    pos = _positions(rs.rank)
    inv = [[ctx(v) for v in row] for row in _linearization(rs.rank)]
    target = [x[p.row, p.col] for p in pos]
    c = RadicalCoefficients.trivial(rs, ctx)
    sweeps = max_sweeps if max_sweeps is not None else nil + 1
    for _ in range(sweeps):
        f = compose(rs, c, check=False)
        res = [tv - f[p.row, p.col] for tv, p in zip(target, pos)]
        if not any(res):
            return c
        vec = c.as_vector()
        for i, row in enumerate(inv):
            acc = ctx.zero
            for a, r in zip(row, res):
                if a and r:
                    acc = acc + a * r
            vec[i] = vec[i] + acc
        c = RadicalCoefficients.from_vector(rs, vec)
    f = compose(rs, c, check=False)
    if any(tv != f[p.row, p.col] for tv, p in zip(target, pos)):
        raise ArithmeticError("chord iteration did not converge")
    return c
