"""Chevalley basis of the Lie algebra of type B_l and its adjoint matrices.

Structure constants come from an explicit realization inside so(2l+1): the
simple root vectors are fixed matrices, and every other positive root vector
is defined through its extraspecial pair (alpha, beta) by
[x_alpha, x_beta] = (p + 1) x_{alpha + beta}, with N(-a, -b) = -N(a, b) on
the negative side.  All other constants are read off from brackets.

The adjoint module uses the basis v_{alpha_1}, v_{-alpha_1}, ...,
v_{alpha_m}, v_{-alpha_m}, V_{h_1}, ..., V_{h_l}.  It is the Chevalley basis
rescaled so that long-root vectors and h_1, ..., h_{l-1} carry weight 2
against weight 1 for short-root vectors and h_l, followed by a fixed sign
pattern; see ``docs/basis.md``.  Over any ring containing 1/2 this is
conjugate to the integral Chevalley lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .roots import Root, RootError, RootSystem


# matrices of the natural module are kept as (integer array, denominator)
_Q = tuple


def _unit(size: int, i: int, j: int) -> _Q:
    m = np.zeros((size, size), dtype=np.int64)
    m[i, j] = 1
    return m, 1


def _reduce(m: np.ndarray, d: int) -> _Q:
    g = math.gcd(int(np.gcd.reduce(m, axis=None)), d)
    return (m // g, d // g) if g > 1 else (m, d)


def _lin(a: _Q, ca: int, b: _Q, cb: int) -> _Q:
    """ca * a + cb * b."""
    return _reduce(ca * a[0] * b[1] + cb * b[0] * a[1], a[1] * b[1])


def _bracket(a: _Q, b: _Q) -> _Q:
    return _reduce(a[0] @ b[0] - b[0] @ a[0], a[1] * b[1])


def _divide(a: _Q, d: int) -> _Q:
    return _reduce(a[0], a[1] * d)


def _value(a: _Q) -> np.ndarray:
    """Exact object array (ints, or Fractions when the denominator is not 1)."""
    m = a[0].astype(object)
    return m if a[1] == 1 else m * Fraction(1, a[1])


def _ratio(a: _Q, b: _Q) -> Fraction:
    """The scalar c with a = c * b (b nonzero); raises if none exists."""
    idx = np.argwhere(b[0] != 0)
    i, j = idx[0]
    c = Fraction(int(a[0][i, j]) * b[1], int(b[0][i, j]) * a[1])
    if not np.array_equal(a[0] * b[1] * c.denominator, b[0] * a[1] * c.numerator):
        raise ArithmeticError("matrices are not proportional")
    return c


class StructureConstants:
    """N(alpha, beta) for all root pairs of B_l with alpha + beta a root."""

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        l = rs.rank
        size = 2 * l + 1
        # natural module: index 0 weight 0, index i weight e_i, index l+i weight -e_i
        P = lambda i: i  # noqa: E731
        M = lambda i: l + i  # noqa: E731
        vec: dict[Root, np.ndarray] = {}
        for k, a in enumerate(rs.simple[:-1], start=1):
            vec[a] = _lin(_unit(size, P(k), P(k + 1)), 1, _unit(size, M(k + 1), M(k)), -1)
            vec[-a] = _lin(_unit(size, P(k + 1), P(k)), 1, _unit(size, M(k), M(k + 1)), -1)
        al = rs.simple[-1]
        vec[al] = _lin(_unit(size, P(l), 0), 1, _unit(size, 0, M(l)), -1)
        vec[-al] = _lin(_unit(size, 0, P(l)), 2, _unit(size, M(l), 0), -2)
        self.extraspecial: dict[Root, tuple[Root, Root]] = {}
        for xi in rs.positive:
            if xi in vec:
                continue
            # minimal alpha in the fixed order; simple roots come first
            for a in rs.positive:
                b = xi - a
                if b in rs and rs.is_positive(b) and rs.positive_index(a) < rs.positive_index(b):
                    break
            else:  # pragma: no cover - every non-simple root decomposes
                raise RootError(f"no extraspecial pair for {xi}")
            self.extraspecial[xi] = (a, b)
            p, _ = rs.root_string(a, b)
            vec[xi] = _divide(_bracket(vec[a], vec[b]), p + 1)
            vec[-xi] = _divide(_bracket(vec[-b], vec[-a]), p + 1)
        self._vec = vec
        self.h = [_value(_bracket(vec[a], vec[-a])) for a in rs.simple]
        table: dict[tuple[Root, Root], int] = {}
        for a in rs.roots:
            for b in rs.roots:
                s = a + b
                if s in rs:
                    c = _ratio(_bracket(vec[a], vec[b]), vec[s])
                    if c.denominator != 1:
                        raise ArithmeticError(f"N({a}, {b}) = {c} is not integral")
                    table[(a, b)] = int(c)
        self.table = table

    def __call__(self, alpha: Root, beta: Root) -> int:
        """N(alpha, beta); zero when alpha + beta is not a root."""
        return self.table.get((alpha, beta), 0)

    def coroot_vector(self, alpha: Root) -> np.ndarray:
        return _value(_bracket(self._vec[alpha], self._vec[-alpha]))

    def check(self) -> list[str]:
        """Validate antisymmetry, |N| = p + 1, h_alpha and Jacobi; returns failures."""
        rs = self.rs
        bad = []
        for (a, b), n in self.table.items():
            if self(b, a) != -n:
                bad.append(f"antisymmetry N({a},{b})")
            p, _ = rs.root_string(a, b)
            if abs(n) != p + 1:
                bad.append(f"|N({a},{b})| != {p + 1}")
            if self(-a, -b) != -n:
                bad.append(f"N(-a,-b) sign at ({a},{b})")
        for a in rs.roots:
            h = self.coroot_vector(a)
            comb = sum(c * hi for c, hi in zip(rs.coroot_coefficients(a), self.h))
            if not np.all(h == comb):
                bad.append(f"h_{a} is not the coroot combination")
        # Jacobi in the form ad[x, y] = [ad x, ad y] on all basis pairs
        ad = {b: chevalley_ad(rs, b) for b in rs.roots}
        had = [chevalley_ad_h(rs, i) for i in range(1, rs.rank + 1)]
        for a in rs.roots:
            for b in rs.roots:
                lhs = ad[a] @ ad[b] - ad[b] @ ad[a]
                if a + b in rs:
                    rhs = self(a, b) * ad[a + b]
                elif (a + b).is_zero():
                    rhs = sum(c * h for c, h in zip(rs.coroot_coefficients(a), had))
                else:
                    rhs = 0 * lhs
                if not np.array_equal(lhs, rhs):
                    bad.append(f"Jacobi at ({a}, {b})")
            for i, h in enumerate(had):
                if not np.array_equal(h @ ad[a] - ad[a] @ h, rs.pairing(a, rs.simple[i]) * ad[a]):
                    bad.append(f"Jacobi at (h{i + 1}, {a})")
        return bad


def structure_constants(rs: RootSystem | int) -> StructureConstants:
    """The (cached) table for B_l; accepts a RootSystem or the rank."""
    return _sc_cached(rs if isinstance(rs, int) else rs.rank)


@lru_cache(maxsize=None)
def _sc_cached(rank: int) -> StructureConstants:
    return StructureConstants(RootSystem(rank))


@dataclass(frozen=True)
class BasisIndex:
    """Labels of the adjoint basis and their positions."""

    rs: RootSystem

    @property
    def n(self) -> int:
        return self.rs.n

    def root_index(self, r: Root) -> int:
        rs = self.rs
        if rs.is_positive(r):
            return 2 * rs.positive_index(r)
        return 2 * rs.positive_index(-r) + 1

    def h_index(self, i: int) -> int:
        """Position of V_{h_i}, 1-based ``i``."""
        if not 1 <= i <= self.rs.rank:
            raise IndexError(f"h_{i} out of range")
        return 2 * self.rs.m + i - 1

    def labels(self) -> list[str]:
        out = []
        for r in self.rs.positive:
            out += [f"v[{r}]", f"v[{-r}]"]
        out += [f"V[h{i}]" for i in range(1, self.rs.rank + 1)]
        return out

    def label(self, k: int) -> str:
        return self.labels()[k]

    def index(self, label: str) -> int:
        """Inverse of ``label``; also accepts a bare root literal or ``h3``."""
        s = label.strip().replace(" ", "")
        if s.startswith("V[") or s.startswith("h"):
            return self.h_index(int(s.strip("V[]h")))
        if s.startswith("v["):
            s = s[2:-1]
        return self.root_index(self.rs.root(s))

    def weight(self, k: int) -> Root | None:
        """Root of the k-th basis vector, or None on the Cartan part."""
        if k >= 2 * self.rs.m:
            return None
        r = self.rs.positive[k // 2]
        return r if k % 2 == 0 else -r


def chevalley_ad(rs: RootSystem, alpha: Root) -> np.ndarray:
    """Integer matrix of ad x_alpha in the unscaled Chevalley basis (column convention)."""
    sc = structure_constants(rs.rank)
    bi = BasisIndex(rs)
    out = np.zeros((rs.n, rs.n), dtype=np.int64)
    for beta in rs.roots:
        col = bi.root_index(beta)
        if beta == -alpha:
            for i, c in enumerate(rs.coroot_coefficients(alpha), start=1):
                out[bi.h_index(i), col] = c
        elif alpha + beta in rs:
            out[bi.root_index(alpha + beta), col] = sc(alpha, beta)
    row = bi.root_index(alpha)
    for i, a in enumerate(rs.simple, start=1):
        out[row, bi.h_index(i)] = -rs.pairing(alpha, a)
    return out


def chevalley_ad_h(rs: RootSystem, i: int) -> np.ndarray:
    """Diagonal matrix of ad h_i: <beta, alpha_i> on v_beta, 0 on the Cartan part."""
    bi = BasisIndex(rs)
    d = [rs.pairing(bi.weight(k), rs.simple[i - 1]) if k < 2 * rs.m else 0 for k in range(rs.n)]
    return np.diag(np.array(d, dtype=np.int64))


def _exp_nilpotent(x: np.ndarray, t: int) -> np.ndarray:
    """1 + t x + t^2 x^2 / 2 for an integer matrix with x^3 = 0 and x^2 / 2 integral."""
    n = x.shape[0]
    sq = x @ x
    if np.any(sq % 2):
        raise ArithmeticError("x^2 / 2 is not integral")
    return np.eye(n, dtype=np.int64) + t * x + (t * t) * (sq // 2)


def _weyl_rational(rs: RootSystem, alpha: Root, ad=chevalley_ad) -> np.ndarray:
    a, b = ad(rs, alpha), ad(rs, -alpha)
    return _exp_nilpotent(a, 1) @ _exp_nilpotent(b, -1) @ _exp_nilpotent(a, 1)


class CalibrationError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def calibration(rank: int) -> tuple[Fraction, ...]:
    """Diagonal D with ad_matrix(alpha) = D chevalley_ad(alpha) D^{-1}.

    Weights: 1/2 on long-root vectors and V_{h_1..h_{l-1}}, 1 on short-root
    vectors and V_{h_l}.  Signs: + on the Cartan part and on alpha_1, alpha_l;
    otherwise fixed by requiring w_{alpha_i}(1) v_gamma = +v_{s_i gamma}
    whenever s_i moves gamma closer to the simple roots.
    """
    rs = RootSystem(rank)
    bi = BasisIndex(rs)
    weyl = [_weyl_rational(rs, a) for a in rs.simple]
    edges = []
    for i, a in enumerate(rs.simple):
        for g in rs.roots:
            s = rs.reflect(a, g)
            if s in (g, -g) or abs(rs.height(s)) >= abs(rs.height(g)):
                continue
            val = weyl[i][bi.root_index(s), bi.root_index(g)]
            edges.append((g, s, 1 if val > 0 else -1))

    def key(r: Root) -> Root:
        return r if rs.is_positive(r) else -r

    sign = {rs.simple[0]: 1, rs.simple[-1]: 1}
    grew = True
    while grew:
        grew = False
        for g, s, v in edges:
            kg, ks = key(g), key(s)
            if kg in sign and ks not in sign:
                sign[ks] = sign[kg] * v
                grew = True
            elif ks in sign and kg not in sign:
                sign[kg] = sign[ks] * v
                grew = True
    if len(sign) != rs.m or any(sign[key(g)] * sign[key(s)] * v != 1 for g, s, v in edges):
        raise CalibrationError(f"inconsistent sign calibration for B{rank}")
    out = []
    for k in range(rs.n):
        w = bi.weight(k)
        if w is None:
            out.append(Fraction(1) if k == rs.n - 1 else Fraction(1, 2))
        else:
            out.append(sign[key(w)] * (Fraction(1, 2) if w.is_long else Fraction(1)))
    return tuple(out)


def calibrate(rank: int, m: np.ndarray) -> np.ndarray:
    """D m D^{-1} as an int64 array; raises if an entry is not integral."""
    d = calibration(rank)
    n = len(d)
    out = np.zeros((n, n), dtype=np.int64)
    for i, j in zip(*np.nonzero(m)):
        v = Fraction(m[i, j]) * d[i] / d[j]
        if v.denominator != 1:
            raise CalibrationError(f"non-integral calibrated entry at ({i}, {j})")
        out[i, j] = int(v)
    return out


@lru_cache(maxsize=None)
def _ad_cached(rank: int, alpha: Root) -> np.ndarray:
    rs = RootSystem(rank)
    out = calibrate(rank, chevalley_ad(rs, alpha))
    out.setflags(write=False)
    return out


def ad_matrix(rs: RootSystem, alpha: Root | str) -> np.ndarray:
    """Integer matrix of ad x_alpha in the calibrated adjoint basis (read-only)."""
    alpha = rs.root(alpha)
    return _ad_cached(rs.rank, alpha)


@lru_cache(maxsize=None)
def _half_square_cached(rank: int, alpha: Root) -> np.ndarray:
    x = _ad_cached(rank, alpha)
    sq = x @ x
    if np.any(sq % 2):
        raise CalibrationError(f"(ad x_{alpha})^2 / 2 is not integral")
    out = sq // 2
    out.setflags(write=False)
    return out


def divided_square(rs: RootSystem, alpha: Root | str) -> np.ndarray:
    """(ad x_alpha)^2 / 2 as an integer matrix."""
    return _half_square_cached(rs.rank, rs.root(alpha))


def ad_h(rs: RootSystem, i: int) -> np.ndarray:
    """ad h_i; diagonal, hence unchanged by the calibration."""
    return chevalley_ad_h(rs, i)


def coefficient_diagonal(rs: RootSystem, i: int) -> np.ndarray:
    """T_i: coefficient of alpha_i in beta at v_beta, zero on the Cartan part."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i} out of range 1..{rs.rank}")
    bi = BasisIndex(rs)
    d = []
    for k in range(rs.n):
        w = bi.weight(k)
        d.append(0 if w is None else rs.simple_coefficients(w)[i - 1])
    return np.diag(np.array(d, dtype=np.int64))


def coroot_image(rs: RootSystem, alpha: Root | str) -> dict[int, int]:
    """Column of ad_matrix(alpha) at v_{-alpha}: the calibrated h_alpha, keyed by i."""
    alpha = rs.root(alpha)
    bi = BasisIndex(rs)
    col = ad_matrix(rs, alpha)[:, bi.root_index(-alpha)]
    return {i: int(col[bi.h_index(i)]) for i in range(1, rs.rank + 1) if col[bi.h_index(i)]}


def to_ring(ctx, m: np.ndarray):
    """Map an integer matrix into ``ctx`` as a :class:`Matrix`."""
    from .matrices import Matrix

    return Matrix.from_integers(ctx, m)
