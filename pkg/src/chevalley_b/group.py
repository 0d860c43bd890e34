"""Elements of the elementary adjoint Chevalley group E_ad(B_l, R).

Generators act on the adjoint module in the calibrated basis of
:mod:`chevalley_b.lie`:

    x_alpha(t) = 1 + t ad x_alpha + t^2 (ad x_alpha)^2 / 2
    w_alpha(t) = x_alpha(t) x_{-alpha}(-t^-1) x_alpha(t)
    h_alpha(t) = diag(t^<beta, alpha>)  (1 on the Cartan part)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .lie import ad_matrix, divided_square
from .matrices import Matrix
from .rings import ContextMismatch, NonUnit, RingContext, RingValue
from .roots import Root, RootSystem

_KINDS = ("x", "w", "h", "chi")


@lru_cache(maxsize=None)
def _generator_parts(ctx: RingContext, rank: int, alpha: Root) -> tuple[Matrix, Matrix]:
    rs = RootSystem(rank)
    return (Matrix.from_integers(ctx, ad_matrix(rs, alpha)),
            Matrix.from_integers(ctx, divided_square(rs, alpha)))


def _value(ctx: RingContext | None, t) -> RingValue:
    if isinstance(t, RingValue):
        if ctx is not None and t.ctx != ctx:
            raise ContextMismatch(f"{t!r} is not in {ctx!r}")
        return t
    if ctx is None:
        raise TypeError("a ring context is needed for a plain parameter")
    return ctx(t)


class TorusCharacter:
    """A homomorphism chi from the root lattice to R*, fixed by chi(alpha_i)."""

    def __init__(self, rs: RootSystem, values: Sequence, ctx: RingContext | None = None) -> None:
        if len(values) != rs.rank:
            raise ValueError(f"need {rs.rank} values, got {len(values)}")
        vals = tuple(_value(ctx, v) for v in values)
        for v in vals:
            if not v.is_unit():
                raise NonUnit(f"chi value {v} is not a unit")
        self.rs = rs
        self.values = vals
        self.ctx = vals[0].ctx

    @classmethod
    def of_root(cls, rs: RootSystem, alpha: Root | str, u: RingValue) -> TorusCharacter:
        """chi_{alpha,u}: beta -> u^<beta, alpha>."""
        alpha = rs.root(alpha)
        return cls(rs, [u ** rs.pairing(a, alpha) for a in rs.simple])

    def __call__(self, beta: Root | str) -> RingValue:
        beta = self.rs.root(beta)
        out = None
        for v, c in zip(self.values, self.rs.simple_coefficients(beta)):
            if c:
                f = v ** c
                out = f if out is None else out * f
        return self.ctx.one if out is None else out

    def inverse(self) -> TorusCharacter:
        return TorusCharacter(self.rs, [v.inverse() for v in self.values])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TorusCharacter) and self.rs == other.rs and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.rs, self.values))

    def __repr__(self) -> str:
        return f"TorusCharacter({', '.join(map(str, self.values))})"


@dataclass(frozen=True)
class Factor:
    """One letter of a word: kind in x, w, h (root and parameter) or chi."""

    kind: str
    root: Root | None
    param: RingValue | TorusCharacter

    def inverse(self) -> Factor:
        if self.kind == "x":
            return Factor("x", self.root, -self.param)
        if self.kind == "w":
            return Factor("w", self.root, -self.param)
        return Factor(self.kind, self.root, self.param.inverse())

    def __str__(self) -> str:
        if self.kind == "chi":
            return f"h({self.param!r})"
        return f"{self.kind}_{{{self.root}}}({self.param})"


class GroupElement:
    """An invertible adjoint matrix, optionally with a word that produces it."""

    __slots__ = ("rs", "matrix", "word")

    def __init__(self, rs: RootSystem, matrix: Matrix, word: Sequence[Factor] | None = None) -> None:
        if matrix.n != rs.n:
            raise ValueError(f"matrix size {matrix.n} does not match n = {rs.n}")
        self.rs = rs
        self.matrix = matrix
        self.word = None if word is None else tuple(word)

    @property
    def ctx(self) -> RingContext:
        return self.matrix.ctx

    @classmethod
    def identity(cls, rs: RootSystem, ctx: RingContext) -> GroupElement:
        return cls(rs, Matrix.identity(ctx, rs.n), ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.rs == other.rs and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        w = "" if self.word is None else " ".join(map(str, self.word)) or "1"
        return f"GroupElement(B{self.rs.rank}, {self.ctx!r}, {w})"

    def __matmul__(self, other: GroupElement) -> GroupElement:
        return mul(self, other)

    def __pow__(self, e: int) -> GroupElement:
        base = self if e >= 0 else inv(self)
        out = GroupElement.identity(self.rs, self.ctx)
        for _ in range(abs(e)):
            out = mul(out, base)
        return out

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def det(self) -> RingValue:
        return self.matrix.det()

    def residue(self) -> GroupElement:
        """Reduction modulo the radical, word included."""
        word = None
        if self.word is not None:
            word = []
            for f in self.word:
                if f.kind == "chi":
                    p = TorusCharacter(self.rs, [v.residue() for v in f.param.values])
                else:
                    p = f.param.residue()
                word.append(Factor(f.kind, f.root, p))
        return GroupElement(self.rs, self.matrix.residue(), word)

    def evaluate_word(self) -> Matrix:
        """Multiply the recorded factors again (for the word invariant)."""
        if self.word is None:
            raise ValueError("no word recorded")
        out = Matrix.identity(self.ctx, self.rs.n)
        for f in self.word:
            out = out @ _factor_matrix(self.rs, f)
        return out


def _x_matrix(rs: RootSystem, alpha: Root, t: RingValue) -> Matrix:
    ad, half_sq = _generator_parts(t.ctx, rs.rank, alpha)
    one = Matrix.identity(t.ctx, rs.n)
    return one + ad.scale(t) + half_sq.scale(t * t)


def _h_diagonal(rs: RootSystem, chi_at) -> list[RingValue]:
    from .lie import BasisIndex

    bi = BasisIndex(rs)
    out = []
    for k in range(rs.n):
        w = bi.weight(k)
        out.append(chi_at(w) if w is not None else None)
    return out


def _factor_matrix(rs: RootSystem, f: Factor) -> Matrix:
    if f.kind == "x":
        return _x_matrix(rs, f.root, f.param)
    if f.kind == "w":
        t = f.param
        return _x_matrix(rs, f.root, t) @ _x_matrix(rs, -f.root, -t.inverse()) @ _x_matrix(rs, f.root, t)
    if f.kind == "h":
        t = f.param
        diag = _h_diagonal(rs, lambda b: t ** rs.pairing(b, f.root))
        return Matrix.diagonal(t.ctx, [t.ctx.one if d is None else d for d in diag])
    if f.kind == "chi":
        chi = f.param
        diag = _h_diagonal(rs, chi)
        return Matrix.diagonal(chi.ctx, [chi.ctx.one if d is None else d for d in diag])
    raise ValueError(f"unknown factor kind {f.kind!r}")


def x_elem(rs: RootSystem, alpha: Root | str, t, ctx: RingContext | None = None) -> GroupElement:
    """x_alpha(t); ``t`` a RingValue, or a plain number together with ``ctx``."""
    f = Factor("x", rs.root(alpha), _value(ctx, t))
    return GroupElement(rs, _factor_matrix(rs, f), (f,))


def w_elem(rs: RootSystem, alpha: Root | str, t, ctx: RingContext | None = None) -> GroupElement:
    """w_alpha(t) = x_alpha(t) x_{-alpha}(-1/t) x_alpha(t); ``t`` must be a unit."""
    t = _value(ctx, t)
    if not t.is_unit():
        raise NonUnit(f"w_alpha(t) needs a unit, got {t}")
    f = Factor("w", rs.root(alpha), t)
    return GroupElement(rs, _factor_matrix(rs, f), (f,))


def h_elem(rs: RootSystem, alpha: Root | str, t, ctx: RingContext | None = None) -> GroupElement:
    """h_alpha(t): t^<beta, alpha> at v_beta and 1 at every V_{h_j}."""
    t = _value(ctx, t)
    if not t.is_unit():
        raise NonUnit(f"h_alpha(t) needs a unit, got {t}")
    f = Factor("h", rs.root(alpha), t)
    return GroupElement(rs, _factor_matrix(rs, f), (f,))


def h_char(chi: TorusCharacter) -> GroupElement:
    """The torus element h(chi): chi(beta) at v_beta, 1 on the Cartan part."""
    f = Factor("chi", None, chi)
    return GroupElement(chi.rs, _factor_matrix(chi.rs, f), (f,))


def _check_same(g: GroupElement, h: GroupElement) -> None:
    if g.rs != h.rs:
        raise ContextMismatch(f"B{g.rs.rank} vs B{h.rs.rank}")
    if g.ctx != h.ctx:
        raise ContextMismatch(f"{g.ctx!r} vs {h.ctx!r}")


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    _check_same(g, h)
    word = None if g.word is None or h.word is None else g.word + h.word
    return GroupElement(g.rs, g.matrix @ h.matrix, word)


def inv(g: GroupElement) -> GroupElement:
    """Inverse; from the word when one is recorded (exact, and far cheaper)."""
    if g.word is None:
        return GroupElement(g.rs, g.matrix.inverse())
    word = tuple(f.inverse() for f in reversed(g.word))
    out = Matrix.identity(g.ctx, g.rs.n)
    for f in word:
        out = out @ _factor_matrix(g.rs, f)
    return GroupElement(g.rs, out, word)


def conj(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^-1."""
    return mul(mul(g, h), inv(g))


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """[g, h] = g h g^-1 h^-1."""
    return mul(mul(g, h), mul(inv(g), inv(h)))


def is_radical_congruent(g: GroupElement) -> bool:
    """True iff g is the identity modulo the radical J, entrywise."""
    d = g.matrix - Matrix.identity(g.ctx, g.rs.n)
    return all(d[i, j].in_radical() for i, j in d.nonzero())
