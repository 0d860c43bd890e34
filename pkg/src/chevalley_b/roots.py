"""The root system B_l in the orthonormal basis e_1, ..., e_l."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations


class RootError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Root:
    """An integer vector; a root of B_l is e_i +- e_j (long) or +-e_i (short)."""

    coords: tuple[int, ...]

    @classmethod
    def parse(cls, text: str, rank: int) -> Root:
        """Parse ``'e1-e2'``, ``'-e3'``, ``'e1+e2'`` (spaces ignored)."""
        s = text.replace(" ", "")
        if not s:
            raise RootError("empty root literal")
        coords = [0] * rank
        pos = 0
        for m in re.finditer(r"([+-]?)(\d*)\*?e(\d+)", s):
            if m.start() != pos:
                raise RootError(f"bad root literal {text!r}")
            pos = m.end()
            i = int(m.group(3))
            if not 1 <= i <= rank:
                raise RootError(f"index e{i} out of range for rank {rank}")
            c = int(m.group(2) or 1)
            coords[i - 1] += -c if m.group(1) == "-" else c
        if pos != len(s):
            raise RootError(f"bad root literal {text!r}")
        return cls(tuple(coords))

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}e{i}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else (s or "0")

    def __add__(self, other: Root) -> Root:
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Root) -> Root:
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Root:
        return Root(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> Root:
        return Root(tuple(k * a for a in self.coords))

    def dot(self, other: Root) -> int:
        return sum(a * b for a, b in zip(self.coords, other.coords))

    @property
    def norm2(self) -> int:
        return self.dot(self)

    @property
    def is_long(self) -> bool:
        return self.norm2 == 2

    @property
    def is_short(self) -> bool:
        return self.norm2 == 1

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)


def pairing(beta: Root, alpha: Root) -> int:
    """<beta, alpha> = 2(beta, alpha) / (alpha, alpha)."""
    num = 2 * beta.dot(alpha)
    den = alpha.norm2
    if den == 0 or num % den:
        raise RootError(f"<{beta}, {alpha}> is not an integer")
    return num // den


def reflect(alpha: Root, beta: Root) -> Root:
    """Image of ``beta`` under the reflection in ``alpha``."""
    k = pairing(beta, alpha)
    return beta - k * alpha


def e(i: int, rank: int) -> Root:
    return Root(tuple(1 if t == i - 1 else 0 for t in range(rank)))


class RootSystem:
    """B_l with the positive roots ordered by height, then by coordinates descending.

    For l = 3 this order is exactly alpha_1, ..., alpha_9 = e1-e2, e2-e3, e3,
    e1-e3, e2, e1, e2+e3, e1+e3, e1+e2; the simple roots always come first.
    """

    def __init__(self, rank: int) -> None:
        if rank < 2:
            raise RootError(f"B_l needs l >= 2, got {rank}")
        self.rank = rank
        l = rank
        simple = [e(i, l) - e(i + 1, l) for i in range(1, l)] + [e(l, l)]
        self.simple: tuple[Root, ...] = tuple(simple)
        pos = [e(i, l) for i in range(1, l + 1)]
        for i, j in combinations(range(1, l + 1), 2):
            pos += [e(i, l) - e(j, l), e(i, l) + e(j, l)]
        pos.sort(key=lambda r: (self.height(r), tuple(-c for c in r.coords)))
        self.positive: tuple[Root, ...] = tuple(pos)
        self.roots: tuple[Root, ...] = tuple(pos) + tuple(-r for r in pos)
        self._root_set = frozenset(self.roots)
        self._pos_index = {r: i for i, r in enumerate(pos)}

    def __repr__(self) -> str:
        return f"RootSystem(B{self.rank})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and other.rank == self.rank

    def __hash__(self) -> int:
        return hash(("B", self.rank))

    @property
    def m(self) -> int:
        """Number of positive roots."""
        return len(self.positive)

    @property
    def n(self) -> int:
        """Dimension of the adjoint representation."""
        return self.rank + 2 * self.m

    def __contains__(self, r: Root) -> bool:
        return r in self._root_set

    def root(self, text: str | Root) -> Root:
        r = text if isinstance(text, Root) else Root.parse(text, self.rank)
        if r not in self:
            raise RootError(f"{r} is not a root of B{self.rank}")
        return r

    def is_positive(self, r: Root) -> bool:
        return r in self._pos_index

    def positive_index(self, r: Root) -> int:
        """0-based position of a positive root in the fixed order."""
        return self._pos_index[r]

    def simple_coefficients(self, r: Root) -> tuple[int, ...]:
        """Coefficients c_i with r = sum c_i alpha_i.

        With alpha_i = e_i - e_{i+1} and alpha_l = e_l, the coefficient of
        alpha_i is the partial sum of the first i coordinates.
        """
        out, acc = [], 0
        for c in r.coords:
            acc += c
            out.append(acc)
        return tuple(out)

    def height(self, r: Root) -> int:
        return sum(self.simple_coefficients(r))

    def coroot_coefficients(self, r: Root) -> tuple[int, ...]:
        """Coefficients of the coroot of ``r`` in the simple coroots."""
        dual = Root(tuple(2 * c // r.norm2 for c in r.coords))
        cs = self.simple_coefficients(dual)
        # simple coroots: e_i - e_{i+1} (i < l) and 2 e_l
        if cs[-1] % 2:
            raise RootError(f"coroot of {r} is not integral")
        return cs[:-1] + (cs[-1] // 2,)

    def pairing(self, beta: Root, alpha: Root) -> int:
        return pairing(beta, alpha)

    def reflect(self, alpha: Root, beta: Root) -> Root:
        return reflect(alpha, beta)

    def root_string(self, alpha: Root, beta: Root) -> tuple[int, int]:
        """Maximal (p, q) with beta - p alpha, ..., beta + q alpha all roots."""
        if alpha == beta or alpha == -beta:
            raise RootError("root_string needs alpha != +-beta")
        p = 0
        while beta - (p + 1) * alpha in self:
            p += 1
        q = 0
        while beta + (q + 1) * alpha in self:
            q += 1
        return p, q

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """A[i][j] = <alpha_i, alpha_j>."""
        return tuple(tuple(pairing(a, b) for b in self.simple) for a in self.simple)

    @cached_property
    def highest_root(self) -> Root:
        return max(self.positive, key=self.height)

    def gamma_sequence(self) -> list[Root]:
        """A chain of 2l - 1 roots from the highest root down to a simple root.

        For l >= 3 the chain is e1+e2, e1+e3, ..., e1+el, e2+el, e2, e2-el,
        ..., e2-e3.  For l = 2 that pattern degenerates, and the chain
        e1+e2, e1, e2 is used; it has the same four properties.
        """
        l = self.rank
        E = [None] + [e(i, l) for i in range(1, l + 1)]
        if l == 2:
            return [E[1] + E[2], E[1], E[2]]
        seq = [E[1] + E[j] for j in range(2, l + 1)]
        seq.append(E[2] + E[l])
        seq.append(E[2])
        seq += [E[2] - E[j] for j in range(l, 2, -1)]
        return seq

    def weyl_word(self, source: Root, target: Root) -> list[int]:
        """Indices i_1, ..., i_k (0-based) with s_{i_1} ... s_{i_k} source = target.

        Breadth-first search over the simple reflections; the word is shortest.
        """
        if source.norm2 != target.norm2:
            raise RootError("roots of different lengths are not Weyl-conjugate")
        prev: dict[Root, tuple[Root, int] | None] = {source: None}
        frontier = [source]
        while frontier and target not in prev:
            nxt = []
            for r in frontier:
                for i, a in enumerate(self.simple):
                    s = reflect(a, r)
                    if s not in prev:
                        prev[s] = (r, i)
                        nxt.append(s)
            frontier = nxt
        word = []
        r = target
        while prev[r] is not None:
            r, i = prev[r]
            word.append(i)
        return word
