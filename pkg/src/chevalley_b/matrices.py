"""Dense square matrices over a :class:`~chevalley_b.rings.RingContext`.

A matrix over a ring of coefficient dimension ``d`` is stored as an array of
shape ``(d, n, n)``: one coefficient plane per ring component.  Finite rings use
``int64`` planes reduced modulo q (or Python-int object planes when q is too
large for exact ``int64`` products).  Over ``zloc``-based rings the planes hold
Python-int numerators over one common denominator ``den``, kept in lowest
terms so that equal matrices have equal storage.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

import numpy as np

from .rings import ContextMismatch, NonUnit, RingContext, RingError, RingValue

_INT64_LIMIT = 2**62


def _reduced(nums: np.ndarray, den: int) -> tuple[np.ndarray, int]:
    g = gcd(den, *nums.flat) if nums.size else den
    if g > 1:
        nums = nums // g
        den //= g
    return nums, den


def _split(arr: np.ndarray) -> tuple[np.ndarray, int]:
    """Fraction/int array -> (integer numerators, common denominator), reduced."""
    flat = list(arr.flat)
    fracs = [x for x in flat if not isinstance(x, (int, np.integer))]
    den = lcm(*(Fraction(x).denominator for x in fracs)) if fracs else 1
    nums = np.empty(arr.shape, dtype=object)
    if den == 1:
        nums.flat[:] = [int(x) for x in flat]
        return nums, 1
    nums.flat[:] = [int(x) * den if isinstance(x, (int, np.integer)) else int(Fraction(x) * den) for x in flat]
    return _reduced(nums, den)


def _common(coefs: Iterable) -> int:
    return lcm(*(Fraction(c).denominator for c in coefs)) or 1


class Matrix:
    """An immutable n x n matrix with entries in a ring context."""

    __slots__ = ("ctx", "data", "den")

    def __init__(self, ctx: RingContext, data: np.ndarray, den: int = 1) -> None:
        self.ctx = ctx
        self.data = data
        self.den = den
        data.setflags(write=False)

    # --- construction -------------------------------------------------------

    @staticmethod
    def _dtype(ctx: RingContext, n: int):
        q = ctx.modulus
        if q is None or q * q * max(n, 1) * len(ctx.structure) >= _INT64_LIMIT:
            return object
        return np.int64

    @classmethod
    def _blank(cls, ctx: RingContext, n: int) -> np.ndarray:
        data = np.zeros((ctx.dim, n, n), dtype=cls._dtype(ctx, n))
        if data.dtype == object:
            data[...] = 0
        return data

    @classmethod
    def _finish(cls, ctx: RingContext, data: np.ndarray) -> Matrix:
        """Wrap freshly built planes (entries may be Fractions over zloc)."""
        if ctx.modulus is None:
            nums, den = _split(data)
            return cls(ctx, nums, den)
        return cls(ctx, np.mod(data, ctx.modulus))

    @classmethod
    def zeros(cls, ctx: RingContext, n: int) -> Matrix:
        return cls(ctx, cls._blank(ctx, n))

    @classmethod
    def identity(cls, ctx: RingContext, n: int) -> Matrix:
        return _identity(ctx, n)

    @classmethod
    def scalar(cls, ctx: RingContext, n: int, value: RingValue | int) -> Matrix:
        value = ctx(value)
        data = cls._blank(ctx, n)
        for k, c in enumerate(value.c):
            for i in range(n):
                data[k, i, i] = c
        return cls._finish(ctx, data)

    @classmethod
    def from_integers(cls, ctx: RingContext, rows) -> Matrix:
        """Map an integer (or rational) matrix into ``ctx``."""
        arr = np.asarray(rows)
        n = arr.shape[0]
        if ctx.modulus is None and ctx.dim == 1 and arr.dtype.kind in "iu":
            return cls(ctx, arr.astype(object).reshape(1, n, n))
        data = cls._blank(ctx, n)
        if ctx.modulus is None or arr.dtype == object:
            data = data.astype(object)
            data[0] = np.vectorize(lambda x: ctx._coef(x), otypes=[object])(arr)
        else:
            data[0] = np.mod(arr.astype(np.int64), ctx.modulus)
        return cls._finish(ctx, data)

    @classmethod
    def from_entries(cls, ctx: RingContext, rows: Sequence[Sequence]) -> Matrix:
        """Build from a nested list of ring values, ints or literal strings."""
        n = len(rows)
        data = cls._blank(ctx, n)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise RingError("matrix must be square")
            for j, x in enumerate(row):
                v = ctx(x)
                data[:, i, j] = v.c
        return cls._finish(ctx, data)

    @classmethod
    def diagonal(cls, ctx: RingContext, values: Sequence) -> Matrix:
        n = len(values)
        data = cls._blank(ctx, n)
        for i, x in enumerate(values):
            data[:, i, i] = ctx(x).c
        return cls._finish(ctx, data)

    @classmethod
    def unit(cls, ctx: RingContext, n: int, i: int, j: int) -> Matrix:
        data = cls._blank(ctx, n)
        data[0, i, j] = 1
        return cls(ctx, data)

    # --- basic protocol -----------------------------------------------------

    @property
    def n(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> RingValue:
        i, j = ij
        if self.ctx.modulus is None:
            return RingValue(self.ctx, tuple(Fraction(x, self.den) for x in self.data[:, i, j]))
        return RingValue(self.ctx, tuple(_py(x) for x in self.data[:, i, j]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ctx == other.ctx and self.n == other.n and self.den == other.den
                and bool(np.all(self.data == other.data)))

    def __hash__(self) -> int:
        body = self.data.tobytes() if self.data.dtype != object else tuple(self.data.flat)
        return hash((self.ctx, self.den, body))

    def __repr__(self) -> str:
        return f"Matrix(n={self.n}, ring={self.ctx.descriptor()})"

    def rows(self) -> list[list[RingValue]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def to_literals(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows()]

    def nonzero(self) -> list[tuple[int, int]]:
        mask = np.any(self.data != 0, axis=0)
        return [tuple(int(v) for v in ij) for ij in np.argwhere(mask)]

    def is_zero(self) -> bool:
        return not np.any(self.data != 0)

    def is_identity(self) -> bool:
        return self == Matrix.identity(self.ctx, self.n)

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self.nonzero())

    def diagonal_entries(self) -> list[RingValue]:
        return [self[i, i] for i in range(self.n)]

    def trace(self) -> RingValue:
        t = self.ctx.zero
        for x in self.diagonal_entries():
            t = t + x
        return t

    # --- arithmetic ---------------------------------------------------------

    def _same(self, other: Matrix) -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{other.ctx!r} != {self.ctx!r}")
        if other.n != self.n:
            raise RingError(f"dimension mismatch {self.n} != {other.n}")

    def _wrap(self, data: np.ndarray, den: int = 1) -> Matrix:
        if self.ctx.modulus is None:
            return Matrix(self.ctx, *_reduced(data, den))
        return Matrix(self.ctx, np.mod(data, self.ctx.modulus))

    def __add__(self, other: Matrix) -> Matrix:
        self._same(other)
        if self.den == other.den:
            return self._wrap(self.data + other.data, self.den)
        d = lcm(self.den, other.den)
        return self._wrap(self.data * (d // self.den) + other.data * (d // other.den), d)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __neg__(self) -> Matrix:
        return self._wrap(-self.data, self.den)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._same(other)
        structure = self.ctx.structure
        d = _common(c for *_, c in structure)
        cache: dict[tuple[int, int], np.ndarray] = {}
        out = np.zeros_like(self.data)
        if out.dtype == object:
            out[...] = 0
        for i, j, k, c in structure:
            prod = cache.get((i, j))
            if prod is None:
                prod = self.data[i] @ other.data[j]
                cache[(i, j)] = prod
            out[k] = out[k] + int(c * d) * prod
        if self.ctx.modulus is None:
            return self._wrap(out, self.den * other.den * d)
        return self._wrap(out)

    def scale(self, value: RingValue | int | Fraction) -> Matrix:
        value = self.ctx(value)
        terms = [(j, k, c * value.c[i]) for i, j, k, c in self.ctx.structure if value.c[i] != 0]
        d = _common(c for *_, c in terms) if self.ctx.modulus is None else 1
        out = np.zeros_like(self.data)
        if out.dtype == object:
            out[...] = 0
        for j, k, c in terms:
            out[k] = out[k] + int(c * d) * self.data[j]
        return self._wrap(out, self.den * d)

    def __mul__(self, value) -> Matrix:
        if isinstance(value, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(value)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Matrix:
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.ctx, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def transpose(self) -> Matrix:
        return Matrix(self.ctx, np.ascontiguousarray(np.transpose(self.data, (0, 2, 1))), self.den)

    def map_entries(self, fn: Callable[[RingValue], RingValue], ctx: RingContext | None = None) -> Matrix:
        ctx = ctx or self.ctx
        rows = [[fn(x) for x in row] for row in self.rows()]
        return Matrix.from_entries(ctx, rows)

    def change_ring(self, ctx: RingContext) -> Matrix:
        """Embed into an extension ring, or restrict back to a subring."""
        if ctx == self.ctx:
            return self
        # an extension lists the components of its base first, so embedding
        # pads with zero planes and restriction drops (zero) trailing planes
        same = ctx.modulus == self.ctx.modulus
        if ctx.contains_subring(self.ctx):
            if not same:
                return self.map_entries(ctx.embed, ctx)
            data = np.zeros((ctx.dim, self.n, self.n), dtype=Matrix._dtype(ctx, self.n))
            if data.dtype == object:
                data[...] = 0
            data[: self.ctx.dim] = self.data
            return Matrix(ctx, data, self.den)
        if self.ctx.contains_subring(ctx):
            if not same:
                return self.map_entries(lambda x: self.ctx.restrict(x, ctx), ctx)
            if np.any(self.data[ctx.dim:] != 0):
                raise RingError(f"matrix does not lie over {ctx!r}")
            data = self.data[: ctx.dim].astype(Matrix._dtype(ctx, self.n))
            if ctx.modulus is None:
                return Matrix(ctx, *_reduced(data, self.den))
            return Matrix(ctx, data)
        raise ContextMismatch(f"no embedding between {self.ctx!r} and {ctx!r}")

    def residue(self) -> Matrix:
        """Entrywise reduction modulo the radical."""
        k = self.ctx.residue_context
        return self.map_entries(self.ctx.residue, k)

    # --- elimination --------------------------------------------------------

    def _row_ops(self):
        return _RowReducer(self)

    def inverse(self) -> Matrix:
        """Gauss-Jordan inverse using unit pivots; raises NonUnit if singular."""
        return self._row_ops().inverse()

    def det(self) -> RingValue:
        return self._row_ops().det()


@lru_cache(maxsize=None)
def _identity(ctx: RingContext, n: int) -> Matrix:
    return Matrix.scalar(ctx, n, ctx.one)


def _py(x):
    return int(x) if isinstance(x, np.integer) else x


class _RowReducer:
    """Row reduction over a local ring: any unit in a column is a valid pivot."""

    def __init__(self, m: Matrix) -> None:
        self.ctx = m.ctx
        self.n = m.n
        self.rows = [[m[i, j] for j in range(m.n)] for i in range(m.n)]

    def _eliminate(self, aug: list[list[RingValue]] | None):
        ctx, n, rows = self.ctx, self.n, self.rows
        sign = ctx.one
        det = ctx.one
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col].is_unit()), None)
            if piv is None:
                raise NonUnit("matrix is not invertible")
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                if aug is not None:
                    aug[col], aug[piv] = aug[piv], aug[col]
                sign = -sign
            p = rows[col][col]
            det = det * p
            inv = p.inverse()
            rows[col] = [x * inv for x in rows[col]]
            if aug is not None:
                aug[col] = [x * inv for x in aug[col]]
            for r in range(n):
                if r == col:
                    continue
                f = rows[r][col]
                if not f:
                    continue
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
                if aug is not None:
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return det * sign

    def inverse(self) -> Matrix:
        ctx, n = self.ctx, self.n
        aug = [[ctx.one if i == j else ctx.zero for j in range(n)] for i in range(n)]
        self._eliminate(aug)
        return Matrix.from_entries(ctx, aug)

    def det(self) -> RingValue:
        original = [list(r) for r in self.rows]
        try:
            return self._eliminate(None)
        except NonUnit:
            return _det_by_expansion(self.ctx, original)


def _det_by_expansion(ctx: RingContext, rows: list[list[RingValue]]) -> RingValue:
    # Laplace expansion; only reached for matrices that are singular mod J
    n = len(rows)
    if n > 8:
        raise NonUnit("determinant lies in the radical (expansion limited to n <= 8)")
    if n == 0:
        return ctx.one
    if n == 1:
        return rows[0][0]
    total = ctx.zero
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * _det_by_expansion(ctx, minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def block_labels_submatrix(m: Matrix, idx: Iterable[int]) -> Matrix:
    """Principal submatrix on the given (ordered) indices."""
    idx = list(idx)
    sub = np.ascontiguousarray(m.data[:, idx][:, :, idx])
    if m.ctx.modulus is None:
        return Matrix(m.ctx, *_reduced(sub, m.den))
    return Matrix(m.ctx, sub)
