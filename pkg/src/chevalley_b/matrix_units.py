"""Every matrix unit E_ij of M_n(R) from elements of E_ad(B_l, R).

Each unit comes with a recipe: an expression in group-element matrices, ring
scalars, sums, differences and products, possibly referring to units found
earlier.  A recipe is accepted only after its value is compared exactly with
E_ij.

Order of the construction (R must contain 1/2):

1. (x_{alpha_1}(1) - 1)^2 = -2 E_{v_alpha_1, v_-alpha_1}; Weyl elements on
   either side then give all units between long-root labels.
2. (x_{alpha_l}(1) - 1)^2 minus known long units gives E_{v_alpha_l, v_-alpha_l};
   again Weyl elements give the short-short block.
3. (x_{alpha_1}(1) - 1) E_{-alpha_1, -alpha_1} isolates E_{V_h1, v_-alpha_1};
   left factors w_{alpha_j} walk it to every V_{h_j}.
4. The projector A onto the Cartan block and the products B, C_l, ..., C_1
   give a Cartan-block unit; Weyl elements close that block.
5. x_{alpha_1}(1) - 1 and x_{alpha_l}(1) - 1 cut down by diagonal units link
   root labels to V_h and long labels to short ones.
6. Everything else is E_ij = E_ik E_kj (recorded as "closure").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .group import GroupElement, h_elem, w_elem, x_elem
from .lie import BasisIndex
from .matrices import Matrix
from .rings import RingContext, RingValue
from .roots import Root, RootSystem


class CertificationError(AssertionError):
    pass


# --- recipes ----------------------------------------------------------------

class Expr:
    """A node of a recipe; combine with +, -, @ and scalar *."""

    def __add__(self, other: Expr) -> Expr:
        return Op("+", self, other)

    def __sub__(self, other: Expr) -> Expr:
        return Op("-", self, other)

    def __matmul__(self, other: Expr) -> Expr:
        return Op("@", self, other)

    def __rmul__(self, c) -> Expr:
        return Scaled(c, self)

    def evaluate(self, table: UnitTable) -> Matrix:
        raise NotImplementedError


@dataclass(eq=False)
class Group(Expr):
    name: str
    element: GroupElement

    def evaluate(self, table: UnitTable) -> Matrix:
        return self.element.matrix

    def __str__(self) -> str:
        return self.name


@dataclass(eq=False)
class UnitRef(Expr):
    i: int
    j: int

    def evaluate(self, table: UnitTable) -> Matrix:
        return table.evaluate(self.i, self.j)

    def __str__(self) -> str:
        return f"E({self.i},{self.j})"


@dataclass(eq=False)
class Scaled(Expr):
    c: RingValue | int | Fraction
    child: Expr

    def evaluate(self, table: UnitTable) -> Matrix:
        return table.memo(self, lambda: self.child.evaluate(table).scale(table.ctx(self.c)))

    def __str__(self) -> str:
        return f"{self.c}*({self.child})"


@dataclass(eq=False)
class Op(Expr):
    op: str
    left: Expr
    right: Expr

    def evaluate(self, table: UnitTable) -> Matrix:
        def run() -> Matrix:
            a, b = self.left.evaluate(table), self.right.evaluate(table)
            if self.op == "+":
                return a + b
            if self.op == "-":
                return a - b
            return a @ b
        return table.memo(self, run)

    def __str__(self) -> str:
        return f"({self.left} {self.op} {self.right})"


@dataclass
class Recipe:
    expr: Expr
    provenance: str


@dataclass
class UnitTable:
    """Certified recipes for matrix units, keyed by (row, column) index."""

    rs: RootSystem
    ctx: RingContext
    recipes: dict[tuple[int, int], Recipe] = field(default_factory=dict)
    _cache: dict[int, tuple[Expr, Matrix]] = field(default_factory=dict, repr=False)
    _units: dict[tuple[int, int], Matrix] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.rs.n

    def memo(self, node: Expr, fn) -> Matrix:
        # the node is kept alive next to its value so that ids are never reused
        key = id(node)
        if key not in self._cache:
            self._cache[key] = (node, fn())
        return self._cache[key][1]

    def unit(self, i: int, j: int) -> Matrix:
        if (i, j) not in self._units:
            self._units[(i, j)] = Matrix.unit(self.ctx, self.n, i, j)
        return self._units[(i, j)]

    def evaluate(self, i: int, j: int) -> Matrix:
        return self.recipes[(i, j)].expr.evaluate(self)

    def __contains__(self, ij: tuple[int, int]) -> bool:
        return ij in self.recipes

    def __len__(self) -> int:
        return len(self.recipes)

    def add(self, i: int, j: int, expr: Expr, provenance: str) -> bool:
        """Record and certify a recipe for E_ij; False if E_ij was already known."""
        if (i, j) in self.recipes:
            return False
        self.recipes[(i, j)] = Recipe(expr, provenance)
        if expr.evaluate(self) != self.unit(i, j):
            del self.recipes[(i, j)]
            raise CertificationError(f"recipe for E({i},{j}) [{provenance}] does not evaluate to the unit")
        return True

    def learn(self, expr: Expr, provenance: str) -> tuple[int, int] | None:
        """If ``expr`` has exactly one entry outside the known units and that
        entry is a unit of R, isolate it: E_ab = c^-1 (expr - sum of known parts)."""
        m = expr.evaluate(self)
        unknown = [(i, j) for i, j in m.nonzero() if (i, j) not in self.recipes]
        if len(unknown) != 1:
            return None
        a, b = unknown[0]
        c = m[a, b]
        if not c.is_unit():
            return None
        rest = expr
        for i, j in m.nonzero():
            if (i, j) != (a, b):
                rest = rest - Scaled(m[i, j], UnitRef(i, j))
        if c != self.ctx.one:
            rest = Scaled(c.inverse(), rest)
        self.add(a, b, rest, provenance)
        return a, b

    def certify_all(self) -> list[tuple[int, int]]:
        """Re-evaluate every recipe from scratch; returns the failing pairs."""
        self._cache.clear()
        return [ij for ij in self.recipes if self.evaluate(*ij) != self.unit(*ij)]

    def complete(self) -> bool:
        return len(self.recipes) == self.n * self.n

    def describe(self, i: int, j: int) -> str:
        r = self.recipes[(i, j)]
        return f"[{r.provenance}] {r.expr}"

    def span(self, coeffs: Matrix) -> Matrix:
        """sum c_ij E_ij built from the certified units."""
        out = Matrix.zeros(self.ctx, self.n)
        for i, j in coeffs.nonzero():
            out = out + self.evaluate(i, j).scale(coeffs[i, j])
        return out


# --- building blocks ----------------------------------------------------------

def _identity(rs: RootSystem, ctx: RingContext) -> Group:
    return Group("E", GroupElement.identity(rs, ctx))


def _x(rs: RootSystem, ctx: RingContext, r: Root, t: int = 1) -> Group:
    return Group(f"x_{{{r}}}({t})", x_elem(rs, r, t, ctx))


def _w(rs: RootSystem, ctx: RingContext, i: int) -> Group:
    return Group(f"w_{i + 1}", w_elem(rs, rs.simple[i], 1, ctx))


def _single_entry(m: Matrix) -> tuple[int, int, RingValue] | None:
    nz = m.nonzero()
    if len(nz) != 1:
        return None
    i, j = nz[0]
    return i, j, m[i, j]


def seed_long(rs: RootSystem, ctx: RingContext, table: UnitTable | None = None):
    """(x_{alpha_1}(1) - 1)^2, its single entry, and the recipe for that unit."""
    table = table or UnitTable(rs, ctx)
    bi = BasisIndex(rs)
    a1 = rs.simple[0]
    y = _x(rs, ctx, a1) - _identity(rs, ctx)
    sq = y @ y
    m = sq.evaluate(table)
    entry = _single_entry(m)
    expected = (bi.root_index(a1), bi.root_index(-a1), ctx(-2))
    if entry != expected:
        raise CertificationError(f"(x_alpha1(1) - 1)^2 is not -2 E_(alpha1,-alpha1): {entry}")
    table.add(expected[0], expected[1], Scaled(ctx(Fraction(-1, 2)), sq), "seed: (x_{alpha_1}(1)-1)^2")
    return m, table


def seed_short(rs: RootSystem, ctx: RingContext, table: UnitTable, i: int | None = None):
    """(x_{e_i}(1) - 1)^2 (default e_l); known long parts are subtracted off."""
    i = rs.rank if i is None else i
    bi = BasisIndex(rs)
    ei = Root(tuple(int(k == i - 1) for k in range(rs.rank)))
    y = _x(rs, ctx, ei) - _identity(rs, ctx)
    sq = y @ y
    m = sq.evaluate(table)
    got = table.learn(sq, f"seed: (x_{{{ei}}}(1)-1)^2 minus long units")
    if got != (bi.root_index(ei), bi.root_index(-ei)):
        raise CertificationError(f"short seed did not isolate E_(e{i},-e{i}): {got}")
    return m, table


def _transport(table: UnitTable, gens: list[Group], rows: Iterable[int] | None = None,
               cols: Iterable[int] | None = None) -> None:
    """Close the known units under w_k * E and E * w_k (restricted to index sets)."""
    rows = set(rows) if rows is not None else None
    cols = set(cols) if cols is not None else None
    frontier = list(table.recipes)
    while frontier:
        nxt = []
        for i, j in frontier:
            for g in gens:
                for expr, tag in ((g @ UnitRef(i, j), "Weyl, left"), (UnitRef(i, j) @ g, "Weyl, right")):
                    m = expr.evaluate(table)
                    new = [(a, b) for a, b in m.nonzero() if (a, b) not in table]
                    if len(new) != 1:
                        continue
                    a, b = new[0]
                    if (rows is not None and a not in rows) or (cols is not None and b not in cols):
                        continue
                    got = table.learn(expr, f"{tag} by {g}")
                    if got:
                        nxt.append(got)
        frontier = nxt


def _closure(table: UnitTable, rows: Iterable[int], mids: Iterable[int], cols: Iterable[int]) -> None:
    """E_ij = E_ik E_kj for the first k with both factors known."""
    mids = list(mids)
    for i in rows:
        for j in cols:
            if (i, j) in table:
                continue
            for k in mids:
                if (i, k) in table and (k, j) in table:
                    table.add(i, j, UnitRef(i, k) @ UnitRef(k, j), f"closure via {k}")
                    break


def _root_labels(rs: RootSystem, long: bool) -> list[int]:
    bi = BasisIndex(rs)
    return [bi.root_index(r) for r in rs.roots if r.is_long == long]


@dataclass
class HBlockReport:
    """The products A, B, C_l, ..., C_1 with the values printed for them.

    Entries are given in Cartan-block coordinates, 1-based (1 = V_{h_1}).
    """

    rank: int
    exprs: dict[str, Expr]
    values: dict[str, Matrix]
    expected: dict[str, dict[tuple[int, int], int]]

    def block(self, name: str) -> dict[tuple[int, int], int]:
        """Nonzero entries of a product; labels outside the Cartan block keep index <= 0."""
        m = self.values[name]
        lo = m.n - self.rank
        return {(i - lo + 1, j - lo + 1): _int(m[i, j]) for i, j in m.nonzero()}

    def expected_matrix(self, name: str) -> Matrix:
        m = self.values[name]
        lo = m.n - self.rank
        rows = [[0] * m.n for _ in range(m.n)]
        for (i, j), v in self.expected[name].items():
            rows[lo + i - 1][lo + j - 1] = v
        return Matrix.from_integers(m.ctx, rows)

    def checks(self) -> dict[str, bool]:
        """Exact comparison of each product with its printed value."""
        return {k: self.values[k] == self.expected_matrix(k) for k in self.expected}


def _int(v: RingValue) -> int:
    q = v.ctx.modulus
    c = v.c[0]
    if q is None:
        return int(c)
    c = int(c) % q
    return c - q if c > q // 2 else c


def printed_h_block(rank: int) -> dict[str, dict[tuple[int, int], int]]:
    """The values displayed for B, C_k, C, C_1 and C_1 + B, as block entries."""
    l = rank
    out = {"B": {(1, 1): -4, (1, 2): 2}}
    for k in range(l, 2, -1):
        out[f"C_{k}"] = {(1, k - 1): 2, (1, k): -2}
    if l >= 3:
        out["C_2"] = {(1, 1): 2, (2, 1): 2, (1, 2): -2, (2, 2): -2}
        out["C"] = {(1, 1): -2, (2, 1): 2, (2, 2): -2}
        out["C_1"] = {(1, 1): -4, (1, 2): 2, (2, 1): -2}
        out["C_1+B"] = {(2, 1): -2}
    else:
        out["C_2"] = {(1, 1): 2, (1, 2): -2}
    return out


def h_block_combination(rs: RootSystem, ctx: RingContext, table: UnitTable | None = None) -> HBlockReport:
    """A = 2^-l prod (h_{alpha_i}(-1) + E), B, C_l, ..., C_2, C = B + C_2, C_1 = w_1 C w_1.

    For l = 2 the product for A also keeps the long-root labels whose
    pairings with both simple roots are even; those diagonal units are taken
    off when ``table`` already knows them.
    """
    if table is None:
        table = _long_block(rs, ctx)
    l = rs.rank
    one = _identity(rs, ctx)
    a: Expr = one
    for i in range(l):
        a = a @ (Group(f"h_{i + 1}(-1)", h_elem(rs, rs.simple[i], -1, ctx)) + one)
    a = Scaled(ctx(Fraction(1, 2 ** l)), a)
    extra = [(i, j) for i, j in a.evaluate(table).nonzero() if i < 2 * rs.m]
    for i, j in extra:
        if (i, j) in table:
            a = a - UnitRef(i, j)
    w = [_w(rs, ctx, i) for i in range(l)]
    chain = [w[i] - a for i in range(l)]
    b: Expr = a
    for f in chain + chain[-2::-1]:
        b = b @ f
    b = b @ a
    c: dict[str, Expr] = {}
    cl: Expr = a
    for f in chain:
        cl = cl @ f
    cl = cl @ a
    c[f"C_{l}"] = cl
    for k in range(l - 1, 1, -1):
        c[f"C_{k}"] = w[k - 1] @ c[f"C_{k + 1}"] @ w[k - 1]
    cc = b + c["C_2"]
    c1 = w[0] @ cc @ w[0]
    exprs = {"A": a, "B": b, **c, "C": cc, "C_1": c1, "C_1+B": c1 + b, "C_1-B": c1 - b}
    return HBlockReport(l, exprs, {k: v.evaluate(table) for k, v in exprs.items()}, printed_h_block(l))


def _long_block(rs: RootSystem, ctx: RingContext) -> UnitTable:
    long_ix = _root_labels(rs, True)
    w = [_w(rs, ctx, i) for i in range(rs.rank)]
    _, table = seed_long(rs, ctx)
    _transport(table, w, rows=long_ix, cols=long_ix)
    _closure(table, long_ix, long_ix, long_ix)
    return table


def generate_all(rs: RootSystem, ctx: RingContext) -> UnitTable:
    """Recipes for all n^2 units; raises CertificationError on any mismatch."""
    if not ctx.is_unit(ctx(2)):
        raise ValueError("matrix units need 1/2 in the ring")
    bi = BasisIndex(rs)
    l = rs.rank
    long_ix, short_ix = _root_labels(rs, True), _root_labels(rs, False)
    h_ix = [bi.h_index(i) for i in range(1, l + 1)]
    a1, al = rs.simple[0], rs.simple[-1]
    w = [_w(rs, ctx, i) for i in range(l)]
    one = _identity(rs, ctx)

    # long labels: Weyl moves on both sides of the seed, then closure
    table = _long_block(rs, ctx)

    seed_short(rs, ctx, table)
    _transport(table, w, rows=short_ix, cols=short_ix)
    _closure(table, short_ix, short_ix, short_ix)

    # V_h rows against long columns
    p, q = bi.root_index(a1), bi.root_index(-a1)
    y1 = _x(rs, ctx, a1) - one
    if table.learn(y1 @ UnitRef(q, q), "x_{alpha_1}(1)-1 times a diagonal unit") is None:
        raise CertificationError("could not isolate E_(h1,-alpha1)")
    _transport(table, w, rows=h_ix, cols=[q])
    _closure(table, h_ix, [q], long_ix)

    # the Cartan block
    rep = h_block_combination(rs, ctx, table)
    ex = rep.exprs
    for name in ("C_1-B", "C_1+B", "C", "B", "A"):
        if table.learn(ex[name], f"Cartan block: {name}"):
            break
    _transport(table, w, rows=h_ix, cols=h_ix)
    _closure(table, h_ix, h_ix, h_ix)

    # long rows against V_h columns
    if table.learn(UnitRef(p, p) @ y1 @ UnitRef(h_ix[0], h_ix[0]), "x_{alpha_1}(1)-1 cut to (alpha_1, h_1)") is None:
        raise CertificationError("could not isolate E_(alpha1,h1)")
    _closure(table, long_ix, [p, *h_ix], h_ix)

    # long against short through x_{alpha_l}(1) - 1
    yl = _x(rs, ctx, al) - one
    m = yl.evaluate(table)
    for rows, cols, tag in ((long_ix, short_ix, "long,short"), (short_ix, long_ix, "short,long")):
        pair = next(((i, j) for i, j in m.nonzero() if i in rows and j in cols and m[i, j].is_unit()), None)
        if pair is None:
            raise CertificationError(f"no unit {tag} entry in x_alpha_l(1) - 1")
        i, j = pair
        table.learn(UnitRef(i, i) @ yl @ UnitRef(j, j), f"x_{{alpha_l}}(1)-1 cut to a {tag} entry")
        _closure(table, rows, [i], [j])
        _closure(table, rows, [j], cols)
    _closure(table, long_ix, short_ix, short_ix)
    _closure(table, short_ix, long_ix, long_ix)

    everything = list(range(rs.n))
    _closure(table, everything, everything, everything)
    if not table.complete():
        missing = [(i, j) for i in range(rs.n) for j in range(rs.n) if (i, j) not in table]
        raise CertificationError(f"{len(missing)} units not reached, e.g. {missing[:3]}")
    return table
