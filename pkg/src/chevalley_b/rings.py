"""Exact arithmetic in commutative local rings in which 2 is invertible.

Five families are supported:

* ``gfp``       prime field GF(p)
* ``zmod``      integers modulo p**k
* ``zloc``      integers localized at p (fractions with denominator prime to p)
* ``dual``      dual numbers B[eps]/(eps**2) over a base ring B
* ``sqrt-ext``  formal quadratic extension B[s]/(s**2 - r), r a unit of B

An element is stored as a tuple of coefficients over the *coefficient ring*,
which is Z/p**k for the finite families and Z_(p) for ``zloc``.  Composite rings
concatenate the coefficient tuples of their base ring, so multiplication of
elements and of matrices is driven by one structure tensor per context.
"""

from __future__ import annotations

import json
import random as _random
import re
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence


class RingError(ValueError):
    """Base class for ring-layer errors."""


class NonUnit(RingError):
    """Raised when an element of the radical is inverted."""


class ContextMismatch(RingError):
    """Raised when values from different rings are combined."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class RingContext:
    """A concrete commutative local ring with 1/2.

    Contexts are immutable and compare equal when they describe the same ring.
    Subclasses set ``kind``, ``p``, ``dim`` and ``base`` and implement the
    kind-specific predicates; everything else is generic.
    """

    kind: str
    p: int
    dim: int
    base: RingContext | None = None

    # --- identity -----------------------------------------------------------

    def _key(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RingContext) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"RingContext({json.dumps(self.descriptor())})"

    def descriptor(self) -> dict:
        raise NotImplementedError

    # --- coefficient ring ---------------------------------------------------

    @property
    def modulus(self) -> int | None:
        """Modulus q of the coefficient ring Z/q, or None for Z_(p)."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    def _coef(self, x) -> int | Fraction:
        q = self.modulus
        if q is not None:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise NonUnit(f"denominator of {x} is not invertible mod {self.p}")
                return x.numerator * pow(x.denominator, -1, q) % q
            return int(x) % q
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise RingError(f"{x} does not lie in Z_({self.p})")
        return x

    @cached_property
    def structure(self) -> tuple[tuple[int, int, int, int | Fraction], ...]:
        """Nonzero entries (i, j, k, c) of the multiplication tensor."""
        raise NotImplementedError

    # --- construction -------------------------------------------------------

    def from_components(self, comps: Sequence) -> RingValue:
        if len(comps) != self.dim:
            raise RingError(f"expected {self.dim} components, got {len(comps)}")
        return RingValue(self, tuple(self._coef(c) for c in comps))

    def __call__(self, x) -> RingValue:
        """Coerce an int, Fraction, literal string or RingValue into this ring."""
        if isinstance(x, RingValue):
            if x.ctx == self:
                return x
            return self.embed(x)
        if isinstance(x, str):
            return self.parse(x)
        return self.from_components((x,) + (0,) * (self.dim - 1))

    def embed(self, x: RingValue) -> RingValue:
        """Image of an element of a subring (the base chain) in this ring."""
        if self.base is None:
            raise ContextMismatch(f"cannot embed {x.ctx!r} into {self!r}")
        y = self.base.embed(x) if x.ctx != self.base else x
        return RingValue(self, y.c + (self._coef(0),) * (self.dim - self.base.dim))

    def restrict(self, x: RingValue, sub: RingContext) -> RingValue:
        """Inverse of :meth:`embed`; raises if ``x`` is not in the subring."""
        if x.ctx == sub:
            return x
        if self.base is None:
            raise ContextMismatch(f"{sub!r} is not a subring of {self!r}")
        head, tail = x.c[: self.base.dim], x.c[self.base.dim:]
        if any(t != 0 for t in tail):
            raise RingError(f"{x} does not lie in {sub!r}")
        return self.base.restrict(RingValue(self.base, head), sub)

    def contains_subring(self, sub: RingContext) -> bool:
        ctx: RingContext | None = self
        while ctx is not None:
            if ctx == sub:
                return True
            ctx = ctx.base
        return False

    @property
    def zero(self) -> RingValue:
        return self(0)

    @property
    def one(self) -> RingValue:
        return self(1)

    # --- arithmetic ---------------------------------------------------------

    def _check(self, *xs: RingValue) -> None:
        for x in xs:
            if x.ctx != self:
                raise ContextMismatch(f"{x.ctx!r} != {self!r}")

    def add(self, a: RingValue, b: RingValue) -> RingValue:
        self._check(a, b)
        return RingValue(self, tuple(self._coef(x + y) for x, y in zip(a.c, b.c)))

    def neg(self, a: RingValue) -> RingValue:
        self._check(a)
        return RingValue(self, tuple(self._coef(-x) for x in a.c))

    def sub(self, a: RingValue, b: RingValue) -> RingValue:
        return self.add(a, self.neg(b))

    def mul(self, a: RingValue, b: RingValue) -> RingValue:
        self._check(a, b)
        out = [0] * self.dim
        for i, j, k, c in self.structure:
            out[k] += c * a.c[i] * b.c[j]
        return RingValue(self, tuple(self._coef(x) for x in out))

    def power(self, a: RingValue, e: int) -> RingValue:
        if e < 0:
            return self.power(self.invert(a), -e)
        result, base = None, a
        while e:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return self.one if result is None else result

    def invert(self, a: RingValue) -> RingValue:
        raise NotImplementedError

    def is_unit(self, a: RingValue) -> bool:
        raise NotImplementedError

    def in_radical(self, a: RingValue) -> bool:
        raise NotImplementedError

    # --- residue structure --------------------------------------------------

    @property
    def residue_context(self) -> RingContext:
        raise NotImplementedError

    def residue(self, a: RingValue) -> RingValue:
        raise NotImplementedError

    @property
    def radical_nilpotency(self) -> int | None:
        """Smallest N with J**N = 0, or None when the radical is not nilpotent."""
        raise NotImplementedError

    # --- literals -----------------------------------------------------------

    def parse(self, text: str) -> RingValue:
        raise NotImplementedError

    def format(self, a: RingValue) -> str:
        raise NotImplementedError

    # --- sampling -----------------------------------------------------------

    def random(self, rng: _random.Random) -> RingValue:
        raise NotImplementedError

    def random_radical(self, rng: _random.Random) -> RingValue:
        raise NotImplementedError

    def random_unit(self, rng: _random.Random) -> RingValue:
        while True:
            x = self.random(rng)
            if self.is_unit(x):
                return x

    def enumerate(self) -> Iterator[RingValue]:
        """All elements of a finite ring (small rings only)."""
        q = self.modulus
        if q is None:
            raise RingError("Z_(p)-based rings are infinite")
        from itertools import product

        for comps in product(range(q), repeat=self.dim):
            yield RingValue(self, comps)


class RingValue:
    """An element of a :class:`RingContext` in canonical form."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: RingContext, c: tuple) -> None:
        self.ctx = ctx
        self.c = c

    def _lift(self, other) -> RingValue:
        if isinstance(other, RingValue):
            if other.ctx != self.ctx:
                raise ContextMismatch(f"{other.ctx!r} != {self.ctx!r}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.ctx.add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.ctx.sub(self, o)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.ctx.sub(o, self)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self.ctx.mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else self * self.ctx.invert(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else o * self.ctx.invert(self)

    def __neg__(self) -> RingValue:
        return self.ctx.neg(self)

    def __pow__(self, e: int) -> RingValue:
        return self.ctx.power(self, e)

    def __eq__(self, other) -> bool:
        if isinstance(other, RingValue):
            return self.ctx == other.ctx and self.c == other.c
        if isinstance(other, (int, Fraction)):
            try:
                return self.c == self.ctx(other).c
            except RingError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.c))

    def __bool__(self) -> bool:
        return any(x != 0 for x in self.c)

    def inverse(self) -> RingValue:
        return self.ctx.invert(self)

    def is_unit(self) -> bool:
        return self.ctx.is_unit(self)

    def in_radical(self) -> bool:
        return self.ctx.in_radical(self)

    def residue(self) -> RingValue:
        return self.ctx.residue(self)

    def __str__(self) -> str:
        return self.ctx.format(self)

    def __repr__(self) -> str:
        return f"RingValue({self.ctx.format(self)!r})"


# ---------------------------------------------------------------------------
# atomic rings


class _Atomic(RingContext):
    dim = 1
    base = None

    @cached_property
    def structure(self):
        return ((0, 0, 0, 1),)

    def is_unit(self, a: RingValue) -> bool:
        self._check(a)
        x = a.c[0]
        if isinstance(x, Fraction):
            return x.numerator % self.p != 0
        return x % self.p != 0

    def in_radical(self, a: RingValue) -> bool:
        return not self.is_unit(a)

    @property
    def residue_context(self) -> RingContext:
        return PrimeField(self.p)

    def residue(self, a: RingValue) -> RingValue:
        self._check(a)
        return self.residue_context.from_components(a.c)


class PrimeField(_Atomic):
    kind = "gfp"

    def __init__(self, p: int) -> None:
        if not _is_odd_prime(p):
            raise RingError(f"p must be an odd prime, got {p}")
        self.p = p

    def _key(self):
        return ("gfp", self.p)

    def descriptor(self) -> dict:
        return {"kind": "gfp", "p": self.p}

    @property
    def modulus(self) -> int:
        return self.p

    @property
    def radical_nilpotency(self) -> int:
        return 1

    def invert(self, a: RingValue) -> RingValue:
        if not self.is_unit(a):
            raise NonUnit(f"{a} is not invertible in GF({self.p})")
        return RingValue(self, (pow(a.c[0], -1, self.p),))

    def parse(self, text: str) -> RingValue:
        return self.from_components((_parse_rational(text),))

    def format(self, a: RingValue) -> str:
        return str(a.c[0])

    def random(self, rng):
        return RingValue(self, (rng.randrange(self.p),))

    def random_radical(self, rng):
        return self.zero


class IntegersModPrimePower(_Atomic):
    kind = "zmod"

    def __init__(self, p: int, k: int) -> None:
        if not _is_odd_prime(p):
            raise RingError(f"p must be an odd prime, got {p}")
        if k < 1:
            raise RingError(f"exponent k must be >= 1, got {k}")
        self.p = p
        self.k = k

    def _key(self):
        return ("zmod", self.p, self.k)

    def descriptor(self) -> dict:
        return {"kind": "zmod", "p": self.p, "k": self.k}

    @property
    def modulus(self) -> int:
        return self.p**self.k

    @property
    def radical_nilpotency(self) -> int:
        return self.k

    def invert(self, a: RingValue) -> RingValue:
        if not self.is_unit(a):
            raise NonUnit(f"{a} is not invertible modulo {self.modulus}")
        return RingValue(self, (pow(a.c[0], -1, self.modulus),))

    def parse(self, text: str) -> RingValue:
        return self.from_components((_parse_rational(text),))

    def format(self, a: RingValue) -> str:
        return str(a.c[0])

    def random(self, rng):
        return RingValue(self, (rng.randrange(self.modulus),))

    def random_radical(self, rng):
        return RingValue(self, (self.p * rng.randrange(self.modulus // self.p) % self.modulus,))


class LocalizedIntegers(_Atomic):
    kind = "zloc"

    def __init__(self, p: int) -> None:
        if not _is_odd_prime(p):
            raise RingError(f"p must be an odd prime, got {p}")
        self.p = p

    def _key(self):
        return ("zloc", self.p)

    def descriptor(self) -> dict:
        return {"kind": "zloc", "p": self.p}

    @property
    def modulus(self) -> None:
        return None

    @property
    def radical_nilpotency(self) -> None:
        return None

    def invert(self, a: RingValue) -> RingValue:
        if not self.is_unit(a):
            raise NonUnit(f"{a} is not invertible in Z_({self.p})")
        return RingValue(self, (1 / a.c[0],))

    def residue(self, a: RingValue) -> RingValue:
        self._check(a)
        x = a.c[0]
        return PrimeField(self.p).from_components((x.numerator * pow(x.denominator, -1, self.p),))

    def parse(self, text: str) -> RingValue:
        return self.from_components((_parse_rational(text),))

    def format(self, a: RingValue) -> str:
        return str(a.c[0])

    def _small_denominator(self, rng) -> int:
        while True:
            d = rng.randint(1, 12)
            if d % self.p:
                return d

    def random(self, rng):
        return RingValue(self, (Fraction(rng.randint(-12, 12), self._small_denominator(rng)),))

    def random_radical(self, rng):
        return RingValue(self, (Fraction(self.p * rng.randint(-4, 4), self._small_denominator(rng)),))


# ---------------------------------------------------------------------------
# composite rings


class _Composite(RingContext):
    base: RingContext

    @property
    def p(self) -> int:  # type: ignore[override]
        return self.base.p

    @property
    def dim(self) -> int:  # type: ignore[override]
        return 2 * self.base.dim

    @property
    def modulus(self):
        return self.base.modulus

    def _coef(self, x):
        return self.base._coef(x)

    def split(self, a: RingValue) -> tuple[RingValue, RingValue]:
        d = self.base.dim
        return RingValue(self.base, a.c[:d]), RingValue(self.base, a.c[d:])

    def join(self, a0: RingValue, a1: RingValue) -> RingValue:
        return RingValue(self, a0.c + a1.c)

    def random(self, rng):
        return self.join(self.base.random(rng), self.base.random(rng))

    def format(self, a: RingValue) -> str:
        a0, a1 = self.split(a)
        if not a1:
            return self.base.format(a0)
        s1 = _wrap(self.base.format(a1))
        term = f"{s1}*{self._symbol}"
        if not a0:
            return term
        s0 = _wrap(self.base.format(a0))
        return f"{s0}{term}" if term.startswith("-") else f"{s0}+{term}"

    _symbol = ""

    def parse(self, text: str) -> RingValue:
        text = text.strip()
        if self._symbol not in text:
            return self.embed(self.base.parse(text))
        head, coeff = _split_symbol_term(text, self._symbol)
        a0 = self.base.parse(head) if head else self.base.zero
        a1 = self.base.parse(coeff)
        return self.join(a0, a1)


class DualNumbers(_Composite):
    """B[eps]/(eps**2)."""

    kind = "dual"
    _symbol = "eps"

    def __init__(self, base: RingContext) -> None:
        if base.kind not in ("gfp", "zmod"):
            raise RingError("dual numbers are supported over gfp and zmod bases")
        self.base = base

    def _key(self):
        return ("dual", self.base._key())

    def descriptor(self) -> dict:
        if self.base.kind == "gfp":
            return {"kind": "dual", "p": self.p}
        return {"kind": "dual", "base": self.base.descriptor()}

    @cached_property
    def structure(self):
        d = self.base.dim
        out = []
        for i, j, k, c in self.base.structure:
            out.append((i, j, k, c))
            out.append((i, d + j, d + k, c))
            out.append((d + i, j, d + k, c))
        return tuple(out)

    @property
    def eps(self) -> RingValue:
        return self.join(self.base.zero, self.base.one)

    def is_unit(self, a):
        self._check(a)
        return self.base.is_unit(self.split(a)[0])

    def in_radical(self, a):
        self._check(a)
        return self.base.in_radical(self.split(a)[0])

    def invert(self, a):
        self._check(a)
        a0, a1 = self.split(a)
        if not self.base.is_unit(a0):
            raise NonUnit(f"{self.format(a)} is not invertible")
        inv0 = self.base.invert(a0)
        return self.join(inv0, -(a1 * inv0 * inv0))

    @property
    def residue_context(self):
        return self.base.residue_context

    def residue(self, a):
        self._check(a)
        return self.base.residue(self.split(a)[0])

    @property
    def radical_nilpotency(self):
        n = self.base.radical_nilpotency
        return None if n is None else n + 1

    def random_radical(self, rng):
        return self.join(self.base.random_radical(rng), self.base.random(rng))


class QuadraticExtension(_Composite):
    """The formal quotient B[s]/(s**2 - r) for a unit r of B.

    Whether s**2 - r already splits over the residue field is not tested.  When
    it does, the quotient is not local; only the embedded copy of B and the
    element ``sqrt`` are meant to be used in that case.
    """

    kind = "sqrt-ext"
    _symbol = "sqrt"

    def __init__(self, base: RingContext, r) -> None:
        r = base(r)
        if not base.is_unit(r):
            raise NonUnit(f"cannot adjoin the square root of the non-unit {r}")
        self.base = base
        self.r = r

    def _key(self):
        return ("sqrt-ext", self.base._key(), self.r.c)

    def descriptor(self) -> dict:
        return {"kind": "sqrt-ext", "base": self.base.descriptor(), "r": str(self.r)}

    @cached_property
    def structure(self):
        d = self.base.dim
        b = self.base
        out = []
        for i, j, k, c in b.structure:
            out.append((i, j, k, c))
            out.append((i, d + j, d + k, c))
            out.append((d + i, j, d + k, c))
        # s_i * s_j = r * (e_i e_j)
        for i in range(d):
            for j in range(d):
                ei = b.from_components([1 if t == i else 0 for t in range(d)])
                ej = b.from_components([1 if t == j else 0 for t in range(d)])
                prod = ei * ej * self.r
                for k, c in enumerate(prod.c):
                    if c != 0:
                        out.append((d + i, d + j, k, c))
        return tuple(out)

    @property
    def sqrt(self) -> RingValue:
        return self.join(self.base.zero, self.base.one)

    def conjugate(self, a: RingValue) -> RingValue:
        a0, a1 = self.split(a)
        return self.join(a0, -a1)

    def norm(self, a: RingValue) -> RingValue:
        a0, a1 = self.split(a)
        return a0 * a0 - self.r * a1 * a1

    @property
    def splits(self) -> bool:
        """True when r is a square modulo the radical (the quotient is not local)."""
        k = self.base.residue_context
        rr = self.base.residue(self.r)
        return any(x * x == rr for x in k.enumerate())

    def is_unit(self, a):
        self._check(a)
        return self.base.is_unit(self.norm(a))

    def in_radical(self, a):
        self._check(a)
        a0, a1 = self.split(a)
        return self.base.in_radical(a0) and self.base.in_radical(a1)

    def invert(self, a):
        self._check(a)
        n = self.norm(a)
        if not self.base.is_unit(n):
            raise NonUnit(f"{self.format(a)} is not invertible")
        ninv = self.embed(self.base.invert(n))
        return self.conjugate(a) * ninv

    @property
    def residue_context(self):
        k = self.base.residue_context
        return QuadraticExtension(k, self.base.residue(self.r))

    def residue(self, a):
        self._check(a)
        a0, a1 = self.split(a)
        return self.residue_context.join(self.base.residue(a0), self.base.residue(a1))

    @property
    def radical_nilpotency(self):
        return self.base.radical_nilpotency

    def random_radical(self, rng):
        return self.join(self.base.random_radical(rng), self.base.random_radical(rng))


def adjoin_sqrt(ctx: RingContext, r) -> QuadraticExtension:
    """Return ``ctx[s]/(s**2 - r)``; ``r`` must be a unit."""
    return QuadraticExtension(ctx, r)


# ---------------------------------------------------------------------------
# descriptors and literals

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def _parse_rational(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise RingError(f"bad numeric literal {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise RingError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def _wrap(s: str) -> str:
    return f"({s})" if any(ch in s[1:] for ch in "+*") else s


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1].strip()
    return s


def _split_symbol_term(text: str, symbol: str) -> tuple[str, str]:
    """Split ``'A+B*sym'`` into ``('A', 'B')`` at top level."""
    text = _strip_parens(text)
    if not text.endswith(symbol):
        raise RingError(f"literal {text!r} must end with '*{symbol}'")
    body = text[: -len(symbol)].rstrip()
    if body.endswith("*"):
        body = body[:-1].rstrip()
    else:
        body = body + "1" if body.endswith(("+", "-")) or not body else body
    # find the top-level sign that starts the coefficient term
    depth = 0
    cut = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0 and body[i - 1] not in "/(+-*":
            cut = i
    if cut == 0:
        return "", _strip_parens(body)
    head = _strip_parens(body[:cut])
    coeff = body[cut:]
    sign = coeff[0]
    coeff = _strip_parens(coeff[1:])
    if sign == "-":
        coeff = coeff[1:] if coeff.startswith("-") else "-" + coeff
        if "+" in coeff[1:] or "*" in coeff:
            raise RingError(f"cannot negate compound coefficient in {text!r}")
    return head, coeff


def _parse_shorthand(text: str) -> dict:
    """``gfp(7)``, ``zmod(3,2)``, ``zloc(5)``, ``dual(gfp(7))``, ``sqrt-ext(gfp(7),3)``."""
    m = re.fullmatch(r"\s*([a-z-]+)\s*\((.*)\)\s*", text)
    if not m:
        raise RingError(f"bad ring descriptor {text!r}")
    kind, inner = m.group(1), m.group(2)
    args, depth, cur = [], 0, ""
    for ch in inner:
        if ch == "," and depth == 0:
            args.append(cur.strip())
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    args.append(cur.strip())
    try:
        if kind in ("gfp", "zloc"):
            (p,) = args
            return {"kind": kind, "p": int(p)}
        if kind == "zmod":
            p, k = args if len(args) == 2 else (args[0], "1")
            return {"kind": kind, "p": int(p), "k": int(k)}
        if kind == "dual":
            (base,) = args
            return {"kind": kind, "base": _parse_shorthand(base)}
        if kind == "sqrt-ext":
            base, r = args
            return {"kind": kind, "base": _parse_shorthand(base), "r": r}
    except ValueError:
        raise RingError(f"bad ring descriptor {text!r}") from None
    raise RingError(f"unknown ring kind {kind!r}")


def ring_from_descriptor(desc: dict | str) -> RingContext:
    """Build a context from ``{"kind": "zmod", "p": 3, "k": 2}``-style data."""
    if isinstance(desc, str):
        text = desc.strip()
        desc = json.loads(text) if text.startswith("{") else _parse_shorthand(text)
    if not isinstance(desc, dict) or "kind" not in desc:
        raise RingError(f"bad ring descriptor {desc!r}")
    kind = desc["kind"]
    try:
        if kind == "gfp":
            return PrimeField(int(desc["p"]))
        if kind == "zmod":
            return IntegersModPrimePower(int(desc["p"]), int(desc.get("k", 1)))
        if kind == "zloc":
            return LocalizedIntegers(int(desc["p"]))
        if kind == "dual":
            base = ring_from_descriptor(desc["base"]) if "base" in desc else PrimeField(int(desc["p"]))
            return DualNumbers(base)
        if kind == "sqrt-ext":
            base = ring_from_descriptor(desc["base"])
            return QuadraticExtension(base, base.parse(str(desc["r"])))
    except KeyError as exc:
        raise RingError(f"ring descriptor {desc!r} is missing {exc}") from None
    raise RingError(f"unknown ring kind {kind!r}")
