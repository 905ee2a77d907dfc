"""Exact arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^n}.

Elements of the base field F_q = F_p[y]/(g) are plain integers: the
F_p-coordinates (c_0, ..., c_{e-1}) of an element in the power basis of y
are packed little-endian in base p.  Elements of an extension
F_{q^n} = F_q[z]/(h) are :class:`FieldElement` objects holding a length-n
coordinate tuple over F_q in the power basis 1, z, ..., z^{n-1}.

Every modulus is chosen canonically: among monic irreducibles of the
requested degree we take the first one when coefficient tuples
(c_0, c_1, ..., c_{d-1}) are compared lexicographically, constant term
first.  Building the same field twice therefore gives identical tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import ContextMismatch, DivisionByZero, NotPrime, OutOfRange, ParameterError

# Encodings must fit a 64-bit word.
MAX_FIELD_BITS = 64
_SCALAR_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise if q is not a prime power."""
    if q < 2:
        raise ParameterError(f"field size must be >= 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not is_prime(p):  # pragma: no cover - smallest divisor is always prime
        raise NotPrime(q)
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ParameterError(f"{q} is not a prime power")
    return p, e


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldTables:
    """Dense operation tables of F_q, indexed by integer encodings."""

    add: np.ndarray
    sub: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 by convention


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**e, elements encoded as integers in ``range(q)``.

    ``modulus`` holds the F_p coefficients (constant term first, leading 1
    included) of the defining polynomial g, or ``None`` for a prime field.
    """

    p: int
    e: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(self.p)
        if self.e < 1:
            raise ParameterError("extension degree must be >= 1")
        if self.e == 1:
            if self.modulus is not None:
                raise ParameterError("prime fields carry no modulus")
        else:
            m = self.modulus
            if m is None or len(m) != self.e + 1 or m[-1] != 1:
                raise ParameterError("modulus must be monic of degree e")
            if any(not 0 <= c < self.p for c in m):
                raise ParameterError("modulus coefficients must lie in [0, p)")
        if self.q.bit_length() > MAX_FIELD_BITS:
            raise OutOfRange("field too large")

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    def elements(self) -> range:
        return range(self.q)

    def digits(self, a: int) -> list[int]:
        """F_p coordinates of ``a``, little-endian."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d % self.p
        return out

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise OutOfRange(f"{a} is not an element of {self!r}")

    # -- scalar arithmetic ---------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.e == 1:
            return -a % self.p
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if self.q <= _SCALAR_TABLE_LIMIT:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def _mul_raw(self, a: int, b: int) -> int:
        p, e, g = self.p, self.e, self.modulus
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] = (prod[i + j] + xi * yj) % p
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k]
            if c:
                for i in range(e + 1):
                    prod[k - e + i] = (prod[k - e + i] - c * g[i]) % p
        return self.from_digits(prod[:e])

    @cached_property
    def _mul_table(self) -> list[list[int]]:
        return [[self._mul_raw(a, b) for b in range(self.q)] for a in range(self.q)]

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = 1
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in {self!r}")
        if self.e == 1:
            return pow(a, -1, self.p)
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    @cached_property
    def tables(self) -> FieldTables:
        q = self.q
        if q > 1 << 12:
            raise OutOfRange(f"operation tables for {self!r} would be too large")
        idx = np.arange(q, dtype=np.int64)
        if self.e == 1:
            add = (idx[:, None] + idx[None, :]) % q
            mul = (idx[:, None] * idx[None, :]) % q
            neg = -idx % q
        else:
            add = np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            mul = np.array([[self.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
            neg = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        sub = add[:, neg]
        inv = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
        return FieldTables(add=add, sub=sub, mul=mul, neg=neg, inv=inv)


# -- polynomials over a FieldSpec (coefficient lists, constant term first) ---

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(F: FieldSpec, a: Sequence[int], f: Sequence[int]) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    lead_inv = F.inv(f[-1])
    while len(a) - 1 >= df:
        c = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, fi))
        _trim(a)
    return a


def _pmulmod(F: FieldSpec, a: Sequence[int], b: Sequence[int], f: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = F.add(prod[i + j], F.mul(x, y))
    return _pmod(F, prod, f)


def _ppowmod(F: FieldSpec, a: Sequence[int], k: int, f: Sequence[int]) -> list[int]:
    result, base = [1], _pmod(F, a, f)
    while k:
        if k & 1:
            result = _pmulmod(F, result, base, f)
        base = _pmulmod(F, base, base, f)
        k >>= 1
    return result


def _pgcd(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(F, a, b)
    return a


def is_irreducible(F: FieldSpec, f: Sequence[int]) -> bool:
    """Irreducibility over F of the polynomial ``f`` (constant term first).

    Uses the criterion: f of degree d is irreducible iff f divides
    x^{q^d} - x and gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d.
    """
    f = _trim(list(f))
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    frob = [x]  # frob[k] = x^{q^k} mod f
    for _ in range(d):
        frob.append(_ppowmod(F, frob[-1], F.q, f))
    if _trim(list(frob[d])) != _pmod(F, x, f):
        return False
    for r in _prime_factors(d):
        h = list(frob[d // r]) + [0] * 2
        h[1] = F.sub(h[1], 1)
        if len(_pgcd(F, h, f)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(F: FieldSpec, degree: int) -> tuple[int, ...]:
    """Canonical monic irreducible of ``degree`` over F, constant term first."""
    if degree < 1:
        raise ParameterError("degree must be >= 1")
    for low in itertools.product(range(F.q), repeat=degree):
        cand = low + (1,)
        if is_irreducible(F, cand):
            return cand
    raise AssertionError("irreducible polynomials exist in every degree")  # pragma: no cover


def make_prime_field(p: int) -> FieldSpec:
    if p < 2 or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldSpec(p)


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """F_q with its canonical defining polynomial over F_p."""
    p, e = prime_power(q)
    if e == 1:
        return FieldSpec(p)
    return FieldSpec(p, e, find_irreducible(FieldSpec(p), e))


# -- extension fields ---------------------------------------------------------

@dataclass(frozen=True)
class ExtFieldCtx:
    """The field F_{q^n} = F_q[z]/(h).

    ``modulus`` lists the F_q coefficients of h (constant term first,
    leading 1 included).  Two contexts are equal iff base, degree and
    modulus agree.
    """

    base: FieldSpec
    n: int
    modulus: tuple[int, ...]
    _reduce: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    frobenius_table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, F = self.n, self.base
        if n < 1:
            raise ParameterError("extension degree must be >= 1")
        h = tuple(self.modulus)
        if len(h) != n + 1 or h[-1] != 1 or any(not 0 <= c < F.q for c in h):
            raise ParameterError("modulus must be monic of degree n over the base field")
        if (F.q**n).bit_length() > MAX_FIELD_BITS + 1:
            raise OutOfRange(f"GF({F.q}^{n}) exceeds the supported size")
        object.__setattr__(self, "modulus", h)
        # z^{n+i} mod h for i = 0 .. n-2
        red = []
        cur = [F.neg(c) for c in h[:n]]
        for _ in range(max(n - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [F.sub(c, F.mul(top, hc)) for c, hc in zip(cur, h[:n])]
        object.__setattr__(self, "_reduce", tuple(red))
        # column j holds the coordinates of (z^j)^q
        cols = [self._pow(tuple(1 if i == j else 0 for i in range(n)), F.q) for j in range(n)]
        table = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        object.__setattr__(self, "frobenius_table", table)

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.base.q**self.n

    def __repr__(self) -> str:
        return f"GF({self.base.q}^{self.n})"

    # -- raw coordinate arithmetic -------------------------------------------
    def _mul(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        F, n = self.base, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        out = prod[:n]
        for i, c in enumerate(prod[n:]):
            if c:
                out = [F.add(o, F.mul(c, r)) for o, r in zip(out, self._reduce[i])]
        return tuple(out)

    def _pow(self, a: Sequence[int], k: int) -> tuple[int, ...]:
        result = tuple(1 if i == 0 else 0 for i in range(self.n))
        base = tuple(a)
        while k:
            if k & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            k >>= 1
        return result

    def _frob1(self, a: Sequence[int]) -> tuple[int, ...]:
        F, T = self.base, self.frobenius_table
        out = []
        for row in T:
            acc = 0
            for t, x in zip(row, a):
                if t and x:
                    acc = F.add(acc, F.mul(t, x))
            out.append(acc)
        return tuple(out)

    # -- element constructors --------------------------------------------------
    def element(self, coords: Sequence[int]) -> FieldElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.n or any(not 0 <= c < self.q for c in coords):
            raise OutOfRange(f"invalid coordinates {coords} for {self!r}")
        return FieldElement(self, coords)

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.n)

    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def from_base(self, c: int) -> FieldElement:
        """Embed an element of F_q as a constant."""
        self.base._check(c)
        return FieldElement(self, (c,) + (0,) * (self.n - 1))

    def basis(self) -> list[FieldElement]:
        """The power basis 1, z, ..., z^{n-1}."""
        return [
            FieldElement(self, tuple(1 if i == j else 0 for i in range(self.n)))
            for j in range(self.n)
        ]

    def elements(self) -> Iterator[FieldElement]:
        for k in range(self.order):
            yield decode_int(self, k)

    def random_element(self, rng: np.random.Generator, nonzero: bool = False) -> FieldElement:
        while True:
            x = FieldElement(self, tuple(int(c) for c in rng.integers(0, self.q, self.n)))
            if x or not nonzero:
                return x


class FieldElement:
    """An element of an :class:`ExtFieldCtx`, stored by power-basis coordinates."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: ExtFieldCtx, coords: tuple[int, ...]):
        self.ctx = ctx
        self.coords = coords

    def _same(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement) or other.ctx != self.ctx:
            raise ContextMismatch(f"{other!r} is not in {self.ctx!r}")

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> FieldElement:
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.neg(a) for a in self.coords))

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        return FieldElement(self.ctx, self.ctx._mul(self.coords, other.coords))

    def scale(self, c: int) -> FieldElement:
        """Multiply by a scalar of the base field F_q."""
        F = self.ctx.base
        return FieldElement(self.ctx, tuple(F.mul(c, a) for a in self.coords))

    def __pow__(self, k: int) -> FieldElement:
        if k < 0:
            return self.inverse() ** (-k)
        return FieldElement(self.ctx, self.ctx._pow(self.coords, k))

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero(f"0 has no inverse in {self.ctx!r}")
        return self ** (self.ctx.order - 2)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * other.inverse()

    def frobenius(self, i: int = 1) -> FieldElement:
        """x^{q^i}, applying the precomputed Frobenius matrix ``i mod n`` times."""
        if i < 0:
            raise ParameterError("Frobenius exponent must be >= 0")
        c = self.coords
        for _ in range(i % self.ctx.n):
            c = self.ctx._frob1(c)
        return FieldElement(self.ctx, c)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.coords == other.coords
            and self.ctx == other.ctx
        )

    def __hash__(self) -> int:
        return hash((self.ctx.n, self.ctx.modulus, self.coords))

    def __int__(self) -> int:
        return encode_int(self)

    def __repr__(self) -> str:
        return f"{self.ctx!r}<{encode_int(self)}>"


@lru_cache(maxsize=None)
def make_extension(base: FieldSpec, degree: int) -> ExtFieldCtx:
    """F_{q^degree} over ``base`` with the canonical modulus.

    A degree-one extension is the base field itself, realised as
    F_q[z]/(z).
    """
    if degree < 1:
        raise ParameterError("degree must be >= 1")
    return ExtFieldCtx(base, degree, find_irreducible(base, degree))


def frobenius(ctx: ExtFieldCtx, x: FieldElement, i: int) -> FieldElement:
    if x.ctx != ctx:
        raise ContextMismatch(f"{x!r} is not in {ctx!r}")
    return x.frobenius(i)


def encode_int(x: FieldElement) -> int:
    """Little-endian base-q packing of the coordinates (each already base-p packed)."""
    q = x.ctx.q
    out = 0
    for c in reversed(x.coords):
        out = out * q + c
    return out


def decode_int(ctx: ExtFieldCtx, k: int) -> FieldElement:
    if not 0 <= k < ctx.order:
        raise OutOfRange(f"{k} does not encode an element of {ctx!r}")
    coords = []
    for _ in range(ctx.n):
        k, r = divmod(k, ctx.q)
        coords.append(r)
    return FieldElement(ctx, tuple(coords))
