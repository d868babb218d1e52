"""Finite fields F_p and F_{p^m} for odd primes p.

Elements are stored as integers under the encoding ``sum(c_i * p**i)`` where
``c_0 .. c_{m-1}`` are the polynomial-basis coordinates modulo the context's
irreducible modulus. Multiplication goes through discrete log/antilog tables
built once per context, so every operation is a couple of list lookups.
"""
from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    ContextMismatch,
    DegreeMismatch,
    DivisionByZero,
    EvenPrime,
    NotPrime,
    OutOfEnvelope,
    ReducibleModulus,
)

#: largest field order for which dense q x q operation tables are built
TABLE_LIMIT = 4096
#: largest field order accepted at all (log tables are O(q))
MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- polynomials over F_p as coefficient lists, low to high -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo b over F_p (b nonzero, trimmed)."""
    r = [x % p for x in a]
    _trim(r)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) - 1 >= db:
        c = r[-1] * inv_lead % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim(r)
    return r


def _fp_polymul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def fp_is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial-division irreducibility test for a monic polynomial over F_p.

    Checks every monic candidate factor of degree 1 .. deg/2, which is only
    sensible for the small degrees this package supports.
    """
    poly = _trim([c % p for c in poly])
    deg = len(poly) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not _fp_polymod(poly, list(tail) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m over F_p.

    Candidates are scanned by the coefficient tuple (c_0, ..., c_{m-1}).
    For m == 1 this is the polynomial x.
    """
    for tail in itertools.product(range(p), repeat=m):
        cand = list(tail) + [1]
        if fp_is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible of degree {m} over F_{p}")  # pragma: no cover


class FieldCtx:
    """The finite field F_q = F_p[w]/(modulus), q = p**m.

    Immutable after construction. ``modulus`` is stored as the full monic
    coefficient tuple (c_0, ..., c_{m-1}, 1).
    """

    __slots__ = ("p", "m", "q", "modulus", "__dict__")

    def __init__(self, p: int, m: int = 1, modulus: Sequence[int] | None = None):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if p == 2:
            raise EvenPrime("characteristic 2 is not supported")
        if m < 1:
            raise DegreeMismatch(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_ORDER:
            raise OutOfEnvelope(f"q={p}^{m} exceeds the supported field size")
        if modulus is None:
            mod = smallest_irreducible(p, m)
        else:
            mod = tuple(int(c) % p for c in modulus)
            if len(mod) == m:
                mod = mod + (1,)
            if len(mod) != m + 1:
                raise DegreeMismatch(f"modulus {list(modulus)} does not have degree {m}")
            if mod[-1] != 1:
                raise DegreeMismatch(f"modulus {list(modulus)} is not monic")
            if not fp_is_irreducible(mod, p):
                raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = mod

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def to_dict(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    # -- encoding -----------------------------------------------------------

    def digits(self, v: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            v, r = divmod(v, p)
            out.append(r)
        return tuple(out)

    def encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(coeffs):
            v = v * self.p + (c % self.p)
        return v

    def __call__(self, value) -> "FqElem":
        """Coerce an integer literal (or FqElem) into this field."""
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise ContextMismatch("element belongs to another field")
            return value
        v = int(value)
        if not 0 <= v < self.q:
            # negative literals mean additive inverses of small integers
            if self.m == 1 or -self.p < v < 0:
                v = self.encode([v % self.p])
            else:
                raise ValueError(f"element literal {value} outside [0, {self.q})")
        return FqElem(self, v)

    def elements(self) -> Iterator["FqElem"]:
        return (FqElem(self, v) for v in range(self.q))

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    @property
    def primitive_element(self) -> "FqElem":
        return FqElem(self, self._exp[1])

    # -- raw integer arithmetic (hot path) ------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        prod = _fp_polymul(self.digits(a), self.digits(b), self.p)
        return self.encode(_fp_polymod(prod, self.modulus, self.p))

    @cached_property
    def _log_tables(self) -> tuple[list[int], list[int]]:
        q = self.q
        if q == 3:
            return [1, 2], [0, 0, 1]  # exp, log (log[0] unused)
        for g in range(2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._mul_slow(x, g)
                if x == 1:
                    break
                exp.append(x)
            else:
                if self._mul_slow(x, g) == 1:
                    log = [0] * q
                    for i, e in enumerate(exp):
                        log[e] = i
                    return exp, log
        raise AssertionError("no primitive element found")  # pragma: no cover

    @property
    def _exp(self) -> list[int]:
        return self._log_tables[0]

    @property
    def _log(self) -> list[int]:
        return self._log_tables[1]

    @cached_property
    def _add_list(self) -> list[list[int]] | None:
        if self.q > TABLE_LIMIT // 4:
            return None
        return self.add_table.tolist()

    @cached_property
    def digit_array(self) -> np.ndarray:
        """(q, m) array of polynomial-basis coordinates of every element."""
        v = np.arange(self.q, dtype=np.int64)
        return np.stack([(v // self.p**i) % self.p for i in range(self.m)], axis=1)

    def _encode_array(self, digits: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.m, dtype=np.int64)
        return (digits % self.p) @ weights

    @cached_property
    def add_table(self) -> np.ndarray:
        if self.q > TABLE_LIMIT:
            raise OutOfEnvelope("dense tables are limited to q <= %d" % TABLE_LIMIT)
        d = self.digit_array
        return self._encode_array(d[:, None, :] + d[None, :, :])

    @cached_property
    def neg_table(self) -> np.ndarray:
        return self._encode_array(-self.digit_array)

    @cached_property
    def sub_table(self) -> np.ndarray:
        if self.q > TABLE_LIMIT:
            raise OutOfEnvelope("dense tables are limited to q <= %d" % TABLE_LIMIT)
        d = self.digit_array
        return self._encode_array(d[:, None, :] - d[None, :, :])

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > TABLE_LIMIT:
            raise OutOfEnvelope("dense tables are limited to q <= %d" % TABLE_LIMIT)
        q = self.q
        exp = np.array(self._exp, dtype=np.int64)
        log = np.array(self._log, dtype=np.int64)
        t = exp[(log[:, None] + log[None, :]) % (q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        return t

    @cached_property
    def inv_table(self) -> np.ndarray:
        t = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            t[a] = self.inv(a)
        return t

    def frobenius_table(self, t: int = 1) -> np.ndarray:
        """Array mapping a -> a^(p^t) for every encoded element."""
        return np.array(self._frob_list(t % self.m), dtype=np.int64)

    def _frob_list(self, t: int) -> list[int]:
        cache = self.__dict__.setdefault("_frob_cache", {})
        t %= self.m
        if t not in cache:
            e = self.p**t
            cache[t] = [self.pow(a, e) for a in range(self.q)]
        return cache[t]

    def add(self, a: int, b: int) -> int:
        tab = self._add_list
        if tab is not None:
            return tab[a][b]
        da, db = self.digits(a), self.digits(b)
        return self.encode([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        return self.encode([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        log = self._log
        return self._exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frob(self, a: int, t: int = 1) -> int:
        if t % self.m == 0:
            return a
        return self._frob_list(t)[a]


def _pow_sq_mult(ctx: FieldCtx, a: int, e: int) -> int:
    """Square-and-multiply on raw encodings, independent of the log tables."""
    result, base = 1, a
    while e:
        if e & 1:
            result = ctx._mul_slow(result, base)
        base = ctx._mul_slow(base, base)
        e >>= 1
    return result


class FqElem:
    """An element of F_q bound to its :class:`FieldCtx`."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.digits(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise ContextMismatch("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.ctx(other).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FqElem(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        return FqElem(self.ctx, self.ctx.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FqElem(self.ctx, self.ctx.mul(self.value, self.ctx.inv(o)))

    def __pow__(self, e: int):
        return FqElem(self.ctx, self.ctx.pow(self.value, e))

    def frobenius(self, t: int = 1) -> "FqElem":
        return FqElem(self.ctx, self.ctx.frob(self.value, t))

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx == other.ctx and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        if self.ctx.m == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("w" if i == 1 else f"w^{i}")
                terms.append(f"{c}{mono}" if c != 1 or i == 0 else mono)
        return " + ".join(reversed(terms)) or "0"


# -- functional API ------------------------------------------------------------

def ctx_new(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    return FieldCtx(p, m, modulus)


def _same(a: FqElem, b: FqElem) -> None:
    if a.ctx != b.ctx:
        raise ContextMismatch("operands belong to different fields")


def fq_add(a: FqElem, b: FqElem) -> FqElem:
    _same(a, b)
    return a + b


def fq_sub(a: FqElem, b: FqElem) -> FqElem:
    _same(a, b)
    return a - b


def fq_neg(a: FqElem) -> FqElem:
    return -a


def fq_mul(a: FqElem, b: FqElem) -> FqElem:
    _same(a, b)
    return a * b


def fq_inv(a: FqElem) -> FqElem:
    return a.inverse()


def fq_pow(a: FqElem, e: int) -> FqElem:
    """a**e by square-and-multiply on the polynomial representation."""
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return FqElem(a.ctx, _pow_sq_mult(a.ctx, a.value, e))


def frobenius(a: FqElem, t: int = 1) -> FqElem:
    """a^(p^t)."""
    if t < 0:
        raise ValueError("Frobenius power must be non-negative")
    return a.frobenius(t)
