"""Skew polynomial rings F_q[x; sigma] and R[x; theta].

Coefficients sit on the left of the powers of x and multiplication follows
``(a x^i)(b x^j) = a theta^i(b) x^(i+j)``. Only right division is provided:
``f = quot * g + rem``. Quotients by ``x^n - 1`` are never built as rings;
reduction always means "remainder after right division by x^n - 1", which is
well defined even when x^n - 1 is not central.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    DivisorZero,
    DomainMismatch,
    NonInvertibleLead,
)
from .fields import FieldCtx, FqElem
from .ring import RElem, raw_theta

NEG_INF = float("-inf")


class FqDomain:
    """Coefficients in F_q, with x acting as the Frobenius power ``a -> a^(p^t)``."""

    def __init__(self, ctx: FieldCtx, t: int = 1):
        self.ctx = ctx
        self.t = t % ctx.m if ctx.m > 1 else 0
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, FqDomain) and self.ctx == other.ctx and self.t == other.t

    def __hash__(self):
        return hash(("Fq", self.ctx, self.t))

    def __repr__(self):
        return f"F_{self.ctx.q}[x; frob^{self.t}]"

    def coerce(self, x) -> int:
        if isinstance(x, FqElem):
            if x.ctx != self.ctx:
                raise DomainMismatch("coefficient belongs to another field")
            return x.value
        return self.ctx(x).value

    def wrap(self, a: int) -> FqElem:
        return FqElem(self.ctx, a)

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return self.ctx.add(a, b)

    def sub(self, a, b):
        return self.ctx.sub(a, b)

    def neg(self, a):
        return self.ctx.neg(a)

    def mul(self, a, b):
        return self.ctx.mul(a, b)

    def inv(self, a):
        return self.ctx.inv(a)

    def is_unit(self, a) -> bool:
        return a != 0

    def twist(self, a, k: int):
        if not self.t or a == 0:
            return a
        return self.ctx.frob(a, self.t * k)


class RDomain:
    """Coefficients in R (eta-coordinate 4-tuples), with x acting as theta."""

    def __init__(self, ctx: FieldCtx):
        self.ctx = ctx
        self.zero = (0, 0, 0, 0)
        self.one = (1, 1, 1, 1)

    def __eq__(self, other):
        return isinstance(other, RDomain) and self.ctx == other.ctx

    def __hash__(self):
        return hash(("R", self.ctx))

    def __repr__(self):
        return f"R_{self.ctx.q}[x; theta]"

    def coerce(self, x) -> tuple:
        if isinstance(x, RElem):
            if x.ctx != self.ctx:
                raise DomainMismatch("coefficient belongs to another field")
            return x.e
        if isinstance(x, (int, FqElem)):
            return RElem.embed(self.ctx(x)).e
        return RElem(self.ctx, x).e

    def wrap(self, a) -> RElem:
        return RElem._make(self.ctx, a)

    def is_zero(self, a) -> bool:
        return not any(a)

    def add(self, a, b):
        add = self.ctx.add
        return (add(a[0], b[0]), add(a[1], b[1]), add(a[2], b[2]), add(a[3], b[3]))

    def sub(self, a, b):
        sub = self.ctx.sub
        return (sub(a[0], b[0]), sub(a[1], b[1]), sub(a[2], b[2]), sub(a[3], b[3]))

    def neg(self, a):
        neg = self.ctx.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        mul = self.ctx.mul
        return (mul(a[0], b[0]), mul(a[1], b[1]), mul(a[2], b[2]), mul(a[3], b[3]))

    def inv(self, a):
        inv = self.ctx.inv
        return tuple(inv(x) for x in a)

    def is_unit(self, a) -> bool:
        return all(a)

    def twist(self, a, k: int):
        if k == 0:
            return a
        return raw_theta(self.ctx, a, k)


class SkewPoly:
    """An element of a skew polynomial ring, coefficients low to high."""

    __slots__ = ("domain", "c")

    def __init__(self, domain, coeffs: Iterable = ()):
        self.domain = domain
        c = [domain.coerce(x) for x in coeffs]
        while c and domain.is_zero(c[-1]):
            c.pop()
        self.c = tuple(c)

    @classmethod
    def _make(cls, domain, raw: list) -> "SkewPoly":
        while raw and domain.is_zero(raw[-1]):
            raw.pop()
        obj = object.__new__(cls)
        obj.domain = domain
        obj.c = tuple(raw)
        return obj

    # -- constructors ---------------------------------------------------------------

    @classmethod
    def fq(cls, ctx: FieldCtx, coeffs: Iterable = (), t: int = 1) -> "SkewPoly":
        """Polynomial over F_q[x; frob^t] from integer literals or FqElems."""
        return cls(FqDomain(ctx, t), coeffs)

    @classmethod
    def over_r(cls, ctx: FieldCtx, coeffs: Iterable = ()) -> "SkewPoly":
        return cls(RDomain(ctx), coeffs)

    @classmethod
    def from_components(cls, parts: Sequence["SkewPoly"]) -> "SkewPoly":
        """eta1*g1 + eta2*g2 + eta3*g3 + eta4*g4 in R[x; theta] from four F_q polynomials."""
        if len(parts) != 4:
            raise ValueError("need exactly four component polynomials")
        ctx = parts[0].domain.ctx
        length = max(len(g.c) for g in parts)
        raw = [tuple(g.c[i] if i < len(g.c) else 0 for g in parts) for i in range(length)]
        return cls._make(RDomain(ctx), raw)

    @classmethod
    def monomial(cls, domain, k: int, coeff=None) -> "SkewPoly":
        a = domain.one if coeff is None else domain.coerce(coeff)
        return cls._make(domain, [domain.zero] * k + [a])

    @classmethod
    def zero_of(cls, domain) -> "SkewPoly":
        return cls._make(domain, [])

    @classmethod
    def one_of(cls, domain) -> "SkewPoly":
        return cls._make(domain, [domain.one])

    # -- inspection -------------------------------------------------------------------

    @property
    def degree(self):
        """Index of the last nonzero coefficient; -inf for the zero polynomial."""
        return len(self.c) - 1 if self.c else NEG_INF

    @property
    def coeffs(self) -> tuple:
        return tuple(self.domain.wrap(a) for a in self.c)

    @property
    def raw(self) -> tuple:
        return self.c

    def lead(self):
        return self.domain.wrap(self.c[-1])

    def is_zero(self) -> bool:
        return not self.c

    def is_monic(self) -> bool:
        return bool(self.c) and self.c[-1] == self.domain.one

    def component(self, i: int, t: int = 1) -> "SkewPoly":
        """Coefficientwise eta_i-projection of an R-polynomial into F_q[x; frob^t]."""
        if not isinstance(self.domain, RDomain):
            raise DomainMismatch("component() needs a polynomial over R")
        return SkewPoly._make(FqDomain(self.domain.ctx, t), [a[i - 1] for a in self.c])

    def to_list(self) -> list:
        if isinstance(self.domain, FqDomain):
            return list(self.c)
        return [list(a) for a in self.c]

    # -- arithmetic -----------------------------------------------------------------------

    def _check(self, other: "SkewPoly") -> None:
        if not isinstance(other, SkewPoly):
            raise TypeError(f"expected SkewPoly, got {type(other).__name__}")
        if other.domain != self.domain:
            raise DomainMismatch(f"{self.domain!r} vs {other.domain!r}")

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        d = self.domain
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] = d.add(out[i], x)
        return SkewPoly._make(d, out)

    def __neg__(self) -> "SkewPoly":
        return SkewPoly._make(self.domain, [self.domain.neg(x) for x in self.c])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._check(other)
        d = self.domain
        f, g = self.c, other.c
        if not f or not g:
            return SkewPoly._make(d, [])
        out = [d.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            if d.is_zero(a):
                continue
            for j, b in enumerate(g):
                if not d.is_zero(b):
                    out[i + j] = d.add(out[i + j], d.mul(a, d.twist(b, i)))
        return SkewPoly._make(d, out)

    def scale_left(self, a) -> "SkewPoly":
        """a * self for a constant a."""
        d = self.domain
        a = d.coerce(a)
        return SkewPoly._make(d, [d.mul(a, x) for x in self.c])

    def right_divmod(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(quot, rem) with self = quot * g + rem and deg rem < deg g."""
        self._check(g)
        d = self.domain
        if g.is_zero():
            raise DivisorZero("right division by the zero polynomial")
        dg = len(g.c) - 1
        lead = g.c[-1]
        if not d.is_unit(lead):
            raise NonInvertibleLead(f"leading coefficient {d.wrap(lead)!r} is not a unit")
        r = list(self.c)
        if len(r) - 1 < dg:
            return SkewPoly._make(d, []), SkewPoly._make(d, r)
        quot = [d.zero] * (len(r) - dg)
        inv_cache = {}
        gc = g.c
        while len(r) - 1 >= dg:
            k = len(r) - 1 - dg
            if k not in inv_cache:
                inv_cache[k] = d.inv(d.twist(lead, k))
            c = d.mul(r[-1], inv_cache[k])
            quot[k] = c
            for j, b in enumerate(gc):
                if not d.is_zero(b):
                    r[k + j] = d.sub(r[k + j], d.mul(c, d.twist(b, k)))
            r.pop()  # leading term cancels by construction
            while r and d.is_zero(r[-1]):
                r.pop()
        return SkewPoly._make(d, quot), SkewPoly._make(d, r)

    def right_rem(self, g: "SkewPoly") -> "SkewPoly":
        return self.right_divmod(g)[1]

    def monic(self) -> "SkewPoly":
        """Left-scale by the inverse of the leading coefficient."""
        if not self.c:
            raise DivisionByZero("the zero polynomial has no monic associate")
        d = self.domain
        if not d.is_unit(self.c[-1]):
            raise NonInvertibleLead("leading coefficient is not a unit")
        inv = d.inv(self.c[-1])
        return SkewPoly._make(d, [d.mul(inv, x) for x in self.c])

    def __eq__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self.domain == other.domain and self.c == other.c

    def __hash__(self):
        return hash((self.domain, self.c))

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, a in enumerate(self.c):
            if self.domain.is_zero(a):
                continue
            coef = repr(self.domain.wrap(a))
            if i == 0:
                terms.append(coef)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                terms.append(mono if a == self.domain.one else f"({coef})*{mono}")
        return " + ".join(reversed(terms))


# -- functional API -----------------------------------------------------------------

def sp_add(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f + g


def sp_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    return f * g


def sp_right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    return f.right_divmod(g)


def is_right_divisor(g: SkewPoly, f: SkewPoly) -> bool:
    """True iff f = quot * g for some quot."""
    return f.right_divmod(g)[1].is_zero()


def x_pow_minus_one(n: int, domain) -> SkewPoly:
    if n < 1:
        raise ValueError("n must be >= 1")
    return SkewPoly._make(domain, [domain.neg(domain.one)] + [domain.zero] * (n - 1) + [domain.one])


def h_tilde(h: SkewPoly, n: int, t: int) -> SkewPoly:
    """Dual-generator transform: coefficient i is theta^i(h_{n-t-i}).

    ``t`` is the degree of the generator paired with h, so h must have
    degree n - t.
    """
    k = n - t
    if h.degree != k:
        raise DegreeMismatch(f"h has degree {h.degree}, expected n - t = {k}")
    d = h.domain
    return SkewPoly._make(d, [d.twist(h.c[k - i], i) for i in range(k + 1)])
