"""The ring R = F_q + uF_q + vF_q + uvF_q with u^2 = u, v^2 = v, uv = vu.

R splits as a product of four copies of F_q along the orthogonal idempotents

    eta1 = 1 - u - v + uv,  eta2 = uv,  eta3 = u - uv,  eta4 = v - uv,

so every element is stored by its four eta-coordinates and ring arithmetic is
coordinatewise. The standard basis (1, u, v, uv) only appears at I/O.
"""
from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .errors import ContextMismatch, LengthMismatch
from .fields import FieldCtx, FqElem

Raw = tuple  # (a1, a2, a3, a4) of encoded F_q integers


def _raw(ctx: FieldCtx, x) -> int:
    if isinstance(x, FqElem):
        if x.ctx != ctx:
            raise ContextMismatch("coefficient belongs to another field")
        return x.value
    return ctx(x).value


def raw_std_to_eta(ctx: FieldCtx, b0: int, b1: int, b2: int, b3: int) -> Raw:
    add = ctx.add
    s01 = add(b0, b1)
    return (b0, add(add(s01, b2), b3), s01, add(b0, b2))


def raw_eta_to_std(ctx: FieldCtx, e: Raw) -> tuple[int, int, int, int]:
    a1, a2, a3, a4 = e
    sub = ctx.sub
    b1 = sub(a3, a1)
    b2 = sub(a4, a1)
    b3 = sub(sub(a2, a3), b2)
    return (a1, b1, b2, b3)


def raw_theta(ctx: FieldCtx, e: Raw, power: int = 1) -> Raw:
    """theta^power on eta-coordinates: Frobenius everywhere, eta3/eta4 swapped when odd."""
    f = ctx.frob
    a1, a2, a3, a4 = (f(a, power) for a in e)
    if power % 2:
        a3, a4 = a4, a3
    return (a1, a2, a3, a4)


def raw_gray(ctx: FieldCtx, e: Raw) -> tuple[int, int, int, int]:
    add = ctx.add
    a, b, c, d = e
    ab = add(a, b)
    return (a, ab, add(a, c), add(add(ab, c), d))


def raw_gray_inverse(ctx: FieldCtx, g: Sequence[int]) -> Raw:
    sub = ctx.sub
    g0, g1, g2, g3 = g
    return (g0, sub(g1, g0), sub(g2, g0), sub(sub(g3, g1), sub(g2, g0)))


class RElem:
    """An element a1*eta1 + a2*eta2 + a3*eta3 + a4*eta4 of R."""

    __slots__ = ("ctx", "e")

    def __init__(self, ctx: FieldCtx, e: Iterable):
        e = tuple(_raw(ctx, x) for x in e)
        if len(e) != 4:
            raise ValueError("an element of R has exactly four eta-coordinates")
        self.ctx = ctx
        self.e = e

    @classmethod
    def _make(cls, ctx: FieldCtx, e: Raw) -> "RElem":
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.e = e
        return obj

    # -- constructors ----------------------------------------------------------

    @classmethod
    def from_std(cls, ctx: FieldCtx, b0, b1=0, b2=0, b3=0) -> "RElem":
        """b0 + b1*u + b2*v + b3*uv."""
        return cls._make(ctx, raw_std_to_eta(ctx, *(_raw(ctx, b) for b in (b0, b1, b2, b3))))

    @classmethod
    def from_eta(cls, ctx: FieldCtx, a1, a2, a3, a4) -> "RElem":
        return cls(ctx, (a1, a2, a3, a4))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "RElem":
        return cls._make(ctx, (0, 0, 0, 0))

    @classmethod
    def one(cls, ctx: FieldCtx) -> "RElem":
        return cls._make(ctx, (1, 1, 1, 1))

    @classmethod
    def u(cls, ctx: FieldCtx) -> "RElem":
        return cls.from_std(ctx, 0, 1, 0, 0)

    @classmethod
    def v(cls, ctx: FieldCtx) -> "RElem":
        return cls.from_std(ctx, 0, 0, 1, 0)

    @classmethod
    def uv(cls, ctx: FieldCtx) -> "RElem":
        return cls.from_std(ctx, 0, 0, 0, 1)

    @classmethod
    def eta(cls, ctx: FieldCtx, i: int) -> "RElem":
        """The idempotent eta_i, i in 1..4."""
        e = [0, 0, 0, 0]
        e[i - 1] = 1
        return cls._make(ctx, tuple(e))

    @classmethod
    def embed(cls, x: FqElem) -> "RElem":
        """The constant x of F_q viewed inside R."""
        return cls._make(x.ctx, (x.value,) * 4)

    @classmethod
    def all(cls, ctx: FieldCtx) -> Iterator["RElem"]:
        q = ctx.q
        for a in range(q):
            for b in range(q):
                for c in range(q):
                    for d in range(q):
                        yield cls._make(ctx, (a, b, c, d))

    # -- views -----------------------------------------------------------------

    @property
    def eta_coords(self) -> tuple[FqElem, ...]:
        return tuple(FqElem(self.ctx, a) for a in self.e)

    @property
    def std_coords(self) -> tuple[FqElem, ...]:
        return tuple(FqElem(self.ctx, b) for b in raw_eta_to_std(self.ctx, self.e))

    def is_zero(self) -> bool:
        return not any(self.e)

    def is_unit(self) -> bool:
        return all(self.e)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "RElem") -> Raw:
        if not isinstance(other, RElem):
            raise TypeError(f"expected RElem, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatch("operands belong to different fields")
        return other.e

    def __add__(self, other):
        if isinstance(other, (int, FqElem)):
            other = RElem.embed(self.ctx(other))
        o = self._check(other)
        add = self.ctx.add
        return RElem._make(self.ctx, tuple(add(x, y) for x, y in zip(self.e, o)))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return RElem._make(self.ctx, tuple(neg(x) for x in self.e))

    def __sub__(self, other):
        if isinstance(other, (int, FqElem)):
            other = RElem.embed(self.ctx(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FqElem)):
            other = RElem.embed(self.ctx(other))
        o = self._check(other)
        mul = self.ctx.mul
        return RElem._make(self.ctx, tuple(mul(x, y) for x, y in zip(self.e, o)))

    __rmul__ = __mul__

    def inverse(self) -> "RElem":
        inv = self.ctx.inv
        return RElem._make(self.ctx, tuple(inv(x) for x in self.e))

    def theta(self, power: int = 1) -> "RElem":
        return RElem._make(self.ctx, raw_theta(self.ctx, self.e, power))

    def gray(self) -> tuple[FqElem, ...]:
        return tuple(FqElem(self.ctx, g) for g in raw_gray(self.ctx, self.e))

    def lee_weight(self) -> int:
        return sum(1 for g in raw_gray(self.ctx, self.e) if g)

    def __eq__(self, other):
        if not isinstance(other, RElem):
            return NotImplemented
        return self.ctx == other.ctx and self.e == other.e

    def __hash__(self):
        return hash((self.ctx, self.e))

    def __repr__(self):
        return f"eta:{list(self.e)}"

    def to_text(self, basis: str = "eta") -> str:
        if basis == "std":
            return f"std:{list(raw_eta_to_std(self.ctx, self.e))}"
        return f"eta:{list(self.e)}"


_TEXT_RE = re.compile(r"^\s*(std|eta)\s*:\s*\[([^\]]*)\]\s*$")


def parse_relem(ctx: FieldCtx, text: str) -> RElem:
    """Parse ``std:[b0,b1,b2,b3]`` or ``eta:[a1,a2,a3,a4]``."""
    mt = _TEXT_RE.match(text)
    if not mt:
        raise ValueError(f"cannot parse ring element {text!r}")
    vals = [int(t) for t in mt.group(2).split(",") if t.strip()]
    if len(vals) != 4:
        raise ValueError(f"ring element needs 4 coordinates, got {len(vals)}")
    for v in vals:
        if not 0 <= v < ctx.q:
            raise ValueError(f"literal {v} is not an element of F_{ctx.q}")
    if mt.group(1) == "std":
        return RElem.from_std(ctx, *vals)
    return RElem.from_eta(ctx, *vals)


class RVector:
    """A word (r_0, ..., r_{n-1}) of R^n."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: FieldCtx, entries: Iterable):
        ents = []
        for r in entries:
            if isinstance(r, RElem):
                if r.ctx != ctx:
                    raise ContextMismatch("entry belongs to another field")
                ents.append(r.e)
            else:
                ents.append(tuple(r))
        self.ctx = ctx
        self.entries = tuple(ents)

    @classmethod
    def from_components(cls, ctx: FieldCtx, words: Sequence[Sequence[int]]) -> "RVector":
        """Assemble eta1*w1 + eta2*w2 + eta3*w3 + eta4*w4 from four F_q words."""
        n = len(words[0])
        if any(len(w) != n for w in words):
            raise LengthMismatch("component words differ in length")
        return cls(ctx, zip(*(tuple(int(x) for x in w) for w in words)))

    @classmethod
    def zeros(cls, ctx: FieldCtx, n: int) -> "RVector":
        return cls(ctx, [(0, 0, 0, 0)] * n)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i) -> RElem:
        return RElem._make(self.ctx, self.entries[i])

    def __iter__(self):
        return (RElem._make(self.ctx, e) for e in self.entries)

    def component(self, i: int) -> tuple[int, ...]:
        """The F_q word carried by eta_i (i in 1..4), as encoded integers."""
        return tuple(e[i - 1] for e in self.entries)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.component(i) for i in range(1, 5))

    def __add__(self, other: "RVector") -> "RVector":
        if len(other) != len(self):
            raise LengthMismatch("words differ in length")
        add = self.ctx.add
        return RVector(self.ctx, (tuple(add(x, y) for x, y in zip(a, b))
                                  for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RVector") -> "RVector":
        if len(other) != len(self):
            raise LengthMismatch("words differ in length")
        sub = self.ctx.sub
        return RVector(self.ctx, (tuple(sub(x, y) for x, y in zip(a, b))
                                  for a, b in zip(self.entries, other.entries)))

    def scale(self, r: RElem) -> "RVector":
        mul = self.ctx.mul
        return RVector(self.ctx, (tuple(mul(x, y) for x, y in zip(r.e, a)) for a in self.entries))

    def dot(self, other: "RVector") -> RElem:
        """Standard inner product sum_j x_j y_j over R."""
        if len(other) != len(self):
            raise LengthMismatch("words differ in length")
        acc = RElem.zero(self.ctx)
        for a, b in zip(self, other):
            acc = acc + a * b
        return acc

    def __eq__(self, other):
        if not isinstance(other, RVector):
            return NotImplemented
        return self.ctx == other.ctx and self.entries == other.entries

    def __hash__(self):
        return hash((self.ctx, self.entries))

    def __repr__(self):
        return f"RVector({[list(e) for e in self.entries]})"


# -- functional API --------------------------------------------------------------

def std_to_eta(b0: FqElem, b1: FqElem, b2: FqElem, b3: FqElem) -> RElem:
    ctx = b0.ctx
    return RElem.from_std(ctx, b0, b1, b2, b3)


def eta_to_std(x: RElem) -> tuple[FqElem, ...]:
    return x.std_coords


def r_add(x: RElem, y: RElem) -> RElem:
    return x + y


def r_mul(x: RElem, y: RElem) -> RElem:
    return x * y


def r_theta(x: RElem, power: int = 1) -> RElem:
    return x.theta(power)


def theta_order(ctx: FieldCtx) -> int:
    """Order of theta on R: m when m is even, 2m otherwise."""
    return ctx.m if ctx.m % 2 == 0 else 2 * ctx.m


def gray(x: RElem | RVector) -> tuple[FqElem, ...]:
    """Gray image. For a word of length n the output has length 4n and
    position ``k*n + j`` holds Gray coordinate k of entry j."""
    if isinstance(x, RElem):
        return x.gray()
    ctx = x.ctx
    return tuple(FqElem(ctx, g) for g in gray_word(ctx, x.entries))


def gray_word(ctx: FieldCtx, entries: Sequence[Raw]) -> list[int]:
    n = len(entries)
    out = [0] * (4 * n)
    for j, e in enumerate(entries):
        g = raw_gray(ctx, e)
        out[j], out[n + j], out[2 * n + j], out[3 * n + j] = g
    return out


def gray_inverse(ctx: FieldCtx, image: Sequence) -> RElem | RVector:
    vals = [_raw(ctx, g) for g in image]
    if len(vals) % 4:
        raise LengthMismatch("Gray image length must be a multiple of 4")
    n = len(vals) // 4
    if n == 1:
        return RElem._make(ctx, raw_gray_inverse(ctx, vals))
    return RVector(ctx, (raw_gray_inverse(ctx, vals[j::n]) for j in range(n)))


def lee_weight(x: RElem) -> int:
    return x.lee_weight()


def lee_weight_vec(v: RVector) -> int:
    return sum(1 for g in gray_word(v.ctx, v.entries) if g)


def lee_distance(v: RElem | RVector, w: RElem | RVector) -> int:
    if isinstance(v, RElem):
        return (v - w).lee_weight()
    return lee_weight_vec(v - w)
