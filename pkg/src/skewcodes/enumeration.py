"""Factorization of x^n - 1 over F_q, the code-count formula, and brute-force oracles.

The count multiplies ``(s_i + 1)^4`` over the commutative factorization
``x^n - 1 = prod p_i^{s_i}``. The right-divisor oracle scans every monic
polynomial of degree <= n in the skew ring and keeps those leaving zero
remainder, so the two can be compared directly.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import kernels
from .codes import SkewCyclicCodeFq, SkewCyclicCodeR
from .errors import EvenLength, OutOfEnvelope
from .fields import FieldCtx
from .skewpoly import FqDomain, SkewPoly, x_pow_minus_one

MAX_FACTOR_N = 30
MAX_FACTOR_Q = 81
#: budget (candidates * n) for the brute-force divisor scan
ORACLE_BUDGET = 10**8


# -- commutative polynomial helpers (F_q[x] is F_q[x; frob^0]) ---------------------

def _commutative(ctx: FieldCtx) -> FqDomain:
    return FqDomain(ctx, 0)


def _gcd(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    while not b.is_zero():
        a, b = b, a.right_rem(b)
    return a.monic() if not a.is_zero() else a


def _powmod(base: SkewPoly, e: int, mod: SkewPoly) -> SkewPoly:
    result = SkewPoly.one_of(base.domain)
    base = base.right_rem(mod)
    while e:
        if e & 1:
            result = (result * base).right_rem(mod)
        base = (base * base).right_rem(mod)
        e >>= 1
    return result


def _div(a: SkewPoly, b: SkewPoly) -> SkewPoly:
    quot, rem = a.right_divmod(b)
    assert rem.is_zero()
    return quot


def _sort_key(f: SkewPoly):
    return (f.degree, f.raw)


def _edf(g: SkewPoly, d: int, rng: random.Random) -> list[SkewPoly]:
    """Cantor-Zassenhaus split of a squarefree product of degree-d irreducibles (q odd)."""
    if g.degree == d:
        return [g]
    dom = g.domain
    q = dom.ctx.q
    one = SkewPoly.one_of(dom)
    e = (q**d - 1) // 2
    while True:
        a = SkewPoly(dom, [rng.randrange(q) for _ in range(g.degree)])
        if a.degree < 1:
            continue
        u = _gcd(g, _powmod(a, e, g) - one)
        if 0 < u.degree < g.degree:
            return _edf(u, d, rng) + _edf(_div(g, u), d, rng)


def _squarefree_factor(f: SkewPoly, rng: random.Random) -> list[SkewPoly]:
    """Distinct-degree then equal-degree factorization of a monic squarefree f."""
    dom = f.domain
    q = dom.ctx.q
    x = SkewPoly.monomial(dom, 1)
    out: list[SkewPoly] = []
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = _powmod(h, q, f)
        g = _gcd(f, h - x)
        if g.degree > 0:
            out.extend(_edf(g, d, rng))
            f = _div(f, g)
            h = h.right_rem(f)
    if f.degree > 0:
        out.append(f)
    return out


def is_irreducible_trial(f: SkewPoly) -> bool:
    """Trial division by every monic polynomial of degree 1 .. deg/2 (commutative)."""
    dom = _commutative(f.domain.ctx)
    f = SkewPoly(dom, f.raw)
    q = dom.ctx.q
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for tail in itertools.product(range(q), repeat=d):
            if f.right_rem(SkewPoly(dom, list(tail) + [1])).is_zero():
                return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_rabin(f: SkewPoly) -> bool:
    """Rabin's test over F_q (commutative)."""
    dom = _commutative(f.domain.ctx)
    f = SkewPoly(dom, f.raw).monic()
    q = dom.ctx.q
    d = f.degree
    if d < 1:
        return False
    x = SkewPoly.monomial(dom, 1)

    def x_q_pow(k):
        h = x
        for _ in range(k):
            h = _powmod(h, q, f)
        return h

    if not (x_q_pow(d) - x).right_rem(f).is_zero():
        return False
    return all(_gcd(f, x_q_pow(d // r) - x).degree == 0 for r in _prime_divisors(d))


def is_irreducible(f: SkewPoly, trial_budget: int = 100_000) -> bool:
    q = f.domain.ctx.q
    if q ** (max(f.degree, 0) // 2) <= trial_budget:
        return is_irreducible_trial(f)
    return is_irreducible_rabin(f)


@dataclass(frozen=True)
class Factorization:
    """x^n - 1 = prod p_i^{s_i} over F_q (commutative)."""

    n: int
    q: int
    factors: tuple[tuple[SkewPoly, int], ...]

    def expand(self) -> SkewPoly:
        ctx_dom = self.factors[0][0].domain
        out = SkewPoly.one_of(ctx_dom)
        for p, s in self.factors:
            for _ in range(s):
                out = out * p
        return out

    def verify(self) -> bool:
        dom = self.factors[0][0].domain
        polys = [p for p, _ in self.factors]
        return (self.expand() == x_pow_minus_one(self.n, dom)
                and len(set(polys)) == len(polys)
                and all(p.is_monic() and is_irreducible(p) for p in polys))

    @property
    def count(self) -> int:
        """Number of skew cyclic codes over R predicted by prod (s_i + 1)^4."""
        out = 1
        for _, s in self.factors:
            out *= (s + 1) ** 4
        return out

    def divisor_count(self) -> int:
        out = 1
        for _, s in self.factors:
            out *= s + 1
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "q": self.q,
                "factors": [{"poly": list(p.raw), "mult": s} for p, s in self.factors]}


def factor_xn_minus_1(ctx: FieldCtx, n: int, seed: int = 0) -> Factorization:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > MAX_FACTOR_N or ctx.q > MAX_FACTOR_Q:
        raise OutOfEnvelope(f"factorization supported for n <= {MAX_FACTOR_N}, q <= {MAX_FACTOR_Q}")
    dom = _commutative(ctx)
    p = ctx.p
    core, mult = n, 1
    while core % p == 0:
        core //= p
        mult *= p
    # x^n - 1 = (x^core - 1)^(p^e) in characteristic p, and x^core - 1 is squarefree
    rng = random.Random(seed)
    polys = _squarefree_factor(x_pow_minus_one(core, dom), rng)
    polys = sorted((f.monic() for f in polys), key=_sort_key)
    return Factorization(n, ctx.q, tuple((f, mult) for f in polys))


def count_skew_cyclic_r(ctx: FieldCtx, n: int) -> int:
    if n % 2 == 0:
        raise EvenLength(f"counting requires odd n, got {n}")
    return factor_xn_minus_1(ctx, n).count


def _check_oracle_envelope(ctx: FieldCtx, n: int) -> None:
    if ctx.q**n * n > ORACLE_BUDGET:
        raise OutOfEnvelope(f"brute-force scan of q^n = {ctx.q}^{n} candidates is too large")


def enumerate_right_divisors_fq(ctx: FieldCtx, n: int, t: int = 1) -> list[SkewPoly]:
    """Every monic right divisor of x^n - 1 in F_q[x; frob^t], by exhaustive scan.

    Sorted by degree, then by the coefficient tuple (g_0, g_1, ...).
    """
    _check_oracle_envelope(ctx, n)
    dom = FqDomain(ctx, t)
    f = np.array(x_pow_minus_one(n, dom).raw, dtype=np.int64)
    twist = np.stack([ctx.frobenius_table(dom.t * k) for k in range(n + 1)])
    out = []
    for d in range(n + 1):
        tails = kernels.right_divisor_tails(f, d, ctx.sub_table, ctx.mul_table, twist)
        out.extend(SkewPoly(dom, list(tail) + [1]) for tail in tails.tolist())
    return sorted(out, key=_sort_key)


def commutative_divisors(ctx: FieldCtx, n: int) -> list[SkewPoly]:
    """Monic divisors of x^n - 1 in F_q[x], assembled from the factorization."""
    fac = factor_xn_minus_1(ctx, n)
    dom = _commutative(ctx)
    out = []
    for exps in itertools.product(*(range(s + 1) for _, s in fac.factors)):
        g = SkewPoly.one_of(dom)
        for (p, _), e in zip(fac.factors, exps):
            for _ in range(e):
                g = g * p
        out.append(g)
    return sorted(out, key=_sort_key)


def enumerate_codes_r(ctx: FieldCtx, n: int, t: int = 1) -> tuple[int, Iterator[SkewCyclicCodeR]]:
    """All codes eta1*C1 + ... + eta4*C4 over divisor 4-tuples: (count, iterator)."""
    if n % 2 == 0:
        raise EvenLength(f"enumeration requires odd n, got {n}")
    divisors = enumerate_right_divisors_fq(ctx, n, t)
    comps = [SkewCyclicCodeFq(ctx, n, g, t) for g in divisors]

    def gen():
        for tup in itertools.product(comps, repeat=4):
            yield SkewCyclicCodeR(ctx, n, tup)

    return len(comps) ** 4, gen()
