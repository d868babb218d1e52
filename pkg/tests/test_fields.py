import itertools
import random

import pytest

from skewcodes.errors import (
    ContextMismatch,
    DegreeMismatch,
    DivisionByZero,
    EvenPrime,
    NotPrime,
    ReducibleModulus,
)
from skewcodes.fields import (
    FieldCtx,
    ctx_new,
    fq_add,
    fq_inv,
    fq_mul,
    fq_pow,
    fq_sub,
    frobenius,
)


def _quadratic_has_root(c0, c1, p):
    return any((x * x + c1 * x + c0) % p == 0 for x in range(p))


def test_prime_field_modulus_is_x():
    ctx = ctx_new(3, 1)
    assert ctx.modulus == (0, 1)
    assert ctx.q == 3


def test_smallest_quadratic_modulus_over_f3():
    # oracle: a monic quadratic is irreducible iff it has no root
    irreducible = [(c0, c1) for c0, c1 in itertools.product(range(3), repeat=2)
                   if not _quadratic_has_root(c0, c1, 3)]
    assert irreducible[0] == (1, 0)
    assert ctx_new(3, 2).modulus == (1, 0, 1)


@pytest.mark.parametrize("p, m, mod, err", [
    (4, 1, None, NotPrime),
    (1, 1, None, NotPrime),
    (2, 1, None, EvenPrime),
    (3, 2, [2, 0, 1], ReducibleModulus),  # x^2 + 2 = (x+1)(x+2)
    (3, 2, [1, 0, 0, 1], DegreeMismatch),
    (3, 2, [1, 0, 2], DegreeMismatch),
])
def test_ctx_errors(p, m, mod, err):
    with pytest.raises(err):
        ctx_new(p, m, mod)


def test_explicit_modulus_accepts_short_form():
    assert FieldCtx(3, 2, [1, 0]) == FieldCtx(3, 2, [1, 0, 1])
    assert FieldCtx(3, 2, [2, 1, 1]).modulus == (2, 1, 1)


def test_add_examples(F3, F9):
    assert fq_add(F3(1), F3(2)) == F3(0)
    w = F9(3)  # encoding: w is c1 = 1
    assert fq_add(w, F9(4)) == F9(2 * 3 + 1)  # w + (w+1) = 2w + 1
    for a in F9.elements():
        assert a + F9.zero == a


def test_mul_examples(F9):
    w = F9(3)
    assert fq_mul(w, w) == F9(2)
    assert fq_inv(F9.one) == F9.one


def test_inverse_and_zero(F9):
    for a in F9.elements():
        if a:
            assert a * fq_inv(a) == F9.one
    with pytest.raises(DivisionByZero):
        fq_inv(F9.zero)


@pytest.mark.parametrize("p, m", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (7, 1)])
def test_lagrange(p, m):
    ctx = FieldCtx(p, m)
    for a in ctx.elements():
        if a:
            assert fq_pow(a, ctx.q - 1) == ctx.one
            assert a ** (ctx.q - 1) == ctx.one


def test_log_table_mul_matches_polynomial_mul(F27):
    for a, b in itertools.product(range(F27.q), repeat=2):
        assert F27.mul(a, b) == F27._mul_slow(a, b)


def test_frobenius_examples(F3, F9):
    w = F9(3)
    assert frobenius(w, 1) == F9(6)  # 2w
    assert frobenius(F3(2), 1) == F3(2)
    for a in F9.elements():
        assert frobenius(a, 0) == a
        assert frobenius(a, F9.m) == a


def _all_triples_or_sample(ctx, n_random):
    els = list(ctx.elements())
    if ctx.q <= 3:
        return itertools.product(els, repeat=3)
    rng = random.Random(1)
    return ((rng.choice(els), rng.choice(els), rng.choice(els)) for _ in range(n_random))


@pytest.mark.parametrize("m", [1, 2])
def test_field_axioms(m):
    ctx = FieldCtx(3, m)
    els = list(ctx.elements())
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert fq_sub(a + b, b) == a
    for a, b, c in _all_triples_or_sample(ctx, 100_000):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("m", [1, 2])
def test_frobenius_is_automorphism(m):
    ctx = FieldCtx(3, m)
    for t in range(3):
        for a, b in itertools.product(ctx.elements(), repeat=2):
            assert frobenius(a * b, t) == frobenius(a, t) * frobenius(b, t)
            assert frobenius(a + b, t) == frobenius(a, t) + frobenius(b, t)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_frobenius_order(m):
    from math import gcd
    ctx = FieldCtx(3, m)
    for t in range(1, 4):
        expected = m // gcd(t, m)
        order = next(k for k in range(1, 2 * m + 1)
                     if all(ctx.frob(a, t * k) == a for a in range(ctx.q)))
        assert order == expected


def test_context_mismatch():
    a = FieldCtx(3, 2)(1)
    b = FieldCtx(3, 2, [2, 1, 1])(1)
    with pytest.raises(ContextMismatch):
        fq_add(a, b)


def test_element_coeffs_roundtrip(F27):
    for v in range(F27.q):
        e = F27(v)
        assert F27.encode(e.coeffs) == v
        assert all(0 <= c < 3 for c in e.coeffs)
