import random

import pytest
from hypothesis import given, settings, strategies as st

from skewcodes.errors import DegreeMismatch, DivisorZero, DomainMismatch, NonInvertibleLead
from skewcodes.fields import FieldCtx, frobenius
from skewcodes.ring import RElem
from skewcodes.skewpoly import (
    FqDomain,
    RDomain,
    SkewPoly,
    h_tilde,
    is_right_divisor,
    sp_add,
    sp_mul,
    sp_right_divmod,
    x_pow_minus_one,
)

F9 = FieldCtx(3, 2)
W = F9(3)


def P(coeffs, ctx=F9, t=1):
    return SkewPoly.fq(ctx, coeffs, t)


def twisted_product(f, g, t):
    """Oracle: sum over i, j of a_i * frob^{ti}(b_j) x^{i+j}, on FqElem objects."""
    a, b = f.coeffs, g.coeffs
    ctx = f.domain.ctx
    out = [ctx.zero] * max(len(a) + len(b) - 1, 0)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * frobenius(bj, t * i)
    return SkewPoly.fq(ctx, [c.value for c in out], t)


def convolution(a, b, p):
    out = [0] * max(len(a) + len(b) - 1, 0)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def test_add_examples(F3):
    assert sp_add(P([1, 1], F3), P([2, 1], F3)) == P([0, 2], F3)
    f = P([1, 2, 3])
    assert f + SkewPoly.zero_of(f.domain) == f
    z = sp_add(P([0, 0, 1], F3), P([0, 0, 2], F3))
    assert z.is_zero() and z.degree == float("-inf")


def test_mul_examples(F3):
    wx = P([0, W.value])
    assert sp_mul(wx, wx) == P([0, 0, 1])
    for ctx in (F3, F9):
        for t in (0, 1):
            assert P([1, 1], ctx, t) * P([-1, 1], ctx, t) == P([-1, 0, 1], ctx, t)
    x = P([0, 1])
    w = P([W.value])
    assert x * w == P([0, (2 * W).value])
    assert w * x == P([0, W.value])
    assert x * w != w * x


def test_divmod_examples(F3):
    for ctx in (F3, F9):
        q, r = sp_right_divmod(P([-1, 0, 1], ctx), P([-1, 1], ctx))
        assert q == P([1, 1], ctx) and r.is_zero()
    f = P([2, 0, 1, 5])
    q, r = f.right_divmod(f)
    assert q == P([1]) and r.is_zero()
    g = P([0, W.value])
    q, r = sp_right_divmod(P([0, 0, 1]), g)
    assert r.is_zero() and q * g == P([0, 0, 1])
    assert q == P([0, (W ** 3).inverse().value])


def test_divmod_errors():
    with pytest.raises(DivisorZero):
        P([1, 1]).right_divmod(SkewPoly.zero_of(FqDomain(F9, 1)))
    with pytest.raises(DomainMismatch):
        P([1, 1], t=1) + P([1, 1], t=0)
    u = RElem.u(F9)
    with pytest.raises(NonInvertibleLead):
        SkewPoly.over_r(F9, [1, 1]).right_divmod(SkewPoly.over_r(F9, [1, u]))


@pytest.mark.parametrize("n", [1, 3, 5])
def test_right_divisor_examples(F3, n):
    for ctx in (F3, F9):
        for t in (0, 1):
            xn1 = x_pow_minus_one(n, FqDomain(ctx, t))
            assert is_right_divisor(P([-1, 1], ctx, t), xn1)
    assert not is_right_divisor(P([0, 0, 1], F3), x_pow_minus_one(3, FqDomain(F3, 1)))


def test_x_pow_minus_one_examples(F3):
    assert x_pow_minus_one(1, FqDomain(F3, 1)) == P([-1, 1], F3)
    assert x_pow_minus_one(3, FqDomain(F3, 1)) == P([2, 0, 0, 1], F3)
    assert x_pow_minus_one(5, FqDomain(F9, 1)).raw == (2, 0, 0, 0, 0, 1)


def test_h_tilde_examples(F3):
    assert h_tilde(P([1, 1], F3), 3, 2) == P([1, 1], F3)
    assert h_tilde(P([1, W.value]), 2, 1) == P([W.value, 1])
    with pytest.raises(DegreeMismatch):
        h_tilde(P([1, 1]), 3, 1)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 8), max_size=6).filter(lambda c: c and c[0] != 0),
       st.integers(0, 3))
def test_h_tilde_degree_law(coeffs, extra):
    h = P(coeffs)
    if h.is_zero():
        return
    k = h.degree
    assert h_tilde(h, k + extra, extra).degree == k


coeff_lists = st.lists(st.integers(0, 8), max_size=5)


@settings(max_examples=2000, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists, st.sampled_from([0, 1]))
def test_ring_axioms_fq(a, b, c, t):
    f, g, h = P(a, t=t), P(b, t=t), P(c, t=t)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f * g == twisted_product(f, g, t)


def test_associativity_and_division_random():
    rng = random.Random(7)
    for ctx in (FieldCtx(3, 1), F9):
        for t in (1, 0):
            dom = FqDomain(ctx, t)
            for _ in range(5000):
                f, g, h = (SkewPoly(dom, [rng.randrange(ctx.q) for _ in range(rng.randint(0, 5))])
                           for _ in range(3))
                assert (f * g) * h == f * (g * h)
                assert f * (g + h) == f * g + f * h
                if g.is_zero():
                    continue
                g = g.monic()
                q, r = f.right_divmod(g)
                assert q * g + r == f
                assert r.degree < g.degree


def test_division_by_non_monic_unit_lead():
    rng = random.Random(3)
    dom = FqDomain(F9, 1)
    for _ in range(2000):
        f = SkewPoly(dom, [rng.randrange(9) for _ in range(rng.randint(0, 7))])
        g = SkewPoly(dom, [rng.randrange(9) for _ in range(rng.randint(1, 4))] + [rng.randrange(1, 9)])
        q, r = f.right_divmod(g)
        assert q * g + r == f and r.degree < g.degree


@settings(max_examples=500, deadline=None)
@given(st.lists(st.integers(0, 2), max_size=8), st.lists(st.integers(0, 2), max_size=8))
def test_identity_twist_is_commutative(a, b):
    F3 = FieldCtx(3, 1)
    for t in (0, 1):  # on a prime field every Frobenius power is the identity
        assert list((P(a, F3, t) * P(b, F3, t)).raw) == convolution(a, b, 3)


relem_raw = st.tuples(*[st.integers(0, 2)] * 4)


@settings(max_examples=500, deadline=None)
@given(st.lists(relem_raw, max_size=4), st.lists(relem_raw, max_size=4), st.lists(relem_raw, max_size=4))
def test_ring_axioms_over_r(a, b, c):
    F3 = FieldCtx(3, 1)
    f, g, h = (SkewPoly.over_r(F3, x) for x in (a, b, c))
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_over_r_twist_swaps_eta3_eta4():
    F3 = FieldCtx(3, 1)
    x = SkewPoly.monomial(RDomain(F3), 1)
    e3 = SkewPoly.over_r(F3, [RElem.eta(F3, 3)])
    e4 = SkewPoly.over_r(F3, [RElem.eta(F3, 4)])
    assert e3 * x == x * e4
    assert e3 * x != x * e3


def test_over_r_division_with_unit_lead():
    rng = random.Random(5)
    dom = RDomain(F9)
    for _ in range(500):
        f = SkewPoly(dom, [tuple(rng.randrange(9) for _ in range(4)) for _ in range(rng.randint(0, 5))])
        lead = tuple(rng.randrange(1, 9) for _ in range(4))
        g = SkewPoly(dom, [tuple(rng.randrange(9) for _ in range(4)) for _ in range(rng.randint(0, 2))] + [lead])
        q, r = f.right_divmod(g)
        assert q * g + r == f and r.degree < g.degree


def test_components_roundtrip():
    parts = [P([1, 2]), P([0, 0, 1]), P([5]), P([1, 1, 1])]
    g = SkewPoly.from_components(parts)
    for i, part in enumerate(parts, start=1):
        assert g.component(i) == part
