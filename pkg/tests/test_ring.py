import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from skewcodes.errors import ContextMismatch
from skewcodes.fields import FieldCtx
from skewcodes.ring import (
    RElem,
    RVector,
    eta_to_std,
    gray,
    gray_inverse,
    lee_distance,
    lee_weight,
    lee_weight_vec,
    parse_relem,
    r_add,
    r_mul,
    r_theta,
    std_to_eta,
    theta_order,
)


def gray_std(ctx, b0, b1, b2, b3):
    """Gray image from standard coordinates b0 + b1 u + b2 v + b3 uv:
    (b0, 2b0+b1+b2+b3, 2b0+b1, 4b0+2b1+2b2+b3)."""
    m = ctx.mul
    two, four = ctx(2).value, ctx(4 % ctx.p).value
    return (b0,
            _sum(ctx, (m(two, b0), b1, b2, b3)),
            _sum(ctx, (m(two, b0), b1)),
            _sum(ctx, (m(four, b0), m(two, b1), m(two, b2), b3)))


def _sum(ctx, xs):
    out = 0
    for x in xs:
        out = ctx.add(out, x)
    return out


@pytest.fixture(scope="module")
def R3():
    ctx = FieldCtx(3, 1)
    return ctx, list(RElem.all(ctx))


def test_std_to_eta_examples(F3):
    assert RElem.u(F3).eta_coords == tuple(F3(x) for x in (0, 1, 1, 0))
    assert RElem.one(F3).eta_coords == tuple(F3(x) for x in (1, 1, 1, 1))
    assert RElem.uv(F3).eta_coords == tuple(F3(x) for x in (0, 1, 0, 0))
    assert std_to_eta(*(F3(x) for x in (0, 1, 0, 0))) == RElem.u(F3)


def test_mul_examples(F3, R3):
    _, els = R3
    assert r_mul(RElem.u(F3), RElem.v(F3)) == RElem.uv(F3)
    assert RElem.v(F3) == RElem.from_eta(F3, 0, 1, 0, 1)
    for x in els:
        assert r_mul(x, RElem.one(F3)) == x
    assert r_mul(RElem.eta(F3, 3), RElem.eta(F3, 4)).is_zero()


def test_idempotents(F9):
    etas = [RElem.eta(F9, i) for i in range(1, 5)]
    total = RElem.zero(F9)
    for i, a in enumerate(etas):
        total = r_add(total, a)
        for j, b in enumerate(etas):
            assert r_mul(a, b) == (a if i == j else RElem.zero(F9))
    assert total == RElem.one(F9)


def test_idempotents_from_standard_basis(F3):
    # u^2 = u, v^2 = v computed from eta coordinates of u, v
    u, v = RElem.u(F3), RElem.v(F3)
    assert u * u == u and v * v == v and u * v == v * u
    eta1 = RElem.one(F3) - u - v + u * v
    assert eta1 == RElem.eta(F3, 1)
    assert u - u * v == RElem.eta(F3, 3)


@pytest.mark.parametrize("m", [1, 2])
def test_std_eta_roundtrip(m):
    ctx = FieldCtx(3, m)
    for b in itertools.product(range(ctx.q), repeat=4):
        x = RElem.from_std(ctx, *b)
        assert tuple(c.value for c in eta_to_std(x)) == b


def test_theta_examples(F3, F9):
    assert r_theta(RElem.u(F3)) == RElem.v(F3)
    assert r_theta(RElem.uv(F3)) == RElem.uv(F3)
    w = F9(3)
    x = RElem.from_eta(F9, w, 0, 0, 0)
    assert r_theta(x) == RElem.from_eta(F9, F9(6), 0, 0, 0)


@pytest.mark.parametrize("m, order", [(1, 2), (2, 2), (3, 6)])
def test_theta_order_values(m, order):
    assert theta_order(FieldCtx(3, m)) == order


def test_theta_automorphism_exhaustive(R3):
    ctx, els = R3
    for x, y in itertools.product(els, repeat=2):
        assert r_theta(x + y) == r_theta(x) + r_theta(y)
        assert r_theta(x * y) == r_theta(x) * r_theta(y)


def test_theta_automorphism_sampled(F9):
    els = list(RElem.all(F9))
    rng = random.Random(2)
    for _ in range(100_000):
        x, y = rng.choice(els), rng.choice(els)
        assert r_theta(x * y) == r_theta(x) * r_theta(y)
        assert r_theta(x + y) == r_theta(x) + r_theta(y)


@pytest.mark.parametrize("m", [1, 2])
def test_theta_order_by_iteration(m):
    ctx = FieldCtx(3, m)
    els = list(RElem.all(ctx))
    k = theta_order(ctx)
    assert all(x.theta(k) == x for x in els)
    for j in range(1, k):
        assert any(x.theta(j) != x for x in els)


def test_gray_examples(F3):
    assert tuple(c.value for c in gray(RElem.u(F3))) == (0, 1, 1, 2)
    assert tuple(c.value for c in gray(RElem.eta(F3, 1))) == (1, 1, 1, 1)
    assert tuple(c.value for c in gray(RElem.zero(F3))) == (0, 0, 0, 0)
    assert lee_weight(RElem.u(F3)) == 3
    assert lee_weight(RElem.zero(F3)) == 0
    assert lee_weight(RElem.eta(F3, 2)) == 2


@pytest.mark.parametrize("m", [1, 2])
def test_gray_agrees_with_standard_basis_formula(m):
    ctx = FieldCtx(3, m)
    for b in itertools.product(range(ctx.q), repeat=4):
        x = RElem.from_std(ctx, *b)
        assert tuple(c.value for c in gray(x)) == gray_std(ctx, *b)


def test_gray_linear(R3):
    ctx, els = R3
    for lam in ctx.elements():
        lam_r = RElem.embed(lam)
        for x, y in itertools.product(els, repeat=2):
            lhs = gray(lam_r * x + y)
            rhs = tuple(lam * a + b for a, b in zip(gray(x), gray(y)))
            assert lhs == rhs


def test_gray_isometry_exhaustive(R3):
    ctx, els = R3
    for x, y in itertools.product(els, repeat=2):
        dh = sum(a != b for a, b in zip(gray(x), gray(y)))
        assert lee_distance(x, y) == dh


@pytest.mark.parametrize("m", [1, 2])
def test_gray_inverse(m):
    ctx = FieldCtx(3, m)
    for x in RElem.all(ctx):
        assert gray_inverse(ctx, gray(x)) == x


def test_units(F3):
    assert RElem.one(F3).is_unit()
    assert not RElem.u(F3).is_unit()
    x = RElem.from_eta(F3, 1, 2, 2, 1)
    assert x * x.inverse() == RElem.one(F3)


def test_text_roundtrip(F9):
    x = RElem.from_eta(F9, 3, 0, 8, 1)
    assert parse_relem(F9, x.to_text()) == x
    assert parse_relem(F9, x.to_text("std")) == x
    assert parse_relem(F9, "std:[0,1,0,0]") == RElem.u(F9)
    with pytest.raises(ValueError):
        parse_relem(F9, "foo:[1]")
    with pytest.raises(ValueError):
        parse_relem(F9, "eta:[1,2]")


def test_context_mismatch(F3, F9):
    with pytest.raises(ContextMismatch):
        RElem.one(F3) + RElem.one(F9)


def _rvec(ctx, draw_vals):
    return RVector(ctx, [RElem.from_eta(ctx, *v) for v in draw_vals])


words9 = st.lists(st.tuples(*[st.integers(0, 8)] * 4), min_size=1, max_size=6)


@settings(max_examples=200, deadline=None)
@given(words9, st.data())
def test_vector_isometry_and_linearity(a, data):
    ctx = FieldCtx(3, 2)
    b = data.draw(st.lists(st.tuples(*[st.integers(0, 8)] * 4), min_size=len(a), max_size=len(a)))
    x, y = _rvec(ctx, a), _rvec(ctx, b)
    gx, gy = gray(x), gray(y)
    assert len(gx) == 4 * len(a)
    assert lee_distance(x, y) == sum(p != q for p, q in zip(gx, gy))
    assert lee_weight_vec(x) == sum(c.value != 0 for c in gx)
    assert gray(x + y) == tuple(p + q for p, q in zip(gx, gy))
    back = gray_inverse(ctx, gx)
    assert back == (x if len(a) > 1 else x[0])


def test_gray_vector_layout(F3):
    # component-major: positions j, n+j, 2n+j, 3n+j carry the image of entry j
    x = RVector(F3, [RElem.u(F3), RElem.zero(F3)])
    assert [c.value for c in gray(x)] == [0, 0, 1, 0, 1, 0, 2, 0]


def test_rvector_components_and_dot(F3):
    x = RVector.from_components(F3, [[1, 0], [0, 1], [2, 2], [1, 1]])
    assert x.component(3) == (2, 2)
    y = RVector.from_components(F3, [[1, 1], [1, 1], [1, 1], [1, 1]])
    assert x.dot(y) == RElem.from_eta(F3, 1, 1, 1, 2)
