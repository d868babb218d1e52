import random

import numpy as np
import pytest

from skewcodes import kernels
from skewcodes.codes import LinearCodeFq, _fp_basis
from skewcodes.fields import FieldCtx
from skewcodes.skewpoly import FqDomain, x_pow_minus_one


def _random_basis(ctx, rng, max_k=5):
    n = rng.randint(1, 8)
    rows = [[rng.randrange(ctx.q) for _ in range(n)] for _ in range(rng.randint(1, min(n, max_k)))]
    C = LinearCodeFq(ctx, n, rows)
    return C, _fp_basis(ctx, C.basis)


def test_backend_selected():
    assert kernels.BACKEND in kernels.available_backends()


@pytest.mark.parametrize("m", [1, 2])
def test_span_words_matches_matmul(backend, m):
    ctx = FieldCtx(3, m)
    rng = random.Random(m)
    for _ in range(20):
        C, basis = _random_basis(ctx, rng)
        if C.k == 0:
            continue
        words = backend.span_words(basis, ctx.add_table, ctx.digit_array, ctx.p)
        assert words.shape == (ctx.q ** C.k, C.n)
        assert len({w.tobytes() for w in words}) == words.shape[0]
        for w in words[:: max(1, len(words) // 50)].tolist():
            assert C.contains(w)


@pytest.mark.parametrize("m", [1, 2])
def test_backends_agree(m):
    backs = kernels.available_backends()
    if len(backs) < 2:
        pytest.skip("compiled extension not built")
    ctx = FieldCtx(3, m)
    rng = random.Random(10 + m)
    for _ in range(30):
        C, basis = _random_basis(ctx, rng)
        res = {name: b.span_words(basis, ctx.add_table, ctx.digit_array, ctx.p) for name, b in backs.items()}
        sets = [sorted(map(bytes, r.astype("uint8"))) for r in res.values()]
        assert all(s == sets[0] for s in sets)
        mins = {name: b.min_weight(basis, ctx.add_table, ctx.digit_array, ctx.p)[0] for name, b in backs.items()}
        assert len(set(mins.values())) == 1
    for n, t in ((5, 1), (4, 1), (4, 0)):
        f = np.array(x_pow_minus_one(n, FqDomain(ctx, t)).raw, dtype=np.int64)
        twist = np.stack([ctx.frobenius_table(t * k) for k in range(n + 1)])
        for d in range(n + 1):
            tails = [b.right_divisor_tails(f, d, ctx.sub_table, ctx.mul_table, twist).tolist()
                     for b in backs.values()]
            assert all(x == tails[0] for x in tails)


def test_min_weight_witness(backend):
    ctx = FieldCtx(3, 2)
    rng = random.Random(3)
    for _ in range(20):
        C, basis = _random_basis(ctx, rng)
        w, word = backend.min_weight(basis, ctx.add_table, ctx.digit_array, ctx.p)
        if C.k == 0:
            assert w == -1
            continue
        words = C.words()
        weights = (words != 0).sum(axis=1)
        assert w == weights[weights > 0].min()
        assert int((np.asarray(word) != 0).sum()) == w
        assert C.contains(list(word))
