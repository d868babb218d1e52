"""Pure-Python/numpy implementations of the hot loops.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled versions are tested against. Signatures match
``_ckernels`` exactly.
"""
import numpy as np

BACKEND = "python"

_CHUNK = 1 << 15


def _expand(rows, digit_array, p):
    """F_p matrix (K, n*m) holding the polynomial-basis digits of each row."""
    k, n = rows.shape
    m = digit_array.shape[1]
    return digit_array[rows].reshape(k, n * m), n, m


def _messages(start, stop, k, p):
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, k), dtype=np.int64)
    for i in range(k):
        out[:, i] = idx % p
        idx //= p
    return out


def span_words(rows, add_table, digit_array, p):
    """Every F_p-linear combination of ``rows`` (encoded F_q entries).

    Returns an int64 array of shape (p**K, n); row index i holds the
    combination whose base-p digits of i are the row multipliers.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    k = rows.shape[0]
    n = rows.shape[1]
    m = digit_array.shape[1]
    total = p**k
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    mat, n, m = _expand(rows, digit_array, p)
    weights = p ** np.arange(m, dtype=np.int64)
    out = np.empty((total, n), dtype=np.int64)
    for s in range(0, total, _CHUNK):
        e = min(total, s + _CHUNK)
        dig = (_messages(s, e, k, p) @ mat) % p
        out[s:e] = dig.reshape(e - s, n, m) @ weights
    return out


def min_weight(rows, add_table, digit_array, p):
    """Minimum Hamming weight over nonzero F_p-combinations of ``rows``.

    Returns (weight, word); weight is -1 and word empty when every
    combination is zero.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    k, n = rows.shape
    if k == 0:
        return -1, np.zeros(0, dtype=np.int64)
    m = digit_array.shape[1]
    mat, n, m = _expand(rows, digit_array, p)
    total = p**k
    best, best_word = n + 1, None
    for s in range(0, total, _CHUNK):
        e = min(total, s + _CHUNK)
        dig = ((_messages(s, e, k, p) @ mat) % p).reshape(e - s, n, m)
        wts = (dig != 0).any(axis=2).sum(axis=1)
        wts[wts == 0] = n + 1
        i = int(np.argmin(wts))
        if wts[i] < best:
            best = int(wts[i])
            best_word = dig[i] @ (p ** np.arange(m, dtype=np.int64))
    if best_word is None:
        return -1, np.zeros(0, dtype=np.int64)
    return best, best_word


def right_divisor_tails(f, d, sub_table, mul_table, twist_table):
    """Tails (g_0..g_{d-1}) of every monic degree-d right divisor of f.

    ``twist_table[k, a]`` is the automorphism applied k times to a; it must
    have at least deg(f) - d + 1 rows. Candidates are visited in
    lexicographic order of (g_0, ..., g_{d-1}) with g_0 most significant.
    """
    f = [int(x) for x in f]
    q = mul_table.shape[0]
    sub = sub_table.tolist()
    mul = mul_table.tolist()
    tw = twist_table.tolist()
    df = len(f) - 1
    found = []
    if d > df:
        return np.zeros((0, d), dtype=np.int64)
    shifts = df - d + 1
    # g is monic and twist^k(1) = 1, so each elimination scale is the top coefficient
    total = q**d
    for idx in range(total):
        g = [0] * d
        x = idx
        for j in range(d - 1, -1, -1):
            x, g[j] = divmod(x, q)
        g.append(1)
        r = list(f)
        for k in range(shifts - 1, -1, -1):
            c = r[k + d]
            if c:
                twk = tw[k]
                for j in range(d):
                    b = g[j]
                    if b:
                        r[k + j] = sub[r[k + j]][mul[c][twk[b]]]
                r[k + d] = 0
        if not any(r[:d]):
            found.append(g[:d])
    return np.array(found, dtype=np.int64).reshape(len(found), d)
