# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pykernels``.

Codeword enumeration walks the modular p-ary Gray code, so each step adds a
single F_p-basis row to the running word through the field addition table.
"""
import numpy as np
cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef cnp.int64_t i64


cdef inline Py_ssize_t _gray_digit(i64 step, i64 p) noexcept nogil:
    # digit that changes on this step of the modular Gray code: v_p(step)
    cdef Py_ssize_t i = 0
    while step % p == 0:
        step //= p
        i += 1
    return i


def span_words(rows, add_table, digit_array, long p):
    cdef i64[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef i64[:, ::1] A = np.ascontiguousarray(add_table, dtype=np.int64)
    cdef Py_ssize_t k = R.shape[0], n = R.shape[1]
    cdef i64 total = 1
    cdef Py_ssize_t i, j, s, dgt
    for i in range(k):
        total *= p
    out = np.zeros((total, n), dtype=np.int64)
    if k == 0:
        return out
    cdef i64[:, ::1] O = out
    cdef i64[::1] digits = np.zeros(k, dtype=np.int64)
    cdef i64[::1] word = np.zeros(n, dtype=np.int64)
    cdef i64 idx = 0, pw
    with nogil:
        for s in range(1, total):
            dgt = _gray_digit(s, p)
            for j in range(n):
                word[j] = A[word[j], R[dgt, j]]
            digits[dgt] = (digits[dgt] + 1) % p
            # store by natural message index so layout matches the fallback
            idx = 0
            pw = 1
            for i in range(k):
                idx += digits[i] * pw
                pw *= p
            for j in range(n):
                O[idx, j] = word[j]
    return out


def min_weight(rows, add_table, digit_array, long p):
    cdef i64[:, ::1] R = np.ascontiguousarray(rows, dtype=np.int64)
    cdef i64[:, ::1] A = np.ascontiguousarray(add_table, dtype=np.int64)
    cdef Py_ssize_t k = R.shape[0], n = R.shape[1]
    if k == 0:
        return -1, np.zeros(0, dtype=np.int64)
    cdef i64 total = 1
    cdef Py_ssize_t i, j, dgt
    cdef i64 s
    for i in range(k):
        total *= p
    cdef i64[::1] word = np.zeros(n, dtype=np.int64)
    best_arr = np.zeros(n, dtype=np.int64)
    cdef i64[::1] best_word = best_arr
    cdef Py_ssize_t best = n + 1, wt
    with nogil:
        for s in range(1, total):
            dgt = _gray_digit(s, p)
            wt = 0
            for j in range(n):
                word[j] = A[word[j], R[dgt, j]]
                if word[j] != 0:
                    wt += 1
            if 0 < wt < best:
                best = wt
                for j in range(n):
                    best_word[j] = word[j]
                if best == 1:
                    break
    if best == n + 1:
        return -1, np.zeros(0, dtype=np.int64)
    return int(best), best_arr


def right_divisor_tails(f, long d, sub_table, mul_table, twist_table):
    cdef i64[::1] F = np.ascontiguousarray(f, dtype=np.int64)
    cdef i64[:, ::1] S = np.ascontiguousarray(sub_table, dtype=np.int64)
    cdef i64[:, ::1] M = np.ascontiguousarray(mul_table, dtype=np.int64)
    cdef i64[:, ::1] T = np.ascontiguousarray(twist_table, dtype=np.int64)
    cdef Py_ssize_t df = F.shape[0] - 1
    cdef Py_ssize_t q = M.shape[0]
    if d > df:
        return np.zeros((0, d), dtype=np.int64)
    cdef Py_ssize_t shifts = df - d + 1
    cdef i64 total = 1
    cdef Py_ssize_t i, j, kk
    for i in range(d):
        total *= q
    cdef i64[::1] g = np.zeros(d + 1, dtype=np.int64)
    cdef i64[::1] r = np.zeros(df + 1, dtype=np.int64)
    hits = np.zeros(total, dtype=np.uint8)
    cdef cnp.uint8_t[::1] H = hits
    cdef i64 idx, x, c, b
    cdef bint zero
    with nogil:
        g[d] = 1
        for idx in range(total):
            x = idx
            for j in range(d - 1, -1, -1):
                g[j] = x % q
                x //= q
            for j in range(df + 1):
                r[j] = F[j]
            for kk in range(shifts - 1, -1, -1):
                c = r[kk + d]
                if c != 0:
                    for j in range(d):
                        b = g[j]
                        if b != 0:
                            r[kk + j] = S[r[kk + j], M[c, T[kk, b]]]
                    r[kk + d] = 0
            zero = True
            for j in range(d):
                if r[j] != 0:
                    zero = False
                    break
            if zero:
                H[idx] = 1
    found = np.nonzero(hits)[0]
    out = np.zeros((found.shape[0], d), dtype=np.int64)
    for i in range(found.shape[0]):
        x = found[i]
        for j in range(d - 1, -1, -1):
            out[i, j] = x % q
            x //= q
    return out
