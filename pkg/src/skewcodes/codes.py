"""Linear codes over F_q and skew cyclic codes over F_q and R.

A skew cyclic code over R is held through its four eta-components
C_1..C_4, each a skew cyclic code over F_q[x; frob] given by a monic right
divisor g_i of x^n - 1. The word set is ``{sum eta_i c_i : c_i in C_i}``.
"""
from __future__ import annotations

import itertools
import math
import random
from typing import NamedTuple, Sequence

import numpy as np

from . import kernels
from .errors import (
    CapExceeded,
    ContextMismatch,
    LengthMismatch,
    NotMonic,
    NotRightDivisor,
)
from .fields import FieldCtx
from .ring import RVector, raw_theta
from .skewpoly import FqDomain, RDomain, SkewPoly, h_tilde, x_pow_minus_one

#: default bound on the number of codewords an exhaustive scan may visit
DEFAULT_CAP = 1 << 24


class MinDistance(NamedTuple):
    """Result of a minimum-distance computation.

    ``d`` is None for the zero code (no nonzero word exists); callers must
    check :attr:`is_zero_code` before using it as an integer. When ``exact``
    is False, ``d`` is only an upper bound.
    """

    d: int | None
    exact: bool
    witness: tuple | None
    method: str

    @property
    def is_zero_code(self) -> bool:
        return self.d is None


# -- dense linear algebra over F_q on encoded integers ------------------------------

def _lit(ctx: FieldCtx, x) -> int:
    if isinstance(x, (int, np.integer)) and 0 <= x < ctx.q:
        return int(x)
    return ctx(x).value


def _as_array(ctx: FieldCtx, rows, n: int) -> np.ndarray:
    return np.array([[_lit(ctx, x) for x in r] for r in rows], dtype=np.int64).reshape(-1, n)


def rref(ctx: FieldCtx, mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form (pivots scaled to 1) and pivot columns."""
    M = np.array(mat, dtype=np.int64, copy=True)
    rows, cols = M.shape
    sub, mul, inv = ctx.sub_table, ctx.mul_table, ctx.inv_table
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[inv[M[r, col]], M[r]]
        for i in np.nonzero(M[:, col])[0]:
            if i != r:
                M[i] = sub[M[i], mul[M[i, col], M[r]]]
        pivots.append(col)
        r += 1
    return M[:r], pivots


def null_space(ctx: FieldCtx, mat: np.ndarray, n: int) -> np.ndarray:
    """Basis (rows) of {y : mat . y = 0} over F_q."""
    R, pivots = rref(ctx, mat.reshape(-1, n)) if mat.size else (np.zeros((0, n), dtype=np.int64), [])
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    neg = ctx.neg_table
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, pc in enumerate(pivots):
            out[i, pc] = neg[R[r, f]]
    return out


def rank(ctx: FieldCtx, mat: np.ndarray) -> int:
    if mat.size == 0:
        return 0
    return len(rref(ctx, mat)[1])


def _fp_basis(ctx: FieldCtx, basis: np.ndarray) -> np.ndarray:
    """Rows w^j * b for each basis row b: an F_p basis of the same F_q-span."""
    if ctx.m == 1 or basis.shape[0] == 0:
        return basis
    mul = ctx.mul_table
    return np.concatenate([mul[ctx.p**j, basis] for j in range(ctx.m)], axis=0)


def pack_words(words: np.ndarray) -> set[bytes]:
    """Hashable form of a word array, for set comparisons."""
    words = np.ascontiguousarray(words, dtype=np.int64)
    return {row.tobytes() for row in words.reshape(words.shape[0], -1)}


# -- linear codes ---------------------------------------------------------------------

class LinearCodeFq:
    """The F_q-span of a set of rows of length n."""

    def __init__(self, ctx: FieldCtx, n: int, rows=()):
        self.ctx = ctx
        self.n = n
        rows = list(rows)
        for r in rows:
            if len(r) != n:
                raise LengthMismatch(f"row of length {len(r)} in a length-{n} code")
        arr = _as_array(ctx, rows, n) if rows else np.zeros((0, n), dtype=np.int64)
        self.G = arr
        self.basis, self.pivots = rref(ctx, arr) if rows else (arr, [])

    @property
    def k(self) -> int:
        return self.basis.shape[0]

    @property
    def dimension(self) -> int:
        return self.k

    @property
    def cardinality(self) -> int:
        return self.ctx.q ** self.k

    def __repr__(self):
        return f"LinearCodeFq([{self.n}, {self.k}] over F_{self.ctx.q})"

    def same_space(self, other: "LinearCodeFq") -> bool:
        """Row-space equality via the canonical reduced echelon form."""
        return (self.ctx == other.ctx and self.n == other.n
                and self.basis.shape == other.basis.shape
                and bool(np.array_equal(self.basis, other.basis)))

    __eq__ = same_space

    def __hash__(self):
        return hash((self.ctx, self.n, self.basis.tobytes()))

    def contains(self, word) -> bool:
        w = _as_array(self.ctx, [word], self.n)
        return rank(self.ctx, np.vstack([self.basis, w])) == self.k

    def dual(self) -> "LinearCodeFq":
        return LinearCodeFq(self.ctx, self.n, null_space(self.ctx, self.basis, self.n).tolist())

    def parity_check(self) -> np.ndarray:
        return null_space(self.ctx, self.basis, self.n)

    def words(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        """Every codeword, as an int64 array of shape (q^k, n)."""
        if self.cardinality > cap:
            raise CapExceeded(f"{self.cardinality} codewords exceed the cap {cap}")
        return kernels.span_words(_fp_basis(self.ctx, self.basis), self.ctx.add_table,
                                  self.ctx.digit_array, self.ctx.p)

    def min_distance(self, cap: int = DEFAULT_CAP, **kw) -> MinDistance:
        return min_hamming_distance(self, cap, **kw)


def linear_from_rows(ctx: FieldCtx, n: int, rows=()) -> LinearCodeFq:
    return LinearCodeFq(ctx, n, rows)


def linear_dual(C: LinearCodeFq) -> LinearCodeFq:
    return C.dual()


def _info_set_search(C: LinearCodeFq, iterations: int, seed: int) -> tuple[int, np.ndarray]:
    """Upper bound on d from random information sets (weight-1 and weight-2 combinations)."""
    ctx, n, k = C.ctx, C.n, C.k
    rng = random.Random(seed)
    add, mul = ctx.add_table, ctx.mul_table
    best, best_word = n + 1, None
    scalars = np.arange(1, ctx.q, dtype=np.int64)
    for it in range(iterations):
        perm = list(range(n))
        if it:
            rng.shuffle(perm)
        S, _ = rref(ctx, C.basis[:, perm])
        inv_perm = np.argsort(perm)
        S = S[:, inv_perm]
        wts = (S != 0).sum(axis=1)
        i = int(np.argmin(wts))
        if wts[i] < best:
            best, best_word = int(wts[i]), S[i].copy()
        for a, b in itertools.combinations(range(k), 2):
            combos = add[S[a][None, :], mul[scalars[:, None], S[b][None, :]]]
            cw = (combos != 0).sum(axis=1)
            j = int(np.argmin(cw))
            if cw[j] < best:
                best, best_word = int(cw[j]), combos[j].copy()
    return best, best_word


def _certify_lower_bound(C: LinearCodeFq, below: int, budget: int):
    """Look for codewords lighter than ``below`` via dependent column sets of H.

    A nonzero word supported inside a column set S exists iff the columns of
    the parity-check matrix indexed by S are dependent. Returns (w, word) for
    the lightest such word, (None, None) when every set smaller than
    ``below`` is independent, and (False, None) if the subset budget runs out.
    """
    ctx, n = C.ctx, C.n
    H = C.parity_check()
    for w in range(1, below):
        if math.comb(n, w) > budget:
            return False, None
        budget -= math.comb(n, w)
        for S in itertools.combinations(range(n), w):
            sub = H[:, S]
            if rank(ctx, sub) < w:
                ker = null_space(ctx, sub, w)
                word = np.zeros(n, dtype=np.int64)
                word[list(S)] = ker[0]
                return w, word
    return None, None


def min_hamming_distance(C: LinearCodeFq, cap: int = DEFAULT_CAP, *,
                         iterations: int = 200, seed: int = 0,
                         certify_budget: int = 200_000) -> MinDistance:
    """Minimum Hamming distance of C.

    Exhaustive when q^k <= cap. Otherwise an information-set search gives an
    upper bound, which is certified exact when every smaller set of columns
    of the parity-check matrix is linearly independent (within a subset
    budget).
    """
    if C.k == 0:
        return MinDistance(None, True, None, "zero-code")
    if C.cardinality <= cap:
        d, word = kernels.min_weight(_fp_basis(C.ctx, C.basis), C.ctx.add_table,
                                     C.ctx.digit_array, C.ctx.p)
        return MinDistance(int(d), True, tuple(int(x) for x in word), "exhaustive")
    if C.k == C.n:
        e = np.zeros(C.n, dtype=np.int64)
        e[0] = 1
        return MinDistance(1, True, tuple(e.tolist()), "full-space")
    best, word = _info_set_search(C, iterations, seed)
    lighter, w2 = _certify_lower_bound(C, best, certify_budget)
    if lighter is False:
        return MinDistance(best, False, tuple(int(x) for x in word), "information-set bound")
    if lighter is None:
        return MinDistance(best, True, tuple(int(x) for x in word), "information-set + column certificate")
    return MinDistance(lighter, True, tuple(int(x) for x in w2), "column certificate")


def plotkin_sum(C: LinearCodeFq, D: LinearCodeFq) -> LinearCodeFq:
    """The (u | u+v) construction, u in C, v in D."""
    if C.n != D.n:
        raise LengthMismatch("Plotkin sum needs codes of equal length")
    if C.ctx != D.ctx:
        raise ContextMismatch("codes over different fields")
    z = np.zeros(C.n, dtype=np.int64)
    rows = [np.concatenate([u, u]) for u in C.basis] + [np.concatenate([z, v]) for v in D.basis]
    return LinearCodeFq(C.ctx, 2 * C.n, [r.tolist() for r in rows])


def nested_plotkin(c1: LinearCodeFq, c2: LinearCodeFq, c3: LinearCodeFq, c4: LinearCodeFq) -> LinearCodeFq:
    """(C1 (+)_P C2) (+)_P (C3 (+)_P C4)."""
    return plotkin_sum(plotkin_sum(c1, c2), plotkin_sum(c3, c4))


# -- skew cyclic codes over F_q -------------------------------------------------------

class SkewCyclicCodeFq:
    """Left submodule of F_q[x; frob^t] / (x^n - 1) generated by a monic right divisor g."""

    def __init__(self, ctx: FieldCtx, n: int, g: SkewPoly | Sequence, t: int = 1):
        if not isinstance(g, SkewPoly):
            g = SkewPoly.fq(ctx, g, t)
        if not isinstance(g.domain, FqDomain) or g.domain.ctx != ctx:
            raise ContextMismatch("generator must be a polynomial over this F_q")
        if not g.is_monic():
            raise NotMonic(f"generator {g!r} is not monic")
        xn1 = x_pow_minus_one(n, g.domain)
        h, rem = xn1.right_divmod(g)
        if not rem.is_zero():
            raise NotRightDivisor(f"{g!r} does not right-divide x^{n} - 1")
        self.ctx = ctx
        self.n = n
        self.g = g
        self.h = h
        self.domain = g.domain

    @property
    def degree(self) -> int:
        return self.g.degree

    @property
    def dimension(self) -> int:
        return self.n - self.g.degree

    @property
    def cardinality(self) -> int:
        return self.ctx.q ** self.dimension

    def __repr__(self):
        return f"SkewCyclicCodeFq(n={self.n}, g={self.g!r})"

    def __eq__(self, other):
        if not isinstance(other, SkewCyclicCodeFq):
            return NotImplemented
        return self.n == other.n and self.g == other.g

    def __hash__(self):
        return hash((self.n, self.g))

    def generator_rows(self) -> np.ndarray:
        """Row i holds the coefficients of x^i * g, i < n - deg g."""
        d = self.domain
        rows = np.zeros((self.dimension, self.n), dtype=np.int64)
        for i in range(self.dimension):
            xi_g = SkewPoly.monomial(d, i) * self.g
            rows[i, :len(xi_g.raw)] = xi_g.raw
        return rows

    def linear_code(self) -> LinearCodeFq:
        return LinearCodeFq(self.ctx, self.n, self.generator_rows().tolist())

    def contains(self, word) -> bool:
        if len(word) != self.n:
            raise LengthMismatch(f"word of length {len(word)} in a length-{self.n} code")
        return SkewPoly(self.domain, word).right_rem(self.g).is_zero()

    def shift(self, word) -> tuple[int, ...]:
        """Skew cyclic shift (s(w_{n-1}), s(w_0), ..., s(w_{n-2})), s = frob^t."""
        w = [self.domain.coerce(x) for x in word]
        return tuple(self.domain.twist(a, 1) for a in [w[-1]] + w[:-1])

    def is_shift_closed(self) -> bool:
        return all(self.contains(self.shift(r)) for r in self.generator_rows().tolist())

    def dual(self) -> "SkewCyclicCodeFq":
        """Dual code, generated by the monic associate of h-tilde."""
        ht = h_tilde(self.h, self.n, self.degree)
        return SkewCyclicCodeFq(self.ctx, self.n, ht.monic())

    def words_bruteforce(self) -> np.ndarray:
        """All q^n words filtered by the remainder test (oracle, tiny n only)."""
        keep = [w for w in itertools.product(range(self.ctx.q), repeat=self.n) if self.contains(w)]
        return np.array(keep, dtype=np.int64).reshape(len(keep), self.n)


def scc_fq_new(ctx: FieldCtx, n: int, g, t: int = 1) -> SkewCyclicCodeFq:
    return SkewCyclicCodeFq(ctx, n, g, t)


def scc_fq_genmatrix(C: SkewCyclicCodeFq) -> LinearCodeFq:
    return C.linear_code()


# -- skew cyclic codes over R ------------------------------------------------------

def _r_word_theta(ctx: FieldCtx, words: np.ndarray) -> np.ndarray:
    """theta applied entrywise to an (..., 4) array of eta-coordinates."""
    frob = ctx.frobenius_table(1)
    out = frob[words]
    return out[..., [0, 1, 3, 2]]


def rho_words(ctx: FieldCtx, words: np.ndarray) -> np.ndarray:
    """Skew cyclic shift of an (N, n, 4) array of R-words."""
    return _r_word_theta(ctx, np.roll(words, 1, axis=1))


def gray_words(ctx: FieldCtx, words: np.ndarray) -> np.ndarray:
    """Gray images of an (N, n, 4) array of R-words, component-major (N, 4n)."""
    add = ctx.add_table
    a, b, c, d = (words[..., i] for i in range(4))
    ab = add[a, b]
    return np.concatenate([a, ab, add[a, c], add[add[ab, c], d]], axis=1)


def combine_components(parts: Sequence[np.ndarray]) -> np.ndarray:
    """All sums eta1*c1 + ... + eta4*c4 with c_i ranging over parts[i] -> (N, n, 4)."""
    sizes = [p.shape[0] for p in parts]
    idx = np.indices(sizes).reshape(4, -1)
    return np.stack([parts[i][idx[i]] for i in range(4)], axis=-1)


class SkewCyclicCodeR:
    """eta1*C1 + eta2*C2 + eta3*C3 + eta4*C4 with each C_i skew cyclic over F_q.

    The word set is ``{sum eta_i c_i}`` for any divisor 4-tuple. It is closed
    under the skew shift over R exactly when C3 == C4 (theta exchanges the
    eta3 and eta4 coordinates), see :meth:`is_rho_closed`.
    """

    def __init__(self, ctx: FieldCtx, n: int, components: Sequence[SkewCyclicCodeFq]):
        if len(components) != 4:
            raise ValueError("a code over R has exactly four components")
        for c in components:
            if c.ctx != ctx:
                raise ContextMismatch("component over a different field")
            if c.n != n:
                raise LengthMismatch("component length differs from n")
        self.ctx = ctx
        self.n = n
        self.components = tuple(components)
        self.generator = SkewPoly.from_components([c.g for c in components])
        self.principal_identity = self._principal_identity()

    @classmethod
    def from_generators(cls, ctx: FieldCtx, n: int, gens: Sequence) -> "SkewCyclicCodeR":
        return cls(ctx, n, [SkewCyclicCodeFq(ctx, n, g) for g in gens])

    def __repr__(self):
        degs = [c.degree for c in self.components]
        return f"SkewCyclicCodeR(n={self.n}, q={self.ctx.q}, deg g_i={degs})"

    def __eq__(self, other):
        if not isinstance(other, SkewCyclicCodeR):
            return NotImplemented
        return self.ctx == other.ctx and self.n == other.n and self.components == other.components

    def __hash__(self):
        return hash((self.ctx, self.n, self.components))

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    @property
    def dimension(self) -> int:
        """log_q |C| = 4n - sum deg g_i."""
        return 4 * self.n - sum(self.degrees)

    @property
    def cardinality(self) -> int:
        return self.ctx.q ** self.dimension

    @property
    def check_polynomial(self) -> SkewPoly:
        """sum eta_i h_i in R[x; theta]."""
        return SkewPoly.from_components([c.h for c in self.components])

    def _principal_identity(self) -> bool:
        # (sum eta_i h_i) * (sum eta_i g_i) == x^n - 1 over R
        prod = self.check_polynomial * self.generator
        return prod == x_pow_minus_one(self.n, RDomain(self.ctx))

    def c3_c4_equal(self) -> bool:
        return self.components[2] == self.components[3]

    def contains(self, w: RVector) -> bool:
        if len(w) != self.n:
            raise LengthMismatch(f"word of length {len(w)} in a length-{self.n} code")
        return all(c.contains(w.component(i + 1)) for i, c in enumerate(self.components))

    def shift(self, w: RVector) -> RVector:
        return scc_r_shift(w)

    def stacked_rows(self) -> list[RVector]:
        """Rows eta_i * G_i: an F_q basis of the code."""
        ctx, n = self.ctx, self.n
        zero = [0] * n
        out = []
        for i, c in enumerate(self.components):
            for row in c.generator_rows().tolist():
                words = [zero] * 4
                words[i] = row
                out.append(RVector.from_components(ctx, words))
        return out

    def is_rho_closed(self) -> bool:
        """Whether the skew shift maps the code into itself (checked on an F_q basis)."""
        return all(self.contains(scc_r_shift(r)) for r in self.stacked_rows())

    def words(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        """All codewords as an (|C|, n, 4) array of eta-coordinates."""
        if self.cardinality > cap:
            raise CapExceeded(f"{self.cardinality} codewords exceed the cap {cap}")
        return combine_components([c.linear_code().words() for c in self.components])

    def gray_image(self) -> LinearCodeFq:
        return gray_image(self)

    def min_lee_weight(self, cap: int = DEFAULT_CAP) -> MinDistance:
        return gray_image(self).min_distance(cap)

    def dual(self) -> "SkewCyclicCodeR":
        return scc_r_dual(self)


def scc_r_new(ctx: FieldCtx, n: int, g1, g2, g3, g4) -> SkewCyclicCodeR:
    return SkewCyclicCodeR.from_generators(ctx, n, [g1, g2, g3, g4])


def scc_r_cardinality(C: SkewCyclicCodeR) -> int:
    return C.cardinality


def scc_r_contains(C: SkewCyclicCodeR, w: RVector) -> bool:
    return C.contains(w)


def scc_r_shift(w: RVector) -> RVector:
    """(theta(r_{n-1}), theta(r_0), ..., theta(r_{n-2}))."""
    ctx = w.ctx
    ents = w.entries
    return RVector(ctx, [raw_theta(ctx, e) for e in (ents[-1],) + ents[:-1]])


def scc_r_dual(C: SkewCyclicCodeR) -> SkewCyclicCodeR:
    return SkewCyclicCodeR(C.ctx, C.n, [c.dual() for c in C.components])


def gray_image(C: SkewCyclicCodeR) -> LinearCodeFq:
    """Gray image via the block generator matrix

        G1 G1 G1 G1
        0  G2 0  G2
        0  0  G3 G3
        0  0  0  G4
    """
    n = C.n
    G = [c.generator_rows() for c in C.components]
    rows = []
    z = np.zeros(n, dtype=np.int64)
    pattern = ((1, 1, 1, 1), (0, 1, 0, 1), (0, 0, 1, 1), (0, 0, 0, 1))
    for Gi, pat in zip(G, pattern):
        for r in Gi:
            rows.append(np.concatenate([r if on else z for on in pat]).tolist())
    return LinearCodeFq(C.ctx, 4 * n, rows)


def gray_plotkin_identity_check(C: SkewCyclicCodeR, cap: int = DEFAULT_CAP) -> bool:
    """Word-set equality of the Gray image and (C1 (+)_P C2) (+)_P (C3 (+)_P C4)."""
    if C.cardinality > cap:
        raise CapExceeded(f"{C.cardinality} codewords exceed the cap {cap}")
    image = pack_words(gray_words(C.ctx, C.words(cap)))
    nested = nested_plotkin(*(c.linear_code() for c in C.components))
    return image == pack_words(nested.words(cap))


def inner_products(ctx: FieldCtx, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """All standard inner products <x, y> over R for x in X (N, n, 4), y in Y (M, n, 4).

    Returns an (N, M, 4) array of eta-coordinates; multiplication in R is
    coordinatewise so each coordinate is an F_q dot product.
    """
    add, mul = ctx.add_table, ctx.mul_table
    N, n, _ = X.shape
    out = np.zeros((N, Y.shape[0], 4), dtype=np.int64)
    for j in range(n):
        out = add[out, mul[X[:, None, j, :], Y[None, :, j, :]]]
    return out


def orthogonal_exhaustive(C: SkewCyclicCodeR, D: SkewCyclicCodeR, cap: int = DEFAULT_CAP) -> bool:
    """True iff every word of C is orthogonal to every word of D (all pairs scanned)."""
    if C.cardinality * D.cardinality > cap:
        raise CapExceeded(f"{C.cardinality * D.cardinality} pairs exceed the cap {cap}")
    X, Y = C.words(cap), D.words(cap)
    step = max(1, (1 << 22) // max(1, Y.shape[0] * C.n))
    for s in range(0, X.shape[0], step):
        if inner_products(C.ctx, X[s:s + step], Y).any():
            return False
    return True


def orthogonal_by_basis(C: SkewCyclicCodeR, D: SkewCyclicCodeR) -> bool:
    """Orthogonality checked on F_q bases, i.e. G_i H_i^T = 0 for each component."""
    ctx = C.ctx
    for a, b in zip(C.components, D.components):
        Ga, Gb = a.generator_rows(), b.generator_rows()
        if Ga.size == 0 or Gb.size == 0:
            continue
        X = np.stack([Ga] * 4, axis=-1)
        Y = np.stack([Gb] * 4, axis=-1)
        if inner_products(ctx, X, Y).any():
            return False
    return True
