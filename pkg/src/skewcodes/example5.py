"""Re-examination of the GF(9), length-20 example with Gray image [80, 30, 4].

Component codes C1..C4 with parameters [20,1,20], [20,9,4], [20,10,2],
[20,10,2] are located by scanning generator polynomials; the Gray image is
then the nested Plotkin sum (C1 (+)_P C2) (+)_P (C3 (+)_P C4).

Search order: divisors of x^20 - 1 with coefficients in the prime field
come first. Their coefficients are fixed by Frobenius, so they generate
codes that are cyclic and skew cyclic at once. Only if none fits are
general F_9 divisors (ordinary cyclic codes) tried.
"""
from __future__ import annotations

import itertools

import numpy as np

from .codes import (
    DEFAULT_CAP,
    LinearCodeFq,
    MinDistance,
    SkewCyclicCodeFq,
    SkewCyclicCodeR,
    gray_image,
    min_hamming_distance,
    nested_plotkin,
)
from .enumeration import factor_xn_minus_1
from .errors import SearchFailed
from .fields import FieldCtx
from .skewpoly import FqDomain, SkewPoly

LENGTH = 20
#: (dimension, minimum distance) stated for C1..C4
COMPONENT_TARGETS = ((1, 20), (9, 4), (10, 2), (10, 2))
CLAIMED_PARAMS = (80, 30, 4)


def _divisor_candidates(ctx: FieldCtx, n: int, deg: int, field: FieldCtx, t: int):
    """Monic divisors of x^n - 1 over ``field`` of the given degree, lifted into ctx."""
    fac = factor_xn_minus_1(field, n)
    dom = FqDomain(ctx, t)
    found = []
    for exps in itertools.product(*(range(s + 1) for _, s in fac.factors)):
        if sum(p.degree * e for (p, _), e in zip(fac.factors, exps)) != deg:
            continue
        g = SkewPoly.one_of(FqDomain(field, 0))
        for (p, _), e in zip(fac.factors, exps):
            for _ in range(e):
                g = g * p
        # prime-field literals keep their encoding in F_{p^m}
        found.append(SkewPoly(dom, list(g.raw)))
    return sorted(found, key=lambda g: g.raw)


def find_component(ctx: FieldCtx, n: int, k: int, d: int, cap: int = DEFAULT_CAP):
    """First generator (in search order) of an [n, k, d] code; returns (code, distance, kind)."""
    tried = []
    prime = FieldCtx(ctx.p)
    stages = [(prime, 1, "skew cyclic (prime-field generator)")]
    if ctx.m > 1:
        stages.append((ctx, 0, "cyclic over F_q"))
    for field, t, kind in stages:
        for g in _divisor_candidates(ctx, n, n - k, field, t):
            code = SkewCyclicCodeFq(ctx, n, g, t)
            md = min_hamming_distance(code.linear_code(), cap)
            tried.append((list(g.raw), md.d, md.exact))
            if md.exact and md.d == d:
                return code, md, kind
    raise SearchFailed(f"no [{n},{k},{d}] code among {len(tried)} candidates: {tried}")


def plotkin_law_distance(d1: int, d2: int, d3: int, d4: int) -> int:
    return min(2 * min(2 * d1, d2), min(2 * d3, d4))


def run(cap: int = DEFAULT_CAP) -> dict:
    ctx = FieldCtx(3, 2)
    n = LENGTH
    comps, dists, kinds = [], [], []
    for k, d in COMPONENT_TARGETS:
        code, md, kind = find_component(ctx, n, k, d, cap)
        comps.append(code)
        dists.append(md)
        kinds.append(kind)
    linear = [c.linear_code() for c in comps]
    image = nested_plotkin(*linear)
    law = plotkin_law_distance(*(md.d for md in dists))

    # lightest word of C4 placed in the last Gray block: (0, 0, 0, v)
    v = np.array(dists[3].witness, dtype=np.int64)
    witness = np.concatenate([np.zeros(3 * n, dtype=np.int64), v])
    witness_in_image = image.contains(witness.tolist())

    report = {
        "field": ctx.to_dict(),
        "length": image.n,
        "dimension": image.k,
        "components": [
            {
                "name": f"C{i + 1}",
                "generator": list(c.g.raw),
                "kind": kinds[i],
                "params": [n, c.dimension, md.d],
                "exact": md.exact,
                "method": md.method,
            }
            for i, (c, md) in enumerate(zip(comps, dists))
        ],
        "plotkin_law_distance": law,
        "witness": {
            "word": witness.tolist(),
            "weight": int((witness != 0).sum()),
            "in_gray_image": bool(witness_in_image),
            "form": "(0, 0, 0, v), v a minimum-weight word of C4",
        },
        "claimed_params": list(CLAIMED_PARAMS),
    }

    if all(t == "skew cyclic (prime-field generator)" for t in kinds):
        code_r = SkewCyclicCodeR(ctx, n, comps)
        gi = gray_image(code_r)
        report["gray_image_matches_plotkin"] = gi.same_space(image)
        report["skew_cyclic_over_R"] = code_r.is_rho_closed()
    measured: MinDistance = min_hamming_distance(image, cap)
    report["measured_distance"] = {"d": measured.d, "exact": measured.exact, "method": measured.method}
    report["computed_params"] = [image.n, image.k, measured.d]
    report["distance_matches_claim"] = measured.d == CLAIMED_PARAMS[2]
    return report


def linear_component_codes(report: dict) -> list[LinearCodeFq]:
    """Rebuild the component codes named in a report (used by tests)."""
    ctx = FieldCtx(**{k: report["field"][k] for k in ("p", "m")})
    out = []
    for comp in report["components"]:
        t = 1 if comp["kind"].startswith("skew") else 0
        out.append(SkewCyclicCodeFq(ctx, LENGTH, comp["generator"], t).linear_code())
    return out
