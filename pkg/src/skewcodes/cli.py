"""Command-line front end.

Subcommands: field-info, build, params, dual, gray, count, enumerate,
example5. Code-spec files are JSON objects
``{"p", "m", "modulus"?, "n", "g1", "g2", "g3", "g4"}`` whose polynomials
are coefficient lists (low to high) of F_q integer literals.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import example5, kernels
from .codes import (
    DEFAULT_CAP,
    SkewCyclicCodeFq,
    SkewCyclicCodeR,
    gray_image,
    gray_plotkin_identity_check,
    min_hamming_distance,
    orthogonal_by_basis,
    orthogonal_exhaustive,
)
from .enumeration import (
    commutative_divisors,
    enumerate_right_divisors_fq,
    factor_xn_minus_1,
)
from .errors import EvenLength, SkewCodesError, SpecFileError
from .fields import FieldCtx
from .ring import theta_order


# -- spec files ------------------------------------------------------------------------

def _int_field(data: dict, key: str, *, required=True, minimum=None):
    if key not in data:
        if required:
            raise SpecFileError("missing", key)
        return None
    val = data[key]
    if not isinstance(val, int) or isinstance(val, bool):
        raise SpecFileError(f"expected an integer, got {val!r}", key)
    if minimum is not None and val < minimum:
        raise SpecFileError(f"must be >= {minimum}", key)
    return val


def parse_spec(data: dict) -> tuple[FieldCtx, int, list[list[int]]]:
    """Validate a decoded spec object; returns (field, n, [g1..g4])."""
    if not isinstance(data, dict):
        raise SpecFileError("spec must be a JSON object")
    p = _int_field(data, "p", minimum=2)
    m = _int_field(data, "m", required=False, minimum=1) or 1
    n = _int_field(data, "n", minimum=1)
    modulus = data.get("modulus")
    try:
        ctx = FieldCtx(p, m, modulus)
    except SkewCodesError as exc:
        raise SpecFileError(str(exc), "modulus" if modulus is not None else "p") from exc
    gens = []
    for i in range(1, 5):
        key = f"g{i}"
        g = data.get(key)
        if not isinstance(g, list) or not g:
            raise SpecFileError("expected a non-empty coefficient list", key)
        for c in g:
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < ctx.q:
                raise SpecFileError(f"coefficient {c!r} is not an element literal in [0, {ctx.q})", key)
        gens.append(g)
    return ctx, n, gens


def load_spec(path: str) -> tuple[FieldCtx, int, list[list[int]]]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecFileError(str(exc)) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"line {exc.lineno}: {exc.msg}") from exc
    return parse_spec(data)


def build_code(ctx: FieldCtx, n: int, gens) -> SkewCyclicCodeR:
    comps = []
    for i, g in enumerate(gens):
        try:
            comps.append(SkewCyclicCodeFq(ctx, n, g))
        except SkewCodesError as exc:
            raise type(exc)(f"g{i + 1}: {exc}") from exc
    return SkewCyclicCodeR(ctx, n, comps)


# -- report builders (return dicts; the CLI prints them) --------------------------

def _distance_entry(md) -> dict:
    return {"d": md.d, "exact": md.exact, "method": md.method}


def cmd_field_info(p: int, m: int, modulus=None) -> dict:
    ctx = FieldCtx(p, m, modulus)
    return {
        "p": ctx.p, "m": ctx.m, "q": ctx.q, "modulus": list(ctx.modulus),
        "primitive_element": ctx.primitive_element.value,
        "theta_order": theta_order(ctx),
        "kernel_backend": kernels.BACKEND,
    }


def cmd_params(ctx, n, gens, cap=DEFAULT_CAP) -> dict:
    C = build_code(ctx, n, gens)
    image = gray_image(C)
    out = {"length": n, "dimension": C.dimension, "cardinality": C.cardinality}
    md = min_hamming_distance(image, cap)
    out["lee_min"] = md.d
    out["gray_params"] = [4 * n, image.k, md.d]
    out["exact"] = md.exact
    return out


def cmd_build(ctx, n, gens, cap=DEFAULT_CAP) -> dict:
    C = build_code(ctx, n, gens)
    report = {
        "field": ctx.to_dict(),
        "n": n,
        "generators": [list(c.g.raw) for c in C.components],
        "degrees": list(C.degrees),
        "combined_generator": C.generator.to_list(),
    }
    report.update(cmd_params(ctx, n, gens, cap))
    report["principal_identity"] = C.principal_identity
    report["rho_closed"] = C.is_rho_closed()
    report["c3_equals_c4"] = C.c3_c4_equal()
    report["ok"] = report["rho_closed"] and report["principal_identity"]
    return report


def cmd_dual(ctx, n, gens, cap=DEFAULT_CAP) -> dict:
    C = build_code(ctx, n, gens)
    D = C.dual()
    report = {
        "n": n,
        "dual_generators": [list(c.g.raw) for c in D.components],
        "dual_cardinality": D.cardinality,
        "formula_cardinality": ctx.q ** sum(C.degrees),
    }
    if C.cardinality * D.cardinality <= cap:
        report["orthogonal"] = orthogonal_exhaustive(C, D, cap)
        report["orthogonality_method"] = "exhaustive"
    else:
        report["orthogonal"] = orthogonal_by_basis(C, D)
        report["orthogonality_method"] = "basis"
    report["rho_closed"] = D.is_rho_closed()
    report["double_dual_is_original"] = D.dual() == C
    report["ok"] = (report["orthogonal"] and report["double_dual_is_original"]
                    and report["dual_cardinality"] == report["formula_cardinality"])
    return report


def cmd_gray(ctx, n, gens, cap=DEFAULT_CAP) -> dict:
    C = build_code(ctx, n, gens)
    image = gray_image(C)
    md = min_hamming_distance(image, cap)
    report = {
        "gray_params": [image.n, image.k, md.d],
        "exact": md.exact,
        "method": md.method,
        "generator_matrix": image.basis.tolist(),
    }
    if C.cardinality <= cap:
        report["plotkin_identity"] = gray_plotkin_identity_check(C, cap)
    report["ok"] = report.get("plotkin_identity", True) and image.k == C.dimension
    return report


def cmd_count(p: int, m: int, n: int, modulus=None) -> dict:
    if n % 2 == 0:
        raise EvenLength(f"counting requires odd n, got {n}")
    ctx = FieldCtx(p, m, modulus)
    fac = factor_xn_minus_1(ctx, n)
    out = fac.to_dict()
    out["count"] = fac.count
    out["factorization_verified"] = fac.verify()
    out["ok"] = out["factorization_verified"]
    return out


def cmd_enumerate(p: int, m: int, n: int, modulus=None, list_divisors: bool = False) -> dict:
    if n % 2 == 0:
        raise EvenLength(f"enumeration requires odd n, got {n}")
    ctx = FieldCtx(p, m, modulus)
    skew = enumerate_right_divisors_fq(ctx, n)
    comm = commutative_divisors(ctx, n)
    fac = factor_xn_minus_1(ctx, n)
    out = {
        "n": n, "q": ctx.q,
        "skew_divisors": len(skew),
        "commutative_divisors": len(comm),
        "codes_oracle": len(skew) ** 4,
        "codes_formula": fac.count,
        "same_divisor_sets": [g.raw for g in skew] == [g.raw for g in comm],
    }
    if list_divisors:
        out["skew_divisor_list"] = [list(g.raw) for g in skew]
        out["commutative_divisor_list"] = [list(g.raw) for g in comm]
    out["ok"] = out["codes_oracle"] == out["codes_formula"]
    return out


def cmd_example5(cap=DEFAULT_CAP) -> dict:
    rep = example5.run(cap)
    rep["ok"] = (rep["length"] == 80 and rep["dimension"] == 30
                 and rep["witness"]["in_gray_image"]
                 and rep["witness"]["weight"] == rep["plotkin_law_distance"])
    return rep


# -- output -----------------------------------------------------------------------------

def _text(report: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, val in report.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(_text(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)


def _example5_text(rep: dict) -> str:
    lines = ["GF(9), length-20 components, Gray image = (C1 (+)P C2) (+)P (C3 (+)P C4)", ""]
    for c in rep["components"]:
        tag = "exact" if c["exact"] else "bound"
        lines.append(f"  {c['name']}: {c['params']} ({tag}, {c['method']}) g={c['generator']}")
    claim, got = rep["claimed_params"], rep["computed_params"]
    exact = "exact" if rep["measured_distance"]["exact"] else "upper bound"
    lines += [
        "",
        f"  {'':18}{'claimed':>10}{'computed':>10}",
        f"  {'length':18}{claim[0]:>10}{got[0]:>10}",
        f"  {'dimension':18}{claim[1]:>10}{got[1]:>10}",
        f"  {'min distance':18}{claim[2]:>10}{got[2]:>10}   ({exact})",
        "",
        f"  Plotkin law min(2*min(2d1,d2), min(2d3,d4)) = {rep['plotkin_law_distance']}",
        f"  witness {rep['witness']['form']}: weight {rep['witness']['weight']}, "
        f"in image: {rep['witness']['in_gray_image']}",
        f"  support: {[i for i, x in enumerate(rep['witness']['word']) if x]}",
        "  search: prime-field divisors of x^20 - 1 first (cyclic and skew cyclic), then F_9 divisors",
    ]
    return "\n".join(lines)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewcodes", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="max codewords visited by exhaustive scans (default 2^24)")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(sp, with_n=False):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, default=1)
        sp.add_argument("--modulus", type=lambda s: [int(x) for x in s.split(",")],
                        help="comma-separated coefficients c0,...,c_m")
        if with_n:
            sp.add_argument("--n", type=int, required=True)

    field_args(sub.add_parser("field-info", help="describe F_q and theta"))
    for name, help_ in (("build", "construct a code and report everything"),
                        ("params", "parameter summary of a code"),
                        ("dual", "dual code and orthogonality check"),
                        ("gray", "Gray image and Plotkin identity")):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="JSON code-spec file")
    field_args(sub.add_parser("count", help="count skew cyclic codes of odd length"), True)
    sp = sub.add_parser("enumerate", help="brute-force divisor oracle vs the count formula")
    field_args(sp, True)
    sp.add_argument("--list", action="store_true", help="list every divisor")
    sub.add_parser("example5", help="re-examine the GF(9) [80,30,4] example")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "field-info":
            rep = cmd_field_info(args.p, args.m, args.modulus)
        elif args.command in ("build", "params", "dual", "gray"):
            ctx, n, gens = load_spec(args.spec)
            fn = {"build": cmd_build, "params": cmd_params, "dual": cmd_dual, "gray": cmd_gray}
            rep = fn[args.command](ctx, n, gens, args.cap)
        elif args.command == "count":
            rep = cmd_count(args.p, args.m, args.n, args.modulus)
        elif args.command == "enumerate":
            rep = cmd_enumerate(args.p, args.m, args.n, args.modulus, args.list)
        else:
            rep = cmd_example5(args.cap)
    except SkewCodesError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(rep, indent=2, default=_json_default))
    elif args.command == "example5":
        print(_example5_text(rep))
    else:
        print(_text(rep))
    return 0 if rep.get("ok", True) else 1


def _json_default(obj):
    if isinstance(obj, tuple):
        return list(obj)
    if hasattr(obj, "tolist"):
        return obj.tolist()
    if isinstance(obj, float) and math.isinf(obj):
        return None
    return str(obj)


if __name__ == "__main__":
    sys.exit(main())
