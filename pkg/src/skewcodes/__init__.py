"""Skew cyclic codes over F_q + uF_q + vF_q + uvF_q."""
from .codes import LinearCodeFq, MinDistance, SkewCyclicCodeFq, SkewCyclicCodeR, gray_image
from .enumeration import count_skew_cyclic_r, enumerate_right_divisors_fq, factor_xn_minus_1
from .fields import FieldCtx, FqElem
from .ring import RElem, RVector
from .skewpoly import FqDomain, RDomain, SkewPoly

__all__ = [
    "FieldCtx", "FqElem", "RElem", "RVector", "FqDomain", "RDomain", "SkewPoly",
    "LinearCodeFq", "MinDistance", "SkewCyclicCodeFq", "SkewCyclicCodeR", "gray_image",
    "count_skew_cyclic_r", "enumerate_right_divisors_fq", "factor_xn_minus_1",
]
