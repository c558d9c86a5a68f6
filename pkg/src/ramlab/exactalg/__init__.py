"""Exact arithmetic substrate: prime fields with perfection, polynomials, Laurent germs."""

from .field import ExtensionField, FunctionField, PrimeField
from .poly import (
    GRLEX,
    BlockOrder,
    GrLex,
    Lex,
    MultiPoly,
    PolyRing,
    RationalFn,
    as_rational,
    divides,
    exact_div,
    gcd,
    monic,
    pth_root_poly,
)
from .series import INF, LaurentGerm, poly_at_germs, rational_at_germs, series_invert

__all__ = [
    "ExtensionField",
    "FunctionField",
    "PrimeField",
    "GRLEX",
    "BlockOrder",
    "GrLex",
    "Lex",
    "MultiPoly",
    "PolyRing",
    "RationalFn",
    "as_rational",
    "divides",
    "exact_div",
    "gcd",
    "monic",
    "pth_root_poly",
    "INF",
    "LaurentGerm",
    "poly_at_germs",
    "rational_at_germs",
    "series_invert",
]
