"""Truncated Laurent germs in one uniformizer over an exact field.

A germ is a sparse dict mapping integer exponents to nonzero field elements,
plus an absolute precision: terms with exponent >= prec are unknown.  The
zero-to-precision germ has an empty term dict; its true valuation is only
bounded below by the precision.  All arithmetic tracks precision
conservatively (product precision = min of each operand's precision shifted
by the other's valuation).
"""

from __future__ import annotations

import math

from ..errors import PrecisionExhausted, ZeroGerm

INF = math.inf


class LaurentGerm:
    __slots__ = ("field", "var", "terms", "prec")

    def __init__(self, field, var: str, terms: dict, prec):
        self.field = field
        self.var = var
        self.prec = prec
        self.terms = {e: c for e, c in terms.items() if e < prec and not field.is_zero(c)}

    # -- constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, field, var: str, prec=INF) -> "LaurentGerm":
        return cls(field, var, {}, prec)

    @classmethod
    def const(cls, field, var: str, c, prec=INF) -> "LaurentGerm":
        return cls(field, var, {0: c}, prec)

    @classmethod
    def uniformizer(cls, field, var: str, prec=INF) -> "LaurentGerm":
        return cls(field, var, {1: field.one()}, prec)

    @classmethod
    def from_pairs(cls, field, var: str, pairs, prec=INF) -> "LaurentGerm":
        terms = {}
        for e, c in pairs:
            if not field.is_zero(c):
                terms[e] = field.add(terms.get(e, field.zero()), c) if e in terms else c
        return cls(field, var, terms, prec)

    # -- structure ----------------------------------------------------------------

    def is_zero_to_prec(self) -> bool:
        return not self.terms

    def valuation(self):
        """The valuation, or None when the germ is zero to its precision."""
        if not self.terms:
            return None
        return min(self.terms)

    def certified_valuation(self) -> int:
        v = self.valuation()
        if v is None:
            if self.prec is INF:
                raise ZeroGerm("exact zero germ has no valuation")
            raise PrecisionExhausted(
                f"germ vanishes up to precision {self.prec}; valuation uncertified"
            )
        return v

    def coeff(self, e: int):
        return self.terms.get(e, self.field.zero())

    def leading(self):
        v = self.certified_valuation()
        return v, self.terms[v]

    def polar_terms(self) -> dict:
        return {e: c for e, c in self.terms.items() if e < 0}

    def pole_order(self) -> int:
        v = self.valuation()
        if v is None or v >= 0:
            return 0
        return -v

    def _check(self, other: "LaurentGerm"):
        if self.var != other.var:
            raise ValueError("germs in different uniformizers")

    # -- arithmetic ------------------------------------------------------------------

    def __add__(self, other: "LaurentGerm") -> "LaurentGerm":
        self._check(other)
        f = self.field
        prec = min(self.prec, other.prec)
        res = dict(self.terms)
        for e, c in other.terms.items():
            if e in res:
                s = f.add(res[e], c)
                if f.is_zero(s):
                    del res[e]
                else:
                    res[e] = s
            else:
                res[e] = c
        return LaurentGerm(f, self.var, res, prec)

    def __neg__(self) -> "LaurentGerm":
        f = self.field
        return LaurentGerm(f, self.var, {e: f.neg(c) for e, c in self.terms.items()}, self.prec)

    def __sub__(self, other: "LaurentGerm") -> "LaurentGerm":
        return self + (-other)

    def _vbound(self):
        # lower bound for the valuation, usable even for zero-to-precision germs
        v = self.valuation()
        return self.prec if v is None else v

    def __mul__(self, other: "LaurentGerm") -> "LaurentGerm":
        self._check(other)
        f = self.field
        prec = min(self.prec + other._vbound(), other.prec + self._vbound())
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e >= prec:
                    continue
                c = f.mul(c1, c2)
                if e in res:
                    s = f.add(res[e], c)
                    if f.is_zero(s):
                        del res[e]
                    else:
                        res[e] = s
                elif not f.is_zero(c):
                    res[e] = c
        return LaurentGerm(f, self.var, res, prec)

    def scale(self, c) -> "LaurentGerm":
        f = self.field
        if f.is_zero(c):
            return LaurentGerm(f, self.var, {}, self.prec)
        return LaurentGerm(f, self.var, {e: f.mul(x, c) for e, x in self.terms.items()}, self.prec)

    def shift(self, k: int) -> "LaurentGerm":
        return LaurentGerm(self.field, self.var, {e + k: c for e, c in self.terms.items()}, self.prec + k)

    def truncate(self, prec) -> "LaurentGerm":
        return LaurentGerm(self.field, self.var, self.terms, min(self.prec, prec))

    def __pow__(self, n: int) -> "LaurentGerm":
        if n < 0:
            return series_invert(self) ** (-n)
        result = LaurentGerm.const(self.field, self.var, self.field.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    # -- display -----------------------------------------------------------------------

    def to_str(self) -> str:
        if not self.terms:
            body = "0"
        else:
            parts = []
            for e in sorted(self.terms):
                c = self.field.to_str(self.terms[e])
                if e == 0:
                    parts.append(c)
                else:
                    mono = self.var if e == 1 else f"{self.var}^{e}"
                    parts.append(mono if c == "1" else f"({c})*{mono}")
            body = " + ".join(parts)
        if self.prec is INF:
            return body
        return f"{body} + O({self.var}^{self.prec})"

    def __repr__(self):
        return f"<germ {self.to_str()}>"


def series_invert(g: LaurentGerm) -> LaurentGerm:
    """Multiplicative inverse; valuation negates, precision drops by 2*val."""
    if g.is_zero_to_prec():
        raise ZeroGerm("cannot invert a germ that is zero to its precision")
    f = g.field
    v = g.valuation()
    if g.prec is INF:
        if len(g.terms) == 1:
            return LaurentGerm(f, g.var, {-v: f.inv(g.terms[v])}, INF)
        raise ValueError("truncate an exact multi-term germ before inverting it")
    length = int(g.prec - v)  # relative number of known coefficients
    out_prec = g.prec - 2 * v
    unit = [g.coeff(v + i) for i in range(length)]
    lead_inv = f.inv(unit[0])
    inv_coeffs = [lead_inv]
    for i in range(1, length):
        acc = f.zero()
        for j in range(1, i + 1):
            acc = f.add(acc, f.mul(unit[j] if j < length else f.zero(), inv_coeffs[i - j]))
        inv_coeffs.append(f.neg(f.mul(lead_inv, acc)))
    terms = {-v + i: c for i, c in enumerate(inv_coeffs)}
    if out_prec is not INF:
        terms = {e: c for e, c in terms.items() if e < out_prec}
    return LaurentGerm(f, g.var, terms, out_prec)


def poly_at_germs(f, assign: dict, var: str | None = None) -> LaurentGerm:
    """Evaluate a MultiPoly at Laurent germs, one per ring variable."""
    germs = dict(assign)
    sample = next(iter(germs.values()))
    uvar = var or sample.var
    field = sample.field
    for v in f.ring.variables:
        if v not in germs:
            raise KeyError(f"no germ assigned to variable {v!r}")
    total = LaurentGerm.zero(field, uvar, INF)
    powers = {v: {0: LaurentGerm.const(field, uvar, field.one())} for v in germs}

    def power(v, k):
        cache = powers[v]
        if k not in cache:
            cache[k] = germs[v] ** k
        return cache[k]

    for e, c in f.terms.items():
        term = LaurentGerm.const(field, uvar, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(f.ring.variables[i], k)
        total = total + term
    return total


def rational_at_germs(fn, assign: dict) -> LaurentGerm:
    """Evaluate a RationalFn at germs; raises ZeroGerm if the denominator vanishes."""
    num = poly_at_germs(fn.num, assign)
    den = poly_at_germs(fn.den, assign)
    return num * series_invert(den)
