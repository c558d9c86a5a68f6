"""Local geometry of plane curves: multiplicities, intersection numbers, Hensel germs, jets.

Intersection numbers at a point use Fulton's recursive algorithm: Euclid on
the restrictions to the first axis from the top degree, splitting off the
second coordinate when a restriction vanishes.  It is exact over any field
and returns math.inf exactly when the curves share a component through the
point.  The truncated-quotient linear-algebra length computation lives in the
test suite as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotOnCurve, SingularAtPoint
from .exactalg.poly import MultiPoly, RationalFn
from .exactalg.series import INF, LaurentGerm, poly_at_germs, series_invert

INFINITE = math.inf


def origin(ring):
    z = ring.field.zero()
    return (z,) * len(ring.variables)


def _point_dict(ring, point):
    return dict(zip(ring.variables, point))


def evaluate_at(f: MultiPoly, point) -> object:
    return f.eval(_point_dict(f.ring, point))


def multiplicity_at(f: MultiPoly, point, strict: bool = False) -> int:
    """Lowest total degree of f after translating the point to the origin."""
    fld = f.ring.field
    if f.is_zero():
        return INFINITE
    if not fld.is_zero(evaluate_at(f, point)):
        if strict:
            raise NotOnCurve("the polynomial does not vanish at the point")
        return 0
    g = f.translate(_point_dict(f.ring, point))
    return min(sum(e) for e in g.terms)


def _restrict_to_axis(f: MultiPoly):
    """Coefficient list of f(x, 0) in the first variable; [] when identically zero."""
    fld = f.ring.field
    coeffs = []
    y_idx = 1
    for e, c in f.terms.items():
        if e[y_idx] == 0:
            while len(coeffs) <= e[0]:
                coeffs.append(fld.zero())
            coeffs[e[0]] = fld.add(coeffs[e[0]], c)
    while coeffs and fld.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def _axis_order(coeffs, fld):
    for i, c in enumerate(coeffs):
        if not fld.is_zero(c):
            return i
    return None


def _split_second_var(f: MultiPoly):
    """Write f = y^k * f1 with f1 not divisible by y; returns (k, f1)."""
    k = min(e[1] for e in f.terms)
    if k == 0:
        return 0, f
    res = {}
    for e, c in f.terms.items():
        res[(e[0], e[1] - k)] = c
    return k, MultiPoly(f.ring, res)


def intersection_multiplicity(f: MultiPoly, g: MultiPoly, point):
    """Fulton's local intersection number I_P(f, g); math.inf for a shared component."""
    ring = f.ring
    fld = ring.field
    if len(ring.variables) != 2:
        raise ValueError("intersection numbers need a two-variable ring")
    shift = _point_dict(ring, point)
    f = f.translate(shift)
    g = g.translate(shift)
    x = ring.gen(ring.variables[0])
    total = 0
    while True:
        if f.is_zero() or g.is_zero():
            return INFINITE
        if not fld.is_zero(f.constant_term()) or not fld.is_zero(g.constant_term()):
            return total
        fa = _restrict_to_axis(f)
        gb = _restrict_to_axis(g)
        if not fa and not gb:
            return INFINITE
        if not fa:
            k, f1 = _split_second_var(f)
            total += k * _axis_order(gb, fld)
            f = f1
            continue
        if not gb:
            k, g1 = _split_second_var(g)
            total += k * _axis_order(fa, fld)
            g = g1
            continue
        if len(fa) - 1 > len(gb) - 1:
            f, g = g, f
            fa, gb = gb, fa
        # top-degree Euclid step on the axis restrictions
        r, s = len(fa) - 1, len(gb) - 1
        c = fld.div(gb[-1], fa[-1])
        g = g - f * x ** (s - r) * c


@dataclass
class CurveGerm:
    """A parametrised formal curve: solved = a + series(t), param = b + t."""

    point: tuple
    solved: str
    param: str
    series: LaurentGerm  # valuation >= 1 in the local parameter t

    def germs(self, ring, prec) -> dict:
        """Assignment of truncated germs to the ring variables, uniformizer 't'."""
        fld = ring.field
        t = LaurentGerm(fld, "t", {1: fld.one()}, prec)
        a = dict(zip(ring.variables, self.point))
        solved_val = LaurentGerm.const(fld, "t", a[self.solved], prec) + self.series.truncate(prec)
        param_val = LaurentGerm.const(fld, "t", a[self.param], prec) + t
        return {self.solved: solved_val, self.param: param_val}

    def describe(self) -> str:
        return f"{self.solved} = {self.param}-series {self.series.to_str()} at {self.point}"


def hensel_parametrize(
    f: MultiPoly, point, solve_for: str, precision: int
) -> CurveGerm:
    """Smooth-branch parametrisation by Newton iteration, quadratic convergence."""
    ring = f.ring
    fld = ring.field
    if not fld.is_zero(evaluate_at(f, point)):
        raise NotOnCurve("hensel_parametrize requires f to vanish at the point")
    i_solve = ring.var_index(solve_for)
    others = [v for v in ring.variables if v != solve_for]
    if len(others) != 1:
        raise ValueError("hensel_parametrize expects a two-variable ring")
    param = others[0]
    partial = f.derivative(solve_for)
    if fld.is_zero(evaluate_at(partial, point)):
        raise SingularAtPoint(f"d/d{solve_for} vanishes at the point")
    shifted = f.translate(_point_dict(ring, point))
    dshift = shifted.derivative(solve_for)
    t = LaurentGerm(fld, "t", {1: fld.one()}, precision)
    x_series = LaurentGerm.zero(fld, "t", precision)
    for _ in range(precision.bit_length() + 4):
        assign = {solve_for: x_series, param: t}
        value = poly_at_germs(shifted, assign)
        if value.is_zero_to_prec():
            break
        deriv = poly_at_germs(dshift, assign)
        x_series = x_series - value * series_invert(deriv)
    else:
        raise SingularAtPoint("newton iteration failed to converge")
    return CurveGerm(point=tuple(point), solved=solve_for, param=param, series=x_series)


def parametric_curve(ring, point, solved: str, expr: MultiPoly) -> CurveGerm:
    """Curve given directly as solved = expr(param); expr must vanish at the point."""
    fld = ring.field
    others = [v for v in ring.variables if v != solved]
    if len(others) != 1:
        raise ValueError("parametric curves need a two-variable ring")
    param = others[0]
    shifted = expr.translate({param: _point_dict(ring, point)[param]})
    terms = {}
    i_param = ring.var_index(param)
    for e, c in shifted.terms.items():
        if any(k and i != i_param for i, k in enumerate(e)):
            raise ValueError("parametric expression may involve only the parameter")
        terms[e[i_param]] = c
    series = LaurentGerm(fld, "t", terms, INF)
    base = series.coeff(0)
    solved_at_point = _point_dict(ring, point)[solved]
    if not fld.eq(base, solved_at_point):
        raise NotOnCurve("parametric curve does not pass through the point")
    series = series - LaurentGerm.const(fld, "t", base)
    if not series.is_zero_to_prec() and series.valuation() < 1:
        raise ValueError("parametric form must have valuation >= 1")
    return CurveGerm(point=tuple(point), solved=solved, param=param, series=series)


def truncate_total_degree(f: MultiPoly, bound: int) -> MultiPoly:
    return MultiPoly(f.ring, {e: c for e, c in f.terms.items() if sum(e) < bound})


def jet_truncate(f, point, bound: int) -> MultiPoly:
    """Terms of total degree < bound after translating the point to the origin.

    Accepts polynomials and rational functions regular at the point; the
    result is a polynomial, translated back to the original coordinates.
    """
    if isinstance(f, MultiPoly):
        ring = f.ring
        shift = _point_dict(ring, point)
        g = f.translate(shift)
        g = truncate_total_degree(g, bound)
        back = {v: ring.field.neg(a) for v, a in shift.items()}
        return g.translate(back)
    if not isinstance(f, RationalFn):
        raise TypeError("jet_truncate accepts MultiPoly or RationalFn")
    fn = f
    ring = fn.ring
    fld = ring.field
    shift = _point_dict(ring, point)
    num = fn.num.translate(shift)
    den = fn.den.translate(shift)
    c = den.constant_term()
    if fld.is_zero(c):
        raise ZeroDivisionError("rational function not regular at the point")
    c_inv = fld.inv(c)
    m = ring.one() - den.scale(c_inv)  # positive multiplicity at the origin
    inv = ring.one()
    power = ring.one()
    for _ in range(1, bound):
        power = truncate_total_degree(power * m, bound)
        if power.is_zero():
            break
        inv = inv + power
    inv = inv.scale(c_inv)
    g = truncate_total_degree(num * inv, bound)
    back = {v: fld.neg(a) for v, a in shift.items()}
    return g.translate(back)
