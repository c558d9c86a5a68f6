"""Sparse multivariate polynomials over an exact coefficient field.

A polynomial is a dict mapping exponent tuples to nonzero field elements:

    MultiPoly.terms : dict[tuple[int, ...], coeff]

one exponent entry per ring variable, the zero polynomial being the empty
dict.  Coefficient arithmetic is delegated to the ring's field object, which
must provide ``zero/one/from_int/add/sub/neg/mul/inv/eq/is_zero/pth_root``.
Field elements are required to have structural equality on canonical forms,
so dict comparison of term maps decides polynomial equality.

Monomial orders are small objects exposing ``key(exps)``; sorting descending
by that key gives the order's term sequence.  Graded lexicographic is the
default everywhere a tie needs breaking.
"""

from __future__ import annotations

from typing import Iterable


class GrLex:
    """Graded lexicographic order on exponent tuples."""

    name = "grlex"

    def key(self, exps):
        return (sum(exps), exps)


class Lex:
    """Lexicographic order with an explicit variable priority.

    ``priority`` lists variable indices from most to least significant.
    """

    name = "lex"

    def __init__(self, priority):
        self.priority = tuple(priority)

    def key(self, exps):
        return tuple(exps[i] for i in self.priority)


class BlockOrder:
    """Elimination order: graded-lex on a leading block, then on the rest."""

    name = "block"

    def __init__(self, elim_indices, keep_indices):
        self.elim = tuple(elim_indices)
        self.keep = tuple(keep_indices)

    def key(self, exps):
        e = tuple(exps[i] for i in self.elim)
        k = tuple(exps[i] for i in self.keep)
        return (sum(e), e, sum(k), k)


GRLEX = GrLex()


class PolyRing:
    """A polynomial ring: a field plus an ordered tuple of variable names."""

    __slots__ = ("field", "variables", "_index")

    def __init__(self, field, variables: Iterable[str]):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate ring variables")
        self._index = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.variables == other.variables
        )

    def __hash__(self):
        return hash((id(self.field), self.variables))

    def __repr__(self):
        return f"PolyRing({self.field}, {self.variables})"

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(self.field.one())

    def const(self, c) -> "MultiPoly":
        if self.field.is_zero(c):
            return self.zero()
        return MultiPoly(self, {(0,) * len(self.variables): c})

    def from_int(self, n: int) -> "MultiPoly":
        return self.const(self.field.from_int(n))

    def gen(self, name: str) -> "MultiPoly":
        exps = [0] * len(self.variables)
        exps[self.var_index(name)] = 1
        return MultiPoly(self, {tuple(exps): self.field.one()})

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exps, coeff=None) -> "MultiPoly":
        c = self.field.one() if coeff is None else coeff
        if self.field.is_zero(c):
            return self.zero()
        return MultiPoly(self, {tuple(exps): c})


class MultiPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- construction helpers -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return self.ring.const(other)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        z = (0,) * len(self.ring.variables)
        return self.terms.get(z, self.ring.field.zero())

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.from_int(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
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
        return MultiPoly(self.ring, res)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return MultiPoly(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        res: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = f.mul(c1, c2)
                if e in res:
                    s = f.add(res[e], c)
                    if f.is_zero(s):
                        del res[e]
                    else:
                        res[e] = s
                elif not f.is_zero(c):
                    res[e] = c
        return MultiPoly(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c):
        f = self.ring.field
        if f.is_zero(c):
            return self.ring.zero()
        return MultiPoly(self.ring, {e: f.mul(coef, c) for e, coef in self.terms.items()})

    # -- structure ---------------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.ring.var_index(var)
        return max(e[i] for e in self.terms)

    def leading(self, order=GRLEX):
        """Leading (exponent, coefficient) under the order; poly must be nonzero."""
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order=GRLEX, reverse=True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    def coeff_of(self, var: str, k: int) -> "MultiPoly":
        """Coefficient of var**k, a polynomial in the remaining variables (same ring)."""
        i = self.ring.var_index(var)
        res = {}
        for e, c in self.terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                res[tuple(e2)] = c
        return MultiPoly(self.ring, res)

    def variables_used(self):
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return used

    # -- maps ----------------------------------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        f = self.ring.field
        i = self.ring.var_index(var)
        res: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = f.mul(c, f.from_int(e[i]))
            if f.is_zero(d):
                continue
            e2 = list(e)
            e2[i] -= 1
            key = tuple(e2)
            if key in res:
                s = f.add(res[key], d)
                if f.is_zero(s):
                    del res[key]
                else:
                    res[key] = s
            else:
                res[key] = d
        return MultiPoly(self.ring, res)

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Ring morphism sending each mapped variable to a polynomial (or constant)."""
        target = None
        images = {}
        for v, img in mapping.items():
            self.ring.var_index(v)
            if isinstance(img, MultiPoly):
                images[v] = img
                target = img.ring
            else:
                images[v] = img
        if target is None:
            target = self.ring
        for v in self.ring.variables:
            if v not in images:
                images[v] = target.gen(v)
            elif not isinstance(images[v], MultiPoly):
                images[v] = target.const(images[v])
        result = target.zero()
        # cache powers per variable
        powers = {v: {0: target.one()} for v in self.ring.variables}

        def power(v, k):
            cache = powers[v]
            if k not in cache:
                cache[k] = images[v] ** k
            return cache[k]

        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(self.ring.variables[i], k)
            result = result + term
        return result

    def eval(self, point: dict):
        """Evaluate at a dict var -> field element; every used variable must be given."""
        f = self.ring.field
        total = f.zero()
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    name = self.ring.variables[i]
                    if name not in point:
                        raise KeyError(f"no value for variable {name!r}")
                    v = f.mul(v, f.pow(point[name], k))
            total = f.add(total, v)
        return total

    def translate(self, point: dict) -> "MultiPoly":
        """Shift variables: x -> x + a for each (x, a) in point."""
        mapping = {}
        for v, a in point.items():
            mapping[v] = self.ring.gen(v) + self.ring.const(a)
        return self.substitute(mapping)

    # -- display ---------------------------------------------------------------------

    def to_str(self) -> str:
        if not self.terms:
            return "0"
        f = self.ring.field
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(self.ring.variables[i])
                elif k > 1:
                    factors.append(f"{self.ring.variables[i]}^{k}")
            cs = f.to_str(c)
            if factors:
                body = "*".join(factors)
                parts.append(body if cs == "1" else f"{cs}*{body}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"<poly {self.to_str()}>"


# -- division and gcd helpers -----------------------------------------------------


def exact_div(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact polynomial quotient f/g; raises ValueError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    fld = ring.field
    ge, gc = g.leading()
    gc_inv = fld.inv(gc)
    quot = ring.zero()
    rem = f
    while not rem.is_zero():
        re, rc = rem.leading()
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(d < 0 for d in diff):
            raise ValueError("not an exact division")
        c = fld.mul(rc, gc_inv)
        t = ring.monomial(diff, c)
        quot = quot + t
        rem = rem - t * g
    return quot


def divides(g: MultiPoly, f: MultiPoly) -> bool:
    try:
        exact_div(f, g)
        return True
    except ValueError:
        return False


def pseudo_rem(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Pseudo-remainder of f by g with respect to var (coefficients stay polynomial)."""
    ring = f.ring
    dv = g.degree_in(var)
    if dv < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    lc_g = g.coeff_of(var, dv)
    x = ring.gen(var)
    r = f
    guard = 0
    while not r.is_zero() and r.degree_in(var) >= dv:
        dr = r.degree_in(var)
        lc_r = r.coeff_of(var, dr)
        r = r * lc_g - g * lc_r * x ** (dr - dv)
        guard += 1
        if guard > 10000:
            raise RuntimeError("pseudo-division did not terminate")
    return r


def _euclid_univariate(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    fld = f.ring.field
    a, b = f, g
    while not b.is_zero():
        # monic remainder sequence
        db = b.degree_in(var)
        lc = b.coeff_of(var, db).constant_term()
        b = b.scale(fld.inv(lc))
        r = a
        x = f.ring.gen(var)
        while not r.is_zero() and r.degree_in(var) >= db:
            dr = r.degree_in(var)
            lc_r = r.coeff_of(var, dr).constant_term()
            r = r - b * x ** (dr - db) * lc_r
        a, b = b, r
    return monic(a)


def monic(f: MultiPoly) -> MultiPoly:
    """Scale so the graded-lex leading coefficient is one."""
    if f.is_zero():
        return f
    _, c = f.leading()
    return f.scale(f.ring.field.inv(c))


def content_and_primitive(f: MultiPoly, var: str):
    """Split f = content * primitive w.r.t. var; content has no var."""
    ring = f.ring
    if f.is_zero():
        return ring.zero(), ring.zero()
    coeffs = [f.coeff_of(var, k) for k in range(f.degree_in(var) + 1)]
    coeffs = [c for c in coeffs if not c.is_zero()]
    cont = coeffs[0]
    for c in coeffs[1:]:
        cont = gcd(cont, c)
        if cont.is_constant():
            break
    cont = monic(cont)
    return cont, exact_div(f, cont)


def gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Monic gcd over the coefficient field, by primitive pseudo-remainder sequences."""
    if f.is_zero():
        return monic(g)
    if g.is_zero():
        return monic(f)
    used = f.variables_used() | g.variables_used()
    if not used:
        return f.ring.one()
    idx = max(used)
    var = f.ring.variables[idx]
    others_f = f.variables_used() - {idx}
    others_g = g.variables_used() - {idx}
    if not others_f and not others_g:
        return _euclid_univariate(f, g, var)
    cf, pf = content_and_primitive(f, var)
    cg, pg = content_and_primitive(g, var)
    c = gcd(cf, cg)
    if pf.degree_in(var) < pg.degree_in(var):
        pf, pg = pg, pf
    while True:
        r = pseudo_rem(pf, pg, var)
        if r.is_zero():
            break
        if r.degree_in(var) == 0:
            pg = f.ring.one()
            break
        _, r = content_and_primitive(r, var)
        pf, pg = pg, r
    return monic(c * pg)


def pth_root_poly(f: MultiPoly) -> MultiPoly:
    """p-th root of a polynomial that is a p-th power (Frobenius is additive)."""
    p = f.ring.field.p
    fld = f.ring.field
    res = {}
    for e, c in f.terms.items():
        if any(k % p for k in e):
            raise ValueError("polynomial is not a p-th power")
        res[tuple(k // p for k in e)] = fld.pth_root(c)
    return MultiPoly(f.ring, res)


# -- rational functions ----------------------------------------------------------


class RationalFn:
    """A reduced fraction of polynomials with monic graded-lex denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly, reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            if num.is_zero():
                den = num.ring.one()
            else:
                g = gcd(num, den)
                if not g.is_constant():
                    num = exact_div(num, g)
                    den = exact_div(den, g)
            _, lc = den.leading() if not den.is_zero() else (None, den.ring.field.one())
            inv = den.ring.field.inv(lc)
            num = num.scale(inv)
            den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, f: MultiPoly) -> "RationalFn":
        return cls(f, f.ring.one(), reduce=False)

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other) -> "RationalFn":
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, MultiPoly):
            return RationalFn.from_poly(other)
        if isinstance(other, int):
            return RationalFn.from_poly(self.ring.from_int(other))
        return RationalFn.from_poly(self.ring.const(other))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == self.ring.one()

    def __eq__(self, other):
        if isinstance(other, (MultiPoly, int)):
            other = self._coerce(other)
        if not isinstance(other, RationalFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def derivative(self, var: str) -> "RationalFn":
        n, d = self.num, self.den
        return RationalFn(n.derivative(var) * d - n * d.derivative(var), d * d)

    def eval(self, point: dict):
        fld = self.ring.field
        dv = self.den.eval(point)
        if fld.is_zero(dv):
            raise ZeroDivisionError("denominator vanishes at the point")
        return fld.mul(self.num.eval(point), fld.inv(dv))

    def eval_rational(self, mapping: dict) -> "RationalFn":
        """Compose with rational-function images of the variables, exactly."""
        num = _poly_at_rational(self.num, mapping)
        den = _poly_at_rational(self.den, mapping)
        return num / den

    def to_str(self) -> str:
        if self.is_polynomial():
            return self.num.to_str()
        return f"({self.num.to_str()})/({self.den.to_str()})"

    def __repr__(self):
        return f"<ratfn {self.to_str()}>"


def _poly_at_rational(f: MultiPoly, mapping: dict) -> RationalFn:
    target = None
    for img in mapping.values():
        target = img.ring
        break
    if target is None:
        target = f.ring
    images = {}
    for v in f.ring.variables:
        img = mapping.get(v)
        if img is None:
            images[v] = RationalFn.from_poly(target.gen(v))
        elif isinstance(img, RationalFn):
            images[v] = img
        elif isinstance(img, MultiPoly):
            images[v] = RationalFn.from_poly(img)
        else:
            images[v] = RationalFn.from_poly(target.const(img))
    total = RationalFn.from_poly(target.zero())
    for e, c in f.terms.items():
        term = RationalFn.from_poly(target.const(c))
        for i, k in enumerate(e):
            if k:
                img = images[f.ring.variables[i]]
                term = term * RationalFn(img.num ** k, img.den ** k)
        total = total + term
    return total


def as_rational(obj, ring: PolyRing) -> RationalFn:
    if isinstance(obj, RationalFn):
        return obj
    if isinstance(obj, MultiPoly):
        return RationalFn.from_poly(obj)
    if isinstance(obj, int):
        return RationalFn.from_poly(ring.from_int(obj))
    return RationalFn.from_poly(ring.const(obj))
