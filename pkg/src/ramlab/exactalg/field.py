"""Exact coefficient fields: F_p, small extensions, and F_p(t_1, .., t_k) with perfection.

``PrimeField`` elements are plain ints in [0, p).  ``FunctionField`` elements
are reduced fractions of polynomials over F_p in named transcendentals,
together with a per-transcendental perfection level: a level k on symbol t
means the stored symbol denotes t^(1/p^k), so p-th roots never leave the
representation.  Taking a p-th root just bumps every level by one (the stored
numerator and denominator are unchanged) and re-canonicalises; the fast path
where all exponents are divisible by p falls out of the canonicalisation.

Canonical form: fraction in lowest terms, monic denominator under graded-lex,
levels minimal.  Equality of canonical forms is structural, so field elements
can sit directly in polynomial term dicts.
"""

from __future__ import annotations

from .poly import MultiPoly, PolyRing, exact_div, gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """F_p with int elements; p-th roots are the identity (Frobenius fixes F_p)."""

    __slots__ = ("p",)

    symbols: tuple = ()

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def is_zero(self, a):
        return a % self.p == 0

    def pth_root(self, a):
        return a % self.p

    def sqrt(self, a):
        """A square root in F_p if one exists, else None."""
        a %= self.p
        for r in range(self.p):
            if (r * r) % self.p == a:
                return r
        return None

    def elements(self):
        return range(self.p)

    def to_str(self, a) -> str:
        return str(a % self.p)


class _Frac:
    """Canonical fraction of transcendental polynomials plus perfection levels."""

    __slots__ = ("num", "den", "levels")

    def __init__(self, num: MultiPoly, den: MultiPoly, levels: tuple):
        self.num = num
        self.den = den
        self.levels = levels

    def __eq__(self, other):
        return (
            isinstance(other, _Frac)
            and self.levels == other.levels
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.levels, self.num, self.den))

    def __repr__(self):
        return f"<frac {self.num.to_str()}/{self.den.to_str()} lv={self.levels}>"


class FunctionField:
    """F_p(symbols) with on-demand p-th roots via per-symbol level bookkeeping."""

    def __init__(self, p: int, symbols):
        self.p = p
        self.symbols = tuple(symbols)
        self.base = PrimeField(p)
        self.ring = PolyRing(self.base, self.symbols)

    def __eq__(self, other):
        return (
            isinstance(other, FunctionField)
            and other.p == self.p
            and other.symbols == self.symbols
        )

    def __hash__(self):
        return hash(("FunctionField", self.p, self.symbols))

    def __repr__(self):
        return f"GF({self.p})({', '.join(self.symbols)})"

    # -- construction ----------------------------------------------------------

    def _make(self, num: MultiPoly, den: MultiPoly, levels) -> _Frac:
        return self._canonical(num, den, tuple(levels))

    def _canonical(self, num: MultiPoly, den: MultiPoly, levels: tuple) -> _Frac:
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in coefficient field")
        zero_lv = (0,) * len(self.symbols)
        if num.is_zero():
            return _Frac(self.ring.zero(), self.ring.one(), zero_lv)
        g = gcd(num, den)
        if not g.is_constant():
            num = exact_div(num, g)
            den = exact_div(den, g)
        _, lc = den.leading()
        inv = self.base.inv(lc)
        num = num.scale(inv)
        den = den.scale(inv)
        # minimise levels symbol by symbol
        levels = list(levels)
        p = self.p
        for i in range(len(self.symbols)):
            while levels[i] > 0 and self._exponents_divisible(num, i) and self._exponents_divisible(den, i):
                num = self._scale_exponent(num, i, down=True)
                den = self._scale_exponent(den, i, down=True)
                levels[i] -= 1
        return _Frac(num, den, tuple(levels))

    def _exponents_divisible(self, f: MultiPoly, i: int) -> bool:
        return all(e[i] % self.p == 0 for e in f.terms)

    def _scale_exponent(self, f: MultiPoly, i: int, down: bool) -> MultiPoly:
        res = {}
        for e, c in f.terms.items():
            e2 = list(e)
            e2[i] = e2[i] // self.p if down else e2[i] * self.p
            res[tuple(e2)] = c
        return MultiPoly(self.ring, res)

    def zero(self):
        return self._frac_const(0)

    def one(self):
        return self._frac_const(1)

    def from_int(self, n: int):
        return self._frac_const(n)

    def _frac_const(self, n: int) -> _Frac:
        return _Frac(
            self.ring.from_int(n),
            self.ring.one(),
            (0,) * len(self.symbols),
        )

    def sym(self, name: str) -> _Frac:
        return _Frac(self.ring.gen(name), self.ring.one(), (0,) * len(self.symbols))

    def from_poly(self, num: MultiPoly, den: MultiPoly | None = None) -> _Frac:
        if den is None:
            den = self.ring.one()
        return self._make(num, den, (0,) * len(self.symbols))

    # -- arithmetic --------------------------------------------------------------

    def _unify(self, a: _Frac, b: _Frac):
        if a.levels == b.levels:
            return a, b
        target = tuple(max(x, y) for x, y in zip(a.levels, b.levels))
        return self._lift(a, target), self._lift(b, target)

    def _lift(self, a: _Frac, target: tuple) -> _Frac:
        num, den = a.num, a.den
        for i, (have, want) in enumerate(zip(a.levels, target)):
            for _ in range(want - have):
                num = self._scale_exponent(num, i, down=False)
                den = self._scale_exponent(den, i, down=False)
        return _Frac(num, den, target)

    def add(self, a, b):
        a, b = self._unify(a, b)
        return self._make(a.num * b.den + b.num * a.den, a.den * b.den, a.levels)

    def sub(self, a, b):
        a, b = self._unify(a, b)
        return self._make(a.num * b.den - b.num * a.den, a.den * b.den, a.levels)

    def neg(self, a):
        return _Frac(-a.num, a.den, a.levels)

    def mul(self, a, b):
        a, b = self._unify(a, b)
        return self._make(a.num * b.num, a.den * b.den, a.levels)

    def inv(self, a):
        if a.num.is_zero():
            raise ZeroDivisionError("inverse of zero in function field")
        return self._make(a.den, a.num, a.levels)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            if n > 1:
                base = self.mul(base, base)
            n >>= 1
        return result

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return a.num.is_zero()

    def pth_root(self, a):
        """Bump every perfection level; canonicalisation undoes unnecessary bumps."""
        lifted = tuple(lv + 1 for lv in a.levels)
        return self._canonical(a.num, a.den, lifted)

    def sqrt(self, a):
        """Square root only for prime-field constants; None otherwise."""
        if not (a.num.is_constant() and a.den.is_constant()):
            return None
        c = self.base.div(a.num.constant_term(), a.den.constant_term())
        r = self.base.sqrt(c)
        if r is None:
            return None
        return self.from_int(r)

    def max_level(self, a) -> int:
        return max(a.levels) if a.levels else 0

    def to_str(self, a) -> str:
        bits = []
        for name, lv in zip(self.symbols, a.levels):
            if lv:
                bits.append(f"{name}^(1/{self.p}^{lv})")
        suffix = f" [{', '.join(bits)}]" if bits else ""
        if a.den == self.ring.one():
            return a.num.to_str() + suffix
        return f"({a.num.to_str()})/({a.den.to_str()})" + suffix


class ExtensionField:
    """F_{p^e} for small e, used only by the sampling cross-check.

    Elements are coefficient tuples of length e modulo a monic irreducible
    found by exhaustive search.  p-th roots are Frobenius inverses a^(p^(e-1)).
    """

    symbols: tuple = ()

    def __init__(self, p: int, e: int):
        if e < 1 or p**e > 5000:
            raise ValueError("extension degree out of supported range")
        self.p = p
        self.e = e
        self.modulus = self._find_irreducible()

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def _find_irreducible(self):
        p, e = self.p, self.e
        if e == 1:
            return (0, 1)
        # monic x^e + c_{e-1} x^(e-1) + .. + c_0, no roots and no factor found by trial
        for code in range(p**e):
            cs = []
            v = code
            for _ in range(e):
                cs.append(v % p)
                v //= p
            mod = tuple(cs) + (1,)
            if self._irreducible(mod):
                return mod
        raise RuntimeError("no irreducible polynomial found")

    def _poly_eval(self, poly, x):
        acc = 0
        for c in reversed(poly):
            acc = (acc * x + c) % self.p
        return acc

    def _irreducible(self, mod) -> bool:
        p, e = self.p, self.e
        if any(self._poly_eval(mod, x) == 0 for x in range(p)):
            return False
        if e < 4:
            return True
        # trial division by monic quadratics is enough for e <= 5 once roots fail
        for b in range(p):
            for c in range(p):
                q = (c, b, 1)
                if self._poly_divides(q, mod):
                    return False
        return True

    def _poly_divides(self, q, f) -> bool:
        p = self.p
        f = list(f)
        dq = len(q) - 1
        inv = pow(q[-1], p - 2, p)
        while len(f) - 1 >= dq and any(f):
            while f and f[-1] == 0:
                f.pop()
            if len(f) - 1 < dq:
                break
            coef = f[-1] * inv % p
            shift = len(f) - 1 - dq
            for i, qc in enumerate(q):
                f[shift + i] = (f[shift + i] - coef * qc) % p
        return not any(f)

    def zero(self):
        return (0,) * self.e

    def one(self):
        return (1,) + (0,) * (self.e - 1)

    def from_int(self, n: int):
        return (n % self.p,) + (0,) * (self.e - 1)

    def gen(self):
        if self.e == 1:
            return self.one()
        return (0, 1) + (0,) * (self.e - 2)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        # reduce modulo the monic modulus
        for k in range(len(prod) - 1, e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(e):
                    prod[k - e + i] = (prod[k - e + i] - c * self.modulus[i]) % p
        return tuple(prod[:e])

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            if n > 1:
                base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero in extension field")
        return self.pow(a, self.p**self.e - 2)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return all(x % self.p == 0 for x in a)

    def pth_root(self, a):
        return self.pow(a, self.p ** (self.e - 1))

    def elements(self):
        p, e = self.p, self.e
        for code in range(p**e):
            cs = []
            v = code
            for _ in range(e):
                cs.append(v % p)
                v //= p
            yield tuple(cs)

    def to_str(self, a) -> str:
        return "(" + ",".join(str(x) for x in a) + ")"
