"""Groebner-basis engine: membership, elimination, quotients, zero-dimensional radicals.

Buchberger with the coprime-lcm and chain criteria, normal pair selection.
Reduction always picks the basis element with the smallest leading monomial,
so normal forms and reduced bases are deterministic.  Radicals are computed
only for the shapes the rest of the pipeline produces: principal ideals
(squarefree part), monomial ideals, and zero-dimensional ideals (Seidenberg,
by adjoining squarefree parts of the univariate eliminants).
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .errors import NotZeroDimensional
from .exactalg.poly import (
    GRLEX,
    BlockOrder,
    MultiPoly,
    PolyRing,
    divides,
    exact_div,
    gcd,
    monic,
    pth_root_poly,
)


class IdealHandle:
    """An ideal with a monomial order and a cached reduced Groebner basis."""

    def __init__(self, ring: PolyRing, generators, order=GRLEX):
        self.ring = ring
        self.generators = [g for g in generators if not g.is_zero()]
        self.order = order
        self._basis = None

    def __repr__(self):
        gens = ", ".join(g.to_str() for g in self.generators)
        return f"<ideal ({gens})>"

    def with_order(self, order) -> "IdealHandle":
        return IdealHandle(self.ring, self.generators, order)

    def basis(self):
        if self._basis is None:
            self._basis = groebner_basis(self.generators, self.order)
        return self._basis

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()

    def is_trivial(self) -> bool:
        b = self.basis()
        return len(b) == 1 and b[0].is_constant() and not b[0].is_zero()

    def is_zero_dimensional(self) -> bool:
        b = self.basis()
        if not b:
            return False
        if self.is_trivial():
            return True
        n = len(self.ring.variables)
        leading = [g.leading(self.order)[0] for g in b]
        for i in range(n):
            if not any(all(e[j] == 0 for j in range(n) if j != i) and e[i] > 0 for e in leading):
                return False
        return True

    def standard_monomials(self):
        """Monomials outside the leading-term ideal; requires zero-dimensionality."""
        if self.is_trivial():
            return []
        if not self.is_zero_dimensional():
            raise NotZeroDimensional("infinitely many standard monomials")
        n = len(self.ring.variables)
        leading = [g.leading(self.order)[0] for g in self.basis()]

        def divisible(e):
            return any(all(le[i] <= e[i] for i in range(n)) for le in leading)

        found = []
        frontier = [(0,) * n]
        seen = {frontier[0]}
        while frontier:
            e = frontier.pop()
            if divisible(e):
                continue
            found.append(e)
            for i in range(n):
                e2 = list(e)
                e2[i] += 1
                t = tuple(e2)
                if t not in seen:
                    seen.add(t)
                    frontier.append(t)
        return sorted(found, key=self.order.key)


def _spoly(f: MultiPoly, g: MultiPoly, order):
    ring = f.ring
    fld = ring.field
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = ring.monomial(tuple(a - b for a, b in zip(lcm, ef)), fld.inv(cf))
    mg = ring.monomial(tuple(a - b for a, b in zip(lcm, eg)), fld.inv(cg))
    return mf * f - mg * g


def _reduce(f: MultiPoly, basis, order) -> MultiPoly:
    """Full normal form; the reducer with the smallest leading monomial wins."""
    ring = f.ring
    fld = ring.field
    if not basis:
        return f
    lead = [(g.leading(order)) for g in basis]
    remainder = ring.zero()
    work = f
    while not work.is_zero():
        e, c = work.leading(order)
        best = None
        for idx, (ge, _gc) in enumerate(lead):
            if all(a >= b for a, b in zip(e, ge)):
                if best is None or order.key(ge) < order.key(lead[best][0]):
                    best = idx
        if best is None:
            t = ring.monomial(e, c)
            remainder = remainder + t
            work = work - t
        else:
            ge, gc = lead[best]
            factor = ring.monomial(
                tuple(a - b for a, b in zip(e, ge)), fld.mul(c, fld.inv(gc))
            )
            work = work - factor * basis[best]
    return remainder


def groebner_basis(generators, order=GRLEX):
    """Reduced Groebner basis, deterministic; empty input gives the empty basis."""
    gens = [monic(g) for g in generators if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    # deduplicate, deterministic seed order
    seen = set()
    basis = []
    for g in sorted(gens, key=lambda h: order.key(h.leading(order)[0])):
        key = tuple(sorted(g.terms.items()))
        if key not in seen:
            seen.add(key)
            basis.append(g)

    def lm(i):
        return basis[i].leading(order)[0]

    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    processed = set()
    while pairs:
        # normal selection: smallest lcm of leading monomials
        def pair_key(p):
            i, j = p
            lcm = tuple(max(a, b) for a, b in zip(lm(i), lm(j)))
            return (order.key(lcm), i, j)

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        processed.add((i, j))
        li, lj = lm(i), lm(j)
        lcm = tuple(max(a, b) for a, b in zip(li, lj))
        # coprime criterion
        if all(a + b == c for a, b, c in zip(li, lj, lcm)):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if all(a <= b for a, b in zip(lm(k), lcm)):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in processed and pjk in processed:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce(_spoly(basis[i], basis[j], order), basis, order)
        if not r.is_zero():
            basis.append(monic(r))
            new = len(basis) - 1
            for k in range(new):
                pairs.add((k, new))
    # minimalise
    minimal = []
    for i, g in enumerate(basis):
        gi = g.leading(order)[0]
        if any(
            j != i and all(a <= b for a, b in zip(basis[j].leading(order)[0], gi))
            and (order.key(basis[j].leading(order)[0]) != order.key(gi) or j < i)
            for j in range(len(basis))
        ):
            continue
        minimal.append(g)
    # inter-reduce
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _reduce(g, others, order) if others else g
        if not r.is_zero():
            reduced.append(monic(r))
    reduced.sort(key=lambda h: order.key(h.leading(order)[0]), reverse=True)
    return reduced


def normal_form(f: MultiPoly, ideal: IdealHandle) -> MultiPoly:
    """The reduced remainder of f modulo the ideal; zero iff f is a member."""
    return _reduce(f, ideal.basis(), ideal.order)


def eliminate(ideal: IdealHandle, keep) -> IdealHandle:
    """Contraction to the subring on the kept variables, via a block order."""
    ring = ideal.ring
    keep = set(keep)
    for v in keep:
        ring.var_index(v)
    elim_idx = [i for i, v in enumerate(ring.variables) if v not in keep]
    keep_idx = [i for i, v in enumerate(ring.variables) if v in keep]
    order = BlockOrder(elim_idx, keep_idx)
    basis = groebner_basis(ideal.generators, order)
    kept = [g for g in basis if all(i in keep_idx or not any(e[i] for e in g.terms) for i in range(len(ring.variables)))]
    return IdealHandle(ring, kept, ideal.order)


def _extend_ring(ring: PolyRing, extra: str):
    new_ring = PolyRing(ring.field, ring.variables + (extra,))

    def up(f: MultiPoly) -> MultiPoly:
        return MultiPoly(new_ring, {e + (0,): c for e, c in f.terms.items()})

    def down(f: MultiPoly) -> MultiPoly:
        res = {}
        for e, c in f.terms.items():
            if e[-1] != 0:
                raise ValueError("polynomial still involves the helper variable")
            res[e[:-1]] = c
        return MultiPoly(ring, res)

    return new_ring, up, down


def intersect_principal(ideal: IdealHandle, f: MultiPoly) -> list:
    """Generators of I intersected with (f), by the helper-variable trick."""
    ring = ideal.ring
    new_ring, up, down = _extend_ring(ring, "@t")
    t = new_ring.gen("@t")
    gens = [t * up(g) for g in ideal.generators]
    gens.append((new_ring.one() - t) * up(f))
    j = IdealHandle(new_ring, gens)
    kept = eliminate(j, set(ring.variables))
    return [down(g) for g in kept.generators]


def ideal_quotient(ideal: IdealHandle, f: MultiPoly) -> IdealHandle:
    """(I : f) = {g : g*f in I}."""
    if f.is_zero():
        raise ZeroDivisionError("quotient by the zero polynomial")
    inter = intersect_principal(ideal, f)
    gens = [exact_div(g, f) for g in inter]
    return IdealHandle(ideal.ring, gens, ideal.order)


def saturate(ideal: IdealHandle, f: MultiPoly) -> IdealHandle:
    """(I : f^inf) via Rabinowitsch: eliminate t from I + (1 - t*f)."""
    ring = ideal.ring
    new_ring, up, down = _extend_ring(ring, "@t")
    t = new_ring.gen("@t")
    gens = [up(g) for g in ideal.generators]
    gens.append(new_ring.one() - t * up(f))
    kept = eliminate(IdealHandle(new_ring, gens), set(ring.variables))
    return IdealHandle(ring, [down(g) for g in kept.generators], ideal.order)


def in_radical(f: MultiPoly, ideal: IdealHandle) -> bool:
    """Rabinowitsch membership test: f in sqrt(I) iff 1 in I + (1 - t*f)."""
    ring = ideal.ring
    new_ring, up, _down = _extend_ring(ring, "@t")
    t = new_ring.gen("@t")
    gens = [up(g) for g in ideal.generators]
    gens.append(new_ring.one() - t * up(f))
    return IdealHandle(new_ring, gens).is_trivial()


# -- squarefree parts ---------------------------------------------------------


def squarefree_part(f: MultiPoly) -> MultiPoly:
    """Product of the distinct irreducible factors of f, monic.

    Correct over the perfected coefficient fields: an irreducible polynomial
    there is separable, and p-th-power content is peeled off exactly by
    coefficient-wise p-th roots.
    """
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    used = sorted(f.variables_used())
    if not used:
        return f.ring.one()
    partials = [f.derivative(f.ring.variables[i]) for i in used]
    if all(d.is_zero() for d in partials):
        return squarefree_part(pth_root_poly(f))
    g = f
    for d in partials:
        g = gcd(g, d)
    w = exact_div(f, g) if not g.is_constant() else monic(f)
    if g.is_constant():
        return w
    # strip the w-factors from g; what remains is an exact p-th power
    y = g
    while True:
        d = gcd(y, w)
        if d.is_constant():
            break
        y = exact_div(y, d)
    if y.is_constant():
        return monic(w)
    rest = squarefree_part(pth_root_poly(y))
    overlap = gcd(w, rest)
    if not overlap.is_constant():
        rest = exact_div(rest, overlap)
    return monic(w * rest)


def radical_zero_dim(ideal: IdealHandle) -> IdealHandle:
    """Radical of a zero-dimensional ideal by Seidenberg's criterion."""
    if ideal.is_trivial():
        return ideal
    if not ideal.is_zero_dimensional():
        raise NotZeroDimensional("radical_zero_dim needs a zero-dimensional ideal")
    ring = ideal.ring
    extra = []
    for v in ring.variables:
        elim = eliminate(ideal, {v})
        gens = elim.generators
        if not gens:
            raise NotZeroDimensional(f"no univariate eliminant in {v}")
        uni = gens[0]
        for g in gens[1:]:
            uni = gcd(uni, g)
        extra.append(squarefree_part(uni))
    return IdealHandle(ring, ideal.generators + extra, ideal.order)


def monomial_radical(ideal: IdealHandle) -> IdealHandle:
    """Radical of a monomial ideal: exponents clipped to one."""
    gens = []
    for g in ideal.generators:
        if len(g.terms) != 1:
            raise ValueError("not a monomial ideal")
        (e,) = g.terms
        gens.append(ideal.ring.monomial(tuple(1 if k else 0 for k in e)))
    return IdealHandle(ideal.ring, gens, ideal.order)


def radical_for_thickness(ideal: IdealHandle) -> IdealHandle:
    """Radical for the shapes supported by exact thickness computation."""
    from .errors import UnsupportedIdealShape

    gens = ideal.generators
    if not gens:
        return ideal
    if len(gens) == 1:
        return IdealHandle(ideal.ring, [squarefree_part(gens[0])], ideal.order)
    if all(len(g.terms) == 1 for g in gens):
        return monomial_radical(ideal)
    if ideal.is_zero_dimensional():
        return radical_zero_dim(ideal)
    raise UnsupportedIdealShape(
        "exact mode needs a principal, monomial or zero-dimensional ideal"
    )


def power_contained(radical: IdealHandle, ideal: IdealHandle, r: int) -> bool:
    """Whether every r-fold product of the radical generators lies in the ideal."""
    if r == 0:
        return ideal.is_trivial()
    gens = radical.generators
    if not gens:
        return True
    for combo in combinations_with_replacement(gens, r):
        prod = combo[0]
        for g in combo[1:]:
            prod = prod * g
        if not ideal.contains(prod):
            return False
    return True
