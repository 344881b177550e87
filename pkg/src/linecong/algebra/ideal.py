"""Homogeneous-friendly ideal API over the Buchberger core.

Besides Gröbner bases this module provides elimination, sums, products,
intersections, colon ideals and saturations, and the Hilbert-series
invariants of an ideal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .groebner import GBConfig, GBStats, buchberger, normal_form_dict
from .hilbert import HilbertData, HilbertPolynomial, hilbert_data
from .poly import Polynomial
from .ring import GREVLEX, MonomialOrder, PolyRing, UsageError


class Ideal:
    """Finitely generated ideal; reduced Gröbner bases are cached per order."""

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial] = ()):
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise UsageError("generator not in the ideal's ring")
        self.ring = ring
        self.gens: list[Polynomial] = gens
        self._gb: dict[MonomialOrder, list[Polynomial]] = {}
        self._hilbert: HilbertData | None = None

    # ------------------------------------------------------------ basics
    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens[:6]))}{', ...' if len(self.gens) > 6 else ''})"

    def __len__(self):
        return len(self.gens)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def gb(self, order: MonomialOrder | None = None, config: GBConfig | None = None,
           stats: GBStats | None = None) -> list[Polynomial]:
        """Reduced Gröbner basis; elements live in ``ring.with_order(order)``."""
        order = order or self.ring.order
        if order not in self._gb:
            target = self.ring.with_order(order)
            raw = [g.terms if target == self.ring else g.change_ring(target).terms for g in self.gens]
            basis = buchberger(target, raw, config, stats)
            self._gb[order] = [Polynomial(target, b, _trusted=True) for b in basis if b]
        return self._gb[order]

    def with_gens(self, gens: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, gens)

    def is_unit(self) -> bool:
        G = self.gb()
        return len(G) == 1 and G[0].is_constant()

    def is_zero(self) -> bool:
        return not self.gens

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def issubset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: "Ideal") -> bool:
        return self.issubset(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if (other.ring.variables, other.ring.weights, other.ring.field) != (
            self.ring.variables, self.ring.weights, self.ring.field
        ):
            return False
        return [g.terms for g in self.gb(GREVLEX)] == [g.terms for g in other.gb(GREVLEX)]

    __hash__ = None  # type: ignore[assignment]

    def map(self, target: PolyRing, images: Sequence[Polynomial]) -> "Ideal":
        return Ideal(target, [g.substitute(target, images) for g in self.gens])

    def change_ring(self, target: PolyRing, var_map: Sequence[int] | None = None) -> "Ideal":
        return Ideal(target, [g.change_ring(target, var_map) for g in self.gens])

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other: "Ideal | Iterable[Polynomial]") -> "Ideal":
        gens = other.gens if isinstance(other, Ideal) else list(other)
        return Ideal(self.ring, self.gens + list(gens))

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    # ------------------------------------------------------------ invariants
    def hilbert(self) -> HilbertData:
        if self._hilbert is None:
            if not self.is_homogeneous():
                raise UsageError("Hilbert series needs a homogeneous ideal")
            if any(w != 1 for w in self.ring.weights):
                raise UsageError("Hilbert series implemented for the standard grading only")
            G = self.gb(GREVLEX)
            self._hilbert = hilbert_data([g.lead_exponents for g in G], self.ring.nvars)
        return self._hilbert

    def hilbert_polynomial(self) -> HilbertPolynomial:
        return self.hilbert().hilbert_polynomial()

    def dimension(self) -> int:
        """Dimension of the projective zero set (-1 when empty)."""
        return self.hilbert().projective_dimension

    def degree(self) -> int:
        return self.hilbert().degree

    def graded_dim(self, d: int) -> int:
        """dim_k I_d."""
        n = self.ring.nvars
        return comb(d + n - 1, n - 1) - self.hilbert().hilbert_function(d)

    def basis_in_degree(self, d: int) -> list[Polynomial]:
        """A k-basis of I_d (echelonized against the grevlex basis)."""
        from .linalg import rref

        ring = self.ring
        mons = monomials_of_degree(ring.nvars, d)
        index = {ring.encode(m): i for i, m in enumerate(mons)}
        rows = []
        for g in self.gens:
            e = g.degree()
            if e > d:
                continue
            for m in monomials_of_degree(ring.nvars, d - e):
                h = g.shift(m)
                row = [0] * len(mons)
                for k, c in h.terms.items():
                    row[index[k]] = c
                rows.append(row)
        if not rows:
            return []
        R, _ = rref(rows, ring.p)
        out = []
        for row in R:
            out.append(Polynomial(ring, {ring.encode(mons[i]): int(c) for i, c in enumerate(row) if c}))
        return out


# ---------------------------------------------------------------- helpers
def monomials_of_degree(n: int, d: int) -> list[tuple[int, ...]]:
    """All exponent vectors of total degree d in n variables."""
    if n == 0:
        return [()] if d == 0 else []
    if n == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - e):
            out.append((e,) + rest)
    return out


def _basis_list(G) -> list[Polynomial]:
    if isinstance(G, Ideal):
        return G.gb()
    return list(G)


# ---------------------------------------------------------------- operations
def groebner_basis(I: Ideal, order: MonomialOrder | None = None, config: GBConfig | None = None) -> Ideal:
    """Ideal whose generators are the reduced Gröbner basis for ``order``."""
    order = order or I.ring.order
    G = I.gb(order, config)
    target = I.ring.with_order(order)
    J = Ideal(target, G)
    J._gb[order] = G
    return J


def normal_form(f: Polynomial, G) -> Polynomial:
    """Remainder of f modulo a reduced Gröbner basis (or an Ideal, using its basis)."""
    basis = _basis_list(G)
    if not basis:
        return f
    ring = basis[0].ring
    if f.ring.variables != ring.variables or f.ring.field != ring.field:
        raise UsageError("ring mismatch between polynomial and basis")
    g = f if f.ring == ring else f.change_ring(ring)
    r = Polynomial(ring, normal_form_dict(g.terms, [b.terms for b in basis], ring), _trusted=True)
    return r if f.ring == ring else r.change_ring(f.ring)


def eliminate(I: Ideal, front_vars: Iterable[str | int], config: GBConfig | None = None) -> Ideal:
    """Generators of I ∩ k[remaining variables], in the ring of the remaining variables."""
    ring = I.ring
    front = [ring.index(v) if isinstance(v, str) else v for v in front_vars]
    if not front:
        return I
    rest = [i for i in range(ring.nvars) if i not in front]
    order = MonomialOrder.elimination(len(front))
    names = [ring.variables[i] for i in front + rest]
    weights = [ring.weights[i] for i in front + rest]
    big = PolyRing(tuple(names), tuple(weights), order, ring.field)
    var_map = [names.index(v) for v in ring.variables]
    gens = [g.change_ring(big, var_map).terms for g in I.gens]
    basis = buchberger(big, gens, config)
    small = PolyRing(tuple(ring.variables[i] for i in rest), tuple(ring.weights[i] for i in rest),
                     GREVLEX, ring.field)
    k = len(front)
    out = []
    for b in basis:
        f = Polynomial(big, b, _trusted=True)
        if all(not any(big.decode(t)[:k]) for t in b):
            out.append(f.change_ring(small, [None] * k + list(range(len(rest)))))
    return Ideal(small, out)


def _with_aux(ring: PolyRing, name: str, weight: int, order: MonomialOrder) -> PolyRing:
    base = name
    n = 0
    while name in ring.variables:
        n += 1
        name = f"{base}{n}"
    if order.kind == "elim":
        names = (name,) + ring.variables
        weights = (weight,) + ring.weights
    else:
        names = ring.variables + (name,)
        weights = ring.weights + (weight,)
    return PolyRing(names, weights, order, ring.field)


def intersect(I: Ideal, J: Ideal, config: GBConfig | None = None) -> Ideal:
    """I ∩ J via elimination of t from t*I + (1-t)*J."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    big = _with_aux(ring, "t", 1, MonomialOrder.elimination(1))
    emb = list(range(1, big.nvars))
    t = Polynomial.variable(big, 0)
    gens = [t * g.change_ring(big, emb) for g in I.gens]
    gens += [(1 - t) * g.change_ring(big, emb) for g in J.gens]
    basis = buchberger(big, [g.terms for g in gens], config)
    out = []
    for b in basis:
        if all(big.decode(k)[0] == 0 for k in b):
            out.append(Polynomial(big, b, _trusted=True).change_ring(ring, [None] + list(range(ring.nvars))))
    K = Ideal(ring, out)
    return _interreduced(K)


def _interreduced(I: Ideal) -> Ideal:
    G = I.gb()
    K = Ideal(I.ring, G)
    K._gb[I.ring.order] = G
    return K


def divide_exact(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g, raising if g does not divide f."""
    ring = f.ring
    q: dict = {}
    r = f
    lg, cg = g.lead_key, g.lead_coef
    inv = ring.field.inv(cg)
    one = ring.one_key
    while not r.is_zero():
        lr = r.lead_key
        if not ring.divides(lg, lr):
            raise UsageError("inexact division")
        mk = lr - lg + one
        c = r.terms[lr] * inv
        if ring.p:
            c %= ring.p
        q[mk] = c
        m = Polynomial(ring, {mk: c}, _trusted=True)
        r = r - m * g
    return Polynomial(ring, q)


def quotient_by_element(I: Ideal, g: Polynomial, config: GBConfig | None = None) -> Ideal:
    """I : g = (I ∩ (g)) / g."""
    K = intersect(I, Ideal(I.ring, [g]), config)
    return Ideal(I.ring, [divide_exact(h, g) for h in K.gens])


def quotient(I: Ideal, J: Ideal, config: GBConfig | None = None) -> Ideal:
    """I : J = ∩_g (I : g) over generators g of J."""
    if J.is_zero():
        raise UsageError("quotient by the zero ideal")
    result = None
    for g in J.gens:
        K = quotient_by_element(I, g, config)
        result = K if result is None else intersect(result, K, config)
    return _interreduced(result)


def saturate_by_element(I: Ideal, g: Polynomial, config: GBConfig | None = None) -> Ideal:
    """I : g^∞.

    Homogeneous case: Bayer's trick in k[x, z] with deg z = deg g, z last in
    (weighted) grevlex, applied to I + (z - g), then z -> g.
    Otherwise the Rabinowitsch ideal I + (1 - t g) with t eliminated.
    """
    ring = I.ring
    if g.is_zero():
        raise UsageError("saturation by zero")
    if g.is_constant():
        return _interreduced(I)
    if I.is_homogeneous() and g.is_homogeneous() and I.ring.order.kind == "grevlex":
        d = g.degree()
        big = _with_aux(ring, "z", d, GREVLEX)
        emb = list(range(ring.nvars))
        z = Polynomial.variable(big, big.nvars - 1)
        gens = [f.change_ring(big, emb).terms for f in I.gens] + [(z - g.change_ring(big, emb)).terms]
        basis = buchberger(big, gens, config)
        zi = big.nvars - 1
        images = ring.gens() + [g]
        out = []
        for b in basis:
            f = Polynomial(big, b, _trusted=True)
            a = min(big.decode(k)[zi] for k in b)
            if a:
                f = Polynomial(big, {k - a * (big.var_key(zi) - big.one_key): c for k, c in b.items()},
                               _trusted=True)
            out.append(f.substitute(ring, images))
        return _interreduced(Ideal(ring, out))
    big = _with_aux(ring, "t", 1, MonomialOrder.elimination(1))
    emb = list(range(1, big.nvars))
    t = Polynomial.variable(big, 0)
    gens = [f.change_ring(big, emb).terms for f in I.gens] + [(1 - t * g.change_ring(big, emb)).terms]
    basis = buchberger(big, gens, config)
    out = [Polynomial(big, b, _trusted=True).change_ring(ring, [None] + list(range(ring.nvars)))
           for b in basis if all(big.decode(k)[0] == 0 for k in b)]
    return _interreduced(Ideal(ring, out))


def saturate(I: Ideal, J: Ideal | Polynomial, config: GBConfig | None = None,
             method: str = "exact", seed: int | None = None) -> Ideal:
    """I : J^∞.

    ``exact``: intersection of the saturations by the generators of J.
    ``generic``: saturation by one seeded general element of J (agrees with
    the exact answer unless the element lands in an associated prime of I not
    containing J, a proper closed condition on the choice).
    """
    if isinstance(J, Polynomial):
        return saturate_by_element(I, J, config)
    if J.is_zero():
        raise UsageError("saturation by the zero ideal")
    gens = J.gens
    if len(gens) == 1:
        return saturate_by_element(I, gens[0], config)
    if method == "generic":
        return saturate_by_element(I, general_element(J, seed), config)
    if method != "exact":
        raise UsageError(f"unknown saturation method {method!r}")
    result = None
    for g in gens:
        K = saturate_by_element(I, g, config)
        result = K if result is None else intersect(result, K, config)
    return result


def general_element(J: Ideal, seed: int | None = None) -> Polynomial:
    """Seeded random combination of the generators of J, lifted to their top degree."""
    rng = random.Random(seed)
    ring = J.ring
    p = ring.p or 10007
    homogeneous = J.is_homogeneous()
    top = max(g.degree() for g in J.gens)
    total = Polynomial.zero(ring)
    for g in J.gens:
        if homogeneous and g.degree() < top:
            lift = random_form(ring, top - g.degree(), rng)
            total = total + lift * g
        else:
            total = total + g.scale(rng.randrange(1, p))
    return total


def random_form(ring: PolyRing, d: int, rng: random.Random) -> Polynomial:
    p = ring.p or 10007
    terms = {ring.encode(m): rng.randrange(p) for m in monomials_of_degree(ring.nvars, d)}
    return Polynomial(ring, terms)


def ideal_arithmetic(kind: str, I: Ideal, J: Ideal, config: GBConfig | None = None) -> Ideal:
    if I.ring != J.ring:
        raise UsageError("ideals live in different rings")
    if kind == "sum":
        return I + J
    if kind == "product":
        return I * J
    if kind == "intersect":
        return intersect(I, J, config)
    if kind == "quotient":
        return quotient(I, J, config)
    if kind == "saturate":
        return saturate(I, J, config)
    raise UsageError(f"unknown ideal operation {kind!r}")


@dataclass
class IdealInvariants:
    projective_dimension_of_zero_set: int
    degree: int
    hilbert_polynomial: HilbertPolynomial
    graded_dims: Callable[[int], int]


def invariants(I: Ideal) -> IdealInvariants:
    if not I.is_homogeneous():
        raise UsageError("invariants need a homogeneous ideal")
    H = I.hilbert()
    return IdealInvariants(H.projective_dimension, H.degree, H.hilbert_polynomial(), I.graded_dim)


def macaulay_rank(I: Ideal, d: int) -> int:
    """Rank of the degree-d Macaulay matrix of the generators (independent of Gröbner bases)."""
    from .linalg import rank

    ring = I.ring
    mons = monomials_of_degree(ring.nvars, d)
    index = {ring.encode(m): i for i, m in enumerate(mons)}
    rows = []
    for g in I.gens:
        e = g.degree()
        if e > d:
            continue
        for m in monomials_of_degree(ring.nvars, d - e):
            row = [0] * len(mons)
            for k, c in g.shift(m).terms.items():
                row[index[k]] = c
            rows.append(row)
    if not rows:
        return 0
    return rank(rows, ring.p)


def linear_section(I: Ideal, forms: Sequence[Polynomial]) -> Ideal:
    """I restricted to the linear subspace V(forms), as an ideal of the coordinate ring of that subspace.

    The forms are solved for pivot variables by row reduction and substituted
    into the generators of I; the result lives in the polynomial ring of the
    remaining (free) variables, so R/(I + forms) and the returned quotient are
    isomorphic graded rings.
    """
    import numpy as np

    from .linalg import rref

    ring = I.ring
    n = ring.nvars
    rows = []
    for f in forms:
        if f.is_zero():
            continue
        if f.degree() != 1 or not f.is_homogeneous():
            raise UsageError("linear_section needs linear forms")
        v = [0] * n
        for exps, c in f.items():
            v[exps.index(1)] = ring.field.to_int(c) % ring.p if ring.p else c
        rows.append(v)
    if not rows:
        return I
    R, piv = rref(np.array(rows, dtype=np.int64) if ring.p else rows, ring.p)
    free = [i for i in range(n) if i not in set(piv)]
    if not free:
        raise UsageError("linear section is empty (forms span all coordinates)")
    small = ring.with_variables([ring.variables[i] for i in free], [ring.weights[i] for i in free])
    images = [Polynomial.zero(small)] * n
    for k, i in enumerate(free):
        images[i] = Polynomial.variable(small, k)
    for r, c in enumerate(piv):
        terms = {}
        for k, i in enumerate(free):
            a = R[r][i]
            a = int(a) if ring.p else a
            if a:
                terms[small.var_key(k)] = -a
        images[c] = Polynomial(small, terms)
    return Ideal(small, [g.substitute(small, images) for g in I.gens])
