"""Sparse polynomials over a prime field (or the rationals)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ring import PolyRing, UsageError


def _reduce_coeffs(terms: dict, p: int) -> dict:
    if p:
        return {k: c % p for k, c in terms.items() if c % p}
    return {k: Fraction(c) for k, c in terms.items() if c}


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps packed monomial keys to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[int, object] | None = None, *, _trusted=False):
        self.ring = ring
        if terms is None:
            self.terms = {}
        elif _trusted:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = _reduce_coeffs(dict(terms), ring.p)
        self._hash = None

    # ------------------------------------------------------------ construction
    @classmethod
    def zero(cls, ring: PolyRing) -> "Polynomial":
        return cls(ring, {}, _trusted=True)

    @classmethod
    def constant(cls, ring: PolyRing, c) -> "Polynomial":
        c = ring.field(c)
        return cls(ring, {ring.one_key: c} if c else {}, _trusted=True)

    @classmethod
    def one(cls, ring: PolyRing) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: PolyRing, i: int) -> "Polynomial":
        return cls(ring, {ring.var_key(i): ring.field(1)}, _trusted=True)

    @classmethod
    def monomial(cls, ring: PolyRing, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(ring, {ring.encode(exps): c})

    @classmethod
    def from_exponents(cls, ring: PolyRing, data: Mapping[tuple, object] | Iterable) -> "Polynomial":
        items = data.items() if isinstance(data, Mapping) else data
        terms: dict[int, object] = {}
        for exps, c in items:
            k = ring.encode(exps)
            terms[k] = terms.get(k, 0) + ring.field(c)
        return cls(ring, terms)

    # ----------------------------------------------------------------- access
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_key(self) -> int:
        if not self.terms:
            raise UsageError("zero polynomial has no leading term")
        return max(self.terms)

    @property
    def lead_coef(self):
        return self.terms[self.lead_key]

    @property
    def lead_exponents(self) -> tuple[int, ...]:
        return self.ring.decode(self.lead_key)

    def items(self):
        """(exponent tuple, coefficient) pairs in decreasing monomial order."""
        dec = self.ring.decode
        for k in sorted(self.terms, reverse=True):
            yield dec(k), self.terms[k]

    def monomial_exponents(self) -> list[tuple[int, ...]]:
        return [e for e, _ in self.items()]

    def degree(self) -> int:
        """Weighted total degree (-1 for zero)."""
        if not self.terms:
            return -1
        deg = self.ring.degree_of
        return max(deg(k) for k in self.terms)

    def degree_in(self, i: int) -> int:
        if not self.terms:
            return -1
        dec = self.ring.decode
        return max(dec(k)[i] for k in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.degree_of
        ds = {deg(k) for k in self.terms}
        return len(ds) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_key in self.terms)

    def constant_coefficient(self):
        return self.terms.get(self.ring.one_key, self.ring.field(0))

    def variables_used(self) -> set[int]:
        out: set[int] = set()
        dec = self.ring.decode
        for k in self.terms:
            out.update(i for i, e in enumerate(dec(k)) if e)
        return out

    # ------------------------------------------------------------- arithmetic
    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise UsageError("ring mismatch")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = t.get(k)
            if v is None:
                t[k] = c
            else:
                v = (v + c) % p if p else v + c
                if v:
                    t[k] = v
                else:
                    del t[k]
        return Polynomial(self.ring, t, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p:
            return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()}, _trusted=True)
        return Polynomial(self.ring, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return Polynomial.zero(self.ring)
        p = self.ring.p
        if p:
            return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()}, _trusted=True)
        return Polynomial(self.ring, {k: v * c for k, v in self.terms.items()}, _trusted=True)

    def shift(self, exps: Sequence[int], c=1) -> "Polynomial":
        """Multiply by the monomial ``c * x^exps``."""
        r = self.ring
        m = r.encode(exps) - r.one_key
        c = r.field(c)
        p = r.p
        if p:
            return Polynomial(r, {k + m: v * c % p for k, v in self.terms.items()}, _trusted=True)
        return Polynomial(r, {k + m: v * c for k, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = self.ring
        one = r.one_key
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, object] = {}
        get = out.get
        for kb, cb in b.items():
            s = kb - one
            for ka, ca in a.items():
                k = ka + s
                out[k] = get(k, 0) + ca * cb
        return Polynomial(r, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise UsageError("negative power")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lead_coef))

    # ---------------------------------------------------------- comparisons
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    # ------------------------------------------------------------- calculus
    def derivative(self, i: int) -> "Polynomial":
        r = self.ring
        terms: dict[int, object] = {}
        for exps, c in self.items():
            e = exps[i]
            if e:
                ne = list(exps)
                ne[i] -= 1
                terms[r.encode(ne)] = c * e
        return Polynomial(r, terms)

    def evaluate(self, point: Sequence) -> object:
        """Value at a point of the affine space (coordinates in the field)."""
        r = self.ring
        f = r.field
        pt = [f(x) for x in point]
        p = r.p
        total = f(0)
        for exps, c in self.items():
            v = c
            for x, e in zip(pt, exps):
                if e:
                    v = v * (pow(x, e, p) if p else x**e)
            total = total + v
        return total % p if p else total

    def substitute(self, target: PolyRing, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to ``images[i]`` (polynomials of ``target``)."""
        if len(images) != self.ring.nvars:
            raise UsageError("need one image per variable")
        cache: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                if e == 1:
                    cache[key] = images[i]
                else:
                    h = power(i, e // 2)
                    sq = h * h
                    cache[key] = sq * images[i] if e % 2 else sq
            return cache[key]

        acc: dict[int, object] = {}
        for exps, c in self.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            for k, v in term.terms.items():
                acc[k] = acc.get(k, 0) + v
        return Polynomial(target, acc)

    def change_ring(self, target: PolyRing, var_map: Sequence[int] | None = None) -> "Polynomial":
        """Re-encode into ``target``; ``var_map[i]`` is the target index of variable i."""
        if var_map is None:
            var_map = [target.index(v) for v in self.ring.variables]
        n = target.nvars
        terms = {}
        for exps, c in self.items():
            ne = [0] * n
            for i, e in enumerate(exps):
                if e:
                    if var_map[i] is None or var_map[i] < 0:
                        raise UsageError(f"variable {self.ring.variables[i]} has no image")
                    ne[var_map[i]] += e
            terms[target.encode(ne)] = target.field(c)
        return Polynomial(target, terms)

    def homogenize(self, i: int) -> "Polynomial":
        """Homogenize with respect to variable ``i`` (weight of i must be 1)."""
        r = self.ring
        if not self.terms:
            return self
        d = self.degree()
        terms = {}
        w = r.weights
        for exps, c in self.items():
            ne = list(exps)
            ne[i] += d - sum(a * b for a, b in zip(exps, w))
            terms[r.encode(ne)] = c
        return Polynomial(r, terms)

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        r = self.ring
        out: dict[int, dict] = {}
        for k, c in self.terms.items():
            out.setdefault(r.degree_of(k), {})[k] = c
        return {d: Polynomial(r, t, _trusted=True) for d, t in out.items()}

    def coefficients_in(self, i: int) -> dict[int, "Polynomial"]:
        """Coefficients as a polynomial in variable ``i``: power -> coefficient (x_i removed)."""
        r = self.ring
        out: dict[int, dict] = {}
        for exps, c in self.items():
            e = exps[i]
            ne = list(exps)
            ne[i] = 0
            out.setdefault(e, {})[r.encode(ne)] = c
        return {e: Polynomial(r, t) for e, t in out.items()}

    # ---------------------------------------------------------------- output
    def __repr__(self):
        from ..textio import format_polynomial

        return format_polynomial(self)

    __str__ = __repr__


def poly(ring: PolyRing, text: str) -> Polynomial:
    """Parse a polynomial written in the repository's text grammar."""
    from ..textio import parse_polynomial

    return parse_polynomial(text, ring)
