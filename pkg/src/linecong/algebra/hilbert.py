"""Hilbert series and Hilbert polynomials of monomial ideals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

Monomial = tuple[int, ...]


# ------------------------------------------------------------ integer polys in t
def _padd(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _pshift(a: list[int], d: int, sign: int = 1) -> list[int]:
    return [0] * d + [sign * c for c in a]


def _minimalize(gens: list[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=sum)
    out: list[Monomial] = []
    for m in gens:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _colon(gens: list[Monomial], pivot: Monomial) -> list[Monomial]:
    return _minimalize([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])


def hilbert_numerator(gens: Sequence[Monomial], nvars: int) -> list[int]:
    """Numerator N(t) with HS(R/M) = N(t) / (1-t)^nvars, standard grading."""
    return _numerator(_minimalize([tuple(g) for g in gens]), nvars)


def _numerator(gens: list[Monomial], n: int) -> list[int]:
    if not gens:
        return [1]
    if any(sum(g) == 0 for g in gens):
        return [0]
    # base case: pairwise coprime generators -> product of (1 - t^deg)
    support_seen = 0
    coprime = True
    for g in gens:
        s = 0
        for i, e in enumerate(g):
            if e:
                s |= 1 << i
        if s & support_seen:
            coprime = False
            break
        support_seen |= s
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _padd(out, _pshift(out, d, -1))
        return out
    # pivot on the variable occurring in most generators
    counts = [0] * n
    for g in gens:
        for i, e in enumerate(g):
            if e:
                counts[i] += 1
    var = max(range(n), key=lambda i: counts[i])
    # smallest exponent keeps x^e outside M (var occurs in >= 2 minimal generators)
    e = min(g[var] for g in gens if g[var])
    pivot = tuple(e if i == var else 0 for i in range(n))
    with_pivot = _minimalize(gens + [pivot])
    quotient = _colon(gens, pivot)
    return _padd(_numerator(with_pivot, n), _pshift(_numerator(quotient, n), e))


# ------------------------------------------------------------ Hilbert polynomial
@dataclass(frozen=True)
class HilbertPolynomial:
    """Univariate polynomial in t with rational coefficients (ascending powers)."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def from_coefficients(cls, coeffs: Sequence) -> "HilbertPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    def __call__(self, t) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coefficients):
            total = total * t + c
        return total

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_ints(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coefficients]

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i in reversed(range(len(self.coefficients))):
            c = self.coefficients[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s = "".join(f"{sg}{b}" for sg, b in parts)
        return s[1:] if s.startswith("+") else s


def _binomial_poly(shift: int, k: int) -> list[Fraction]:
    """Coefficients of binom(t + shift, k) as a polynomial in t."""
    coeffs = [Fraction(1)]
    for j in range(k):
        # multiply by (t + shift - j) / (j + 1)
        a = Fraction(shift - j, j + 1)
        b = Fraction(1, j + 1)
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] += c * a
            new[i + 1] += c * b
        coeffs = new
    return coeffs


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple[int, ...]  # over (1-t)^nvars
    nvars: int

    @property
    def reduced(self) -> tuple[list[int], int]:
        """(Q, D) with HS = Q(t)/(1-t)^D, Q(1) != 0 (D = Krull dimension)."""
        q = list(self.numerator)
        D = self.nvars
        if q == [0]:
            return [0], 0
        while D > 0 and sum(q) == 0:
            # divide by (1 - t)
            out = []
            acc = 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = out or [0]
            D -= 1
        return q, D

    @property
    def krull_dimension(self) -> int:
        q, D = self.reduced
        return D if q != [0] else -1

    @property
    def projective_dimension(self) -> int:
        """Dimension of the projective zero set (-1 if empty)."""
        return self.krull_dimension - 1 if self.krull_dimension >= 0 else -1

    @property
    def degree(self) -> int:
        q, D = self.reduced
        return sum(q)

    def hilbert_function(self, d: int) -> int:
        """dim_k (R/I)_d."""
        n = self.nvars
        total = 0
        for i, c in enumerate(self.numerator):
            if c and d - i >= 0:
                total += c * comb(d - i + n - 1, n - 1)
        return total

    def hilbert_polynomial(self) -> HilbertPolynomial:
        q, D = self.reduced
        if D == 0 or q == [0]:
            return HilbertPolynomial(())
        acc = [Fraction(0)] * D
        for i, c in enumerate(q):
            if c:
                for j, b in enumerate(_binomial_poly(D - 1 - i, D - 1)):
                    acc[j] += c * b
        return HilbertPolynomial.from_coefficients(acc)


def hilbert_data(lead_exponents: Sequence[Monomial], nvars: int) -> HilbertData:
    return HilbertData(tuple(hilbert_numerator(lead_exponents, nvars)), nvars)
