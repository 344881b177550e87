"""Polynomial rings, coefficient fields and monomial orders.

Monomials are packed into a single Python integer whose natural integer
order *is* the monomial order.  Every field of the packed word is an affine
function of the exponent vector, so monomial multiplication is an integer
addition (``a + b - ring.one_key``) and divisibility is one masked
subtraction.  The encoding is specific to a ring's order: changing the order
means building another ring and re-encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

DEFAULT_CHARACTERISTIC = 32003

_W = 16  # bits per packed field
_GUARD = 1 << (_W - 1)
_MAXE = _GUARD - 1


class UsageError(ValueError):
    """Caller passed arguments outside an operation's contract."""


class GenericityError(RuntimeError):
    """Seeded random choices kept landing in a special position."""


class ResourceError(RuntimeError):
    """A configured resource cap (degree, pairs, coefficient size) was hit."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class CoefficientField:
    """Prime field GF(p), or the rationals when ``characteristic == 0``."""

    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and (p >= 2**31 or not _is_prime(p) or p == 2):
            raise UsageError(f"characteristic must be 0 or an odd prime < 2^31, got {p}")

    def __call__(self, c) -> int | Fraction:
        p = self.characteristic
        if p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, p) % p
            return int(c) % p
        return Fraction(c)

    def inv(self, c):
        p = self.characteristic
        if p:
            return pow(c, -1, p)
        return 1 / Fraction(c)

    def to_int(self, c) -> int:
        """Symmetric integer representative (for printing)."""
        p = self.characteristic
        if p:
            return c - p if c > p // 2 else c
        return c


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"  # grevlex | lex | elim
    block: int = 0  # size of the eliminated front block for ``elim``

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "elim"):
            raise UsageError(f"unknown monomial order {self.kind!r}")
        if self.kind == "elim" and self.block < 1:
            raise UsageError("block elimination needs a positive front block size")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls("grevlex")

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls("lex")

    @classmethod
    def elimination(cls, block: int) -> "MonomialOrder":
        return cls("elim", block)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class PolyRing:
    variables: tuple[str, ...]
    weights: tuple[int, ...] = ()
    order: MonomialOrder = GREVLEX
    field: CoefficientField = field(default_factory=CoefficientField)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.weights:
            object.__setattr__(self, "weights", (1,) * len(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(set(self.variables)) != len(self.variables):
            raise UsageError("variable names must be unique")
        if len(self.weights) != len(self.variables):
            raise UsageError("one weight per variable")
        if any(w < 1 for w in self.weights):
            raise UsageError("weights must be >= 1")
        if self.order.kind == "elim" and self.order.block >= len(self.variables):
            raise UsageError("elimination block must leave at least one variable")

    # ------------------------------------------------------------------ layout
    @cached_property
    def _layout(self):
        """Fields from least to most significant: ('var', i) or ('deg', idx)."""
        n = len(self.variables)
        kind = self.order.kind
        if kind == "grevlex":
            return [("var", i) for i in range(n)] + [("deg", tuple(range(n)))]
        if kind == "lex":
            return [("var", i) for i in reversed(range(n))]
        k = self.order.block
        return (
            [("var", i) for i in range(k, n)]
            + [("deg", tuple(range(k, n)))]
            + [("var", i) for i in range(k)]
            + [("deg", tuple(range(k)))]
        )

    @cached_property
    def complemented(self) -> bool:
        return self.order.kind != "lex"

    @cached_property
    def _var_shift(self) -> tuple[int, ...]:
        shifts = [0] * len(self.variables)
        for pos, (kind, data) in enumerate(self._layout):
            if kind == "var":
                shifts[data] = pos * _W
        return tuple(shifts)

    @cached_property
    def _deg_fields(self):
        return [(pos * _W, data) for pos, (kind, data) in enumerate(self._layout) if kind == "deg"]

    @cached_property
    def one_key(self) -> int:
        """Key of the monomial 1."""
        if not self.complemented:
            return 0
        return sum(_MAXE << s for s in self._var_shift)

    @cached_property
    def guard_all(self) -> int:
        return sum(_GUARD << (pos * _W) for pos in range(len(self._layout)))

    @cached_property
    def guard_vars(self) -> int:
        return sum(_GUARD << s for s in self._var_shift)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def p(self) -> int:
        return self.field.characteristic

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r} for ring {self.variables}") from None

    # ---------------------------------------------------------------- encoding
    def encode(self, exps: Sequence[int]) -> int:
        key = 0
        comp = self.complemented
        for e, s in zip(exps, self._var_shift):
            if e < 0 or e > _MAXE:
                raise ResourceError(f"exponent {e} outside packed range")
            key |= ((_MAXE - e) if comp else e) << s
        w = self.weights
        for s, idx in self._deg_fields:
            d = sum(exps[i] * w[i] for i in idx)
            if d > _MAXE:
                raise ResourceError(f"degree {d} outside packed range")
            key |= d << s
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        mask = (1 << _W) - 1
        if self.complemented:
            return tuple(_MAXE - ((key >> s) & mask) for s in self._var_shift)
        return tuple((key >> s) & mask for s in self._var_shift)

    def divides(self, a: int, b: int) -> bool:
        """True when monomial ``a`` divides monomial ``b``."""
        hv = self.guard_vars
        if self.complemented:
            return ((a | self.guard_all) - b) & hv == hv
        return ((b | self.guard_all) - a) & hv == hv

    def degree_of(self, key: int) -> int:
        e = self.decode(key)
        return sum(x * w for x, w in zip(e, self.weights))

    def var_key(self, i: int, e: int = 1) -> int:
        exps = [0] * self.nvars
        exps[i] = e
        return self.encode(exps)

    # ------------------------------------------------------------ derivation
    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.variables, self.weights, order, self.field)

    def with_field(self, characteristic: int) -> "PolyRing":
        return PolyRing(self.variables, self.weights, self.order, CoefficientField(characteristic))

    def with_variables(
        self,
        variables: Iterable[str],
        weights: Iterable[int] | None = None,
        order: MonomialOrder | None = None,
    ) -> "PolyRing":
        variables = tuple(variables)
        return PolyRing(
            variables,
            tuple(weights) if weights is not None else (1,) * len(variables),
            order or GREVLEX,
            self.field,
        )

    def gens(self):
        from .poly import Polynomial

        return [Polynomial.variable(self, i) for i in range(self.nvars)]

    def __call__(self, name: str):
        from .poly import Polynomial

        return Polynomial.variable(self, self.index(name))

    def __repr__(self):
        return f"PolyRing({','.join(self.variables)}; {self.order.kind}; char {self.p})"


def make_ring(
    names: str | Iterable[str],
    characteristic: int = DEFAULT_CHARACTERISTIC,
    order: MonomialOrder = GREVLEX,
    weights: Iterable[int] | None = None,
) -> PolyRing:
    if isinstance(names, str):
        names = names.replace(",", " ").split()
    names = tuple(names)
    return PolyRing(
        names,
        tuple(weights) if weights is not None else (1,) * len(names),
        order,
        CoefficientField(characteristic),
    )
