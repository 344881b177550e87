"""Plücker coordinates on G(1,5), Pfaffians, Schubert conditions and fixture loci."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Sequence

import numpy as np

from .algebra.ideal import Ideal
from .algebra.linalg import rank
from .algebra.poly import Polynomial
from .algebra.ring import DEFAULT_CHARACTERISTIC, PolyRing, UsageError, make_ring
from .textio import parse_polynomials

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(6), 2))
PAIR_INDEX = {pq: k for k, pq in enumerate(PAIRS)}
PLUCKER_NAMES = tuple(f"p{i}{j}" for i, j in PAIRS)

FIXTURE_NAMES = (
    "gamma_dual", "g1L", "H_L", "space_L", "twisted_cubic_C", "ex1_H", "ex2_H",
    "ex2_L0", "ex2_L1", "ex2_L2", "ex2_L3", "ex2_A", "ex3_A0",
)


@lru_cache(maxsize=None)
def plucker_ring(characteristic: int = DEFAULT_CHARACTERISTIC) -> PolyRing:
    return make_ring(PLUCKER_NAMES, characteristic)


@lru_cache(maxsize=None)
def p5_ring(characteristic: int = DEFAULT_CHARACTERISTIC) -> PolyRing:
    return make_ring([f"x{i}" for i in range(6)], characteristic)


def plucker_var(ring: PolyRing, i: int, j: int) -> Polynomial:
    """p_ij with the antisymmetry sign applied (p_ii = 0)."""
    if i == j:
        return Polynomial.zero(ring)
    if i < j:
        return ring.gens()[PAIR_INDEX[(i, j)]]
    return -ring.gens()[PAIR_INDEX[(j, i)]]


def generic_skew_matrix(ring: PolyRing) -> list[list[Polynomial]]:
    return [[plucker_var(ring, i, j) for j in range(6)] for i in range(6)]


# ------------------------------------------------------------------ Pfaffians
def pfaffian(M: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Pfaffian of a skew-symmetric matrix, expanded along the first row."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise UsageError("pfaffian needs a square matrix")
    if n % 2:
        raise UsageError("pfaffian needs an even-sized matrix")
    if n == 0:
        raise UsageError("empty matrix")
    ring = M[0][0].ring
    for i in range(n):
        if M[i][i]:
            raise UsageError("matrix is not skew-symmetric (nonzero diagonal)")
        for j in range(i + 1, n):
            if M[i][j] + M[j][i]:
                raise UsageError(f"matrix is not skew-symmetric at ({i},{j})")
    return _pf(M, tuple(range(n)), ring)


def _pf(M, idx: tuple[int, ...], ring: PolyRing) -> Polynomial:
    if not idx:
        return Polynomial.one(ring)
    first = idx[0]
    acc = Polynomial.zero(ring)
    for pos in range(1, len(idx)):
        a = M[first][idx[pos]]
        if not a:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        term = a * _pf(M, rest, ring)
        acc = acc + term if pos % 2 == 1 else acc - term
    return acc


def grassmannian_ideal(characteristic: int = DEFAULT_CHARACTERISTIC) -> Ideal:
    """The 15 Plücker quadrics, one 4×4 sub-Pfaffian per 4-subset of {0..5}."""
    ring = plucker_ring(characteristic)
    P = generic_skew_matrix(ring)
    gens = []
    for sub in combinations(range(6), 4):
        gens.append(_pf(P, sub, ring))
    return Ideal(ring, gens)


def pi_t_matrix(ring: PolyRing) -> list[list[Polynomial]]:
    """The plane of constant-rank-4 skew matrices, in a ring with variables a, b, c."""
    a, b, c = ring("a"), ring("b"), ring("c")
    z = Polynomial.zero(ring)
    M = [[z] * 6 for _ in range(6)]
    for (i, j), v in {(0, 1): a, (0, 2): b, (0, 3): c, (2, 5): a, (3, 5): b, (4, 5): c}.items():
        M[i][j] = v
        M[j][i] = -v
    return M


# -------------------------------------------------------------- line objects
@dataclass(frozen=True)
class PluckerLine:
    """Plücker coordinates (p01, ..., p45) of a line, as field elements."""

    coords: tuple[int, ...]
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if len(self.coords) != 15:
            raise UsageError("a Plücker line has 15 coordinates")
        if not any(self.coords):
            raise UsageError("all Plücker coordinates are zero")

    @classmethod
    def span(cls, a: Sequence[int], b: Sequence[int], characteristic: int = DEFAULT_CHARACTERISTIC):
        p = characteristic
        coords = tuple((a[i] * b[j] - a[j] * b[i]) % p for i, j in PAIRS)
        return cls(coords, p)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self.coords[PAIR_INDEX[(i, j)]]
        return (-self.coords[PAIR_INDEX[(j, i)]]) % self.characteristic

    def satisfies(self, I: Ideal) -> bool:
        return all(g.evaluate(self.coords) == 0 for g in I.gens)


def gamma_chart_matrix(u: Sequence):
    """Rows of the 2×6 matrix whose minors parametrize the lines of Γ."""
    u0, u1, u2, u3, u4, u5 = u
    return [[u0, u1, u2, u3, u4, 0 * u0], [0 * u0, -u2, -u3, -u4, -u5, u0]]


def gamma_chart_minors(u: Sequence) -> list:
    """The 15 minors p_ij = r0_i r1_j − r0_j r1_i in the fixed index order.

    Works for field scalars and for Polynomials alike.
    """
    r0, r1 = gamma_chart_matrix(u)
    return [r0[i] * r1[j] - r0[j] * r1[i] for i, j in PAIRS]


def gamma_chart(u: Sequence[int], characteristic: int = DEFAULT_CHARACTERISTIC) -> PluckerLine:
    if not any(x % characteristic for x in u):
        raise UsageError("chart parameters are all zero")
    return PluckerLine(tuple(c % characteristic for c in gamma_chart_minors(list(u))), characteristic)


@lru_cache(maxsize=None)
def chart_ring(characteristic: int = DEFAULT_CHARACTERISTIC) -> PolyRing:
    return make_ring([f"u{i}" for i in range(6)], characteristic)


def pullback(f: Polynomial, target: PolyRing | None = None) -> Polynomial:
    """f ∘ gamma_chart as a polynomial in u0..u5."""
    target = target or chart_ring(f.ring.p)
    return f.substitute(target, gamma_chart_minors(target.gens()))


# ---------------------------------------------------------- Schubert sections
@dataclass(frozen=True)
class SchubertCondition:
    kind: str  # through_point | in_hyperplane | meets_line | in_3space
    data: tuple

    def __post_init__(self):
        if self.kind not in ("through_point", "in_hyperplane", "meets_line", "in_3space"):
            raise UsageError(f"unknown Schubert condition {self.kind!r}")

    @classmethod
    def through_point(cls, a):
        return cls("through_point", (tuple(a),))

    @classmethod
    def in_hyperplane(cls, h):
        return cls("in_hyperplane", (tuple(h),))

    @classmethod
    def meets_line(cls, q: PluckerLine):
        return cls("meets_line", (q,))

    @classmethod
    def in_3space(cls, h1, h2):
        return cls("in_3space", (tuple(h1), tuple(h2)))


def _nonzero(v, what: str, p: int):
    if not any(x % p for x in v):
        raise UsageError(f"degenerate flag: zero {what}")


def schubert_forms(cond: SchubertCondition, ring: PolyRing) -> list[Polynomial]:
    p = ring.p
    P = lambda i, j: plucker_var(ring, i, j)  # noqa: E731
    zero = Polynomial.zero(ring)
    out: list[Polynomial] = []
    if cond.kind == "through_point":
        (a,) = cond.data
        _nonzero(a, "point", p)
        for i, j, k in combinations(range(6), 3):
            out.append(P(j, k).scale(a[i]) - P(i, k).scale(a[j]) + P(i, j).scale(a[k]))
    elif cond.kind in ("in_hyperplane", "in_3space"):
        for h in cond.data:
            _nonzero(h, "covector", p)
            for i in range(6):
                f = zero
                for j in range(6):
                    if h[j] % p:
                        f = f + P(i, j).scale(h[j])
                out.append(f)
    else:
        (q,) = cond.data
        for i, j, k, l in combinations(range(6), 4):
            f = (P(i, j).scale(q[k, l]) - P(i, k).scale(q[j, l]) + P(i, l).scale(q[j, k])
                 + P(j, k).scale(q[i, l]) - P(j, l).scale(q[i, k]) + P(k, l).scale(q[i, j]))
            out.append(f)
    return [f for f in out if f]


def schubert_section(cond: SchubertCondition, characteristic: int = DEFAULT_CHARACTERISTIC) -> Ideal:
    ring = plucker_ring(characteristic)
    return Ideal(ring, schubert_forms(cond, ring))


# ------------------------------------------------------------- lines via a point
def lines_through_point_matrix(a: Sequence[int]) -> list[list[int]]:
    a0, a1, a2, a3, a4, a5 = a
    return [
        [a1, -a0, a5, 0, 0, -a2],
        [a2, 0, -a0, a5, 0, -a3],
        [a3, 0, 0, -a0, a5, -a4],
    ]


def lines_through_point(a: Sequence[int], characteristic: int = DEFAULT_CHARACTERISTIC) -> dict:
    """Coefficient matrix of the linear span of the Γ-lines through a, and its rank."""
    p = characteristic
    _nonzero(a, "point", p)
    A = lines_through_point_matrix([x % p for x in a])
    return {"matrix": [[x % p for x in row] for row in A], "rank": rank(np.array(A, dtype=np.int64), p)}


# ---------------------------------------------------------------- fixtures
def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise UsageError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return resources.files("linecong").joinpath(f"fixtures/{name}.txt").read_text(encoding="utf-8")


def fixture_ideal(name: str, characteristic: int = DEFAULT_CHARACTERISTIC) -> Ideal:
    text = fixture_text(name)
    ring = p5_ring(characteristic) if "#ring: P5" in text else plucker_ring(characteristic)
    return parse_polynomials(text, ring)


def gamma_ideal(characteristic: int = DEFAULT_CHARACTERISTIC) -> Ideal:
    """I(Γ): the Grassmannian plus the three forms of the dual plane."""
    return grassmannian_ideal(characteristic) + fixture_ideal("gamma_dual", characteristic)


def g1l_ideal(characteristic: int = DEFAULT_CHARACTERISTIC) -> Ideal:
    """I(G(1,L)): Grassmannian plus the nine coordinates of the span."""
    return grassmannian_ideal(characteristic) + fixture_ideal("g1L", characteristic)


def twisted_cubic_point(s: int, characteristic: int = DEFAULT_CHARACTERISTIC) -> tuple[int, ...]:
    p = characteristic
    return (0, 1, s % p, s * s % p, pow(s, 3, p), 0)


# ----------------------------------------------------------- random helpers
def random_vector(rng: random.Random, p: int, n: int = 6) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randrange(p) for _ in range(n))
        if any(v):
            return v


def random_line_in_hyperplane(h: Sequence[int], rng: random.Random, p: int) -> PluckerLine:
    """Span of two random points of V(h)."""
    piv = next(i for i in range(6) if h[i] % p)
    inv = pow(h[piv], -1, p)

    def point():
        v = list(random_vector(rng, p))
        v[piv] = 0
        v[piv] = (-sum(h[i] * v[i] for i in range(6)) * inv) % p
        return v

    while True:
        try:
            return PluckerLine.span(point(), point(), p)
        except UsageError:
            continue


# ----------------------------------------------------------- linear spaces
def linear_form_matrix(forms: Sequence[Polynomial]) -> np.ndarray:
    """Coefficient rows of linear forms over the variables of their ring."""
    if not forms:
        raise UsageError("no linear forms given")
    ring = forms[0].ring
    rows = []
    for f in forms:
        if not f.is_zero() and (f.degree() != 1 or not f.is_homogeneous()):
            raise UsageError(f"not a linear form: {f}")
        rows.append([int(f.terms.get(ring.var_key(i), 0)) for i in range(ring.nvars)])
    return np.array(rows, dtype=np.int64) % ring.p


def linear_space_dimension(forms: Sequence[Polynomial]) -> int:
    """Projective dimension of the zero set of linear forms (−1 when empty)."""
    ring = forms[0].ring
    return ring.nvars - 1 - rank(linear_form_matrix(forms), ring.p)


def linear_space_contained(inner: Sequence[Polynomial], outer: Sequence[Polynomial]) -> bool:
    """V(inner) ⊆ V(outer), i.e. every outer form is a combination of inner forms."""
    p = inner[0].ring.p
    A = linear_form_matrix(inner)
    return rank(np.vstack([A, linear_form_matrix(outer)]), p) == rank(A, p)
