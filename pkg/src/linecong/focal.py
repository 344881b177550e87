"""Focal loci of congruences given on the affine chart u0 = 1, and their invariants.

Pipeline: the incidence variety Λ is cut out in k[u1..u5, y0..y4] by the four
incidence forms F_i = u_i·y0 − u_{i+1} − y_i and the chart equation h; the
ramification divisor adds the determinant of the bidiagonal matrix of
partial derivatives.  Eliminating u and closing up in P^5 gives the focal
threefold on the visible chart y5 = 1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .algebra.groebner import GBConfig
from .algebra.ideal import Ideal, eliminate, general_element, linear_section, saturate_by_element
from .algebra.linalg import rank
from .algebra.poly import Polynomial
from .algebra.ring import DEFAULT_CHARACTERISTIC, GenericityError, PolyRing, UsageError, make_ring
from .congruence import affine_chart_ring
from .grassmann import (
    SchubertCondition,
    fixture_ideal,
    gamma_chart_minors,
    p5_ring,
    schubert_forms,
)
from .homology import BettiTable, Resolution, free_resolution, h1_ideal_sheaf, minors_irrelevant

RETRY_CAP = 8


# ------------------------------------------------------------------ chart
@lru_cache(maxsize=None)
def incidence_ring(characteristic: int = DEFAULT_CHARACTERISTIC) -> PolyRing:
    return make_ring([f"u{i}" for i in range(1, 6)] + [f"y{i}" for i in range(5)], characteristic)


@dataclass
class IncidenceChart:
    """Incidence forms and chart equation on the chart u0 = 1, y5 = 1."""

    ring: PolyRing
    h: Polynomial
    incidence: list[Polynomial]

    @classmethod
    def from_equation(cls, h: Polynomial) -> "IncidenceChart":
        if h.is_zero():
            raise UsageError("chart equation is zero")
        ring = incidence_ring(h.ring.p)
        hh = h.change_ring(ring, [ring.index(v) for v in h.ring.variables])
        u = [ring(f"u{i}") for i in range(1, 6)]
        y = [ring(f"y{i}") for i in range(5)]
        F = [u[i] * y[0] - u[i + 1] - y[i + 1] for i in range(4)]
        return cls(ring, hh, F)

    def partials(self) -> list[Polynomial]:
        return [self.h.derivative(self.ring.index(f"u{i}")) for i in range(1, 6)]

    def jacobian(self) -> list[list[Polynomial]]:
        """Rows: F1..F4, h; columns: ∂/∂u1..∂/∂u5."""
        cols = [self.ring.index(f"u{i}") for i in range(1, 6)]
        return [[f.derivative(c) for c in cols] for f in self.incidence + [self.h]]


def determinant(M: list[list[Polynomial]]) -> Polynomial:
    """Determinant by Laplace expansion along the first column (small matrices)."""
    n = len(M)
    if n == 1:
        return M[0][0]
    ring = M[0][0].ring
    acc = Polynomial.zero(ring)
    for r in range(n):
        a = M[r][0]
        if not a:
            continue
        minor = [row[1:] for k, row in enumerate(M) if k != r]
        term = a * determinant(minor)
        acc = acc + term if r % 2 == 0 else acc - term
    return acc


def ramification_matrix(chart: IncidenceChart) -> list[list[Polynomial]]:
    """y0 on the diagonal, −1 below it, (h1..h5) as the last column."""
    ring = chart.ring
    y0 = ring("y0")
    z = Polynomial.zero(ring)
    hs = chart.partials()
    M = [[z] * 5 for _ in range(5)]
    for i in range(5):
        if i < 4:
            M[i][i] = y0
        if i > 0:
            M[i][i - 1] = Polynomial.constant(ring, -1)
        M[i][4] = hs[i]
    return M


def ramification_determinant(chart: IncidenceChart) -> Polynomial:
    return determinant(ramification_matrix(chart))


def ramification_closed_form(chart: IncidenceChart) -> Polynomial:
    """h1 + y0·h2 + y0²·h3 + y0³·h4 + y0⁴·h5."""
    y0 = chart.ring("y0")
    acc = Polynomial.zero(chart.ring)
    for k, hk in enumerate(chart.partials()):
        acc = acc + (y0 ** k) * hk
    return acc


# ------------------------------------------------------------ focal locus
@dataclass
class FocalLocus:
    ideal: Ideal  # in x0..x5
    degenerate: bool
    affine: Ideal | None = None


def _solve_incidence(chart: IncidenceChart, polys: list[Polynomial]) -> tuple[PolyRing, list[Polynomial]]:
    """Substitute u_{i+1} = u_i·y0 − y_i, leaving k[u1, y0..y4]."""
    ring = chart.ring
    small = make_ring(["u1"] + [f"y{i}" for i in range(5)], ring.p)
    u1 = small("u1")
    y = [small(f"y{i}") for i in range(5)]
    us = [u1]
    for i in range(4):
        us.append(us[-1] * y[0] - y[i + 1])
    images = us + y
    return small, [f.substitute(small, images) for f in polys]


def focal_locus(chart: IncidenceChart, config: GBConfig | None = None) -> FocalLocus:
    D = ramification_determinant(chart)
    small, (h, d) = _solve_incidence(chart, [chart.h, D])
    E = eliminate(Ideal(small, [h, d]), ["u1"], config)
    P5 = p5_ring(chart.ring.p)
    if E.is_unit():
        return FocalLocus(Ideal(P5, [Polynomial.one(P5)]), True, E)
    var_map = [P5.index("x" + v[1:]) for v in E.ring.variables]
    x5 = P5.index("x5")
    gens = [g.change_ring(P5, var_map).homogenize(x5) for g in E.gb()]
    X = saturate_by_element(Ideal(P5, gens), P5("x5"), config)
    return FocalLocus(X, X.is_unit(), E)


def chart_from_plucker(f: Polynomial, divide_u0: int = 0) -> IncidenceChart:
    from .congruence import chart_pullback

    return IncidenceChart.from_equation(chart_pullback(f, divide_u0))


# ------------------------------------------------------------- invariants
def random_linear_forms(ring: PolyRing, k: int, rng: random.Random) -> list[Polynomial]:
    p = ring.p
    return [Polynomial(ring, {ring.var_key(i): rng.randrange(1, p) for i in range(ring.nvars)})
            for _ in range(k)]


def general_linear_section(I: Ideal, k: int, seed, saturated: bool = False) -> Ideal:
    """I cut by k seeded general hyperplanes, in the ring of the section."""
    rng = random.Random(seed)
    J = linear_section(I, random_linear_forms(I.ring, k, rng))
    if saturated:
        J = saturate_by_element(J, random_linear_forms(J.ring, 1, rng)[0])
    return J


def sectional_genus(I: Ideal, seed) -> tuple[int, int]:
    """(degree, arithmetic genus) of a general curve section, read from d·t + 1 − π."""
    dim = I.dimension()
    if dim < 1:
        raise UsageError("sectional genus needs a positive-dimensional scheme")
    C = general_linear_section(I, dim - 1, seed)
    hp = C.hilbert_polynomial()
    if hp.degree != 1:
        raise GenericityError("curve section is not a curve")
    d, c0 = hp.coefficients[1], hp.coefficients[0]
    return int(d), int(1 - c0)


def jacobian_minor_ideal(I: Ideal, size: int) -> Ideal:
    """I plus every size×size minor of the Jacobian of its reduced Gröbner basis.

    Actual minors of sparse generators stay sparse, which keeps the
    subsequent Gröbner computation cheap compared with random compressions.
    """
    ring = I.ring
    gens = list(I.gb())
    J = [[g.derivative(c) for c in range(ring.nvars)] for g in gens]
    out = list(gens)
    for rows in combinations(range(len(gens)), size):
        for cols in combinations(range(ring.nvars), size):
            m = determinant([[J[r][c] for c in cols] for r in rows])
            if not m.is_zero():
                out.append(m)
    return Ideal(ring, out)


def singular_locus(I: Ideal, seed) -> Ideal:
    """Singular scheme of an equidimensional projective scheme, saturated.

    The minors have size equal to the codimension c: the Jacobian has rank c
    at smooth points of a generically reduced scheme and drops below c
    exactly on the singular set.
    """
    codim = I.ring.nvars - 1 - I.dimension()
    S = jacobian_minor_ideal(I, codim)
    rng = random.Random(f"{seed}:sat")
    return saturate_by_element(S, random_linear_forms(I.ring, 1, rng)[0])


def same_radical_as_prime(S: Ideal, P: Ideal, seed=0) -> bool:
    """V(S) = V(P) for a homogeneous prime P.

    S ⊆ P gives V(P) ⊆ V(S).  Conversely a component of V(S) outside V(P)
    survives saturation by a general element of P, so V(S) ⊆ V(P) iff
    S : g^∞ is irrelevant.
    """
    if not all(P.contains(g) for g in S.gens):
        return False
    g = general_element(P, f"{seed}:radical")
    return saturate_by_element(S, g).dimension() < 0


@dataclass
class FocalReport:
    ideal: Ideal
    hilbert_polynomial: str
    degree: int
    sectional_genus: int
    singular_locus_ideal: Ideal
    twisted_cubic_match: bool
    betti: BettiTable
    lcm_certificate: bool
    resolution: Resolution | None = field(default=None, repr=False)


def lcm_certificate(res: Resolution, seed: int = 0) -> bool:
    """Maximal minors of the next-to-last matrix cut out only the irrelevant ideal."""
    if res.length < 2:
        return True
    A = res.matrices[-2]
    k = min(A.shape) - (1 if A.shape[1] > 1 else 0)
    # the last map is injective of rank r; A has rank (cols of A − r)
    r_last = res.matrices[-1].shape[1]
    k = A.shape[1] - r_last
    return minors_irrelevant(A, k, seed)[0]


def focal_invariants(I_X: Ideal, seed: int = 0) -> FocalReport:
    if I_X.dimension() != 3:
        raise UsageError("focal_invariants needs a threefold in P^5")
    hp = I_X.hilbert_polynomial()
    _, genus = sectional_genus(I_X, f"{seed}:genus")
    sing = singular_locus(I_X, f"{seed}:sing")
    C = fixture_ideal("twisted_cubic_C", I_X.ring.p)
    match = same_radical_as_prime(sing, C, seed)
    res = free_resolution(I_X)
    return FocalReport(I_X, str(hp), I_X.degree(), genus, sing, match, res.betti,
                       lcm_certificate(res, seed), res)


# ------------------------------------------------------------- normality
@dataclass
class NormalityCertificate:
    dim_IX: dict[int, int]
    dim_IS: dict[int, int]
    h1_at_2: int
    verdict: str


def normality_certificate(I_X: Ideal, seed: int = 0, resolution: Resolution | None = None) -> NormalityCertificate:
    """Compare I_X with the ideal of a general hyperplane section in degrees 2 and 3.

    Restriction I_X(3) → I_S(3) has kernel I_X(2); it is onto exactly when
    dim I_S(3) = dim I_X(3) − dim I_X(2).  A failure makes 3 a non-lifting
    level, which rules out 2-normality.
    """
    S = general_linear_section(I_X, 1, f"{seed}:section", saturated=True)
    dx = {d: I_X.graded_dim(d) for d in (2, 3)}
    ds = {d: S.graded_dim(d) for d in (2, 3)}
    h1 = h1_ideal_sheaf(I_X, 2, resolution)
    lifts = ds[3] == dx[3] - dx[2]
    verdict = "2-normal" if (lifts and h1 == 0) else ("non-lifting-at-3" if not lifts else "not-2-normal")
    return NormalityCertificate(dx, ds, h1, verdict)


# ------------------------------------------------------------- univariate
def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def univariate_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    """Monic gcd of coefficient lists (ascending powers) over GF(p)."""
    a, b = _poly_trim([x % p for x in a]), _poly_trim([x % p for x in b])
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            if a[-1]:
                f = a[-1] * inv % p
                shift = len(a) - len(b)
                for i, c in enumerate(b):
                    a[shift + i] = (a[shift + i] - f * c) % p
            a.pop()
            _poly_trim(a)
        a, b = b, a
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def univariate_roots(a: list[int], p: int) -> list[int]:
    """All roots in GF(p) by vectorized evaluation."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(a):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.flatnonzero(acc == 0)]


def _solve_linear_in(h: Polynomial, var: int, point: dict[int, int]):
    """Value of variable ``var`` making h vanish when the others are fixed (h linear in it)."""
    p = h.ring.p
    c0 = c1 = 0
    for exps, c in h.items():
        if exps[var] > 1:
            raise UsageError("chart equation is not linear in the solved variable")
        val = c
        for i, e in enumerate(exps):
            if i != var and e:
                val = val * pow(point[i], e, p) % p
        if exps[var]:
            c1 = (c1 + val) % p
        else:
            c0 = (c0 + val) % p
    if c1 == 0:
        return None
    return (-c0 * pow(c1, -1, p)) % p


def random_chart_line(h: Polynomial, rng: random.Random) -> tuple[int, ...] | None:
    """A point (u1..u5) of the chart hypersurface h = 0, solving for u5."""
    p = h.ring.p
    pt = {i: rng.randrange(p) for i in range(4)}
    u5 = _solve_linear_in(h, 4, pt)
    if u5 is None:
        return None
    return tuple(pt[i] for i in range(4)) + (u5,)


def foci_polynomial(chart: IncidenceChart, u: tuple[int, ...]) -> list[int]:
    """Ramification determinant on the line with parameters u, as a polynomial in y0."""
    p = chart.ring.p
    D = ramification_closed_form(chart)
    iy0 = chart.ring.index("y0")
    out: dict[int, int] = {}
    for exps, c in D.items():
        val = c
        for i in range(5):
            if exps[i]:
                val = val * pow(u[i], exps[i], p) % p
        out[exps[iy0]] = (out.get(exps[iy0], 0) + val) % p
    top = max(out) if out else 0
    return _poly_trim([out.get(k, 0) for k in range(top + 1)])


def foci_on_line(chart: IncidenceChart, u: tuple[int, ...]) -> dict:
    p = chart.ring.p
    f = foci_polynomial(chart, u)
    df = [(k * c) % p for k, c in enumerate(f)][1:]
    g = univariate_gcd(f, df, p)
    return {"degree": len(f) - 1, "distinct": len(g) == 1, "coefficients": f}


def line_point(u: tuple[int, ...], y0: int, p: int) -> tuple[int, ...]:
    """Point (y0 : y1 : ... : y4 : 1) on the chart line with parameters u."""
    us = (1,) + tuple(u)
    ys = [y0] + [(us[i] * y0 - us[i + 1]) % p for i in range(1, 5)]
    return tuple(ys) + (1,)


def sample_focal_point(chart: IncidenceChart, rng: random.Random, cap: int = 50) -> tuple[int, ...]:
    p = chart.ring.p
    for _ in range(cap):
        u = random_chart_line(chart.h.change_ring(affine_chart_ring(p), list(range(5))), rng)
        if u is None:
            continue
        roots = univariate_roots(foci_polynomial(chart, u), p)
        if roots:
            return line_point(u, roots[rng.randrange(len(roots))], p)
    raise GenericityError(f"no rational focal point found after {cap} lines; try a larger field")


def pencil_at_point(I_B: Ideal, P: tuple[int, ...]) -> dict:
    """Dimension and degree of the lines of B through P (from the Hilbert polynomial)."""
    forms = schubert_forms(SchubertCondition.through_point(P), I_B.ring)
    J = linear_section(I_B, forms)
    H = J.hilbert()
    return {"dimension": H.projective_dimension, "degree": H.degree if H.projective_dimension >= 0 else 0}


def pencil_at_focal_point(I_B: Ideal, I_X: Ideal, chart: IncidenceChart, seed) -> dict:
    rng = random.Random(seed)
    P = sample_focal_point(chart, rng)
    on_X = all(g.evaluate(P) == 0 for g in I_X.gens)
    info = pencil_at_point(I_B, P)
    info.update(point=P, on_X=on_X,
                is_planar_pencil=on_X and info["dimension"] == 1 and info["degree"] == 1)
    return info


# -------------------------------------------------------------- Fano fourfold
def chart_point_of_B(h: Polynomial, rng: random.Random, cap: int = 50) -> tuple[int, ...]:
    """Plücker coordinates of a seeded line of the chart congruence h = 0."""
    p = h.ring.p
    for _ in range(cap):
        u = random_chart_line(h, rng)
        if u is not None:
            return tuple(c % p for c in gamma_chart_minors([1, *u]))
    raise GenericityError("could not sample a chart point")


def jacobian_rank_at(I: Ideal, point: tuple[int, ...]) -> int:
    ring = I.ring
    p = ring.p
    rows = []
    for g in I.gb():
        rows.append([g.derivative(c).evaluate(point) % p for c in range(ring.nvars)])
    return rank(np.array(rows, dtype=np.int64), p)


def fano_invariants(I_B: Ideal, h: Polynomial, seed, samples: int = 50) -> dict:
    degree, genus = sectional_genus(I_B, f"{seed}:curve")
    span_codim = I_B.graded_dim(1)
    codim = I_B.ring.nvars - 1 - I_B.dimension()
    rng = random.Random(f"{seed}:smooth")
    passes = 0
    for _ in range(samples):
        pt = chart_point_of_B(h, rng)
        if all(g.evaluate(pt) == 0 for g in I_B.gens) and jacobian_rank_at(I_B, pt) == codim:
            passes += 1
    return {"degree": I_B.degree(), "curve_degree": degree, "sectional_genus": genus,
            "span_codim": span_codim, "smooth_samples": passes, "samples": samples, "codim": codim}


# ------------------------------------------------------- special geometry
def surface_in_space_l(I_X: Ideal, seed=0) -> dict:
    """X ∩ L for the 3-space L = V(x0, x5): its Hilbert data, its equation, and
    whether the twisted cubic lies in the singular locus of that surface."""
    forms = fixture_ideal("space_L", I_X.ring.p).gens
    S = linear_section(I_X, forms)
    S = saturate_by_element(S, random_linear_forms(S.ring, 1, random.Random(f"{seed}:L"))[0])
    C = linear_section(fixture_ideal("twisted_cubic_C", I_X.ring.p), forms)
    gens = list(S.gb())
    principal = len(gens) == 1
    F = gens[0] if principal else None
    sing_contains_c = principal and all(C.contains(F.derivative(i)) for i in range(S.ring.nvars))
    return {
        "hilbert_polynomial": str(S.hilbert_polynomial()),
        "dimension": S.dimension(),
        "degree": S.degree(),
        "principal": principal,
        "equation": F,
        "singular_locus_contains_C": bool(sing_contains_c),
    }


def covered_by_spaces(I: Ideal, spaces: list[Ideal], seed=0) -> bool:
    """V(I) ⊆ ∪ V(spaces): saturating by a general element of each space leaves nothing."""
    J = I
    for k, P in enumerate(spaces):
        J = saturate_by_element(J, general_element(P, f"{seed}:{k}"))
    return J.dimension() < 0


def visible_spaces(spaces: list[Ideal]) -> list[Ideal]:
    """Spaces not contained in the hyperplane x5 = 0, i.e. those seen on the chart."""
    out = []
    for P in spaces:
        x5 = Polynomial.variable(P.ring, P.ring.nvars - 1)
        if not P.contains(x5):
            out.append(P)
    return out


# --------------------------------------------------------- torus symmetry
def torus_weights(lam: int, p: int) -> tuple[int, ...]:
    """diag(1, λ, λ², λ³, λ⁴, λ⁻¹) on P^5 maps chart lines to chart lines with u_i ↦ λ^i u_i."""
    if lam % p == 0:
        raise UsageError("torus parameter must be a unit")
    return tuple(pow(lam, i, p) for i in range(5)) + (pow(lam, -1, p),)


def torus_chart_equation(h: Polynomial, lam: int) -> Polynomial:
    """Chart equation of T(B) when h is the chart equation of B: h(λ^{-1}u1, ..., λ^{-5}u5)."""
    ring = h.ring
    p = ring.p
    images = [v.scale(pow(lam, -(i + 1), p)) for i, v in enumerate(ring.gens())]
    return h.substitute(ring, images)


def torus_image(I: Ideal, lam: int) -> Ideal:
    """Ideal of T(V(I)) in x0..x5: generators composed with T^{-1}."""
    ring = I.ring
    w = torus_weights(lam, ring.p)
    images = [v.scale(pow(t, -1, ring.p)) for v, t in zip(ring.gens(), w)]
    return Ideal(ring, [g.substitute(ring, images) for g in I.gens])
