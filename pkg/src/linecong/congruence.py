"""Congruences of lines inside Γ = G(1,5) ∩ (dual plane), and their multidegrees.

All Plücker ideals built here contain the three linear forms of the dual
plane, so the heavy algebra runs in the 12-variable coordinate ring of their
common zero set and is lifted back at the end.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .algebra.groebner import GBConfig
from .algebra.ideal import Ideal, general_element, linear_section, saturate_by_element
from .algebra.poly import Polynomial
from .algebra.ring import DEFAULT_CHARACTERISTIC, GenericityError, PolyRing, UsageError, make_ring
from .grassmann import (
    PLUCKER_NAMES,
    SchubertCondition,
    fixture_ideal,
    gamma_chart_minors,
    gamma_ideal,
    g1l_ideal,
    plucker_ring,
    random_line_in_hyperplane,
    random_vector,
    schubert_forms,
)

RETRY_CAP = 8
CASES = ("ex1", "ex2_residual", "ex3_residual", "quadratic", "monge_ampere")


# ------------------------------------------------------------ coefficients
@dataclass(frozen=True)
class MongeAmpereCoefficients:
    """Coefficients (d; a1..a6; b1..b5; c) of the quadric family."""

    d: int
    a: tuple[int, int, int, int, int, int]
    b: tuple[int, int, int, int, int]
    c: int

    def __post_init__(self):
        if len(self.a) != 6 or len(self.b) != 5:
            raise UsageError("need six a-coefficients and five b-coefficients")

    @classmethod
    def random(cls, seed: int, characteristic: int = DEFAULT_CHARACTERISTIC) -> "MongeAmpereCoefficients":
        rng = random.Random(seed)
        p = characteristic
        return cls(rng.randrange(1, p), tuple(rng.randrange(p) for _ in range(6)),
                   tuple(rng.randrange(p) for _ in range(5)), rng.randrange(p))

    @classmethod
    def from_list(cls, values) -> "MongeAmpereCoefficients":
        v = [int(x) for x in values]
        if len(v) != 13:
            raise UsageError("expected 13 coefficients: d, a1..a6, b1..b5, c")
        return cls(v[0], tuple(v[1:7]), tuple(v[7:12]), v[12])

    def as_list(self) -> list[int]:
        return [self.d, *self.a, *self.b, self.c]

    def nondegenerate(self, p: int) -> bool:
        return self.d % p != 0


def parameter_space_dimension() -> int:
    """Projective dimension of the coefficient space (d; a; b; c)."""
    return len(MongeAmpereCoefficients(1, (0,) * 6, (0,) * 5, 0).as_list()) - 1


def quadric(coeffs: MongeAmpereCoefficients, ring: PolyRing) -> Polynomial:
    """The quadratic complex q of the family, with the displayed sign pattern."""
    P = {name: ring(name) for name in PLUCKER_NAMES}
    d, (a1, a2, a3, a4, a5, a6), (b1, b2, b3, b4, b5), c = coeffs.d, coeffs.a, coeffs.b, coeffs.c
    cubic_part = P["p15"] * P["p34"] - P["p25"] * P["p24"] + P["p35"] * P["p23"]
    inner = (P["p12"].scale(a1) + P["p13"].scale(a2) + P["p14"].scale(a3) + P["p23"].scale(a4)
             + P["p24"].scale(a5) + P["p34"].scale(a6)
             - (P["p15"].scale(b1) + P["p25"].scale(b2) + P["p35"].scale(b3) + P["p45"].scale(b4))
             + P["p04"].scale(b5) - P["p05"].scale(c))
    return -cubic_part.scale(d) + P["p05"] * inner


@lru_cache(maxsize=None)
def affine_chart_ring(characteristic: int = DEFAULT_CHARACTERISTIC) -> PolyRing:
    return make_ring([f"u{i}" for i in range(1, 6)], characteristic)


def chart_pullback(f: Polynomial, divide_u0: int = 0) -> Polynomial:
    """f ∘ gamma_chart on the affine chart u0 = 1, after removing u0^divide_u0."""
    U = make_ring([f"u{i}" for i in range(6)], f.ring.p)
    g = f.substitute(U, gamma_chart_minors(U.gens()))
    if divide_u0:
        terms = {}
        step = U.var_key(0) - U.one_key
        for k, c in g.terms.items():
            if U.decode(k)[0] < divide_u0:
                raise UsageError("pullback is not divisible by the requested power of u0")
            terms[k - divide_u0 * step] = c
        g = Polynomial(U, terms, _trusted=True)
    A = affine_chart_ring(f.ring.p)
    images = [Polynomial.one(A)] + A.gens()
    return g.substitute(A, images)


def hankel_determinant(ring: PolyRing) -> Polynomial:
    u1, u2, u3, u4, u5 = ring.gens()
    return u1 * (u3 * u5 - u4 * u4) - u2 * (u2 * u5 - u3 * u4) + u3 * (u2 * u4 - u3 * u3)


def monge_ampere_equation(coeffs: MongeAmpereCoefficients, ring: PolyRing | None = None) -> Polynomial:
    """The chart equation d·det(H) + Σ a_k m_k − Σ b_k u_k − c of the Monge-Ampère system.

    The minors m_k are the pullbacks of p12, p13, p14, p23, p24, p34, i.e.
    u2²−u1u3, u2u3−u1u4, u2u4−u1u5, u3²−u2u4, u3u4−u2u5, u4²−u3u5, which
    is how the quadric's coefficients act on the chart.
    """
    ring = ring or affine_chart_ring(DEFAULT_CHARACTERISTIC)
    u1, u2, u3, u4, u5 = ring.gens()
    minors = [u2 * u2 - u1 * u3, u2 * u3 - u1 * u4, u2 * u4 - u1 * u5,
              u3 * u3 - u2 * u4, u3 * u4 - u2 * u5, u4 * u4 - u3 * u5]
    h = hankel_determinant(ring).scale(coeffs.d)
    for a, m in zip(coeffs.a, minors):
        h = h + m.scale(a)
    for b, u in zip(coeffs.b, ring.gens()):
        h = h - u.scale(b)
    return h - Polynomial.constant(ring, coeffs.c)


# ------------------------------------------------------------- spec objects
@dataclass
class Multidegree:
    a0: int
    a1: int
    a2: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a0, self.a1, self.a2)

    def __add__(self, other: "Multidegree") -> "Multidegree":
        return Multidegree(self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2)


@dataclass
class CongruenceSpec:
    case: str
    plucker_ideal: Ideal
    chart_equation: Polynomial | None = None
    params: object = None
    provenance: list[str] = field(default_factory=list)


# ---------------------------------------------------------- span reduction
def _span_forms(characteristic: int) -> list[Polynomial]:
    return fixture_ideal("gamma_dual", characteristic).gens


def to_span(I: Ideal) -> Ideal:
    """I restricted to the 11-space of the dual plane (a 12-variable ring)."""
    return linear_section(I, _span_forms(I.ring.p))


def from_span(J: Ideal, characteristic: int) -> Ideal:
    R = plucker_ring(characteristic)
    var_map = [R.index(v) for v in J.ring.variables]
    return Ideal(R, [g.change_ring(R, var_map) for g in J.gens] + _span_forms(characteristic))


def _span_element(f: Polynomial, span_ring: PolyRing) -> Polynomial:
    return linear_section(Ideal(f.ring, [f]), _span_forms(f.ring.p)).gens[0] if f else f


def saturate_irrelevant(I: Ideal, seed: int = 0, config: GBConfig | None = None) -> Ideal:
    """Saturation by the irrelevant ideal through one seeded general linear form."""
    ring = I.ring
    rng = random.Random(seed)
    p = ring.p
    ell = Polynomial(ring, {ring.var_key(i): rng.randrange(1, p) for i in range(ring.nvars)})
    return saturate_by_element(I, ell, config)


def _check_congruence(I: Ideal, case: str):
    dim = I.dimension()
    if dim != 4:
        raise GenericityError(f"{case}: expected a 4-dimensional congruence, got dimension {dim}")


# ----------------------------------------------------------------- builders
def build_congruence(case: str, params=None, seed: int = 0,
                     characteristic: int = DEFAULT_CHARACTERISTIC,
                     config: GBConfig | None = None) -> CongruenceSpec:
    """Construct one of the congruences of the linear or quadratic families.

    ``params``: for ex1 an optional hyperplane (Polynomial in the Plücker
    ring, defaulting to the fixture); for quadratic / monge_ampere a
    MongeAmpereCoefficients (random from ``seed`` when omitted).
    """
    p = characteristic
    R = plucker_ring(p)
    gamma = to_span(gamma_ideal(p))
    S = gamma.ring
    if case == "ex1":
        H = params if params is not None else fixture_ideal("ex1_H", p).gens[0]
        if H.degree() != 1 or H.ring != R:
            raise UsageError("ex1 needs a linear form in the Plücker ring")
        if all(g1l_ideal(p).contains(f) for f in [H]):
            raise GenericityError("ex1 hyperplane contains G(1,L)")
        J = saturate_irrelevant(gamma + [_span_element(H, S)], seed, config)
        spec = CongruenceSpec(case, from_span(J, p), chart_pullback(H), H,
                              ["I(Γ) + (H)", "saturated by the irrelevant ideal"])
    elif case in ("ex2_residual", "ex3_residual"):
        if case == "ex2_residual" and params is not None:
            H = params
            if H.degree() != 1 or not g1l_ideal(p).contains(H):
                raise UsageError("ex2_residual needs a linear form vanishing on G(1,L)")
        else:
            H = fixture_ideal("ex2_H" if case == "ex2_residual" else "H_L", p).gens[0]
        ell = general_element(to_span(g1l_ideal(p)).with_gens(
            [g for g in to_span(g1l_ideal(p)).gens if g.degree() == 1]), seed)
        J = saturate_by_element(gamma + [_span_element(H, S)], ell, config)
        spec = CongruenceSpec(case, from_span(J, p), chart_pullback(H), H,
                              ["I(Γ) + (H)", "saturated by a seeded general linear form of I(G(1,L))"])
    elif case == "quadratic":
        coeffs = params if params is not None else MongeAmpereCoefficients.random(seed, p)
        if not coeffs.nondegenerate(p):
            raise GenericityError("quadric family needs d != 0")
        q = quadric(coeffs, R)
        J = gamma + [_span_element(q, S)]
        G1L = to_span(g1l_ideal(p))
        ell = general_element(G1L.with_gens([g for g in G1L.gens if g.degree() == 1]), seed)
        J = saturate_by_element(J, ell, config)
        # I(B'') contains p05; its other generators are not needed once G(1,L) is gone (see notes)
        J = saturate_by_element(J, S("p05"), config)
        spec = CongruenceSpec(case, from_span(J, p), chart_pullback(q, divide_u0=1), coeffs,
                              ["I(Γ) + (q)", "saturated by a general linear form of I(G(1,L))",
                               "saturated by p05 ∈ I(B'')"])
    elif case == "monge_ampere":
        coeffs = params if params is not None else MongeAmpereCoefficients.random(seed, p)
        if not coeffs.nondegenerate(p):
            raise GenericityError("Monge-Ampère family needs d != 0")
        h = monge_ampere_equation(coeffs, affine_chart_ring(p))
        spec = CongruenceSpec(case, implicitize_chart(h, config), h, coeffs,
                              ["chart equation of the Monge-Ampère system",
                               "implicitized through the inverse of the chart"])
    else:
        raise UsageError(f"unknown case {case!r}; choose from {', '.join(CASES)}")
    _check_congruence(spec.plucker_ideal, case)
    return spec


def ex2_matrix_hyperplane(characteristic: int = DEFAULT_CHARACTERISTIC) -> Polynomial:
    """Hyperplane p01 + p45 read off the skew matrix a(e01+e25)+b(e02+e35)+c(e03+e45)+d(e01+e45).

    This is the hyperplane whose residual congruence, singular hyperplanes and
    focal 3-spaces are the ones listed with the second linear example.
    """
    R = plucker_ring(characteristic)
    return R("p01") + R("p45")


def chart_inverse(ring: PolyRing) -> list[Polynomial]:
    """Chart parameters (u0:...:u5) of a line of Γ with p05 != 0."""
    P = ring
    return [P("p05"), P("p15"), P("p25"), P("p35"), P("p45"), -P("p04")]


def implicitize_chart(h: Polynomial, config: GBConfig | None = None) -> Ideal:
    """Closure in P^14 of the lines gamma_chart(1, u) with h(u) = 0.

    On Γ ∩ {p05 != 0} the chart is inverted by u = (p05:p15:p25:p35:p45:-p04),
    so the closure is (I(Γ) + (h^hom ∘ inverse)) : p05^∞.
    """
    p = h.ring.p
    R = plucker_ring(p)
    gamma = to_span(gamma_ideal(p))
    S = gamma.ring
    if h.is_zero():
        return from_span(saturate_by_element(gamma, S("p05"), config), p)
    e = h.degree()
    U = make_ring([f"u{i}" for i in range(6)], p)
    hom = h.change_ring(U, [1, 2, 3, 4, 5]).homogenize(0)
    if hom.degree() != e:
        raise UsageError("unexpected homogenization degree")
    f = hom.substitute(S, [_span_element(g, S) if g.ring != S else g for g in chart_inverse(R)])
    J = saturate_by_element(gamma + [f], S("p05"), config)
    return from_span(J, p)


# -------------------------------------------------------------- multidegree
def _section_degree(I: Ideal, forms: list[Polynomial]) -> tuple[int, int]:
    """(projective dimension, degree) of V(I + forms), computed in the section's own ring."""
    J = linear_section(I, forms)
    H = J.hilbert()
    return H.projective_dimension, (H.degree if H.projective_dimension >= 0 else 0)


def multidegree(I_B: Ideal, seed: int = 0, retry_cap: int = RETRY_CAP) -> Multidegree:
    """Schubert multidegree (a0, a1, a2) of a 4-dimensional subvariety of G(1,5)."""
    p = I_B.ring.p
    R = I_B.ring
    if R != plucker_ring(p):
        raise UsageError("multidegree needs an ideal of the Plücker ring")
    out = []
    for which in range(3):
        for attempt in range(retry_cap):
            rng = random.Random(f"{seed}:{which}:{attempt}")
            if which == 0:
                conds = [SchubertCondition.through_point(random_vector(rng, p))]
            elif which == 1:
                h = random_vector(rng, p)
                conds = [SchubertCondition.in_hyperplane(h),
                         SchubertCondition.meets_line(random_line_in_hyperplane(h, rng, p))]
            else:
                conds = [SchubertCondition.in_3space(random_vector(rng, p), random_vector(rng, p))]
            forms = [f for c in conds for f in schubert_forms(c, R)]
            dim, deg = _section_degree(I_B, forms)
            if dim <= 0:
                out.append(deg)
                break
        else:
            raise GenericityError(
                f"Schubert section {which} stayed positive-dimensional after {retry_cap} seeds")
    return Multidegree(*out)
