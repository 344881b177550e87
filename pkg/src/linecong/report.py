"""Certificate suite: every check recomputes one published claim from fixtures and seeds.

Seeding: the master seed N yields, for a check with id ``cid``, the sub-seed
``int(sha256(f"{N}:{cid}").hexdigest()[:8], 16)``.  Objects shared by
several checks (the Monge-Ampère coefficients, focal threefolds, their
resolutions) use the pseudo-ids ``shared:<name>`` with the same rule, so a
single check reproduces bit-for-bit when run alone with ``--only``.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations
from typing import Any, Callable

from . import __version__
from .algebra.ideal import Ideal
from .algebra.poly import Polynomial
from .algebra.ring import DEFAULT_CHARACTERISTIC, GenericityError, ResourceError, UsageError, make_ring
from .congruence import (
    MongeAmpereCoefficients,
    affine_chart_ring,
    build_congruence,
    chart_pullback,
    ex2_matrix_hyperplane,
    monge_ampere_equation,
    multidegree,
    parameter_space_dimension,
    quadric,
)
from .focal import (
    IncidenceChart,
    covered_by_spaces,
    fano_invariants,
    focal_locus,
    foci_on_line,
    normality_certificate,
    pencil_at_focal_point,
    random_chart_line,
    same_radical_as_prime,
    sectional_genus,
    singular_locus,
    surface_in_space_l,
    torus_chart_equation,
    torus_image,
    visible_spaces,
)
from .grassmann import (
    fixture_ideal,
    gamma_ideal,
    generic_skew_matrix,
    grassmannian_ideal,
    linear_space_contained,
    linear_space_dimension,
    pfaffian,
    pi_t_matrix,
    plucker_ring,
)
from .algebra.linalg import rank
from .homology import euler_numerator_matches, free_resolution, minors_irrelevant

CROSS_CHARACTERISTIC = {32003: 31991, 31991: 32003}
FAMILIES = ("ex1", "monge_ampere")
EXPECTED_BETTI = [[0, 0, 1], [1, 4, 12], [2, 5, 22], [3, 6, 16], [4, 7, 6], [5, 8, 1]]


def sub_seed(master: int, check_id: str) -> int:
    return int(hashlib.sha256(f"{master}:{check_id}".encode()).hexdigest()[:8], 16)


def _anchors() -> dict[str, list[str]]:
    return json.loads(resources.files("linecong").joinpath("data/anchors.json").read_text("utf-8"))


# -------------------------------------------------------------- workspace
class Workspace:
    """Lazily computed objects shared between checks of one run."""

    def __init__(self, seed: int, characteristic: int):
        self.seed = seed
        self.p = characteristic
        self._memo: dict[Any, Any] = {}

    def _get(self, key, build: Callable[[], Any]):
        if key not in self._memo:
            self._memo[key] = build()
        return self._memo[key]

    def shared_seed(self, name: str) -> int:
        return sub_seed(self.seed, f"shared:{name}")

    def coefficients(self) -> MongeAmpereCoefficients:
        def build():
            rng_seed = self.shared_seed("coefficients")
            for attempt in range(8):
                c = MongeAmpereCoefficients.random(f"{rng_seed}:{attempt}", self.p)
                if c.nondegenerate(self.p):
                    return c
            raise GenericityError("no nondegenerate Monge-Ampère coefficients found")

        return self._get("coefficients", build)

    def chart_equation(self, family: str) -> Polynomial:
        def build():
            if family == "ex1":
                return chart_pullback(fixture_ideal("ex1_H", self.p).gens[0])
            if family == "ex2":
                return chart_pullback(ex2_matrix_hyperplane(self.p))
            return monge_ampere_equation(self.coefficients(), affine_chart_ring(self.p))

        return self._get(("chart", family), build)

    def chart(self, family: str) -> IncidenceChart:
        return self._get(("incidence", family), lambda: IncidenceChart.from_equation(self.chart_equation(family)))

    def focal(self, family: str) -> Ideal:
        return self._get(("focal", family), lambda: focal_locus(self.chart(family)).ideal)

    def resolution(self, family: str):
        return self._get(("resolution", family),
                         lambda: free_resolution(self.focal(family), self.shared_seed(f"resolution:{family}")))

    def congruence(self, family: str) -> Ideal:
        def build():
            if family == "ex1":
                return build_congruence("ex1", seed=self.shared_seed("ex1"), characteristic=self.p).plucker_ideal
            return build_congruence("quadratic", self.coefficients(), seed=self.shared_seed("quadratic"),
                                    characteristic=self.p).plucker_ideal

        return self._get(("congruence", family), build)


# ---------------------------------------------------------------- results
@dataclass
class Outcome:
    expected: Any
    computed: Any
    ok: bool
    diagnostics: str = ""


@dataclass(frozen=True)
class Check:
    id: str
    criterion: int
    claim_text: str
    kind: str  # "symbolic" or "evidence"
    fixtures: tuple[str, ...]
    run: Callable[[Workspace, int], Outcome]


@dataclass
class CheckResult:
    id: str
    criterion: int
    claim_text: str
    paper_anchor: list[str]
    kind: str
    fixtures: list[str]
    expected: Any
    computed: Any
    status: str
    seed: int
    characteristic: int
    runtime_ms: int
    diagnostics: str = ""
    error_kind: str = ""

    def as_dict(self, timings: bool) -> dict:
        d = {
            "id": self.id, "criterion": self.criterion, "claim_text": self.claim_text,
            "paper_anchor": self.paper_anchor, "kind": self.kind, "fixtures": self.fixtures,
            "expected": self.expected, "computed": self.computed, "status": self.status,
            "seed": self.seed, "characteristic": self.characteristic,
            "runtime_ms": self.runtime_ms if timings else None,
        }
        if self.diagnostics:
            d["diagnostics"] = self.diagnostics
        return d


@dataclass
class CertificateReport:
    checks: list[CheckResult]
    environment: dict = field(default_factory=dict)

    def symbolic_failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail" and c.kind == "symbolic"]

    def exit_code(self) -> int:
        """0 all symbolic checks pass, 1 a symbolic claim fails, 2 a resource or usage error stopped a check."""
        if any(c.status == "fail" and c.error_kind in ("resource", "usage") for c in self.checks):
            return 2
        return 1 if self.symbolic_failures() else 0

    def to_json(self, timings: bool = False) -> str:
        payload = {"environment": self.environment,
                   "checks": [c.as_dict(timings) for c in self.checks]}
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_markdown(self) -> str:
        env = self.environment
        lines = ["# Certificate report", "",
                 f"version {env['version']}, field GF({env['field']}), master seed {env['seed']}", "",
                 "| id | criterion | kind | status | runtime (ms) |", "|---|---|---|---|---|"]
        for c in self.checks:
            lines.append(f"| {c.id} | {c.criterion} | {c.kind} | {c.status} | {c.runtime_ms} |")
        for c in self.checks:
            lines += ["", f"## {c.id}", "", c.claim_text, ""]
            for q in c.paper_anchor:
                lines.append(f"> {q}")
            if c.paper_anchor:
                lines.append("")
            lines += [f"- status: **{c.status}** ({c.kind}), sub-seed {c.seed}",
                      f"- fixtures: {', '.join(c.fixtures) or 'none'}",
                      f"- expected: `{json.dumps(c.expected, sort_keys=True, ensure_ascii=False)}`",
                      f"- computed: `{json.dumps(c.computed, sort_keys=True, ensure_ascii=False)}`"]
            if c.diagnostics:
                lines.append(f"- diagnostics: {c.diagnostics}")
        return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- checks
def _pfaffian_constant_rank(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    abc = make_ring(["a", "b", "c"], p)
    M = pi_t_matrix(abc)
    pf_pi = pfaffian(M)
    generic = pfaffian(generic_skew_matrix(plucker_ring(p)))
    rng = random.Random(seed)
    ranks = []
    for _ in range(5):
        pt = [rng.randrange(1, p) for _ in range(3)]
        ranks.append(rank([[e.evaluate(pt) for e in row] for row in M], p))
    computed = {"pfaffian_of_plane": str(pf_pi), "generic_degree": generic.degree(),
                "generic_homogeneous": generic.is_homogeneous(), "generic_terms": len(generic),
                "sampled_ranks": ranks}
    expected = {"pfaffian_of_plane": "0", "generic_degree": 3, "generic_homogeneous": True,
                "generic_terms": 15, "sampled_ranks": [4] * 5}
    return Outcome(expected, computed, computed == expected)


def _multidegrees(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    R = plucker_ring(p)
    md = {}
    for case in ("ex1", "ex2_residual", "ex3_residual"):
        I = build_congruence(case, seed=sub_seed(seed, case), characteristic=p).plucker_ideal
        md[case] = multidegree(I, sub_seed(seed, f"md:{case}")).as_tuple()
    gq = gamma_ideal(p) + [quadric(ws.coefficients(), R)]
    md["gamma_cap_quadric"] = multidegree(gq, sub_seed(seed, "md:gq")).as_tuple()
    md["quadratic"] = multidegree(ws.congruence("monge_ampere"), sub_seed(seed, "md:quadratic")).as_tuple()
    g1l = multidegree(fixture_ideal("g1L", p), sub_seed(seed, "md:g1l")).as_tuple()
    md["g1L"] = g1l
    total = tuple(a + b + c for a, b, c in zip(md["quadratic"], md["ex3_residual"], g1l))
    md["sum_quadratic_ex3_g1L"] = total
    computed = {k: list(v) for k, v in md.items()}
    expected = {"ex1": [1, 3, 2], "ex2_residual": [1, 3, 1], "ex3_residual": [1, 3, 0],
                "gamma_cap_quadric": [2, 6, 4], "quadratic": [1, 3, 3], "g1L": [0, 0, 1],
                "sum_quadratic_ex3_g1L": [2, 6, 4]}
    return Outcome(expected, computed, computed == expected)


def _ex3_fixture(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    I = build_congruence("ex3_residual", seed=seed, characteristic=p).plucker_ideal
    A = fixture_ideal("ex3_A0", p) + grassmannian_ideal(p).gens
    equal = I == A
    return Outcome({"residual_equals_fixture": True}, {"residual_equals_fixture": equal}, equal)


def _focal_hilbert_polynomial(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        X = ws.focal(fam)
        d, genus = sectional_genus(X, sub_seed(seed, fam))
        computed[fam] = {"hilbert_polynomial": str(X.hilbert_polynomial()), "degree": X.degree(),
                         "curve_section_degree": d, "sectional_genus": genus}
    one = {"hilbert_polynomial": "t^3+3*t^2+2", "degree": 6, "curve_section_degree": 6, "sectional_genus": 1}
    expected = {fam: one for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _betti_table(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        res = ws.resolution(fam)
        computed[fam] = {
            "betti": [[e["step"], e["twist"], e["rank"]] for e in res.betti.to_json()],
            "euler_characteristic_matches_hilbert_series": euler_numerator_matches(ws.focal(fam), res),
            "minimal": not any(M.has_unit_entry() for M in res.matrices),
            "complex": all(res.matrices[i].compose(res.matrices[i + 1]).is_zero()
                           for i in range(res.length - 1)),
        }
    one = {"betti": EXPECTED_BETTI, "euler_characteristic_matches_hilbert_series": True,
           "minimal": True, "complex": True}
    expected = {fam: one for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _lcm_certificate(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        res = ws.resolution(fam)
        A = res.matrices[-2]
        k = A.shape[1] - res.matrices[-1].shape[1]
        ok, used = minors_irrelevant(A, k, sub_seed(seed, fam))
        computed[fam] = {"matrix_shape": list(A.shape), "minor_size": k, "irrelevant": ok, "minors_used": used}
    ok = all(computed[f]["irrelevant"] for f in FAMILIES)
    expected = {fam: {"matrix_shape": [16, 6], "minor_size": 5, "irrelevant": True} for fam in FAMILIES}
    shapes_ok = all(computed[f]["matrix_shape"] == [16, 6] and computed[f]["minor_size"] == 5 for f in FAMILIES)
    return Outcome(expected, computed, ok and shapes_ok)


def _singular_locus(ws: Workspace, seed: int) -> Outcome:
    C = fixture_ideal("twisted_cubic_C", ws.p)
    computed = {}
    for fam in FAMILIES:
        S = singular_locus(ws.focal(fam), sub_seed(seed, f"sing:{fam}"))
        computed[fam] = {"dimension": S.dimension(),
                         "radical_equals_twisted_cubic": same_radical_as_prime(S, C, sub_seed(seed, fam))}
    one = {"dimension": 1, "radical_equals_twisted_cubic": True}
    expected = {fam: one for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _non_2_normality(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        cert = normality_certificate(ws.focal(fam), sub_seed(seed, fam), ws.resolution(fam))
        computed[fam] = {"dim_IX_2": cert.dim_IX[2], "dim_IX_3": cert.dim_IX[3],
                         "dim_IS_3": cert.dim_IS[3], "h1_IX_2": cert.h1_at_2, "verdict": cert.verdict}
    one = {"dim_IX_2": 0, "dim_IX_3": 0, "dim_IS_3": 1, "h1_IX_2": 1, "verdict": "non-lifting-at-3"}
    expected = {fam: one for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _ex1_quartic_surface(ws: Workspace, seed: int) -> Outcome:
    info = surface_in_space_l(ws.focal("ex1"), seed)
    computed = {"dimension": info["dimension"], "degree": info["degree"], "principal": info["principal"],
                "singular_locus_contains_C": info["singular_locus_contains_C"]}
    expected = {"dimension": 2, "degree": 4, "principal": True, "singular_locus_contains_C": True}
    return Outcome(expected, computed, computed == expected)


def _ex2_configuration(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    spaces = [fixture_ideal(f"ex2_L{i}", p) for i in range(4)]
    L = fixture_ideal("space_L", p).gens
    pairs = {}
    for i, j in combinations(range(4), 2):
        forms = spaces[i].gens + spaces[j].gens
        pairs[f"{i}{j}"] = [linear_space_dimension(forms), linear_space_contained(forms, L)]
    triples = {"".join(map(str, t)): linear_space_dimension([f for i in t for f in spaces[i].gens])
               for t in combinations(range(4), 3)}
    G = grassmannian_ideal(p).gens
    matrix_h = build_congruence("ex2_residual", ex2_matrix_hyperplane(p), seed=seed, characteristic=p)
    verbatim = build_congruence("ex2_residual", seed=seed, characteristic=p)
    A = fixture_ideal("ex2_A", p) + G
    X = ws.focal("ex2")
    visible = visible_spaces(spaces)
    computed = {
        "pairwise_meet": pairs,
        "triple_meet_dimension": triples,
        "residual_of_matrix_hyperplane_equals_fixture": matrix_h.plucker_ideal == A,
        "residual_of_printed_hyperplane_equals_fixture": verbatim.plucker_ideal == A,
        "visible_spaces": len(visible),
        "focal_hilbert_polynomial": str(X.hilbert_polynomial()),
        "focal_locus_inside_visible_spaces": covered_by_spaces(X, visible, seed),
    }
    expected = {
        "pairwise_meet": {k: [1, True] for k in pairs},
        "triple_meet_dimension": {k: 0 for k in triples},
        "residual_of_matrix_hyperplane_equals_fixture": True,
        "residual_of_printed_hyperplane_equals_fixture": False,
        "visible_spaces": 3,
        "focal_locus_inside_visible_spaces": True,
    }
    keys = [k for k in expected]
    ok = all(computed[k] == expected[k] for k in keys)
    return Outcome(expected, computed, ok,
                   "the printed hyperplane p04+p15 and the skew-matrix hyperplane p01+p45 disagree; "
                   "the fixture ideal matches the latter")


def _monge_ampere_equals_b(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    coeffs = ws.coefficients()
    B_ma = build_congruence("monge_ampere", coeffs, seed=seed, characteristic=p).plucker_ideal
    B = ws.congruence("monge_ampere")
    q = quadric(coeffs, plucker_ring(p))
    pulled = chart_pullback(q, divide_u0=1)
    computed = {"implicitized_equals_residual": B_ma == B,
                "pullback_of_quadric_equals_equation": pulled == ws.chart_equation("monge_ampere"),
                "coefficients": coeffs.as_list()}
    expected = {"implicitized_equals_residual": True, "pullback_of_quadric_equals_equation": True}
    ok = all(computed[k] == v for k, v in expected.items())
    return Outcome(expected, computed, ok)


def _chart_torus_equivariance(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    lam = random.Random(seed).randrange(2, p - 1)
    h = ws.chart_equation("monge_ampere")
    Y = focal_locus(IncidenceChart.from_equation(torus_chart_equation(h, lam))).ideal
    ok = Y == torus_image(ws.focal("monge_ampere"), lam)
    return Outcome({"focal_locus_moves_with_torus": True}, {"focal_locus_moves_with_torus": ok, "lambda": lam}, ok)


def _foci_on_line(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        rng = random.Random(sub_seed(seed, fam))
        h = ws.chart_equation(fam)
        chart = ws.chart(fam)
        found = []
        while len(found) < 10:
            u = random_chart_line(h, rng)
            if u is None:
                continue
            r = foci_on_line(chart, u)
            found.append([r["degree"], r["distinct"]])
        computed[fam] = found
    expected = {fam: [[4, True]] * 10 for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _planar_pencil(ws: Workspace, seed: int) -> Outcome:
    computed = {}
    for fam in FAMILIES:
        rows = []
        for k in range(5):
            r = pencil_at_focal_point(ws.congruence(fam), ws.focal(fam), ws.chart(fam), sub_seed(seed, f"{fam}:{k}"))
            rows.append([r["dimension"], r["degree"], r["on_X"]])
        computed[fam] = rows
    expected = {fam: [[1, 1, True]] * 5 for fam in FAMILIES}
    return Outcome(expected, computed, computed == expected)


def _fano_invariants(ws: Workspace, seed: int) -> Outcome:
    p = ws.p
    B = ws.congruence("monge_ampere")
    d, genus = sectional_genus(B, seed)
    q = quadric(ws.coefficients(), plucker_ring(p))
    computed = {"dimension": B.dimension(), "degree": B.degree(), "curve_section_degree": d,
                "sectional_genus": genus, "span_codim": B.graded_dim(1), "contains_quadric": B.contains(q)}
    expected = {"dimension": 4, "degree": 16, "curve_section_degree": 16, "sectional_genus": 9,
                "span_codim": 3, "contains_quadric": True}
    return Outcome(expected, computed, computed == expected)


def _fano_smoothness(ws: Workspace, seed: int) -> Outcome:
    r = fano_invariants(ws.congruence("monge_ampere"), ws.chart_equation("monge_ampere"), seed, samples=50)
    computed = {"codim": r["codim"], "jacobian_rank_passes": r["smooth_samples"], "samples": r["samples"]}
    expected = {"codim": 10, "jacobian_rank_passes": 50, "samples": 50}
    return Outcome(expected, computed, computed == expected)


def _quadric_family_dimension(ws: Workspace, seed: int) -> Outcome:
    coeffs = MongeAmpereCoefficients.random(seed, ws.p).as_list()
    computed = {"coefficients": len(coeffs), "projective_dimension": parameter_space_dimension()}
    expected = {"coefficients": 13, "projective_dimension": 12}
    return Outcome(expected, computed, computed == expected)


def _kernel_properties(ws: Workspace, seed: int) -> Outcome:
    from .algebra.selfcheck import kernel_property_suite

    computed = kernel_property_suite(seed, ws.p)
    other = CROSS_CHARACTERISTIC.get(ws.p, 31991)
    ws_other = Workspace(ws.seed, other)
    cross = {}
    for check in CHECKS[:5]:
        here = check.run(ws, sub_seed(ws.seed, check.id)).ok
        there = check.run(ws_other, sub_seed(ws.seed, check.id)).ok
        cross[check.id] = [here, there]
    computed["cross_characteristic"] = {"other_field": other, "checks": cross}
    expected = {k: True for k in computed if k != "cross_characteristic"}
    ok = all(computed[k] is True for k in expected) and all(a and b for a, b in cross.values())
    return Outcome(expected, computed, ok)


CHECKS: list[Check] = [
    Check("pfaffian_constant_rank", 1,
          "Pf vanishes identically on the plane pi_t, whose points have rank 4; the generic 6x6 Pfaffian is a cubic.",
          "symbolic", (), _pfaffian_constant_rank),
    Check("multidegrees", 2,
          "Multidegrees: ex1 (1,3,2), ex2 residual (1,3,1), ex3 residual (1,3,0), Gamma∩Q (2,6,4), "
          "quadratic B (1,3,3), and (1,3,3)+(1,3,0)+(0,0,1) = (2,6,4).",
          "symbolic", ("gamma_dual", "g1L", "ex1_H", "ex2_H", "H_L"), _multidegrees),
    Check("ex3_fixture", 3, "The ex3 residual equals A0 + I(G(1,5)).",
          "symbolic", ("gamma_dual", "g1L", "H_L", "ex3_A0"), _ex3_fixture),
    Check("focal_hilbert_polynomial", 4,
          "Both focal threefolds have Hilbert polynomial t^3+3t^2+2, degree 6 and sectional genus 1.",
          "symbolic", ("ex1_H",), _focal_hilbert_polynomial),
    Check("betti_table", 5, "Both focal threefolds have Betti numbers 12,22,16,6,1 at twists 4..8.",
          "symbolic", ("ex1_H",), _betti_table),
    Check("lcm_certificate", 6,
          "The 5x5 minors of the 16x6 matrix A of the resolution define an irrelevant ideal.",
          "symbolic", ("ex1_H",), _lcm_certificate),
    Check("singular_locus", 7, "The singular locus of each focal threefold is the twisted cubic C.",
          "symbolic", ("ex1_H", "twisted_cubic_C"), _singular_locus),
    Check("non_2_normality", 8,
          "I_X has nothing in degrees 2 and 3, the hyperplane section lies on a cubic, h^1(I_X(2)) = 1.",
          "symbolic", ("ex1_H",), _non_2_normality),
    Check("ex1_quartic_surface", 9, "X ∩ L is a quartic surface singular along C.",
          "symbolic", ("ex1_H", "space_L", "twisted_cubic_C"), _ex1_quartic_surface),
    Check("ex2_configuration", 10,
          "The four 3-spaces of ex2 meet pairwise in lines of L and by threes in points; the residual "
          "ideal equals A + I(G(1,5)); the visible focal locus lies on the spaces.",
          "symbolic", ("ex2_L0", "ex2_L1", "ex2_L2", "ex2_L3", "space_L", "ex2_A", "ex2_H", "g1L"),
          _ex2_configuration),
    Check("monge_ampere_equals_b", 11,
          "The implicitized Monge-Ampère congruence equals the residual quadratic congruence.",
          "symbolic", ("gamma_dual", "g1L"), _monge_ampere_equals_b),
    Check("chart_torus_equivariance", 11,
          "The focal locus of a torus-translated chart equation is the translated focal locus.",
          "symbolic", (), _chart_torus_equivariance),
    Check("foci_on_line", 12, "A general line of B carries 4 distinct foci (10 seeded lines per family).",
          "evidence", ("ex1_H",), _foci_on_line),
    Check("planar_pencil", 13,
          "Through 5 seeded focal points per family the lines of B form a planar pencil.",
          "evidence", ("ex1_H", "gamma_dual", "g1L"), _planar_pencil),
    Check("fano_invariants", 14,
          "Quadratic B spans a P^11, lies on the quadric, has degree 16 and sectional genus 9.",
          "symbolic", ("gamma_dual", "g1L"), _fano_invariants),
    Check("fano_smoothness", 14, "The Jacobian of I_B has rank 10 at 50 seeded points of B.",
          "evidence", ("gamma_dual", "g1L"), _fano_smoothness),
    Check("quadric_family_dimension", 15,
          "The quadrics (d; a1..a6; b1..b5; c) form a projective space of dimension 12.",
          "symbolic", (), _quadric_family_dimension),
    Check("kernel_properties", 16,
          "Kernel self-checks hold and checks 1-5 agree across the two default fields.",
          "symbolic", (), _kernel_properties),
]
CHECK_IDS = [c.id for c in CHECKS]


def _run_one(check: Check, ws: Workspace, anchors: dict) -> CheckResult:
    seed = sub_seed(ws.seed, check.id)
    start = time.perf_counter()
    error_kind = ""
    try:
        out = check.run(ws, seed)
        status = ("evidence" if check.kind == "evidence" else "pass") if out.ok else "fail"
        expected, computed, diag = out.expected, out.computed, out.diagnostics
    except ResourceError as exc:
        status, expected, computed, diag, error_kind = "fail", None, None, f"resource limit: {exc}", "resource"
    except GenericityError as exc:
        status, expected, computed, diag, error_kind = "fail", None, None, f"genericity: {exc}", "genericity"
    except UsageError as exc:
        status, expected, computed, diag, error_kind = "fail", None, None, f"usage: {exc}", "usage"
    ms = int((time.perf_counter() - start) * 1000)
    return CheckResult(check.id, check.criterion, check.claim_text, anchors.get(check.id, []), check.kind,
                       list(check.fixtures), expected, computed, status, seed, ws.p, ms, diag, error_kind)


def select_checks(only: list[str] | None) -> list[Check]:
    if not only:
        return list(CHECKS)
    unknown = [c for c in only if c not in CHECK_IDS]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}; known: {', '.join(CHECK_IDS)}")
    return [c for c in CHECKS if c.id in only]


def run_certificates(only: list[str] | None = None, seed: int = 1,
                     characteristic: int = DEFAULT_CHARACTERISTIC,
                     progress: Callable[[CheckResult], None] | None = None) -> CertificateReport:
    """Run the named checks (all when ``only`` is empty) in id-table order."""
    checks = select_checks(only)
    anchors = _anchors()
    ws = Workspace(seed, characteristic)
    results = []
    for check in checks:
        r = _run_one(check, ws, anchors)
        results.append(r)
        if progress:
            progress(r)
    env = {"version": __version__, "field": characteristic, "seed": seed}
    return CertificateReport(results, env)


def write_report(report: CertificateReport, out_dir, timings: bool = False) -> tuple:
    from pathlib import Path

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    j = out / "report.json"
    m = out / "report.md"
    j.write_text(report.to_json(timings), encoding="utf-8")
    m.write_text(report.to_markdown(), encoding="utf-8")
    return j, m


def fixtures_covered() -> set[str]:
    return {f for c in CHECKS for f in c.fixtures}

