import random

import pytest

from linecong.algebra import Ideal, UsageError, make_ring
from linecong.grassmann import (
    FIXTURE_NAMES,
    PluckerLine,
    SchubertCondition,
    fixture_ideal,
    fixture_text,
    g1l_ideal,
    gamma_chart,
    gamma_ideal,
    generic_skew_matrix,
    grassmannian_ideal,
    linear_space_contained,
    linear_space_dimension,
    lines_through_point,
    pfaffian,
    pi_t_matrix,
    plucker_ring,
    pullback,
    random_vector,
    schubert_section,
    twisted_cubic_point,
)
from linecong.textio import format_polynomial, parse_polynomials

P = 32003


def test_grassmannian_has_fifteen_quadrics_and_right_invariants():
    G = grassmannian_ideal(P)
    assert len(G.gens) == 15
    assert all(g.degree() == 2 for g in G.gens)
    # G(1,5) is 8-dimensional of degree 14
    assert G.dimension() == 8 and G.degree() == 14


def test_pfaffians():
    R = plucker_ring(P)
    generic = pfaffian(generic_skew_matrix(R))
    assert generic.degree() == 3 and generic.is_homogeneous() and len(generic) == 15
    abc = make_ring("a b c", P)
    assert pfaffian(pi_t_matrix(abc)).is_zero()
    x = make_ring("x", P)("x")
    assert pfaffian([[x * 0, x], [-x, x * 0]]) == x
    with pytest.raises(UsageError):
        pfaffian([[x, x], [-x, x * 0]])
    with pytest.raises(UsageError):
        pfaffian([[x * 0] * 3] * 3)


def test_lines_lie_on_the_grassmannian():
    rng = random.Random(3)
    G = grassmannian_ideal(P)
    for _ in range(5):
        L = PluckerLine.span(random_vector(rng, P), random_vector(rng, P), P)
        assert L.satisfies(G)
        assert L[(1, 0)] == (-L[(0, 1)]) % P


def test_chart_lines_lie_on_gamma():
    rng = random.Random(5)
    gam = gamma_ideal(P)
    for _ in range(5):
        assert gamma_chart(random_vector(rng, P), P).satisfies(gam)
    assert all(pullback(g).is_zero() for g in gam.gens)
    with pytest.raises(UsageError):
        gamma_chart((0,) * 6, P)


def test_gamma_is_a_fivefold_of_degree_fourteen():
    gam = gamma_ideal(P)
    assert gam.dimension() == 5 and gam.degree() == 14


def test_lines_through_point_ranks():
    # a general point, a point of L off the twisted cubic, and a point of the cubic
    assert lines_through_point((1, 0, 0, 0, 0, 0), P)["rank"] == 3
    assert lines_through_point((0, 0, 1, 0, 0, 0), P)["rank"] == 2
    assert lines_through_point((0, 1, 0, 0, 0, 0), P)["rank"] == 1
    assert lines_through_point(twisted_cubic_point(5, P), P)["rank"] == 1
    with pytest.raises(UsageError):
        lines_through_point((0,) * 6, P)


def test_schubert_sections_have_expected_dimensions():
    rng = random.Random(11)
    G = grassmannian_ideal(P)
    through = G + schubert_section(SchubertCondition.through_point(random_vector(rng, P)), P).gens
    assert through.dimension() == 4  # lines through a point form a P^4
    in_h = G + schubert_section(SchubertCondition.in_hyperplane(random_vector(rng, P)), P).gens
    assert in_h.dimension() == 6  # G(1,4)
    in_3 = G + schubert_section(SchubertCondition.in_3space(random_vector(rng, P), random_vector(rng, P)), P).gens
    assert in_3.dimension() == 4  # G(1,3)
    with pytest.raises(UsageError):
        SchubertCondition("bogus", ())


def test_fixtures_parse_and_roundtrip():
    for name in FIXTURE_NAMES:
        I = fixture_ideal(name, P)
        assert I.gens, name
        text = "\n".join(format_polynomial(g) for g in I.gens)
        assert parse_polynomials(text, I.ring) == I
        assert [g.terms for g in parse_polynomials(text, I.ring).gens] == [g.terms for g in I.gens]
    with pytest.raises(UsageError):
        fixture_text("nope")


def test_g1l_and_twisted_cubic():
    assert g1l_ideal(P).dimension() == 4
    C = fixture_ideal("twisted_cubic_C", P)
    assert C.dimension() == 1 and C.degree() == 3
    assert all(g.evaluate(twisted_cubic_point(7, P)) == 0 for g in C.gens)


def test_linear_space_helpers():
    L = fixture_ideal("space_L", P).gens
    assert linear_space_dimension(L) == 3
    L0 = fixture_ideal("ex2_L0", P).gens
    L1 = fixture_ideal("ex2_L1", P).gens
    assert linear_space_dimension(L0 + L1) == 1
    assert linear_space_contained(L0 + L1, L)
    assert not linear_space_contained(L0, L)
    with pytest.raises(UsageError):
        linear_space_dimension([L[0] * L[1]])


def test_plucker_line_validation():
    with pytest.raises(UsageError):
        PluckerLine((0,) * 15)
    with pytest.raises(UsageError):
        PluckerLine((1,) * 14)
    assert isinstance(Ideal(plucker_ring(P), []), Ideal)
