import pytest

from linecong.algebra import GenericityError, UsageError
from linecong.congruence import (
    CASES,
    MongeAmpereCoefficients,
    Multidegree,
    affine_chart_ring,
    build_congruence,
    chart_inverse,
    chart_pullback,
    ex2_matrix_hyperplane,
    hankel_determinant,
    implicitize_chart,
    monge_ampere_equation,
    multidegree,
    parameter_space_dimension,
    quadric,
)
from linecong.grassmann import fixture_ideal, gamma_chart, gamma_ideal, grassmannian_ideal, plucker_ring

P = 32003


@pytest.fixture(scope="module")
def ex1():
    return build_congruence("ex1", characteristic=P)


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_quadric_pulls_back_to_the_monge_ampere_equation(seed):
    c = MongeAmpereCoefficients.random(seed, P)
    assert chart_pullback(quadric(c, plucker_ring(P)), divide_u0=1) == monge_ampere_equation(c, affine_chart_ring(P))


def test_coefficient_container():
    c = MongeAmpereCoefficients.random(4, P)
    assert len(c.as_list()) == 13 and parameter_space_dimension() == 12
    assert MongeAmpereCoefficients.from_list(c.as_list()) == c
    assert not MongeAmpereCoefficients.from_list([0] * 13).nondegenerate(P)
    with pytest.raises(UsageError):
        MongeAmpereCoefficients.from_list([1, 2, 3])


def test_hankel_determinant_is_a_cubic():
    h = hankel_determinant(affine_chart_ring(P))
    assert h.degree() == 3


def test_ex1_multidegree_and_chart(ex1):
    assert multidegree(ex1.plucker_ideal, 0).as_tuple() == (1, 3, 2)
    assert ex1.chart_equation == chart_pullback(fixture_ideal("ex1_H", P).gens[0])
    assert implicitize_chart(ex1.chart_equation) == ex1.plucker_ideal


def test_linear_residuals():
    assert multidegree(build_congruence("ex2_residual", characteristic=P).plucker_ideal).as_tuple() == (1, 3, 1)
    ex3 = build_congruence("ex3_residual", characteristic=P).plucker_ideal
    assert multidegree(ex3).as_tuple() == (1, 3, 0)
    assert ex3 == fixture_ideal("ex3_A0", P) + grassmannian_ideal(P).gens


def test_ex2_residual_of_the_matrix_hyperplane_matches_the_fixture():
    spec = build_congruence("ex2_residual", ex2_matrix_hyperplane(P), characteristic=P)
    assert spec.plucker_ideal == fixture_ideal("ex2_A", P) + grassmannian_ideal(P).gens
    assert build_congruence("ex2_residual", characteristic=P).plucker_ideal != spec.plucker_ideal


def test_quadratic_case_and_monge_ampere_agree():
    c = MongeAmpereCoefficients.random(7, P)
    B = build_congruence("quadratic", c, characteristic=P).plucker_ideal
    assert multidegree(B, 3).as_tuple() == (1, 3, 3)
    assert B.degree() == 16
    assert build_congruence("monge_ampere", c, characteristic=P).plucker_ideal == B


def test_additivity_of_multidegrees():
    c = MongeAmpereCoefficients.random(8, P)
    gq = gamma_ideal(P) + [quadric(c, plucker_ring(P))]
    assert multidegree(gq, 1).as_tuple() == (2, 6, 4)
    total = Multidegree(1, 3, 3) + Multidegree(1, 3, 0) + Multidegree(0, 0, 1)
    assert total.as_tuple() == (2, 6, 4)


def test_chart_inverse_recovers_parameters():
    u = (3, 5, 7, 11, 13, 17)
    line = gamma_chart(u, P)
    inv = [f.evaluate(line.coords) for f in chart_inverse(plucker_ring(P))]
    scale = inv[0] * pow(u[0], -1, P) % P
    assert inv == [x * scale % P for x in u]


def test_zero_chart_equation_gives_gamma():
    h = affine_chart_ring(P).gens()[0] * 0
    assert implicitize_chart(h) == gamma_ideal(P)


def test_builder_rejects_bad_input():
    with pytest.raises(UsageError):
        build_congruence("nope")
    R = plucker_ring(P)
    with pytest.raises(GenericityError):
        build_congruence("ex1", R("p05"), characteristic=P)  # p05 vanishes on G(1,L)
    with pytest.raises(UsageError):
        build_congruence("ex2_residual", R("p12"), characteristic=P)
    with pytest.raises(GenericityError):
        build_congruence("quadratic", MongeAmpereCoefficients.from_list([0] + [1] * 12), characteristic=P)
    assert set(CASES) >= {"ex1", "ex2_residual", "ex3_residual", "quadratic", "monge_ampere"}
