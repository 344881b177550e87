import random

import pytest
from hypothesis import given, settings, strategies as st

from linecong.algebra import Ideal, Polynomial, UsageError, make_ring
from linecong.congruence import affine_chart_ring, chart_pullback
from linecong.focal import (
    IncidenceChart,
    covered_by_spaces,
    focal_locus,
    foci_on_line,
    normality_certificate,
    p5_ring,
    ramification_closed_form,
    ramification_determinant,
    random_chart_line,
    sectional_genus,
    singular_locus,
    surface_in_space_l,
    torus_chart_equation,
    torus_image,
    torus_weights,
    univariate_gcd,
    univariate_roots,
    visible_spaces,
)
from linecong.grassmann import fixture_ideal

P = 32003
A = affine_chart_ring(P)


def random_chart_equation(rng, degree=3, terms=6):
    items = []
    for _ in range(terms):
        e = [0] * 5
        for _ in range(rng.randrange(degree + 1)):
            e[rng.randrange(5)] += 1
        items.append((tuple(e), rng.randrange(1, P)))
    return Polynomial.from_exponents(A, items)


@pytest.fixture(scope="module")
def ex1_focal():
    h = chart_pullback(fixture_ideal("ex1_H", P).gens[0])
    return h, focal_locus(IncidenceChart.from_equation(h)).ideal


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_ramification_determinant_has_the_closed_form(seed):
    h = random_chart_equation(random.Random(seed))
    if h.is_zero():
        return
    chart = IncidenceChart.from_equation(h)
    assert ramification_determinant(chart) == ramification_closed_form(chart)


def test_ramification_of_coordinate_charts():
    y0 = IncidenceChart.from_equation(A("u5")).ring("y0")
    assert ramification_determinant(IncidenceChart.from_equation(A("u5"))) == y0 ** 4
    one = ramification_determinant(IncidenceChart.from_equation(A("u1")))
    assert one.is_constant() and not one.is_zero()
    with pytest.raises(UsageError):
        IncidenceChart.from_equation(A("u1") * 0)


def test_ex1_focal_threefold(ex1_focal):
    _, X = ex1_focal
    assert X.dimension() == 3 and X.degree() == 6
    assert X.ring.variables == p5_ring(P).variables
    assert all(g.is_homogeneous() for g in X.gens)


def test_focal_locus_commutes_with_the_torus(ex1_focal):
    h, X = ex1_focal
    for lam in (2, 5):
        Y = focal_locus(IncidenceChart.from_equation(torus_chart_equation(h, lam))).ideal
        assert Y == torus_image(X, lam)
    assert torus_weights(3, P)[5] * 3 % P == 1
    with pytest.raises(UsageError):
        torus_weights(P, P)


def test_foci_on_a_general_line_are_four_distinct_points(ex1_focal):
    h, _ = ex1_focal
    chart = IncidenceChart.from_equation(h)
    rng = random.Random(9)
    for _ in range(5):
        u = random_chart_line(h, rng)
        info = foci_on_line(chart, u)
        assert info["degree"] == 4 and info["distinct"]


def test_surface_in_the_special_space(ex1_focal):
    _, X = ex1_focal
    info = surface_in_space_l(X)
    assert info["hilbert_polynomial"] == "2*t^2+2"
    assert info["principal"] and info["degree"] == 4
    assert info["singular_locus_contains_C"]


def test_linear_space_is_smooth_with_genus_zero():
    R = p5_ring(P)
    x = R.gens()
    I = Ideal(R, [x[0] - x[5], x[1] + 2 * x[3]])
    assert I.dimension() == 3 and I.degree() == 1
    assert sectional_genus(I, 0) == (1, 0)
    assert singular_locus(I, 0).dimension() < 0


def test_complete_intersection_is_two_normal():
    R = p5_ring(P)
    x = R.gens()
    I = Ideal(R, [x[0] * x[1] - x[2] * x[3], x[4] ** 3 - x[0] * x[1] * x[5] + x[2] ** 3])
    cert = normality_certificate(I, 0)
    assert cert.h1_at_2 == 0 and cert.verdict == "2-normal"


def test_covering_by_linear_spaces():
    R = p5_ring(P)
    x = R.gens()
    union = Ideal(R, [x[0] * x[1], x[0] * x[2]])
    spaces = [Ideal(R, [x[0]]), Ideal(R, [x[1], x[2]])]
    assert covered_by_spaces(union, spaces)
    assert not covered_by_spaces(union, spaces[:1])
    hidden = Ideal(R, [x[5], x[0]])
    assert visible_spaces(spaces + [hidden]) == spaces


def test_univariate_helpers():
    p = 101
    f = [(-1) % p, 0, 1]  # y^2 - 1
    assert univariate_roots(f, p) == [1, p - 1]
    assert univariate_gcd(f, [2, 2], p) == [1, 1]  # gcd with 2y+2 is y+1
    assert univariate_gcd([1, 2, 1], [2, 2], p) == [1, 1]
    assert univariate_gcd([3], [0], p) == [1]
    assert univariate_gcd([0], [0], p) == []


def test_chart_line_sampler_handles_degenerate_charts():
    ring = make_ring("u1 u2 u3 u4 u5", P)
    assert random_chart_line(ring("u1") - 1, random.Random(0)) is None  # no u5 to solve for
    u = random_chart_line(ring("u5") - ring("u1"), random.Random(0))
    assert u[4] == u[0]
