import pytest

from linecong.algebra import Ideal, Polynomial, UsageError, make_ring
from linecong.homology import (
    BettiTable,
    GradedMatrix,
    euler_numerator_matches,
    ext_graded_dim,
    fitting_minors,
    free_resolution,
    h1_ideal_sheaf,
    is_saturated,
    minors_irrelevant,
    schreyer_frame,
)

P = 32003
R = make_ring("a b c d", P)
a, b, c, d = R.gens()
TWISTED_CUBIC = Ideal(R, [b * b - a * c, b * c - a * d, c * c - b * d])


def _entries(res):
    return sorted((e["step"], e["twist"], e["rank"]) for e in res.betti.to_json())


def _check_complex(res):
    for i in range(res.length - 1):
        assert res.matrices[i].compose(res.matrices[i + 1]).is_zero()
    assert not any(M.has_unit_entry() for M in res.matrices)


def test_twisted_cubic_is_determinantal():
    res = free_resolution(TWISTED_CUBIC)
    assert _entries(res) == [(0, 0, 1), (1, 2, 3), (2, 3, 2)]
    _check_complex(res)
    assert euler_numerator_matches(TWISTED_CUBIC, res)
    assert is_saturated(res)


def test_koszul_complex_of_a_complete_intersection():
    I = Ideal(R, [a * a, b * b * b, c * d])
    res = free_resolution(I)
    assert _entries(res) == [(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 4, 1), (2, 5, 2), (3, 7, 1)]
    _check_complex(res)


def test_irrelevant_ideal_is_not_saturated():
    res = free_resolution(Ideal(R, [a, b, c, d]))
    assert res.length == 4
    assert not is_saturated(res)
    with pytest.raises(UsageError):
        h1_ideal_sheaf(Ideal(R, [a, b, c, d]), 0, res)


def test_h1_of_twisted_cubic_vanishes():
    res = free_resolution(TWISTED_CUBIC)
    assert all(h1_ideal_sheaf(TWISTED_CUBIC, t, res) == 0 for t in range(-1, 4))


def test_h1_of_two_skew_lines():
    # two disjoint lines: h^1(I(t)) = 1 at t = 0 only
    I = Ideal(R, [a * c, a * d, b * c, b * d])
    res = free_resolution(I)
    assert [h1_ideal_sheaf(I, t, res) for t in range(-1, 3)] == [0, 1, 0, 0]


def test_ext_of_the_residue_field():
    I = Ideal(R, [a, b, c, d])
    res = free_resolution(I)
    # Ext^4(k, R(-4)) = k in degree 0
    assert ext_graded_dim(I, 4, 0, res) == 1
    assert ext_graded_dim(I, 4, 1, res) == 0


def test_betti_table_serialization_roundtrip():
    res = free_resolution(TWISTED_CUBIC)
    table = res.betti
    again = BettiTable.from_json(table.to_json())
    assert again.entries == table.entries
    assert again.ranks() == [1, 3, 2]
    assert "3" in str(table)


def test_schreyer_frame_of_monomials():
    frame = schreyer_frame([(2, 0, 0, 0), (0, 2, 0, 0)], [2, 2])
    # two generators of degree 2 and a single syzygy of degree 4 between coprime squares
    assert frame[0] == {2: 2}
    assert frame[1] == {4: 1}


def test_minors_of_generic_matrix():
    M = GradedMatrix(R, [[a, b, c], [b, c, d]], [1, 1, 1], [0, 0])
    assert fitting_minors(M, 2) == TWISTED_CUBIC
    ok, seen = minors_irrelevant(M, 2)
    assert not ok and seen == 3
    N = GradedMatrix(R, [[a, b, Polynomial.zero(R)], [Polynomial.zero(R), c, d]], [1, 1, 1], [0, 0])
    assert not minors_irrelevant(N, 2)[0]
    Z = GradedMatrix(R, [[a, b, c, d]], [1, 1, 1, 1], [0])
    assert minors_irrelevant(Z, 1)[0]


def test_graded_matrix_transpose_and_compose():
    M = GradedMatrix(R, [[a, b]], [1, 1], [0])
    syz = GradedMatrix(R, [[b], [-a]], [2], [1, 1])
    assert M.compose(syz).is_zero()
    assert M.transpose().shape == (2, 1)
    assert M.is_homogeneous()
