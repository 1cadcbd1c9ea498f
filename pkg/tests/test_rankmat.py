import pytest
from hypothesis import given
from hypothesis import strategies as st

from positroids.core.affperm import characteristic_matrix, enumerate_perms, perm_new
from positroids.core.binmat import BinaryPeriodicMatrix
from positroids.core.errors import (
    AxiomViolation,
    EmptyWindow,
    InvalidColumns,
    NotPlus,
    ParameterError,
)
from positroids.core.rankmat import (
    CyclicRankMatrix,
    check_axioms,
    f_of_matrix,
    h_of_A,
    perm_of_r,
    r_of_matrix,
    r_of_perm,
    r_of_perm_direct,
    s_window,
)

BOUNDED = [f for n in (2, 3, 4) for k in range(1, n) for f in enumerate_perms(n, k, "bounded", n_max=4)]

#%% windows and h

def test_s_window():
    d = (1, 0, 1, 1, 0, 0, 0, 0)
    assert s_window(d, 3, 4) == 1
    assert s_window(d, 1, 1) == 0
    assert s_window((0, 0, 0, 0), 1, 3) == 0
    with pytest.raises(EmptyWindow):
        s_window(d, 3, 2)


def test_h_of_A():
    A = characteristic_matrix(perm_new(4, [3, 4, 5, 6]))
    assert h_of_A(A, 1, 3) == 1
    assert h_of_A(A, 1, 1) == 0
    assert h_of_A(A, 2, 1) == 0


def test_h_of_A_needs_standard_columns():
    A = BinaryPeriodicMatrix.from_rows(2, [[1, 1], [1, 0]])
    with pytest.raises(InvalidColumns):
        h_of_A(A, 1, 1)

#%% rank matrices of permutations

def test_r_of_perm_values():
    r = r_of_perm(perm_new(4, [3, 4, 5, 6]))
    assert (r.r(1, 1), r.r(1, 2), r.r(1, 3), r.r(2, 2)) == (1, 2, 2, 1)
    assert r.r(5, 6) == r.r(1, 2)
    assert r.r(1, 8) == 2


def test_r_of_perm_needs_plus():
    with pytest.raises(NotPlus):
        r_of_perm(perm_new(2, [2, 1]))


@given(st.sampled_from(BOUNDED))
def test_bounded_rank_matrices_pass_and_invert(f):
    r = r_of_perm(f)
    assert check_axioms(r).passed
    assert perm_of_r(r) == f
    assert r == r_of_perm_direct(f)


def test_band_shape_is_checked():
    with pytest.raises(ParameterError):
        CyclicRankMatrix(4, 2, [[0] * 4] * 4)
    with pytest.raises(ParameterError):
        CyclicRankMatrix(4, 4, [[0] * 5] * 4)


def test_payload_round_trip():
    r = r_of_perm(perm_new(4, [5, 3, 6, 4]))
    assert CyclicRankMatrix.from_dict(r.to_dict()) == r
    assert CyclicRankMatrix.from_r_band(4, 2, r.r_band()) == r

#%% axioms

def _perturbed(value):
    r = r_of_perm(perm_new(4, [3, 4, 5, 6]))
    band = r.h_band.copy()
    band[0, 2] = value
    return CyclicRankMatrix(4, 2, band)


def test_perturbed_band_fails_c3():
    report = check_axioms(_perturbed(2))
    assert not report.passed
    assert report.violations[0]["axiom"] == "C3"
    assert (report.violations[0]["i"], report.violations[0]["j"]) == (1, 2)
    assert report.to_dict()["axioms"]["C3"] is False


def test_perm_of_r_names_the_first_violation():
    with pytest.raises(AxiomViolation) as excinfo:
        perm_of_r(_perturbed(2))
    assert (excinfo.value.axiom, excinfo.value.i, excinfo.value.j) == ("C3", 1, 2)


def test_small_perturbation_can_stay_valid():
    assert check_axioms(_perturbed(1)).passed

#%% matrices

def test_f_of_matrix():
    assert f_of_matrix([[1, 0, 0, 0], [0, 1, 1, 0]]).window == (5, 3, 6, 4)
    assert f_of_matrix([[1, 1, 1]]).window == (2, 3, 4)
    assert f_of_matrix([[1, 0, 1]]).window == (3, 2, 4)


def test_r_of_matrix():
    M = [[1, 0, 0, 0], [0, 1, 1, 0]]
    r = r_of_matrix(M)
    assert (r.r(2, 4), r.r(1, 2), r.r(3, 2)) == (1, 2, 0)
    assert r == r_of_perm(f_of_matrix(M))

#%% binary periodic matrices

def test_binary_matrix_validation():
    with pytest.raises(InvalidColumns):
        BinaryPeriodicMatrix(4, [[1, 0, 1]])
    with pytest.raises(InvalidColumns):
        BinaryPeriodicMatrix(2, [[2, 0]])
    with pytest.raises(InvalidColumns):
        BinaryPeriodicMatrix.from_rows(2, [[1, 0], [0, 0]]).validate()


def test_binary_matrix_canonical_and_widen():
    A = BinaryPeriodicMatrix.from_rows(2, [[0, 1], [1, 0]])
    assert A.canonical().rows() == [(1, 0), (0, 1)]
    assert A.widen(4).rows() == [(0, 1, 0, 1), (1, 0, 1, 0)]
    assert A.entry(1, 3) == 1
    assert A.column_index(2) == 0
    with pytest.raises(InvalidColumns):
        A.widen(3)


def test_characteristic_matrix_is_shift_compatible():
    A = characteristic_matrix(perm_new(4, [5, 3, 6, 4]))
    assert A.validate() is A
    assert BinaryPeriodicMatrix.from_dict(A.to_dict()) == A
