import pytest
from hypothesis import given
from hypothesis import strategies as st

from positroids.core.affperm import characteristic_matrix, enumerate_perms, length, perm_new
from positroids.core.bundles import (
    A_of_bundle,
    BundleType,
    Summand,
    bundle_of_perm,
    bundle_report,
    end_dim,
    f_of_A,
    hom_dim,
    membership,
    shift_equivalent,
    stratum_census,
    tau,
    theta,
)
from positroids.core.errors import InvalidSummand, MismatchedN, NotPlus

PLUS_2_4 = enumerate_perms(4, 2, "plus", n_max=4)
RANK2 = Summand(4, 2, (1, 0, 1, 1, 0, 0, 0, 0))

#%% summands

def test_tau_and_shift_equivalence():
    d = (1, 0, 1, 1, 0, 0, 0, 0)
    assert tau(d, 4) == (0, 0, 0, 0, 1, 0, 1, 1)
    assert tau(d, 4, 2) == d
    assert shift_equivalent(d, tau(d, 4), 4)
    assert not shift_equivalent(d, (1, 1, 1, 0, 0, 0, 0, 0), 4)


def test_summand_validation():
    with pytest.raises(InvalidSummand):
        Summand(2, 2, (1, 0, 1, 0))
    with pytest.raises(InvalidSummand):
        Summand(2, 1, (1, 0, 1))
    with pytest.raises(InvalidSummand):
        Summand(2, 0, ())


def test_bundle_validation():
    line = Summand(2, 1, (1, 0))
    with pytest.raises(InvalidSummand):
        BundleType(2, (line, Summand(2, 1, (1, 0))))
    assert BundleType(2, (line, Summand(2, 1, (1, 0), lambda_tag="mu"))).rank == 2
    with pytest.raises(MismatchedN):
        BundleType(2, (Summand(3, 1, (1, 0, 0)),))

#%% the permutation dictionary

def test_bundle_of_perm():
    B = bundle_of_perm(perm_new(4, [5, 3, 6, 4]))
    assert sorted(s.rank for s in B.summands) == [1, 2]
    assert B.rank == 3
    with pytest.raises(NotPlus):
        bundle_of_perm(perm_new(2, [2, 1]))


@given(st.sampled_from(PLUS_2_4))
def test_dictionary_round_trip(f):
    A = A_of_bundle(bundle_of_perm(f))
    assert A == characteristic_matrix(f)
    assert f_of_A(A) == f


@given(st.sampled_from(PLUS_2_4))
def test_length_is_end_dim_minus_summands(f):
    B = bundle_of_perm(f)
    assert length(f) == end_dim(B) - len(B.summands)


def test_end_dim():
    assert end_dim(bundle_of_perm(perm_new(4, [3, 4, 5, 6]))) == 1
    assert end_dim(bundle_of_perm(perm_new(4, [5, 3, 6, 4]))) == 5
    assert end_dim(bundle_of_perm(perm_new(4, [2, 3, 4, 9]))) == 5


def test_membership():
    assert membership(bundle_of_perm(perm_new(4, [5, 3, 6, 4]))) == {"in_U_plus": True, "in_U_plus_plus": True}
    assert membership(bundle_of_perm(perm_new(4, [2, 3, 4, 9]))) == {"in_U_plus": True, "in_U_plus_plus": False}
    trivial = BundleType(2, (Summand(2, 1, (0, 0)),))
    assert membership(trivial) == {"in_U_plus": False, "in_U_plus_plus": False}


def test_A_of_bundle_rejects_negative_degrees():
    with pytest.raises(InvalidSummand):
        A_of_bundle(BundleType(2, (Summand(2, 1, (2, -1)),)))

#%% dimensions

def test_theta():
    assert theta((-1, 0, -1, -1, 1, 0, 1, 1)) == 2
    assert theta((1, 0, 0, 0)) == 1
    assert theta((0, 0), same_lambda=True) == 1
    assert theta((0, 0)) == 0
    assert theta((-1, 1)) == 0


@given(st.lists(st.integers(min_value=-2, max_value=2), min_size=1, max_size=8), st.integers(min_value=0, max_value=7))
def test_theta_is_rotation_invariant(d, shift):
    shift %= len(d)
    assert theta(d[shift:] + d[:shift]) == theta(d)


def test_hom_dim():
    assert hom_dim(Summand(2, 1, (1, 0)), Summand(2, 1, (0, 1))) == 0
    assert hom_dim(Summand(4, 1, (0, 1, 0, 0)), RANK2) == 1
    assert hom_dim(RANK2, RANK2) == 3
    with pytest.raises(MismatchedN):
        hom_dim(Summand(2, 1, (1, 0)), RANK2)

#%% reports

def test_bundle_report():
    report = bundle_report(perm_new(4, [5, 3, 6, 4]))
    assert (report["ell"], report["p"], report["end_dim"]) == (3, 2, 5)
    assert report["identity_holds"]


def test_stratum_census():
    rows = stratum_census(4, 2, n_max=4)
    assert len(rows) == 33
    assert all(row["ell"] + row["p"] == row["end_dim"] for row in rows)
    top = next(row for row in rows if row["window"] == "[3,4,5,6]")
    assert (top["dim_X_f"], top["leaf_dim"], top["symplectic"]) == (4, 4, True)
