import pytest
from hypothesis import given
from hypothesis import strategies as st

from positroids.core.affperm import (
    BruhatPoset,
    bruhat_leq,
    characteristic_matrix,
    classify,
    compose_splus,
    covers,
    enumerate_perms,
    inverse,
    length,
    orbit_decomposition,
    perm_new,
    reflect,
    rotate,
    splus,
    summand_count,
    swap,
)
from positroids.core.errors import (
    DuplicateResidue,
    LimitExceeded,
    MismatchedParameters,
    NotPlus,
    NotStrictPlus,
    ParameterError,
)

PLUS_2_4 = enumerate_perms(4, 2, "plus", n_max=4)
BOUNDED_2_4 = enumerate_perms(4, 2, "bounded", n_max=4)

#%% construction and classification

def test_ball_number():
    assert perm_new(4, [3, 4, 5, 6]).k == 2
    assert perm_new(2, [2, 3]).k == 1
    assert perm_new(3, [1, 2, 3]).k == 0


def test_duplicate_residue():
    with pytest.raises(DuplicateResidue):
        perm_new(4, [3, 3, 5, 6])


def test_window_length_must_match_period():
    with pytest.raises(ParameterError):
        perm_new(3, [2, 3])


def test_evaluation_is_periodic():
    f = perm_new(4, [5, 3, 6, 4])
    assert [f(m) for m in range(-3, 9)] == [1, -1, 2, 0, 5, 3, 6, 4, 9, 7, 10, 8]


def test_classify():
    assert classify(perm_new(4, [5, 3, 6, 4])) == {"k": 2, "bounded": True, "plus": True, "strict_plus": False}
    assert classify(perm_new(4, [2, 3, 4, 9])) == {"k": 2, "bounded": False, "plus": True, "strict_plus": True}
    assert classify(perm_new(4, [3, 4, 5, 6]))["strict_plus"]


def test_length():
    assert length(perm_new(4, [3, 4, 5, 6])) == 0
    assert length(perm_new(4, [5, 3, 6, 4])) == 3
    assert length(perm_new(4, [2, 3, 4, 9])) == 3
    assert length(perm_new(4, [3, 5, 6, 4])) == 2


def test_length_needs_plus():
    with pytest.raises(NotPlus):
        length(perm_new(2, [2, 1]))

#%% composition and the dihedral action

def test_compose_splus():
    assert compose_splus(perm_new(4, [5, 3, 6, 4]), 1).window == (3, 6, 4, 9)
    assert compose_splus(perm_new(4, [3, 4, 5, 6]), 1).window == (4, 5, 6, 7)


def test_rotate_and_reflect():
    f = perm_new(4, [5, 3, 6, 4])
    assert rotate(f).window == (2, 5, 3, 8)
    assert reflect(f).window == (1, 3, 6, 8)
    assert reflect(perm_new(3, [3, 2, 4])).window == (3, 2, 4)


def test_inverse():
    f = perm_new(4, [5, 3, 6, 4])
    g = inverse(f)
    assert g.window == (-3, -1, 2, 4)
    assert all(g(f(m)) == m for m in range(-8, 9))


@given(st.sampled_from(PLUS_2_4))
def test_rotation_preserves_invariants(f):
    g = rotate(f)
    assert classify(g) == classify(f)
    assert length(g) == length(f)
    assert rotate(f, f.n) == f


@given(st.sampled_from(PLUS_2_4))
def test_reflection_is_an_involution(f):
    assert reflect(reflect(f)) == f
    assert classify(reflect(f)) == classify(f)
    assert length(reflect(f)) == length(f)


@given(st.sampled_from(PLUS_2_4), st.integers(min_value=-6, max_value=6))
def test_inverse_round_trip(f, m):
    assert inverse(inverse(f)) == f
    assert inverse(f)(f(m)) == m

#%% orbits

def test_orbit_decomposition():
    decomposition = orbit_decomposition(perm_new(4, [3, 6, 4, 9]))
    assert [o.rep for o in decomposition.orbits] == [1, 2, 5]
    assert [o.period for o in decomposition.orbits] == [2, 1, 2]
    assert decomposition.p == 2
    first = decomposition.orbits[0]
    assert first.cycle_length == 3
    assert first.char_vector == (1, 0, 1, 1, 0, 0, 0, 0)


def test_orbit_decomposition_of_shift():
    assert orbit_decomposition(perm_new(4, [4, 5, 6, 7])).p == 1
    assert len(orbit_decomposition(perm_new(4, [4, 5, 6, 7])).orbits) == 3
    assert orbit_decomposition(perm_new(2, [3, 4])).p == 2


def test_orbit_decomposition_needs_strict_plus():
    with pytest.raises(NotStrictPlus):
        orbit_decomposition(perm_new(4, [5, 3, 6, 4]))


@given(st.sampled_from(PLUS_2_4))
def test_one_orbit_per_ball(f):
    decomposition = orbit_decomposition(compose_splus(f, 1))
    assert len(decomposition.orbits) == f.k + 1
    assert summand_count(f) == decomposition.p
    assert sum(len(c) for c in decomposition.classes) == f.k + 1


def test_characteristic_matrix():
    assert characteristic_matrix(perm_new(4, [5, 3, 6, 4])).rows() == [
        (1, 0, 1, 1, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 1, 0, 0),
        (0, 0, 0, 0, 1, 0, 1, 1),
    ]
    assert characteristic_matrix(perm_new(4, [2, 3, 4, 9])).rows() == [
        (1, 0, 1, 0, 0, 0, 0, 0),
        (0, 1, 0, 1, 0, 1, 0, 1),
        (0, 0, 0, 0, 1, 0, 1, 0),
    ]
    A = characteristic_matrix(perm_new(4, [3, 4, 5, 6]))
    assert A.width == 12
    assert A.row(0) == (1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0)

#%% enumeration

def test_enumerate_small_case_in_order():
    assert [list(f.window) for f in enumerate_perms(2, 1)] == [[1, 4], [2, 3], [3, 2]]


@pytest.mark.parametrize("n, k, count", [(2, 1, 3), (3, 1, 7), (4, 1, 15), (4, 2, 33)])
def test_bounded_counts(n, k, count):
    assert len(enumerate_perms(n, k, "bounded")) == count


def test_bounded_are_plus():
    assert set(BOUNDED_2_4) <= set(PLUS_2_4)
    assert all(f.is_bounded for f in BOUNDED_2_4)
    assert all(f.is_plus and f.k == 2 for f in PLUS_2_4)


def test_enumeration_limits():
    with pytest.raises(LimitExceeded):
        enumerate_perms(5, 2, n_max=4)
    with pytest.raises(ParameterError):
        enumerate_perms(3, 0)
    with pytest.raises(ParameterError):
        enumerate_perms(3, 1, kind="all")

#%% Bruhat order

def test_swap():
    assert swap(perm_new(4, [5, 3, 6, 4]), 1, 2).window == (3, 5, 6, 4)
    with pytest.raises(ParameterError):
        swap(perm_new(4, [5, 3, 6, 4]), 2, 3)


def test_covers():
    f = perm_new(4, [5, 3, 6, 4])
    assert covers(f, perm_new(4, [3, 5, 6, 4]))
    assert not covers(f, f)
    assert not covers(f, splus(4, 2))


def test_bruhat_leq():
    f = perm_new(4, [5, 3, 6, 4])
    assert bruhat_leq(splus(4, 2), f)
    assert not bruhat_leq(f, splus(4, 2))
    with pytest.raises(MismatchedParameters):
        bruhat_leq(splus(4, 1), f)


def test_poset_minimum_is_the_shift():
    poset = BruhatPoset(3, 1)
    assert poset.minimum() == splus(3, 1)
    assert all(poset.leq(splus(3, 1), f) for f in poset.elements)
