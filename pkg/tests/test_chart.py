import pytest
from sympy import QQ, Poly, symbols

from positroids.core.chart import (
    PolyBivector,
    chart_bivector,
    jacobi_certificate,
    schouten_jacobiator,
)
from positroids.core.errors import LimitExceeded, ParameterError
from positroids.core.poisson import bivector, chart_cotangent_basis


def test_chart_matches_pointwise_bivector():
    P = chart_bivector(1, 3)
    evaluated = P.evaluate(((1, 1),))
    assert evaluated[0][1] == 2
    M = [[1, 1, 1]]
    assert evaluated == bivector(M, "chi_twisted", complement=chart_cotangent_basis(M)).matrix


@pytest.mark.parametrize("Z", [((2, -1), (0, 3)), ((1, "1/2"), (-2, 1))])
def test_chart_matches_pointwise_bivector_on_g24(Z):
    M = [[1, 0, *Z[0]], [0, 1, *Z[1]]]
    basis = chart_cotangent_basis(M)
    assert chart_bivector(2, 4).evaluate(Z) == bivector(M, "chi_twisted", complement=basis).matrix
    assert chart_bivector(2, 4, twisted=False).evaluate(Z) == bivector(M, "chi_standard", complement=basis).matrix


def test_untwisted_coefficient():
    P = chart_bivector(1, 3, twisted=False)
    z1, z2 = P.gens
    assert P.coefficients[0][1].as_expr() == z1 * z2
    assert P.is_antisymmetric()


def test_chart_limits():
    with pytest.raises(ParameterError):
        chart_bivector(0, 3)
    with pytest.raises(LimitExceeded):
        chart_bivector(1, 4, dim_max=2)
    with pytest.raises(ParameterError):
        chart_bivector(1, 3).evaluate(((1,),))


def test_payload():
    payload = chart_bivector(1, 2).to_dict()
    assert payload["variables"] == ["z1_1"]
    assert payload["coefficients"] == [["0"]]


@pytest.mark.parametrize("k, n", [(1, 2), (1, 3), (2, 4)])
def test_jacobi_certificate(k, n):
    certificate = jacobi_certificate(k, n)
    assert certificate["passed"]
    assert certificate["nonzero_entries"] == 0
    assert certificate["dim"] == k * (n - k)


def test_jacobiator_detects_a_non_poisson_bivector():
    gens = symbols("x y z")
    zero, one = Poly(0, *gens, domain=QQ), Poly(1, *gens, domain=QQ)
    y = Poly(gens[1], *gens, domain=QQ)
    C = [[zero, one, zero], [-one, zero, y], [zero, -y, zero]]
    J = schouten_jacobiator(PolyBivector(1, 4, gens, C, twisted=False))
    assert not J[0][1][2].is_zero
