#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The standard (and twisted standard) bivector as polynomials on the chart
{[I_k | Z]} of G(k,n), and the Jacobi identity checked through the Schouten
bracket.
"""

#%% imports

from fractions import Fraction

from sympy import QQ, Poly, symbols

from positroids import config
from .errors import LimitExceeded, ParameterError
from .linalg import as_fraction
from .poisson import elementary_pairs

#%% polynomial bivectors

class PolyBivector:
    """
    Skew array of polynomials P^{pq} in the chart variables z_ab (a <= k,
    b <= n-k), variables ordered a-major.
    """

    def __init__(self, k, n, gens, coefficients, twisted=True):
        self.k, self.n = k, n
        self.gens = tuple(gens)
        self.coefficients = coefficients
        self.twisted = twisted

    @property
    def dim(self):
        return len(self.gens)

    def is_antisymmetric(self):
        return all((self.coefficients[p][q] + self.coefficients[q][p]).is_zero
                   for p in range(self.dim) for q in range(self.dim))

    def max_degree(self):
        return max((P.total_degree() for row in self.coefficients for P in row if not P.is_zero), default=0)

    def evaluate(self, Z):
        """Rational matrix of P at the chart point Z (k x (n-k) nested list)."""
        values = [as_fraction(x) for row in Z for x in row]
        if len(values) != self.dim:
            raise ParameterError(f"chart point needs {self.dim} coordinates, got {len(values)}")
        return tuple(tuple(_evaluate(P, values) for P in row) for row in self.coefficients)

    def to_dict(self):
        return {
            "k": self.k,
            "n": self.n,
            "twisted": self.twisted,
            "variables": [str(g) for g in self.gens],
            "coefficients": [[str(P.as_expr()) for P in row] for row in self.coefficients],
        }


def _evaluate(P, values):
    total = Fraction(0)
    for monomial, coeff in P.terms():
        term = Fraction(int(coeff.numerator), int(coeff.denominator))
        for value, exponent in zip(values, monomial):
            term *= value ** exponent
        total += term
    return total


def chart_variables(k, n):
    return symbols(" ".join(f"z{a}_{b}" for a in range(1, k + 1) for b in range(1, n - k + 1)))


def chart_bivector(k, n, twisted=True, dim_max=None):
    """
    Polynomial coefficients of sum_{i<j} chi(E_ij) ^ chi(E_ji), plus
    sum_{i<j} chi(E_ii) ^ chi(E_jj) when `twisted`, on the chart M = [I_k | Z].

    chi(E) moves M to M E^T; on the chart that is dZ = B' - A' Z where
    [A' | B'] = M E^T.

    Raises
    ------
    ParameterError
        Unless 0 < k < n.
    LimitExceeded
        If k(n-k) is above `dim_max` (default `positroids.config.chart_dim_max`).
    """
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
    dim_max = config.chart_dim_max if dim_max is None else dim_max
    dim = k * (n - k)
    if dim > dim_max:
        raise LimitExceeded(f"chart dimension {dim} exceeds {dim_max}")

    gens = chart_variables(k, n)
    if dim == 1:
        gens = (gens,)
    zero, one = Poly(0, *gens, domain=QQ), Poly(1, *gens, domain=QQ)
    Z = [[Poly(gens[a * (n - k) + b], *gens, domain=QQ) for b in range(n - k)] for a in range(k)]

    def column(j):
        ## 0-based column j of [I_k | Z]
        if j < k:
            return [one if a == j else zero for a in range(k)]
        return [Z[a][j - k] for a in range(k)]

    fields = {}

    def field(i, j):
        ## dZ for E_ij: column i of M E^T is column j of M, all others vanish
        if (i, j) not in fields:
            col = column(j)
            X = [[zero] * (n - k) for _ in range(k)]
            for a in range(k):
                if i < k:
                    for b in range(n - k):
                        X[a][b] = -col[a] * Z[i][b]
                else:
                    X[a][i - k] = col[a]
            fields[(i, j)] = [x for row in X for x in row]
        return fields[(i, j)]

    kinds = ("standard", "cartan") if twisted else ("standard",)
    P = [[zero] * dim for _ in range(dim)]
    for kind in kinds:
        for A, B in elementary_pairs(n, kind):
            X, Y = field(*A), field(*B)
            for p in range(dim):
                for q in range(dim):
                    P[p][q] = P[p][q] + X[p] * Y[q] - Y[p] * X[q]
    return PolyBivector(k, n, gens, P, twisted=twisted)

#%% Schouten bracket

def schouten_jacobiator(P):
    """
    J^{abc} = sum_d (P^{da} d_d P^{bc} + P^{db} d_d P^{ca} + P^{dc} d_d P^{ab});
    P is Poisson iff every entry is the zero polynomial.
    """
    dim, C = P.dim, P.coefficients
    derivatives = [[[C[p][q].diff(g) for g in P.gens] for q in range(dim)] for p in range(dim)]
    zero = Poly(0, *P.gens, domain=QQ)
    J = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            for c in range(dim):
                total = zero
                for d in range(dim):
                    total = (total
                             + C[d][a] * derivatives[b][c][d]
                             + C[d][b] * derivatives[c][a][d]
                             + C[d][c] * derivatives[a][b][d])
                J[a][b][c] = total
    return J


def jacobi_certificate(k, n, twisted=True):
    P = chart_bivector(k, n, twisted=twisted)
    J = schouten_jacobiator(P)
    nonzero = sum(1 for plane in J for row in plane for entry in row if not entry.is_zero)
    return {
        "k": k,
        "n": n,
        "twisted": twisted,
        "dim": P.dim,
        "max_degree": P.max_degree(),
        "nonzero_entries": nonzero,
        "passed": nonzero == 0 and P.is_antisymmetric(),
    }
