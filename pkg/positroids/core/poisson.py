#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
The twisted standard Poisson bivector on G(k,n), evaluated exactly at a point.

A bivector is recorded as a skew form on the cotangent space at M, in the
basis e_a (x) c, where a runs over the rows of M and c over a basis of the
kernel of M (a-major order). Each construction is a four-argument form
B(c, x, c', y), and the entry at ((a, c), (a', c')) is B(c, row_a', c', row_a).
"""

#%% imports

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .affperm import length, summand_count
from .errors import OrthogonalityViolation, ParameterError
from .linalg import as_fraction, dot, fraction_str, rank
from .rankmat import as_point, f_of_matrix

#%% kernels and the Massey pairing

def kernel_basis(M):
    return as_point(M).kernel()


def mp_pairing(a, lam, b, mu):
    """
    sum_{i<j} (a_i b_j - b_i a_j) lam_i mu_j, defined when a and b are both
    orthogonal to lam and to mu.
    """
    a, lam, b, mu = ([as_fraction(x) for x in v] for v in (a, lam, b, mu))
    for name, (u, v) in {"<a,lam>": (a, lam), "<b,lam>": (b, lam),
                         "<a,mu>": (a, mu), "<b,mu>": (b, mu)}.items():
        value = dot(u, v)
        if value != 0:
            raise OrthogonalityViolation(f"{name} = {fraction_str(value)}, expected 0")
    n = len(a)
    return sum(((a[i] * b[j] - b[i] * a[j]) * lam[i] * mu[j]
                for i in range(n) for j in range(i + 1, n)), Fraction(0))

#%% four-argument forms

@lru_cache(maxsize=None)
def elementary_pairs(n, kind):
    """
    Index pairs (A, B) of elementary matrices with the bivector
    sum chi(E_A) ^ chi(E_B); 0-based.

    kind "standard": (E_ij, E_ji) for i < j.
    kind "cartan": (E_ii, E_jj) for i < j.
    """
    if kind == "standard":
        return tuple(((i, j), (j, i)) for i in range(n) for j in range(i + 1, n))
    if kind == "cartan":
        return tuple(((i, i), (j, j)) for i in range(n) for j in range(i + 1, n))
    raise ParameterError(f"unknown pair kind {kind!r}")


def _wedge_form(kinds):
    def form(c, x, c2, y):
        ## <c, E_ij v> = c_i v_j
        total = Fraction(0)
        for kind in kinds:
            for (i, j), (p, q) in elementary_pairs(len(c), kind):
                total += c[i] * y[j] * c2[p] * x[q] - c[p] * y[q] * c2[i] * x[j]
        return total
    return form


def b_prime_st(i, j, k, l):
    """The four-index table of B'_st on e_i^* (x) e_j (x) e_k^* (x) e_l."""
    if j == l:
        return 0
    sign = 1 if j < l else -1
    return sign * (int(i == j and k == l) - int(i == l and j == k))


def _b_prime_form(c, x, c2, y):
    n = len(c)
    total = Fraction(0)
    for j in range(n):
        for l in range(n):
            if j == l:
                continue
            ## the table vanishes unless (i, k) is (j, l) or (l, j)
            for i, k in ((j, l), (l, j)):
                total += b_prime_st(i, j, k, l) * c[i] * x[j] * c2[k] * y[l]
    return total


def _fo_massey_form(c, x, c2, y):
    return mp_pairing(c, x, c2, y)


BIVECTORS = {
    "chi_standard": _wedge_form(("standard",)),
    "chi_twisted": _wedge_form(("standard", "cartan")),
    "cartan": _wedge_form(("cartan",)),
    "b_prime_st": _b_prime_form,
    "fo_massey": _fo_massey_form,
}

#%% skew forms

@dataclass(frozen=True)
class SkewForm:
    basis: tuple
    matrix: tuple

    @property
    def dim(self):
        return len(self.basis)

    def is_skew(self):
        return all(self.matrix[p][q] == -self.matrix[q][p]
                   for p in range(self.dim) for q in range(self.dim))

    def is_zero(self):
        return not any(x for row in self.matrix for x in row)

    def scaled(self, factor):
        factor = as_fraction(factor)
        return SkewForm(self.basis, tuple(tuple(factor * x for x in row) for row in self.matrix))

    def __sub__(self, other):
        return SkewForm(self.basis, tuple(tuple(a - b for a, b in zip(r, s))
                                          for r, s in zip(self.matrix, other.matrix)))

    def __add__(self, other):
        return SkewForm(self.basis, tuple(tuple(a + b for a, b in zip(r, s))
                                          for r, s in zip(self.matrix, other.matrix)))

    def to_dict(self):
        return {
            "basis": [{"row": a, "c": [fraction_str(x) for x in c]} for a, c in self.basis],
            "matrix": [[fraction_str(x) for x in row] for row in self.matrix],
        }


def bivector(M, method="chi_twisted", complement=None):
    """
    Skew matrix of the chosen bivector at M.

    Parameters
    ----------
    M : GrassmannPoint or nested list
        Full-rank k x n rational matrix.
    method : str
        Key of BIVECTORS: "chi_standard", "chi_twisted", "cartan", "b_prime_st"
        or "fo_massey".
    complement : list of vectors, optional
        Basis of the kernel of M to use instead of the canonical one.

    Raises
    ------
    RankDeficient
        If M does not have full row rank.
    ParameterError
        For an unknown method.
    """
    M = as_point(M)
    if method not in BIVECTORS:
        raise ParameterError(f"unknown bivector method {method!r}, choose from {sorted(BIVECTORS)}")
    if complement is None:
        complement = kernel_basis(M)
    complement = [tuple(as_fraction(x) for x in c) for c in complement]
    basis = tuple((a, c) for a in range(1, M.k + 1) for c in complement)
    form = BIVECTORS[method]
    matrix = tuple(
        tuple(form(c, M.rows[a2 - 1], c2, M.rows[a - 1]) for a2, c2 in basis)
        for a, c in basis
    )
    return SkewForm(basis, matrix)


def skew_rank(S):
    matrix = S.matrix if isinstance(S, SkewForm) else S
    return rank(matrix)

#%% leaves

def leaf_report(M):
    M = as_point(M)
    f = f_of_matrix(M)
    ell = length(f)
    p = summand_count(f)
    dim_X = M.k * (M.n - M.k) - ell
    predicted = dim_X - (p - 1)
    observed = skew_rank(bivector(M, "chi_twisted"))
    return {
        "f": list(f.window),
        "ell": ell,
        "p": p,
        "dim_X_f": dim_X,
        "predicted_leaf_dim": predicted,
        "bivector_rank": observed,
        "consistent": predicted == observed,
    }


def chart_cotangent_basis(M):
    """
    Kernel vectors c^(b), b = 1..n-k, dual to the chart coordinates z_ab:
    c^(b)_l = -Z_lb for l <= k, 1 at l = k+b, 0 elsewhere.
    """
    M = as_point(M)
    Z = M.chart()
    if Z is None:
        raise ParameterError("the leading k x k block is singular, M is outside the standard chart")
    k, n = M.k, M.n
    basis = []
    for b in range(n - k):
        c = [-Z[l][b] for l in range(k)] + [Fraction(0)] * (n - k)
        c[k + b] = Fraction(1)
        basis.append(tuple(c))
    return basis


def rotation_defect(M, method="chi_twisted"):
    """
    Difference between the bivector at the left column rotation of M and the
    bivector at M, with kernel bases matched by the same rotation.
    """
    M = as_point(M)
    rotated = [tuple(c[1:]) + (c[0],) for c in kernel_basis(M)]
    return bivector(M.rotate(1), method, complement=rotated) - bivector(M, method)
