#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Cyclic rank matrices r_ij and their h-form h_ij = j - i + 1 - r_ij.

Only the band i = 1..n, j = i-1..i+n-1 is stored; everything else follows
from periodicity (r_{i+n,j+n} = r_ij) and the closed forms r_ij = j - i + 1
for j < i and r_ij = k for j - i >= n - 1.
"""

#%% imports

from dataclasses import dataclass, field

import numpy as np

from .affperm import AffinePermutation, characteristic_matrix
from .errors import (
    AxiomViolation,
    EmptyWindow,
    InvalidColumns,
    NoPivot,
    NotPlus,
    ParameterError,
)
from .linalg import GrassmannPoint

#%% the matrix type

class CyclicRankMatrix:
    """
    Parameters
    ----------
    n, k : int
        Period and rank, 0 < k < n.
    h_band : array-like
        Shape (n, n+1); entry [i-1, c] is h_{i, i-1+c}.
    """

    def __init__(self, n, k, h_band):
        if not 0 < k < n:
            raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
        band = np.array(h_band, dtype=np.int64)
        if band.shape != (n, n + 1):
            raise ParameterError(f"h_band must have shape {(n, n + 1)}, got {band.shape}")
        self.n, self.k = n, k
        self.h_band = band
        self.h_band.setflags(write=False)

    @classmethod
    def from_r_band(cls, n, k, r_band):
        r_band = np.array(r_band, dtype=np.int64)
        return cls(n, k, np.arange(n + 1)[None, :] - r_band)

    def h(self, i, j):
        q = (i - 1) // self.n
        i, j = i - q * self.n, j - q * self.n
        c = j - i + 1
        if c < 0:
            return 0
        if c > self.n:
            return c - self.k
        return int(self.h_band[i - 1, c])

    def r(self, i, j):
        return (j - i + 1) - self.h(i, j)

    def r_band(self):
        return np.arange(self.n + 1)[None, :] - self.h_band

    def __eq__(self, other):
        if not isinstance(other, CyclicRankMatrix):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and bool((self.h_band == other.h_band).all())

    def __repr__(self):
        return f"CyclicRankMatrix(n={self.n}, k={self.k}, h_band={self.h_band.tolist()})"

    def to_dict(self):
        return {"n": self.n, "k": self.k, "h_band": self.h_band.tolist()}

    @classmethod
    def from_dict(cls, payload):
        return cls(int(payload["n"]), int(payload["k"]), payload["h_band"])

#%% h from binary periodic matrices

def s_window(d, i, j):
    """max(d_{i-1} + d_i + ... + d_j - 1, 0), indices periodic in len(d), 1-based."""
    if j < i:
        raise EmptyWindow(f"window ({i}, {j}) is empty")
    period = len(d)
    total = sum(d[(m - 1) % period] for m in range(i - 1, j + 1))
    return max(total - 1, 0)


def _check_columns(A):
    if not A.has_standard_columns():
        raise InvalidColumns("every column must be a standard basis vector")
    if not A.rows_nonzero():
        raise InvalidColumns("every row must be nonzero")


def h_of_A(A, i, j):
    _check_columns(A)
    k = A.n_rows - 1
    if j < i:
        return 0
    if j - i >= A.n - 1:
        return j - i + 1 - k
    return sum(s_window(row, i, j) for row in A.rows())


def h_band_of_A(A):
    _check_columns(A)
    n = A.n
    return [[h_of_A(A, i, i - 1 + c) for c in range(n + 1)] for i in range(1, n + 1)]


def r_of_perm(f):
    if not f.is_plus:
        raise NotPlus(f"{f} has some f(i) < i")
    return CyclicRankMatrix(f.n, f.k, h_band_of_A(characteristic_matrix(f)))


def r_of_perm_direct(f):
    """r_ij = #{a in [i, j] : f(a) > j}, read off the permutation directly."""
    n = f.n
    band = [[sum(1 for a in range(i, i + c) if f(a) > i - 1 + c) for c in range(n + 1)]
            for i in range(1, n + 1)]
    return CyclicRankMatrix.from_r_band(n, f.k, band)

#%% axioms and extraction

@dataclass
class AxiomReport:
    n: int
    k: int
    violations: list = field(default_factory=list)
    checked: tuple = ("C'1", "C'2", "C3", "C4", "C5")

    @property
    def passed(self):
        return not self.violations

    def failed_axioms(self):
        return sorted({v["axiom"] for v in self.violations})

    def to_dict(self):
        failed = set(self.failed_axioms())
        return {
            "passed": self.passed,
            "axioms": {name: name not in failed for name in self.checked},
            "violations": list(self.violations),
        }


def check_axioms(r):
    report = AxiomReport(r.n, r.k)

    def fail(axiom, i, j, detail):
        report.violations.append({"axiom": axiom, "i": i, "j": j, "detail": detail})

    n, k = r.n, r.k
    for i in range(1, n + 1):
        if r.r(i, i - 1) != 0:
            fail("C'1", i, i - 1, f"r = {r.r(i, i - 1)}, expected 0")
    for i in range(1, n + 1):
        if r.r(i, i + n - 1) != k:
            fail("C'2", i, i + n - 1, f"r = {r.r(i, i + n - 1)}, expected {k}")
    for i in range(1, n + 1):
        for j in range(i, i + n + 1):
            down, left = r.r(i, j) - r.r(i + 1, j), r.r(i, j) - r.r(i, j - 1)
            if down not in (0, 1) or left not in (0, 1):
                fail("C3", i, j, f"r_ij - r_(i+1)j = {down}, r_ij - r_i(j-1) = {left}")
    for i in range(1, n + 1):
        for j in range(i, i + n + 1):
            corner = r.r(i + 1, j - 1)
            if corner == r.r(i + 1, j) == r.r(i, j - 1) and r.r(i, j) != corner:
                fail("C4", i, j, f"r_ij = {r.r(i, j)}, neighbours all {corner}")
    ## C5 holds by construction: only one period of rows is stored
    return report


def perm_of_r(r):
    """
    The bounded affine permutation with f(i) = the j in [i, i+n] where
    r_ij = r_{i+1,j} = r_{i,j-1} > r_{i+1,j-1}.
    """
    report = check_axioms(r)
    if not report.passed:
        first = report.violations[0]
        raise AxiomViolation(first["axiom"], first["i"], first["j"], first["detail"])
    window = []
    for i in range(1, r.n + 1):
        for j in range(i, i + r.n + 1):
            if r.r(i, j) == r.r(i + 1, j) == r.r(i, j - 1) > r.r(i + 1, j - 1):
                window.append(j)
                break
        else:
            raise NoPivot(f"no j in [{i}, {i + r.n}] realizes the rank pattern for i={i}")
    return AffinePermutation(r.n, tuple(window))

#%% from matrices

def as_point(M):
    return M if isinstance(M, GrassmannPoint) else GrassmannPoint(tuple(map(tuple, M)))


def f_of_matrix(M):
    """
    f_M(i) = min{j >= i : v_i in span(v_{i+1}, ..., v_j)}; a zero column
    gives f(i) = i.
    """
    M = as_point(M)
    window = []
    for i in range(1, M.n + 1):
        if not any(M.column(i)):
            window.append(i)
            continue
        for j in range(i + 1, i + M.n + 1):
            if M.block_rank(i + 1, j) == M.block_rank(i, j):
                window.append(j)
                break
    return AffinePermutation(M.n, tuple(window))


def r_of_matrix(M):
    M = as_point(M)
    band = [[M.block_rank(i, i - 1 + c) for c in range(M.n + 1)] for i in range(1, M.n + 1)]
    return CyclicRankMatrix.from_r_band(M.n, M.k, band)
