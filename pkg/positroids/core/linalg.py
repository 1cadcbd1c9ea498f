#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exact linear algebra over the rationals.

Single values are `fractions.Fraction`; anything that needs elimination
(rank, reduced echelon form, kernels) goes through sympy's DomainMatrix over
QQ, which stays exact and picks fraction-free elimination for dense input.
"""

#%% imports

import numbers
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import ParameterError, RankDeficient

#%% scalars

def as_fraction(value):
    """
    Convert an integer, Fraction, sympy Rational or "p/q" string to Fraction.

    Raises
    ------
    ZeroDivisionError
        If a string literal has a zero denominator.
    ValueError
        If a string is not a rational literal.
    TypeError
        For floats and anything else that is not exactly rational.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, str):
        return Fraction(value.strip())
    if hasattr(value, "p") and hasattr(value, "q"):
        ## sympy Rational / Integer
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"not an exact rational: {value!r}")


def fraction_str(value):
    value = as_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_mul(A, B):
    cols = list(zip(*B))
    return [[dot(row, col) for col in cols] for row in A]

#%% elimination

def _domain_matrix(rows, ncols):
    elements = [[QQ(x.numerator, x.denominator) for x in map(as_fraction, row)] for row in rows]
    return DomainMatrix(elements, (len(elements), ncols), QQ)


def _to_fractions(dm):
    return [[Fraction(int(x.p), int(x.q)) for x in row] for row in dm.to_Matrix().tolist()]


def rank(rows):
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return 0
    return _domain_matrix(rows, len(rows[0])).rank()


def rref(rows):
    """Reduced row echelon form as Fraction rows, plus the 0-based pivot columns."""
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        return [list(row) for row in rows], ()
    reduced, pivots = _domain_matrix(rows, len(rows[0])).rref()
    return _to_fractions(reduced), tuple(pivots)


def nullspace(rows, ncols):
    """
    Basis of {a : rows · a = 0}, canonicalized as the reduced echelon form of
    the free-column solutions; vectors come out ordered by pivot.
    """
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    vectors = []
    for c in free:
        vector = [Fraction(0)] * ncols
        vector[c] = Fraction(1)
        for r, p in enumerate(pivots):
            vector[p] = -reduced[r][c]
        vectors.append(vector)
    if not vectors:
        return []
    canonical, _ = rref(vectors)
    return [tuple(v) for v in canonical if any(v)]

#%% points of the Grassmannian

@dataclass(frozen=True)
class GrassmannPoint:
    """
    A full-rank k x n rational matrix. Its rows span the point; its columns
    v_1..v_n are indexed 1-based and extended n-periodically.
    """

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in self.rows)
        if not rows or len({len(row) for row in rows}) != 1:
            raise ParameterError("matrix must be a non-empty rectangular array")
        k, n = len(rows), len(rows[0])
        if not 0 < k < n:
            raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
        if rank(rows) < k:
            raise RankDeficient(f"row rank below k={k}")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0])

    def column(self, i):
        c = (i - 1) % self.n
        return tuple(row[c] for row in self.rows)

    def columns(self, i, j):
        return [self.column(m) for m in range(i, j + 1)]

    def block_rank(self, i, j):
        """Rank of the cyclic column block v_i..v_j (0 for an empty block)."""
        if j < i:
            return 0
        return rank(list(zip(*self.columns(i, j))))

    def rotate(self, m=1):
        """Columns rotated left by m: the new i-th column is the old (i+m)-th."""
        return GrassmannPoint(tuple(zip(*[self.column(i + m) for i in range(1, self.n + 1)])))

    def reverse(self):
        return GrassmannPoint(tuple(tuple(reversed(row)) for row in self.rows))

    def act(self, G):
        """Left multiplication by an invertible k x k matrix."""
        return GrassmannPoint(tuple(map(tuple, mat_mul(G, self.rows))))

    def chart(self):
        """
        Z with M = G.[I_k | Z] when the leading k x k block is invertible,
        otherwise None.
        """
        reduced, pivots = rref(self.rows)
        if pivots != tuple(range(self.k)):
            return None
        return tuple(tuple(row[self.k:]) for row in reduced)

    def kernel(self):
        return nullspace(self.rows, self.n)

    def to_dict(self):
        return {"k": self.k, "n": self.n,
                "rows": [[fraction_str(x) for x in row] for row in self.rows]}

    @classmethod
    def from_dict(cls, payload):
        return cls(tuple(tuple(row) for row in payload["rows"]))
