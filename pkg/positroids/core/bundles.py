#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Combinatorial model of vector bundles on the Kodaira cycle C^n.

An indecomposable summand of rank r (multiplicity one) is recorded by its
degree vector d of length r*n, up to the shift tau (rotation by n), and a
tag standing in for its continuous parameter. Only whether two tags agree
ever matters.
"""

#%% imports

import math
from dataclasses import dataclass

from .affperm import (
    AffinePermutation,
    classify,
    compose_splus,
    enumerate_perms,
    length,
    orbit_decomposition,
)
from .binmat import BinaryPeriodicMatrix
from .errors import InvalidSummand, MismatchedN, NotPlus

#%% degree vectors

def tau(d, n, times=1):
    """(tau d)_i = d_{i+n}."""
    shift = (n * times) % len(d)
    return tuple(d[shift:]) + tuple(d[:shift])


def is_periodic(d, n, rank):
    """True if d repeats a block of m*n entries for some proper divisor m of rank."""
    for m in range(1, rank):
        if rank % m == 0 and tuple(d) == tuple(d[: m * n]) * (rank // m):
            return True
    return False


def shift_equivalent(d1, d2, n):
    if len(d1) != len(d2):
        return False
    return any(tau(d1, n, s) == tuple(d2) for s in range(len(d1) // n))


@dataclass(frozen=True)
class Summand:
    n: int
    rank: int
    d: tuple
    lambda_tag: object = None

    def __post_init__(self):
        d = tuple(int(x) for x in self.d)
        if self.rank < 1:
            raise InvalidSummand(f"rank must be positive, got {self.rank}")
        if len(d) != self.rank * self.n:
            raise InvalidSummand(f"degree vector has {len(d)} entries, expected rank*n = {self.rank * self.n}")
        if is_periodic(d, self.n, self.rank):
            raise InvalidSummand(f"degree vector {list(d)} is periodic, the summand would decompose")
        object.__setattr__(self, "d", d)

    @property
    def degree(self):
        return sum(self.d)

    def to_dict(self):
        payload = {"rank": self.rank, "d": list(self.d)}
        if self.lambda_tag is not None:
            payload["lambda"] = str(self.lambda_tag)
        return payload


@dataclass(frozen=True)
class BundleType:
    n: int
    summands: tuple

    def __post_init__(self):
        summands = tuple(self.summands)
        for s in summands:
            if s.n != self.n:
                raise MismatchedN(f"summand on C^{s.n} inside a bundle on C^{self.n}")
        for a in range(len(summands)):
            for b in range(a + 1, len(summands)):
                s, t = summands[a], summands[b]
                if s.lambda_tag == t.lambda_tag and shift_equivalent(s.d, t.d, self.n):
                    raise InvalidSummand(f"summands {a + 1} and {b + 1} are isomorphic")
        object.__setattr__(self, "summands", summands)

    @property
    def rank(self):
        return sum(s.rank for s in self.summands)

    def to_dict(self):
        return {"n": self.n, "summands": [s.to_dict() for s in self.summands]}

    @classmethod
    def from_dict(cls, payload):
        n = int(payload["n"])
        summands = [Summand(n, int(s["rank"]), tuple(s["d"]), s.get("lambda")) for s in payload["summands"]]
        return cls(n, tuple(summands))

#%% A(V) and the permutation dictionary

def A_of_bundle(B):
    """
    Rows d, tau d, ..., tau^{r-1} d for every summand, each repeated to width
    lcm(ranks) * n; rows in first-one order.
    """
    if not B.summands:
        raise InvalidSummand("bundle has no summands")
    for s in B.summands:
        if not set(s.d) <= {0, 1}:
            raise InvalidSummand(f"degree vector {list(s.d)} is not 0/1")
    H = math.lcm(*(s.rank for s in B.summands))
    rows = []
    for s in B.summands:
        for t in range(s.rank):
            rows.append(tau(s.d, B.n, t) * (H // s.rank))
    return BinaryPeriodicMatrix.from_rows(B.n, rows).canonical()


def f_of_A(A):
    """f_A(i) = min{j >= i : v_j = v_{i-1}}."""
    A.validate()
    window = []
    for i in range(1, A.n + 1):
        target = A.column_index(i - 1)
        j = i
        while A.column_index(j) != target:
            j += 1
        window.append(j)
    return AffinePermutation(A.n, tuple(window))


def bundle_of_perm(f):
    """One summand per orbit class of f o s_+: rank = period, d = char vector."""
    if not f.is_plus:
        raise NotPlus(f"{f} has some f(i) < i")
    decomposition = orbit_decomposition(compose_splus(f, 1))
    summands = [
        Summand(f.n, cls[0].period, cls[0].char_vector, lambda_tag=f"lambda_{c}")
        for c, cls in enumerate(decomposition.classes, start=1)
    ]
    return BundleType(f.n, tuple(summands))

#%% dimensions

def theta(d, same_lambda=False):
    """
    h^0 of the indecomposable bundle with degree vector d.

    d = 0 gives 1 or 0 depending on the parameter; a nonnegative d gives its
    total degree; otherwise each maximal cyclic run of nonnegative entries
    contributes max(run sum - 1, 0).
    """
    d = list(d)
    if not any(d):
        return 1 if same_lambda else 0
    if min(d) >= 0:
        return sum(d)
    first = next(i for i, x in enumerate(d) if x < 0)
    total, run = 0, 0
    for x in d[first + 1:] + d[: first + 1]:
        if x < 0:
            total += max(run - 1, 0)
            run = 0
        else:
            run += x
    return total


def hom_dim(B1, B2):
    if B1.n != B2.n:
        raise MismatchedN(f"summands live on C^{B1.n} and C^{B2.n}")
    n = B1.n
    h, g = math.lcm(B1.rank, B2.rank), math.gcd(B1.rank, B2.rank)
    d1 = B1.d * (h // B1.rank)
    d2 = B2.d * (h // B2.rank)
    total = 0
    for ell in range(g):
        diff = [a - b for a, b in zip(tau(d2, n, ell), d1)]
        same = B1 == B2 and not any(diff)
        total += theta(diff, same_lambda=same)
    return total


def end_dim(B):
    return sum(hom_dim(s, t) for s in B.summands for t in B.summands)


def membership(B):
    in_plus = bool(B.summands) and all(any(s.d) and set(s.d) <= {0, 1} for s in B.summands)
    in_plus_plus = False
    if in_plus:
        A = A_of_bundle(B)
        in_plus = A.has_standard_columns()
        in_plus_plus = in_plus and f_of_A(A).is_bounded
    return {"in_U_plus": in_plus, "in_U_plus_plus": in_plus_plus}

#%% reports

def bundle_report(f):
    B = bundle_of_perm(f)
    ell, p, dim_end = length(f), len(B.summands), end_dim(B)
    return {
        "perm": f.to_dict(),
        "classification": classify(f),
        "bundle": B.to_dict(),
        "A": A_of_bundle(B).to_dict(),
        "p": p,
        "ell": ell,
        "end_dim": dim_end,
        "membership": membership(B),
        "identity_holds": ell == dim_end - p,
    }


def stratum_census(n, k, n_max=None):
    """One row per f in B(k,n) with its stratum and leaf dimensions."""
    rows = []
    for f in enumerate_perms(n, k, "bounded", n_max=n_max):
        ell = length(f)
        B = bundle_of_perm(f)
        p = len(B.summands)
        dim_X = k * (n - k) - ell
        rows.append({
            "window": str(f),
            "ell": ell,
            "p": p,
            "dim_X_f": dim_X,
            "leaf_dim": dim_X - (p - 1),
            "symplectic": p == 1,
            "end_dim": end_dim(B),
        })
    return rows
