#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Affine permutations of period n: bijections f of the integers with
f(i+n) = f(i) + n, stored through their window [f(1), ..., f(n)].
"""

#%% imports

import math
from dataclasses import dataclass, field
from functools import lru_cache

from positroids import config
from .binmat import BinaryPeriodicMatrix
from .errors import (
    DuplicateResidue,
    LimitExceeded,
    MismatchedParameters,
    NonIntegralBallNumber,
    NotPlus,
    NotStrictPlus,
    ParameterError,
)

#%% the permutation type

@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple
    k: int = field(init=False, compare=False)

    def __post_init__(self):
        window = tuple(int(x) for x in self.window)
        if self.n < 1:
            raise ParameterError(f"period must be positive, got {self.n}")
        if len(window) != self.n:
            raise ParameterError(f"window has {len(window)} entries, expected n={self.n}")
        residues = [x % self.n for x in window]
        if len(set(residues)) != self.n:
            raise DuplicateResidue(f"window {list(window)} repeats a residue mod {self.n}")
        displacement = sum(x - i for i, x in enumerate(window, start=1))
        if displacement % self.n:
            raise NonIntegralBallNumber(f"sum of f(i)-i is {displacement}, not a multiple of {self.n}")
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "k", displacement // self.n)

    def __call__(self, m):
        q, r = divmod(m - 1, self.n)
        return self.window[r] + self.n * q

    def __str__(self):
        return "[" + ",".join(map(str, self.window)) + "]"

    @property
    def is_plus(self):
        return all(x >= i for i, x in enumerate(self.window, start=1))

    @property
    def is_strict_plus(self):
        return all(x > i for i, x in enumerate(self.window, start=1))

    @property
    def is_bounded(self):
        return all(i <= x <= i + self.n for i, x in enumerate(self.window, start=1))

    def to_dict(self):
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_dict(cls, payload):
        return cls(int(payload["n"]), tuple(payload["window"]))


def perm_new(n, window):
    return AffinePermutation(n, tuple(window))


def splus(n, k):
    """s_+^k, the permutation i -> i + k."""
    return AffinePermutation(n, tuple(i + k for i in range(1, n + 1)))


def classify(f):
    return {
        "k": f.k,
        "bounded": f.is_bounded,
        "plus": f.is_plus,
        "strict_plus": f.is_strict_plus,
    }


def _require_plus(f):
    if not f.is_plus:
        raise NotPlus(f"{f} has some f(i) < i")


def length(f):
    """Number of pairs 1 <= i <= n, i < j with f(i) > f(j)."""
    _require_plus(f)
    horizon = (f.k + 1) * f.n
    count = 0
    for i in range(1, f.n + 1):
        fi = f(i)
        count += sum(1 for j in range(i + 1, i + horizon + 1) if f(j) < fi)
    return count


def compose_splus(f, m):
    """f o s_+^m, i.e. i -> f(i + m)."""
    return AffinePermutation(f.n, tuple(f(i + m) for i in range(1, f.n + 1)))

#%% dihedral action

def inverse(f):
    window = [0] * f.n
    for p in range(1, f.n + 1):
        q, r = divmod(f(p) - 1, f.n)
        ## f(p) = (r+1) + q*n, so f^{-1}(r+1) = p - q*n
        window[r] = p - q * f.n
    return AffinePermutation(f.n, tuple(window))


def rotate(f, m=1):
    """Conjugation by s_+^m: i -> f(i + m) - m. Matches rotating columns left by m."""
    return AffinePermutation(f.n, tuple(f(i + m) - m for i in range(1, f.n + 1)))


def reflect(f):
    """Conjugation of the inverse by i -> n+1-i. Matches reversing the column order."""
    g = inverse(f)
    n = f.n
    return AffinePermutation(n, tuple(n + 1 - g(n + 1 - i) for i in range(1, n + 1)))

#%% orbits

@dataclass(frozen=True)
class Orbit:
    """
    One orbit of the group generated by a strictly-plus permutation.

    The orbit is invariant under shifting by period * n, so it is recorded
    by its members in [1, period * n]; `rep` is the smallest of them, which is
    the smallest positive member.
    """

    n: int
    rep: int
    members_in_block: tuple
    period: int
    cycle_length: int

    @property
    def block_width(self):
        return self.period * self.n

    @property
    def char_vector(self):
        hits = set(self.members_in_block)
        return tuple(1 if m in hits else 0 for m in range(1, self.block_width + 1))

    def __contains__(self, m):
        return ((m - 1) % self.block_width) + 1 in self.members_in_block

    def count_in(self, start, stop):
        """Members m with start < m <= stop."""
        return sum(1 for m in range(start + 1, stop + 1) if m in self)

    def to_dict(self):
        return {
            "rep": self.rep,
            "period": self.period,
            "cycle_length": self.cycle_length,
            "char_block": list(self.char_vector),
        }


@dataclass(frozen=True)
class OrbitDecomposition:
    orbits: tuple
    classes: tuple

    @property
    def p(self):
        return len(self.classes)

    def to_dict(self):
        return {"orbits": [o.to_dict() for o in self.orbits], "p": self.p}


def orbit_decomposition(g):
    """
    Orbits of the group generated by g on the integers, and their classes
    under translation by n.

    Each cycle of g acting on residues mod n carries s = (sum of g(i) - i over
    the cycle) / n orbits, all translates of each other by multiples of n;
    s is their common period, so one cycle is one class.
    """
    if not g.is_strict_plus:
        raise NotStrictPlus(f"{g} has some g(i) <= i")
    n = g.n
    seen, classes = set(), []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cycle, x = [], start
        while True:
            cycle.append(x)
            seen.add(x)
            x = ((g(x) - 1) % n) + 1
            if x == start:
                break
        period = sum(g(i) - i for i in cycle) // n
        width = period * n
        base, x = [], start
        for _ in cycle:
            base.append(x)
            x = g(x)
        members = []
        for t in range(period):
            shifted = sorted(((m + t * n - 1) % width) + 1 for m in base)
            members.append(Orbit(n, shifted[0], tuple(shifted), period, len(cycle)))
        classes.append(tuple(sorted(members, key=lambda o: o.rep)))
    classes.sort(key=lambda c: c[0].rep)
    orbits = tuple(sorted((o for c in classes for o in c), key=lambda o: o.rep))
    return OrbitDecomposition(orbits, tuple(classes))


def summand_count(f):
    """p(f): the number of orbit classes of f o s_+."""
    _require_plus(f)
    return orbit_decomposition(compose_splus(f, 1)).p


def characteristic_matrix(f):
    """
    A_{f o s_+}: one row per orbit of f o s_+, each the indicator of the orbit,
    on a block of width lcm(periods) * n, rows in first-one order.
    """
    _require_plus(f)
    decomposition = orbit_decomposition(compose_splus(f, 1))
    H = math.lcm(*(o.period for o in decomposition.orbits))
    rows = [o.char_vector * (H // o.period) for o in decomposition.orbits]
    return BinaryPeriodicMatrix.from_rows(f.n, rows).canonical()

#%% enumeration

KINDS = ("bounded", "plus")


def enumerate_perms(n, k, kind="bounded", n_max=None):
    """
    All of B(k,n) (kind="bounded") or all plus permutations of ball number k
    (kind="plus"), in lexicographic window order.

    Parameters
    ----------
    n, k : int
        Period and ball number, 0 < k < n.
    kind : str
        "bounded" or "plus".
    n_max : int, optional
        Enumeration cap; defaults to `positroids.config.n_max`.

    Raises
    ------
    ParameterError
        For k outside (0, n) or an unknown kind.
    LimitExceeded
        If n exceeds the cap.
    """
    n_max = config.n_max if n_max is None else n_max
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
    if kind not in KINDS:
        raise ParameterError(f"kind must be one of {KINDS}, got {kind!r}")
    if n > n_max:
        raise LimitExceeded(f"n={n} exceeds the enumeration cap n_max={n_max}")

    cap = n if kind == "bounded" else k * n
    found, window, used = [], [], set()

    def extend(i, remaining):
        if i > n:
            if remaining == 0:
                found.append(AffinePermutation(n, tuple(window)))
            return
        for d in range(0, min(cap, remaining) + 1):
            if remaining - d > cap * (n - i):
                continue
            residue = (i + d) % n
            if residue in used:
                continue
            used.add(residue)
            window.append(i + d)
            extend(i + 1, remaining - d)
            window.pop()
            used.discard(residue)

    extend(1, k * n)
    return found

#%% Bruhat order

def _require_same_parameters(f, g):
    if f.n != g.n or f.k != g.k:
        raise MismatchedParameters(f"(n, k) differ: ({f.n}, {f.k}) vs ({g.n}, {g.k})")


def swap(f, i, j):
    """
    Swap the values at positions i and j, and at all their translates by n.
    Requires 1 <= i <= n < ..., i < j, j != i mod n and f(i) > f(j).
    """
    n = f.n
    if not 1 <= i <= n or j <= i or (j - i) % n == 0:
        raise ParameterError(f"invalid swap positions ({i}, {j}) for n={n}")
    if f(i) < f(j):
        raise ParameterError(f"swap needs f(i) > f(j), got f({i})={f(i)} < f({j})={f(j)}")
    window = list(f.window)
    q, r = divmod(j - 1, n)
    window[i - 1] = f(j)
    window[r] = f(i) - q * n
    return AffinePermutation(n, tuple(window))


def swaps_down(f):
    """Every permutation one swap below f (length strictly drops)."""
    horizon = (abs(f.k) + 1) * f.n
    result = []
    for i in range(1, f.n + 1):
        for j in range(i + 1, i + horizon + 1):
            if (j - i) % f.n and f(i) > f(j):
                result.append(swap(f, i, j))
    return result


class BruhatPoset:
    """
    The order generated by single swaps on one enumerated class of
    permutations (B(k,n) or the plus permutations of ball number k).
    """

    def __init__(self, n, k, kind="bounded", n_max=None):
        self.n, self.k, self.kind = n, k, kind
        self.elements = enumerate_perms(n, k, kind, n_max=n_max)
        members = set(self.elements)
        self.down = {f: frozenset(g for g in swaps_down(f) if g in members) for f in self.elements}
        self._below = {}

    def below(self, f):
        """All g <= f, f included."""
        if f not in self._below:
            result = {f}
            for g in self.down[f]:
                result |= self.below(g)
            self._below[f] = frozenset(result)
        return self._below[f]

    def leq(self, f, g):
        return f in self.below(g)

    def covers(self, f, g):
        if g not in self.down.get(f, ()):
            return False
        return not any(g in self.below(h) for h in self.down[f] if h != g)

    def minimum(self):
        minimal = [f for f in self.elements if not self.down[f]]
        return minimal[0] if len(minimal) == 1 else None


@lru_cache(maxsize=None)
def bruhat_poset(n, k, kind="bounded"):
    return BruhatPoset(n, k, kind)


def bruhat_leq(f, g):
    """f <= g in Bruhat order, decided by r(f) >= r(g) on the stored band."""
    from .rankmat import r_of_perm

    _require_same_parameters(f, g)
    _require_plus(f)
    _require_plus(g)
    return bool((r_of_perm(f).r_band() >= r_of_perm(g).r_band()).all())


def covers(f, g):
    """f covers g: g is one swap below f with nothing strictly in between."""
    _require_same_parameters(f, g)
    if f == g:
        return False
    kind = "bounded" if f.is_bounded and g.is_bounded else "plus"
    return bruhat_poset(f.n, f.k, kind).covers(f, g)
