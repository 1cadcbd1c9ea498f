#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import numpy as np

from positroids import config
from .errors import RankDeficient
from .linalg import GrassmannPoint, rank

#%% draws

def make_rng(seed=None):
    return np.random.default_rng(config.seed if seed is None else seed)


def _integer_matrix(rng, rows, cols, entry_range):
    R = config.entry_range if entry_range is None else entry_range
    return [[int(x) for x in row] for row in rng.integers(-R, R + 1, size=(rows, cols))]


def random_point(rng, k, n, entry_range=None):
    """Integer k x n matrix, entries uniform in [-R, R], redrawn until it has rank k."""
    while True:
        try:
            return GrassmannPoint(_integer_matrix(rng, k, n, entry_range))
        except RankDeficient:
            continue


def degenerate_point(rng, k, n, entry_range=None):
    """
    A full-rank point with forced zero and/or proportional columns, so that
    f_M lands off the big cell.
    """
    while True:
        rows = _integer_matrix(rng, k, n, entry_range)
        columns = [list(col) for col in zip(*rows)]
        n_zero = int(rng.integers(0, n - k + 1))
        order = [int(i) for i in rng.permutation(n)]
        for i in order[:n_zero]:
            columns[i] = [0] * k
        if (n_zero == 0 or rng.random() < 0.5) and n - n_zero >= 2:
            alive = order[n_zero:]
            src, dst = alive[0], alive[1]
            scale = int(rng.choice([-2, -1, 1, 2]))
            columns[dst] = [scale * x for x in columns[src]]
        rows = [list(row) for row in zip(*columns)]
        try:
            return GrassmannPoint(rows)
        except RankDeficient:
            continue


def sample_points(rng, k, n, count, degenerate_fraction=None):
    fraction = config.degenerate_fraction if degenerate_fraction is None else degenerate_fraction
    return [degenerate_point(rng, k, n) if rng.random() < fraction else random_point(rng, k, n)
            for _ in range(count)]


def random_invertible(rng, k, entry_range=None):
    while True:
        G = _integer_matrix(rng, k, k, entry_range)
        if rank(G) == k:
            return G
