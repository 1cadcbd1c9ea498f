#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import numpy as np

from .errors import InvalidColumns


class BinaryPeriodicMatrix:
    """
    One fundamental block of a column-periodic 0/1 matrix with `n_rows` rows.

    The block has width H*n; column j (1-based, any integer) of the infinite
    matrix is column ((j-1) mod H*n) + 1 of the block. Characteristic matrices
    and the matrices A(V) of bundles both live here.

    Parameters
    ----------
    n : int
        Number of components of the cycle, the shift that permutes rows.
    block : array-like
        0/1 entries of shape (rows, H*n).
    """

    def __init__(self, n, block):
        block = np.array(block, dtype=np.int8)
        if block.ndim != 2 or block.shape[1] == 0 or block.shape[1] % n:
            raise InvalidColumns(f"block width must be a positive multiple of n={n}, got shape {block.shape}")
        if not np.isin(block, (0, 1)).all():
            raise InvalidColumns("entries must be 0 or 1")
        self.n = n
        self.block = block
        self.block.setflags(write=False)

    @classmethod
    def from_rows(cls, n, rows):
        return cls(n, np.array([list(row) for row in rows], dtype=np.int8))

    @property
    def n_rows(self):
        return self.block.shape[0]

    @property
    def width(self):
        return self.block.shape[1]

    def row(self, r):
        return tuple(int(x) for x in self.block[r])

    def rows(self):
        return [self.row(r) for r in range(self.n_rows)]

    def entry(self, r, j):
        return int(self.block[r, (j - 1) % self.width])

    def column_index(self, j):
        """Row holding the 1 of column j; assumes standard-basis columns."""
        return int(np.argmax(self.block[:, (j - 1) % self.width]))

    def has_standard_columns(self):
        return bool((self.block.sum(axis=0) == 1).all())

    def rows_nonzero(self):
        return bool((self.block.sum(axis=1) > 0).all())

    def is_shift_compatible(self):
        """Column j+n is a fixed row permutation of column j, for every j."""
        shifted = np.roll(self.block, -self.n, axis=1)
        images = {}
        for j in range(self.width):
            src = tuple(self.block[:, j])
            dst = tuple(shifted[:, j])
            if images.setdefault(src, dst) != dst:
                return False
        return len(set(images.values())) == len(images)

    def validate(self):
        if not self.has_standard_columns():
            raise InvalidColumns("every column must be a standard basis vector")
        if not self.rows_nonzero():
            raise InvalidColumns("every row must be nonzero")
        if not self.is_shift_compatible():
            raise InvalidColumns("shifting columns by n must permute the rows")
        return self

    def canonical(self):
        """Rows sorted by the column of their first 1; zero rows last."""
        def first_one(row):
            hits = np.flatnonzero(row)
            return int(hits[0]) if hits.size else self.width

        order = sorted(range(self.n_rows), key=lambda r: (first_one(self.block[r]), self.row(r)))
        return BinaryPeriodicMatrix(self.n, self.block[order])

    def widen(self, width):
        """Repeat the block up to `width` columns (a multiple of the current width)."""
        if width % self.width:
            raise InvalidColumns(f"cannot widen {self.width} columns to {width}")
        return BinaryPeriodicMatrix(self.n, np.tile(self.block, (1, width // self.width)))

    def __eq__(self, other):
        if not isinstance(other, BinaryPeriodicMatrix):
            return NotImplemented
        return self.n == other.n and self.block.shape == other.block.shape and bool((self.block == other.block).all())

    def __hash__(self):
        return hash((self.n, self.block.shape, self.block.tobytes()))

    def __repr__(self):
        return f"BinaryPeriodicMatrix(n={self.n}, rows={self.rows()})"

    def to_dict(self):
        return {"n": self.n, "rows": [list(row) for row in self.rows()]}

    @classmethod
    def from_dict(cls, payload):
        return cls.from_rows(payload["n"], payload["rows"])
