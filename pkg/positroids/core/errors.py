#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exceptions raised by the positroids core. Everything derives from ValueError,
so callers that only care about bad input can keep catching that.
"""


class PositroidError(ValueError):
    pass


class ParameterError(PositroidError):
    pass


class ConfigError(PositroidError):
    pass


class ParseError(PositroidError):
    """Malformed matrix or permutation input. `line` and `column` are 1-based."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


## affine permutations

class DuplicateResidue(PositroidError):
    pass


class NonIntegralBallNumber(PositroidError):
    pass


class NotPlus(PositroidError):
    pass


class NotStrictPlus(PositroidError):
    pass


class LimitExceeded(PositroidError):
    pass


class MismatchedParameters(PositroidError):
    pass


## rank matrices

class EmptyWindow(PositroidError):
    pass


class InvalidColumns(PositroidError):
    pass


class AxiomViolation(PositroidError):
    def __init__(self, axiom, i, j, detail=""):
        self.axiom = axiom
        self.i = i
        self.j = j
        super().__init__(f"axiom {axiom} fails at (i, j) = ({i}, {j}) {detail}".rstrip())


class NoPivot(PositroidError):
    pass


class RankDeficient(PositroidError):
    pass


## bundles

class InvalidSummand(PositroidError):
    pass


class MismatchedN(PositroidError):
    pass


## poisson

class OrthogonalityViolation(PositroidError):
    pass
