#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import os

from positroids.core import utils
from positroids.core.affperm import (
    characteristic_matrix,
    classify,
    compose_splus,
    inverse,
    length,
    orbit_decomposition,
    perm_new,
    reflect,
    rotate,
)

#%% function

def _action_classify(f):
    return classify(f)


def _action_length(f):
    return {"ell": length(f)}


def _action_orbits(f):
    return orbit_decomposition(compose_splus(f, 1)).to_dict()


def _action_matrix(f):
    return {"A": characteristic_matrix(f).to_dict()}


def _action_rotate(f):
    return {"rotated": list(rotate(f).window)}


def _action_reflect(f):
    return {"reflected": list(reflect(f).window)}


def _action_inverse(f):
    return {"inverse": list(inverse(f).window)}


ACTIONS = {
    "classify": _action_classify,
    "length": _action_length,
    "orbits": _action_orbits,
    "matrix": _action_matrix,
    "rotate": _action_rotate,
    "reflect": _action_reflect,
    "inverse": _action_inverse,
}


def perm(
        action,
        window,
        config_path=None,
        output=None,
        format=None,
        **kwargs,
        ):
    """
    Single-permutation queries.

    Parameters
    ----------
    action : str
        One of ACTIONS: "classify" (k and the bounded/plus/strict-plus flags),
        "length", "orbits" (orbits of f o s_+ and p), "matrix" (the
        characteristic matrix of f o s_+), "rotate", "reflect" or "inverse".
    window : str
        "5,3,6,4", "[5,3,6,4]", {"n": 4, "window": [...]} or a file path.

    Raises
    ------
    DuplicateResidue, NonIntegralBallNumber
        For windows that are not affine permutations.
    NotPlus
        For length, orbits and matrix on a permutation with some f(i) < i.
    """

    run_config = utils.RunConfig.from_sources(config_path, output=output, format=format)
    text = utils.read_input(window) if window == "-" or os.path.isfile(window) else window
    values = utils.parse_window(text)
    f = perm_new(len(values), values)

    report = {"perm": f.to_dict(), "action": action, **ACTIONS[action](f)}
    utils.write_report(report, utils.resolve_output(run_config.output, f"perm_{action}", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Classify, measure and transform affine permutations.")
    parser.add_argument("action", choices=sorted(ACTIONS))
    parser.add_argument("window", help="Window ('5,3,6,4'), JSON payload, file path or '-' for stdin.")
    utils.add_run_arguments(parser)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("perm", args.output, args.quiet)
    perm_cli = utils.exit_on_error(utils.restore_config(perm))
    perm_cli(**vars(args))
    return 0


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
