#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import json
import os

from positroids.core import utils
from positroids.core.affperm import perm_new
from positroids.core.errors import ParameterError, ParseError
from positroids.core.linalg import GrassmannPoint
from positroids.core.rankmat import (
    CyclicRankMatrix,
    check_axioms,
    perm_of_r,
    r_of_matrix,
    r_of_perm,
)

#%% function

def _read_rank_matrix(source):
    text = utils.read_input(source)
    try:
        return CyclicRankMatrix.from_dict(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"rank matrix needs n, k and h_band: {exc}", 1, 1) from None


def rankmat(
        action,
        source,
        from_matrix=False,
        config_path=None,
        output=None,
        format=None,
        **kwargs,
        ):
    """
    Build, check and invert cyclic rank matrices.

    Parameters
    ----------
    action : str
        "build": r-matrix of a plus permutation (or, with `from_matrix`, of a
        rational matrix read from a file).
        "check": run the axiom checker on {"n", "k", "h_band"} JSON.
        "extract": recover the bounded affine permutation from such JSON.
    source : str
        Window or file for "build"; JSON file or "-" otherwise.
    from_matrix : bool, optional
        Read `source` as a k x n matrix for "build".

    Returns
    -------
    dict
        For "check", `passed` is False when an axiom fails; the CLI then exits
        with status 1.

    Raises
    ------
    AxiomViolation
        From "extract", naming the first failing axiom and its (i, j).
    """

    run_config = utils.RunConfig.from_sources(config_path, output=output, format=format)

    if action == "build":
        if from_matrix:
            M = GrassmannPoint(tuple(map(tuple, utils.parse_matrix(utils.read_input(source)))))
            r = r_of_matrix(M)
        else:
            text = utils.read_input(source) if source == "-" or os.path.isfile(source) else source
            values = utils.parse_window(text)
            r = r_of_perm(perm_new(len(values), values))
        report = {**r.to_dict(), "r_band": r.r_band().tolist()}
    elif action == "check":
        report = check_axioms(_read_rank_matrix(source)).to_dict()
    elif action == "extract":
        report = perm_of_r(_read_rank_matrix(source)).to_dict()
    else:
        raise ParameterError(f"unknown action {action!r}")

    utils.write_report(report, utils.resolve_output(run_config.output, f"rankmat_{action}", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Cyclic rank matrices: build, check, extract.")
    parser.add_argument("action", choices=["build", "check", "extract"])
    parser.add_argument("source", nargs="?", default="-", help="Window, file path or '-' for stdin.")
    parser.add_argument("--from-matrix", action="store_true", help="For build: read a rational matrix instead of a window.")
    utils.add_run_arguments(parser)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("rankmat", args.output, args.quiet)
    rankmat_cli = utils.exit_on_error(utils.restore_config(rankmat))
    report = rankmat_cli(**vars(args))
    return 0 if report.get("passed", True) else 1


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
