#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import json
import logging
import os

from rich.pretty import pretty_repr

from positroids.core import utils
from positroids.core.affperm import perm_new
from positroids.core.bundles import (
    A_of_bundle,
    BundleType,
    bundle_report,
    end_dim,
    f_of_A,
    membership,
)
from positroids.core.errors import ParseError

#%% function

def _bundle_type_report(B):
    flags = membership(B)
    report = {"bundle": B.to_dict(), "rank": B.rank, "end_dim": end_dim(B), "membership": flags}
    if flags["in_U_plus"]:
        A = A_of_bundle(B)
        report["A"] = A.to_dict()
        report["perm"] = f_of_A(A).to_dict()
    return report


def bundle(
        perm,
        config_path=None,
        output=None,
        format=None,
        **kwargs,
        ):
    """
    Bundle-side report for a plus affine permutation: the summands of V_f, the
    block of A(V_f), p(f), length, dim End(V_f), the membership flags and
    whether length = dim End - p holds.

    Parameters
    ----------
    perm : str
        A window such as "5,3,6,4" or "[5,3,6,4]", a JSON object
        {"n": 4, "window": [5,3,6,4]}, or a path to a file holding either.
        A bundle JSON {"n": .., "summands": [..]} is accepted as well and gets
        its dimension and membership report, plus f_A when it lies in U+.
    config_path : str, optional
        YAML run config; only the `run` section (format, output) is read here.
    output, format : str, optional
        Report destination and format.

    Raises
    ------
    ParseError
        If the window cannot be read.
    NotPlus
        If some f(i) < i.

    Examples
    --------
        positroids_bundle 5,3,6,4

    """

    run_config = utils.RunConfig.from_sources(config_path, output=output, format=format)
    logger = logging.getLogger(__name__)

    text = utils.read_input(perm) if perm == "-" or os.path.isfile(perm) else perm
    payload = None
    if text.strip().startswith("{"):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None

    if isinstance(payload, dict) and "summands" in payload:
        try:
            B = BundleType.from_dict(payload)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed bundle payload: {exc}", 1, 1) from None
        report = _bundle_type_report(B)
    else:
        window = utils.parse_window(text)
        f = perm_new(len(window), window)
        report = bundle_report(f)
    logger.info(pretty_repr({key: report[key] for key in ("end_dim", "membership") if key in report}))

    utils.write_report(report, utils.resolve_output(run_config.output, "bundle", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Bundle report for a plus affine permutation.")
    parser.add_argument("perm", help="Window ('5,3,6,4'), JSON payload, file path or '-' for stdin.")
    utils.add_run_arguments(parser)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("bundle", args.output, args.quiet)
    bundle_cli = utils.exit_on_error(utils.restore_config(bundle))
    bundle_cli(**vars(args))
    return 0


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
