#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import logging

from rich.pretty import pretty_repr

from positroids.core import utils
from positroids.core.linalg import GrassmannPoint
from positroids.core.poisson import BIVECTORS, bivector, leaf_report
from positroids.core.rankmat import r_of_matrix

#%% function

def stratify(
        matrix_file="-",
        config_path=None,
        output=None,
        format=None,
        method=None,
        **kwargs,
        ):
    """
    Locate a point of G(k,n) in the positroid stratification and compare the
    rank of the Poisson bivector there with the leaf dimension predicted from
    its permutation.

    Parameters
    ----------
    matrix_file : str
        Path to a k x n rational matrix, or "-" for stdin. Either a JSON array
        of arrays (integers or "p/q" strings) or a text grid, one row per line.
    config_path : str, optional
        YAML run config; only the `run` section (format, output) is read here.
    output : str, optional
        Report path; stdout when omitted.
    format : str, optional
        "json", "csv" or "text".
    method : str, optional
        If given, also include the bivector matrix computed with this method
        (one of BIVECTORS).

    Returns
    -------
    dict
        The leaf report (f, ell, p, dim_X_f, predicted_leaf_dim,
        bivector_rank, consistent) plus the permutation window, the r-band
        and the parsed matrix.

    Raises
    ------
    ParseError
        If the matrix does not parse; carries line and column.
    RankDeficient
        If the rows are linearly dependent.

    Examples
    --------
        echo '[[1,0,0,0],[0,1,1,0]]' | positroids_stratify -

    """

    run_config = utils.RunConfig.from_sources(config_path, output=output, format=format)
    logger = logging.getLogger(__name__)

    M = GrassmannPoint(tuple(map(tuple, utils.parse_matrix(utils.read_input(matrix_file)))))
    logger.info(f"parsed a point of G({M.k},{M.n})")

    report = leaf_report(M)
    r = r_of_matrix(M)
    report.update({
        "window": f"[{','.join(map(str, report['f']))}]",
        "r_band": r.r_band().tolist(),
        "h_band": r.h_band.tolist(),
        "matrix": M.to_dict(),
    })
    if method:
        report["bivector"] = {"method": method, **bivector(M, method).to_dict()}
    logger.info(pretty_repr({key: report[key] for key in ("f", "ell", "p", "bivector_rank", "consistent")}))

    utils.write_report(report, utils.resolve_output(run_config.output, "stratify", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Stratum and leaf report for a rational matrix.")
    parser.add_argument("matrix_file", nargs="?", default="-", help="Matrix file, '-' for stdin.")
    parser.add_argument("--method", type=str, default=None, choices=sorted(BIVECTORS),
                        help="Also print the bivector matrix computed with this method.")
    utils.add_run_arguments(parser)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("stratify", args.output, args.quiet)
    stratify_cli = utils.exit_on_error(utils.restore_config(stratify))
    stratify_cli(**vars(args))
    return 0


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
