#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import logging
import time

from positroids.core import utils
from positroids.core.affperm import classify, enumerate_perms
from positroids.core.bundles import stratum_census

#%% function

def enumerate_strata(
        n,
        k,
        kind="bounded",
        census=True,
        config_path=None,
        n_max=None,
        allow_slow=None,
        output=None,
        format=None,
        **kwargs,
        ):
    """
    List B(k,n) (or all plus permutations of ball number k) as a table.

    Parameters
    ----------
    n, k : int
        Period and ball number, 0 < k < n.
    kind : str, optional
        "bounded" (default) or "plus".
    census : bool, optional
        For kind="bounded", add the stratum columns: ell, p, dim_X_f,
        leaf_dim, symplectic and end_dim. Otherwise only the classification
        flags are listed.
    n_max : int, optional
        Enumeration cap; defaults to positroids.config.n_max.
    allow_slow : bool, optional
        Accept an n_max above the hard cap.

    Raises
    ------
    LimitExceeded
        If n is above the cap.

    Examples
    --------
        positroids_enumerate 4 2 --format csv --output census_2_4.csv

    """

    run_config = utils.RunConfig.from_sources(config_path, n_max=n_max, allow_slow=allow_slow,
                                              output=output, format=format).apply()
    logger = logging.getLogger(__name__)
    logger.info(utils.pprint_fill_hbar(f"enumerating {kind} permutations, n={n}, k={k}"))

    t0 = time.time()
    if census and kind == "bounded":
        rows = stratum_census(n, k, n_max=run_config.n_max)
    else:
        rows = [{"window": str(f), **classify(f)} for f in enumerate_perms(n, k, kind, n_max=run_config.n_max)]
    logger.info(f"found {len(rows)} permutations in {time.time() - t0:.2f}s")

    report = {"n": n, "k": k, "kind": kind, "count": len(rows), "rows": rows}
    utils.write_report(report, utils.resolve_output(run_config.output, f"enumerate_{kind}_{k}_{n}", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Enumerate bounded or plus affine permutations.")
    parser.add_argument("n", type=int)
    parser.add_argument("k", type=int)
    parser.add_argument("--kind", type=str, default="bounded", choices=["bounded", "plus"])
    parser.add_argument("--no-census", dest="census", action="store_false", help="Only list windows and flags.")
    parser.add_argument("--n-max", type=int, default=None)
    parser.add_argument("--allow-slow", action="store_true", default=None)
    utils.add_run_arguments(parser)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("enumerate", args.output, args.quiet)
    enumerate_cli = utils.exit_on_error(utils.restore_config(enumerate_strata))
    enumerate_cli(**vars(args))
    return 0


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
