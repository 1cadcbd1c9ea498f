#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import logging
import time

from rich.pretty import pretty_repr

from positroids.core import utils
from positroids.core.verify import SUITES, run_suites

#%% function

def verify(
    suite="all",
    config_path=None,
    seed=None,
    sample_count=None,
    n_max=None,
    workers=None,
    allow_slow=None,
    output=None,
    format=None,
    **kwargs,
):
    """
    Run invariant suites and write a pass/fail report listing every
    counterexample.

    Parameters
    ----------
    suite : str
        One of SUITES, or "all":
            - roundtrip: bundle and rank-matrix dictionaries invert each other, payloads round-trip
            - prop_end: length = dim End - p on all plus permutations
            - brackets: the bivector constructions agree at random points
            - ranks: bivector rank matches the predicted leaf dimension
            - jacobi: the chart bivector has vanishing Schouten bracket
            - axioms: rank matrices of bounded permutations satisfy the axioms
            - bruhat: swap closure agrees with the rank-matrix order
            - orbits, enumeration, matrices, dihedral, census
    config_path : str, optional
        YAML run config (see positroids_configs/verify.yml). Explicit
        arguments override it.
    seed, sample_count, n_max, workers : int, optional
        Scale of the run.
    allow_slow : bool, optional
        Accept an n_max above the hard cap.

    Returns
    -------
    dict
        {"suite", "passed", "failures", "seed", "config", "suites"}.

    Examples
    --------
        positroids_verify brackets --samples 100 --seed 7

    """

    run_config = utils.RunConfig.from_sources(
        config_path, seed=seed, sample_count=sample_count, n_max=n_max, workers=workers,
        allow_slow=allow_slow, output=output, format=format).apply()
    logger = logging.getLogger(__name__)
    logger.info(utils.pprint_fill_hbar(f"verify {suite}"))
    logger.info(pretty_repr(run_config.to_dict()))

    t0 = time.time()
    report = run_suites(suite, run_config)
    logger.info(f"{'PASS' if report['passed'] else 'FAIL'}: {report['failures']} failures in {time.time() - t0:.1f}s")

    if run_config.format == "csv":
        table = {"rows": [{key: result[key] for key in ("suite", "checked", "failures")} for result in report["suites"]]}
    else:
        table = report
    utils.write_report(table, utils.resolve_output(run_config.output, f"verify_{suite}", run_config.format), run_config.format)
    return report


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Run the invariant suites.")
    parser.add_argument("suite", nargs="?", default="all", choices=sorted(SUITES) + ["all"])
    utils.add_run_arguments(parser, sampling=True)
    return parser


def run(args):
    utils.restore_config(utils.start_logging)("verify", args.output, args.quiet)
    verify_cli = utils.exit_on_error(utils.restore_config(verify))
    report = verify_cli(**vars(args))
    return 0 if report["passed"] else 1


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
