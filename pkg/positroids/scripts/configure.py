#!/usr/bin/env python3
# -*- coding: utf-8 -*-

# imports

import argparse
import os

from positroids import config
from positroids.core import utils


def configure(
        output_dir=None,
        log_dir=None,
        seed=None,
        workers=None,
        create=False,
        **kwargs
        ):
    """
    Persist session settings for the positroids_* commands in
    ~/.positroids.yaml. Keys that are not given keep their stored value.

    Parameters
    ----------
    output_dir : str, optional
        Directory where reports are written when no explicit --output path is
        given (bare file names are placed there too).
    log_dir : str, optional
        Directory for one log file per command.
    seed : int, optional
        Default seed of the sampling suites.
    workers : int, optional
        Default number of worker processes.
    create : bool, optional
        Create missing directories. Defaults to False.

    Examples
    --------
        configure(output_dir="reports", seed=7, create=True)

    """

    for name, directory in (("output_dir", output_dir), ("log_dir", log_dir)):
        if directory is None:
            continue
        if not os.path.isdir(directory) and not create:
            print(f"{directory} does not exist (use --create)")
            return
        elif not os.path.isdir(directory) and create:
            os.makedirs(directory)
            print(f"created {name}: {directory}")
        else:
            print(f"found {name}: {directory}")

    stored = utils.load_yaml(utils.CONFIG_PATH) if os.path.isfile(utils.CONFIG_PATH) else {}
    updates = {"output_dir": output_dir, "log_dir": log_dir, "seed": seed, "workers": workers}
    stored.update({key: value for key, value in updates.items() if value is not None})

    for key, value in stored.items():
        setattr(config, key, value)

    utils.save_yaml(stored, utils.CONFIG_PATH)
    print(f"saved {utils.CONFIG_PATH}:")
    for key, value in sorted(stored.items()):
        print(f"- {key}: {value}")

    return stored


def build_parser(parser=None):
    parser = parser or argparse.ArgumentParser(description="Store default settings in ~/.positroids.yaml.")
    parser.add_argument("--output-dir", type=str, default=None)
    parser.add_argument("--log-dir", type=str, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--create", action="store_true")
    return parser


def run(args):
    configure(**vars(args))
    return 0


def cli():

    args = build_parser().parse_args()
    raise SystemExit(run(args))

if __name__ == "__main__":
    cli()
