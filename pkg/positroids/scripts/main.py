#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import argparse
import importlib

HELP = {
    "configure": "store default settings in ~/.positroids.yaml",
    "stratify": "stratum and leaf report for a rational matrix",
    "bundle": "bundle report for a plus affine permutation",
    "perm": "classify, measure and transform affine permutations",
    "rankmat": "build, check and invert cyclic rank matrices",
    "enumerate": "list bounded or plus permutations with their strata",
    "verify": "run the invariant suites",
}

## by import path, since positroids.scripts re-exports functions under the module names
COMMANDS = {name: importlib.import_module(f"positroids.scripts.{name}") for name in HELP}

#%% dispatcher

def build_parser():
    parser = argparse.ArgumentParser(prog="positroids", description="Positroid strata, bundles on cycles and Poisson bivectors.")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, module in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=HELP[name])
        module.build_parser(subparser)
        subparser.set_defaults(handler=module.run)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    handler = args.handler
    del args.handler, args.command
    return handler(args)


def cli():

    raise SystemExit(main())

if __name__ == "__main__":
    cli()
