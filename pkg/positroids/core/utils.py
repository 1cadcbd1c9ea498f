#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#%% imports

import importlib
import json
import logging
import os
import re
import shutil
import sys
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from functools import wraps
from typing import Optional

import numpy as np
import pandas as pd
import yaml
from rich.pretty import pretty_repr

from positroids import config
from .errors import ConfigError, ParseError, PositroidError
from .linalg import as_fraction, fraction_str

CONFIG_PATH = os.path.expanduser("~/.positroids.yaml")

#%% yaml and global config

def save_yaml(dic, yaml_path):
    with open(yaml_path, 'w') as file:
        yaml.dump(dic, file, default_flow_style=False)


def load_yaml(yaml_path):

    with open(yaml_path, "r") as file:
        dictionary = yaml.safe_load(file)

    return dictionary or {}


def restore_config(func):
    """
    Decorator that copies the keys of ~/.positroids.yaml onto the
    positroids.config module before calling `func`. Used by the CLI entry
    points; in interactive use, set attributes on positroids.config directly.

    Notes
    -----
    - A missing file leaves the defaults in positroids/config.py untouched.
    - Unknown keys are ignored with a warning.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        if os.path.isfile(CONFIG_PATH):
            config_module = importlib.import_module('positroids.config')
            for key, value in load_yaml(CONFIG_PATH).items():
                if hasattr(config_module, key):
                    setattr(config_module, key, value)
                else:
                    logging.getLogger(__name__).warning(f"ignoring unknown config key {key!r} in {CONFIG_PATH}")
        return func(*args, **kwargs)
    return wrapper


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one CLI run. Defaults come from positroids.config, then the
    `run`, `jacobi` and `sampling` sections of a YAML file, then explicit
    overrides (None values are skipped).
    """

    seed: int = 42
    sample_count: int = 100
    n_max: int = 6
    jacobi_pairs: tuple = ((1, 2), (1, 3), (2, 4))
    output: Optional[str] = None
    format: str = "json"
    workers: int = 1
    degenerate_fraction: float = 0.25
    entry_range: int = 9
    allow_slow: bool = False

    def __post_init__(self):
        object.__setattr__(self, "jacobi_pairs", tuple(tuple(int(x) for x in pair) for pair in self.jacobi_pairs))
        if self.sample_count < 1:
            raise ConfigError(f"sample_count must be at least 1, got {self.sample_count}")
        if self.n_max > config.n_hard_cap and not self.allow_slow:
            raise ConfigError(f"n_max={self.n_max} exceeds the hard cap {config.n_hard_cap} (use --allow-slow)")
        if self.format not in ("json", "csv", "text"):
            raise ConfigError(f"unknown output format {self.format!r}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_sources(cls, config_path=None, **overrides):
        values = {
            "seed": config.seed,
            "sample_count": config.sample_count,
            "n_max": config.n_max,
            "jacobi_pairs": config.jacobi_pairs,
            "format": config.format,
            "workers": config.workers,
            "degenerate_fraction": config.degenerate_fraction,
            "entry_range": config.entry_range,
        }
        if config_path:
            hyperparams = load_yaml(config_path)
            run = hyperparams.get("run", {}) or {}
            for key in ("seed", "n_max", "workers", "format", "output"):
                if run.get(key) is not None:
                    values[key] = run[key]
            if run.get("samples") is not None:
                values["sample_count"] = run["samples"]
            jacobi = hyperparams.get("jacobi", {}) or {}
            if jacobi.get("pairs"):
                values["jacobi_pairs"] = jacobi["pairs"]
            sampling = hyperparams.get("sampling", {}) or {}
            for key in ("degenerate_fraction", "entry_range"):
                if sampling.get(key) is not None:
                    values[key] = sampling[key]
        known = {f.name for f in fields(cls)}
        values.update({key: value for key, value in overrides.items() if value is not None and key in known})
        return cls(**values)

    def apply(self):
        """Push the scale settings onto positroids.config for the core modules."""
        config.seed = self.seed
        config.n_max = self.n_max
        config.degenerate_fraction = self.degenerate_fraction
        config.entry_range = self.entry_range
        if self.allow_slow:
            config.n_hard_cap = max(config.n_hard_cap, self.n_max)
        return self

    def to_dict(self):
        return asdict(self)

#%% logging

def setup_logging(log_file_path=None, level=logging.INFO, stream=None):
    logger = logging.getLogger()
    logger.setLevel(level)
    if (logger.hasHandlers()):
        logger.handlers.clear()

    ## logging: stdout handler
    stdout_handler = logging.StreamHandler(stream or sys.stdout)
    stdout_handler.setLevel(logging.DEBUG)
    stdout_formatter = logging.Formatter('%(asctime)s: %(message)s', "%H:%M:%S")
    stdout_handler.setFormatter(stdout_formatter)
    logger.addHandler(stdout_handler)

    ## logging: logfile handler
    if log_file_path:
        os.makedirs(os.path.dirname(os.path.abspath(log_file_path)), exist_ok=True)
        file_handler = logging.FileHandler(log_file_path)
        file_handler.setLevel(logging.INFO)
        file_formatter = logging.Formatter('%(asctime)s: %(message)s', "%Y-%m-%d %H:%M:%S")
        file_handler.setFormatter(file_formatter)
        logger.addHandler(file_handler)

    return logger


def log_file_for(name):
    if config.log_dir:
        return os.path.join(config.log_dir, f"{name}.log")
    return None

#%% cli helpers

def add_run_arguments(parser, sampling=False):
    """Flags shared by the positroids_* commands."""
    parser.add_argument("--config-path", type=str, default=None, help="YAML run config (see positroids_configs/).")
    parser.add_argument("--format", type=str, default=None, choices=["json", "csv", "text"], help="Report format (default: json).")
    parser.add_argument("--output", type=str, default=None, help="Report file; '-' or omitted writes to stdout.")
    parser.add_argument("--quiet", action="store_true", help="Only log warnings and errors; hides progress bars.")
    if sampling:
        parser.add_argument("--seed", type=int, default=None, help="Seed of the sampling generator.")
        parser.add_argument("--samples", dest="sample_count", type=int, default=None, help="Random points per (k, n).")
        parser.add_argument("--n-max", type=int, default=None, help="Largest n for exhaustive and sampled checks.")
        parser.add_argument("--workers", type=int, default=None, help="Worker processes (1 runs in-process).")
        parser.add_argument("--allow-slow", action="store_true", default=None, help="Permit n-max above the hard cap.")
    return parser


def exit_on_error(func):
    """
    Wrap a CLI function so that bad input (any PositroidError) prints one
    line to stderr and exits with status 2.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except PositroidError as exc:
            sys.stderr.write(f"error: {exc}\n")
            sys.exit(2)
        except OSError as exc:
            sys.stderr.write(f"error: {exc}\n")
            sys.exit(2)
    return wrapper


def start_logging(name, output=None, quiet=False):
    """Logging for a CLI run; goes to stderr when the report goes to stdout."""
    stream = sys.stderr if output in (None, "-") else sys.stdout
    level = logging.WARNING if quiet else logging.INFO
    return setup_logging(log_file_for(name), level=level, stream=stream)


def pprint_fill_hbar(message, symbol="-", ret=True):
    terminal_width = shutil.get_terminal_size((100, 20))[0] - len("%Y-%m-%d %H:%M:%S")
    message_length = len(message)

    if message_length >= terminal_width:
        formatted_message = message
    else:
        bar_length = (terminal_width - message_length - 2) // 2
        horizontal_bar = symbol * bar_length
        formatted_message = f"{horizontal_bar} {message} {horizontal_bar}"
        residual = terminal_width - len(formatted_message)
        formatted_message = formatted_message + symbol * residual

    if not ret:
        print(formatted_message)
    else:
        return formatted_message

#%% input

_JSON_LITERAL = re.compile(r'"[^"]*"|[^\s\[\],"]+')
_GRID_TOKEN = re.compile(r"[^\s,]+")


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _parse_entry(token, value, text, offset):
    try:
        if isinstance(value, float):
            raise TypeError("floats are not exact")
        return as_fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        line, column = _position(text, offset)
        raise ParseError(f"bad matrix entry {token!r}: {exc}", line, column) from None


def parse_matrix(text):
    """
    Parse a rational matrix from a JSON array of arrays (integers or "p/q"
    strings) or from a text grid (one row per line, entries separated by
    whitespace or commas, '#' starts a comment).

    Raises
    ------
    ParseError
        With the 1-based line and column of the offending token.
    """
    stripped = text.lstrip()
    if not stripped:
        raise ParseError("empty matrix input", 1, 1)

    if stripped.startswith("["):
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
        if not isinstance(payload, list) or not all(isinstance(row, list) for row in payload):
            raise ParseError("JSON matrix must be an array of arrays", 1, 1)
        matches = list(_JSON_LITERAL.finditer(text))
        flat = [value for row in payload for value in row]
        if len(matches) != len(flat):
            raise ParseError("JSON matrix entries must be integers or rational strings", 1, 1)
        rows, cursor = [], 0
        for row in payload:
            parsed = []
            for value in row:
                match = matches[cursor]
                parsed.append(_parse_entry(match.group(), value, text, match.start()))
                cursor += 1
            rows.append(parsed)
    else:
        rows, offset = [], 0
        for line in text.splitlines(keepends=True):
            content = line.split("#", 1)[0]
            tokens = list(_GRID_TOKEN.finditer(content))
            if tokens:
                rows.append([_parse_entry(t.group(), t.group(), text, offset + t.start()) for t in tokens])
            offset += len(line)

    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise ParseError(f"rows have different lengths {sorted(widths)}", len(rows), 1)
    return rows


def read_input(path):
    """Read a file, or stdin for '-' or None."""
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, "r") as file:
        return file.read()


def parse_window(text):
    """A permutation window from '5,3,6,4', '[5,3,6,4]' or {"n":..,"window":[..]} JSON."""
    text = text.strip()
    try:
        payload = json.loads(text) if text.startswith(("[", "{")) else [int(t) for t in re.split(r"[\s,]+", text) if t]
    except (json.JSONDecodeError, ValueError) as exc:
        raise ParseError(f"cannot read permutation window: {exc}", 1, 1) from None
    if isinstance(payload, dict):
        payload = payload.get("window", [])
    if not payload or not all(isinstance(x, int) for x in payload):
        raise ParseError("permutation window must be a non-empty list of integers", 1, 1)
    return payload

#%% output

def to_jsonable(value):
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    return value


def render_report(report, fmt="json"):
    payload = to_jsonable(report)
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        table = payload.get("rows") if isinstance(payload, dict) and "rows" in payload else payload
        if isinstance(table, dict):
            table = [table]
        df = pd.json_normalize(table, sep=".")
        df = df[sorted(df.columns)]
        return df.to_csv(index=False)
    if fmt == "text":
        return pretty_repr(payload) + "\n"
    raise ConfigError(f"unknown output format {fmt!r}")


def write_report(report, output=None, fmt="json"):
    """Render `report` and write it to `output` (stdout when None or '-')."""
    text = render_report(report, fmt)
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        directory = os.path.dirname(os.path.abspath(output))
        os.makedirs(directory, exist_ok=True)
        with open(output, "w") as file:
            file.write(text)
    return text


def resolve_output(output, default_name, fmt):
    """Place bare file names under config.output_dir when one is configured."""
    if output in (None, "-") and config.output_dir:
        return os.path.join(config.output_dir, f"{default_name}.{fmt if fmt != 'text' else 'txt'}")
    if output and config.output_dir and not os.path.isabs(output) and os.path.dirname(output) == "":
        return os.path.join(config.output_dir, output)
    return output
