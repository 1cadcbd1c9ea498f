#!/usr/bin/env python3
# -*- coding: utf-8 -*-

## run globals; restored from ~/.positroids.yaml in CLI mode (see utils.restore_config)

output_dir = None
log_dir = None
seed = 42
workers = 1
format = "json"

## scale
sample_count = 100
n_max = 6
n_hard_cap = 6
chart_dim_max = 9
bruhat_n_max = 4
jacobi_pairs = [(1, 2), (1, 3), (2, 4)]

## sampling
entry_range = 9
degenerate_fraction = 0.25
