#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Invariant suites run by `positroids verify`.

Every suite takes a RunConfig and returns
{"suite", "checked", "failures", "counterexamples", "notes"}. Per-item checks
are module-level functions returning (counterexamples, record) so they can be
shipped to worker processes; results are merged in submission order.
"""

#%% imports

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache

import numpy as np
from tqdm import tqdm

from positroids import config
from .affperm import (
    AffinePermutation,
    bruhat_leq,
    bruhat_poset,
    classify,
    compose_splus,
    enumerate_perms,
    inverse,
    length,
    orbit_decomposition,
    reflect,
    rotate,
    splus,
    summand_count,
)
from .bundles import (
    A_of_bundle,
    BundleType,
    bundle_of_perm,
    end_dim,
    f_of_A,
    membership,
    stratum_census,
)
from .chart import chart_bivector, jacobi_certificate
from .errors import LimitExceeded, ParameterError
from .linalg import GrassmannPoint, fraction_str
from .poisson import (
    bivector,
    chart_cotangent_basis,
    leaf_report,
    rotation_defect,
    skew_rank,
)
from .rankmat import (
    CyclicRankMatrix,
    check_axioms,
    f_of_matrix,
    h_band_of_A,
    perm_of_r,
    r_of_matrix,
    r_of_perm,
    r_of_perm_direct,
)
from .sampling import make_rng, random_invertible, sample_points

logger = logging.getLogger(__name__)

FROZEN_COUNTS = {(2, 1): 3, (3, 1): 7, (4, 1): 15, (4, 2): 33}

KNOWN_LEAVES = (
    ([[1, 0, 0, 0], [0, 1, 1, 0]], 0),
    ([[1, 1, 1]], 2),
)

#%% plumbing

def _progress_disabled():
    return logging.getLogger().getEffectiveLevel() > logging.INFO


def _map(check, items, workers=1, desc=None):
    if workers > 1 and len(items) > 1:
        chunksize = max(1, len(items) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(tqdm(pool.map(check, items, chunksize=chunksize),
                             total=len(items), desc=desc, disable=_progress_disabled()))
    return [check(item) for item in tqdm(items, desc=desc, disable=_progress_disabled())]


def _result(suite, results, notes=None):
    counterexamples = [c for found, _ in results for c in found]
    return {
        "suite": suite,
        "checked": len(results),
        "failures": len(counterexamples),
        "counterexamples": counterexamples,
        "notes": notes or {},
    }


def _records(results):
    return [record for _, record in results if record is not None]


def _failure(check, **witness):
    return {"check": check, **witness}


def _perm_classes(n_max, kind):
    items = []
    for n in range(2, n_max + 1):
        for k in range(1, n):
            items.extend(enumerate_perms(n, k, kind, n_max=n_max))
    return items


def _sample_pairs(n_max):
    return [(k, n) for n in range(2, min(n_max, config.n_hard_cap) + 1) for k in range(1, n)]


def _sampled_items(run_config, with_gauge=False):
    rng = make_rng(run_config.seed)
    items = []
    for k, n in _sample_pairs(run_config.n_max):
        for M in sample_points(rng, k, n, run_config.sample_count, run_config.degenerate_fraction):
            items.append((M, random_invertible(rng, k)) if with_gauge else (M, None))
    return items


def _point_witness(M):
    return [[fraction_str(x) for x in row] for row in M.rows]

#%% per-item checks

def _check_roundtrip(f):
    found = []
    if f_of_A(A_of_bundle(bundle_of_perm(f))) != f:
        found.append(_failure("f_of_A(A_of_bundle(bundle_of_perm(f))) == f", f=str(f)))
    if AffinePermutation.from_dict(json.loads(json.dumps(f.to_dict()))) != f:
        found.append(_failure("permutation payload round-trip", f=str(f)))
    B = bundle_of_perm(f)
    if BundleType.from_dict(json.loads(json.dumps(B.to_dict()))) != B:
        found.append(_failure("bundle payload round-trip", f=str(f)))
    if B.rank != f.k + 1:
        found.append(_failure("summand ranks add up to k+1", f=str(f), rank=B.rank))

    record = None
    r = r_of_perm(f)
    if f.is_bounded:
        report = check_axioms(r)
        if not report.passed:
            found.append(_failure("r_of_perm(f) passes check_axioms", f=str(f), axioms=report.failed_axioms()))
        elif perm_of_r(r) != f:
            found.append(_failure("perm_of_r(r_of_perm(f)) == f", f=str(f), got=str(perm_of_r(r))))
        if not np.array_equal(np.array(h_band_of_A(A_of_bundle(B))), r.h_band):
            found.append(_failure("h of A(V_f) equals the h-band of r_of_perm(f)", f=str(f)))
        if CyclicRankMatrix.from_dict(json.loads(json.dumps(r.to_dict()))) != r:
            found.append(_failure("rank matrix payload round-trip", f=str(f)))
    else:
        record = check_axioms(r).passed
    return found, record


def _check_prop_end(f):
    B = bundle_of_perm(f)
    ell, p, dim_end = length(f), len(B.summands), end_dim(B)
    found = []
    if ell != dim_end - p:
        found.append(_failure("length(f) == end_dim - p", f=str(f), ell=ell, end_dim=dim_end, p=p))
    if p != summand_count(f):
        found.append(_failure("one summand per orbit class", f=str(f), summands=p, p=summand_count(f)))
    flags = membership(B)
    if not flags["in_U_plus"] or flags["in_U_plus_plus"] != f.is_bounded:
        found.append(_failure("membership flags", f=str(f), membership=flags, bounded=f.is_bounded))
    return found, None


def _check_orbits(f):
    found = []
    decomposition = orbit_decomposition(compose_splus(f, 1))
    if len(decomposition.orbits) != f.k + 1:
        found.append(_failure("f o s_+ has k+1 orbits", f=str(f), orbits=len(decomposition.orbits)))
    g = compose_splus(f, 1)
    for orbit in decomposition.orbits:
        members = set(orbit.members_in_block)
        width = orbit.block_width
        for d in range(1, orbit.period):
            shifted = {((m + d * f.n - 1) % width) + 1 for m in members}
            if shifted == members:
                found.append(_failure("period is minimal", f=str(f), rep=orbit.rep, d=d))
        if g(orbit.rep) not in orbit:
            found.append(_failure("orbit is closed under f o s_+", f=str(f), rep=orbit.rep))
        density = orbit.count_in(0, width)
        if any(orbit.count_in(m, m + width) != density for m in range(1, width)):
            found.append(_failure("orbit density is translation invariant", f=str(f), rep=orbit.rep))
    return found, None


def _check_dihedral(f):
    found = []
    ell, p = length(f), summand_count(f)
    for name, g in (("rotate", rotate(f)), ("reflect", reflect(f))):
        if classify(g) != classify(f) or length(g) != ell or summand_count(g) != p:
            found.append(_failure(f"{name} preserves k, boundedness, length and p", f=str(f), image=str(g)))
    if reflect(reflect(f)) != f:
        found.append(_failure("reflect is an involution", f=str(f)))
    if rotate(f, f.n) != f:
        found.append(_failure("rotate by n is the identity", f=str(f)))
    if inverse(inverse(f)) != f:
        found.append(_failure("inverse is an involution", f=str(f)))
    return found, None


def _check_axioms_item(f):
    found = []
    r = r_of_perm(f)
    report = check_axioms(r)
    if not report.passed:
        found.append(_failure("r_of_perm(f) passes check_axioms", f=str(f), violations=report.violations))
    if r != r_of_perm_direct(f):
        found.append(_failure("r_of_perm agrees with #{a in [i,j] : f(a) > j}", f=str(f)))
    return found, None


@lru_cache(maxsize=None)
def _chart_bivectors(k, n):
    return chart_bivector(k, n, twisted=True), chart_bivector(k, n, twisted=False)


def _check_brackets(item):
    M, _ = item
    found = []
    chi = bivector(M, "chi_twisted")
    if chi != bivector(M, "b_prime_st"):
        found.append(_failure("chi_twisted == b_prime_st", M=_point_witness(M)))
    if chi != bivector(M, "fo_massey").scaled(2):
        found.append(_failure("chi_twisted == 2 fo_massey", M=_point_witness(M)))
    if chi - bivector(M, "chi_standard") != bivector(M, "cartan"):
        found.append(_failure("chi_twisted - chi_standard == cartan", M=_point_witness(M)))
    if not chi.is_skew():
        found.append(_failure("bivector matrix is skew", M=_point_witness(M)))

    ## on the standard chart, compare with the polynomial bivector at Z
    record = None
    Z = M.chart()
    if Z is not None:
        try:
            twisted, untwisted = _chart_bivectors(M.k, M.n)
        except LimitExceeded:
            return found, None
        P = GrassmannPoint(tuple(tuple([int(a == b) for b in range(M.k)]) + row for a, row in enumerate(Z)))
        complement = chart_cotangent_basis(P)
        record = True
        if twisted.evaluate(Z) != bivector(P, "chi_twisted", complement=complement).matrix:
            found.append(_failure("chart_bivector(twisted) at Z == chi_twisted at [I|Z]", M=_point_witness(M)))
        if untwisted.evaluate(Z) != bivector(P, "chi_standard", complement=complement).matrix:
            found.append(_failure("chart_bivector(untwisted) at Z == chi_standard at [I|Z]", M=_point_witness(M)))
    return found, record


def _check_ranks(item):
    M, G = item
    found = []
    report = leaf_report(M)
    if not report["consistent"]:
        found.append(_failure("bivector rank == k(n-k) - length - (p-1)", M=_point_witness(M), report=report))
    rank = report["bivector_rank"]
    if skew_rank(bivector(M.act(G), "chi_twisted")) != rank:
        found.append(_failure("rank is invariant under row operations", M=_point_witness(M)))
    if skew_rank(bivector(M.rotate(1), "chi_twisted")) != rank:
        found.append(_failure("rank is invariant under column rotation", M=_point_witness(M)))
    record = {"window": report["f"], "rank": rank, "rotation_exact": rotation_defect(M).is_zero()}
    return found, record


def _check_matrices(item):
    M, G = item
    found = []
    f = f_of_matrix(M)
    if r_of_matrix(M) != r_of_perm(f):
        found.append(_failure("r_of_matrix(M) == r_of_perm(f_of_matrix(M))", M=_point_witness(M), f=str(f)))
    if f_of_matrix(M.act(G)) != f:
        found.append(_failure("f_of_matrix(G M) == f_of_matrix(M)", M=_point_witness(M)))
    if f_of_matrix(M.rotate(1)) != rotate(f):
        found.append(_failure("f of the rotated matrix == rotate(f)", M=_point_witness(M), f=str(f)))
    if f_of_matrix(M.reverse()) != reflect(f):
        found.append(_failure("f of the reversed matrix == reflect(f)", M=_point_witness(M), f=str(f)))
    if not f.is_bounded:
        found.append(_failure("f_of_matrix(M) is bounded", M=_point_witness(M), f=str(f)))
    return found, None


def _check_census_row(row):
    found = []
    if row["ell"] + row["p"] != row["end_dim"]:
        found.append(_failure("length + p == end_dim", **row))
    if row["leaf_dim"] < 0 or row["symplectic"] != (row["p"] == 1):
        found.append(_failure("leaf dimension bookkeeping", **row))
    return found, None

#%% suites

def suite_roundtrip(run_config):
    perms = _perm_classes(run_config.n_max, "plus")
    results = _map(_check_roundtrip, perms, run_config.workers, "roundtrip")
    unbounded = _records(results)
    notes = {
        "n_max": run_config.n_max,
        "unbounded_checked": len(unbounded),
        "unbounded_passing_axioms": sum(unbounded),
    }
    return _result("roundtrip", results, notes)


def suite_prop_end(run_config):
    perms = _perm_classes(run_config.n_max, "plus")
    results = _map(_check_prop_end, perms, run_config.workers, "prop_end")
    return _result("prop_end", results, {"n_max": run_config.n_max})


def suite_brackets(run_config):
    items = _sampled_items(run_config)
    results = _map(_check_brackets, items, run_config.workers, "brackets")
    notes = {
        "seed": run_config.seed,
        "samples_per_pair": run_config.sample_count,
        "pairs": _sample_pairs(run_config.n_max),
        "chart_comparisons": len(_records(results)),
    }
    return _result("brackets", results, notes)


def suite_ranks(run_config):
    items = _sampled_items(run_config, with_gauge=True)
    results = _map(_check_ranks, items, run_config.workers, "ranks")

    found = []
    for rows, expected in KNOWN_LEAVES:
        rank = leaf_report(rows)["bivector_rank"]
        if rank != expected:
            found.append(_failure("known leaf rank", M=rows, expected=expected, got=rank))
    results.append((found, None))

    ## equal strata must give equal ranks
    records = _records(results)
    by_stratum = {}
    for record in records:
        by_stratum.setdefault(tuple(record["window"]), set()).add(record["rank"])
    split = [_failure("rank depends only on f_M", f=list(w), ranks=sorted(r))
             for w, r in sorted(by_stratum.items()) if len(r) > 1]
    results.append((split, None))

    notes = {
        "seed": run_config.seed,
        "samples_per_pair": run_config.sample_count,
        "strata_seen": len(by_stratum),
        "rotation_exact": sum(1 for record in records if record["rotation_exact"]),
        "rotation_checked": len(records),
    }
    return _result("ranks", results, notes)


def suite_jacobi(run_config):
    results, untwisted = [], {}
    for k, n in tqdm(run_config.jacobi_pairs, desc="jacobi", disable=_progress_disabled()):
        certificate = jacobi_certificate(k, n, twisted=True)
        found = [] if certificate["passed"] else [_failure("Schouten bracket [P, P] == 0", **certificate)]
        results.append((found, None))
        untwisted[f"{k},{n}"] = jacobi_certificate(k, n, twisted=False)["passed"]
    return _result("jacobi", results, {"pairs": [list(p) for p in run_config.jacobi_pairs],
                                       "untwisted_passed": untwisted})


def suite_axioms(run_config):
    perms = _perm_classes(run_config.n_max, "bounded")
    results = _map(_check_axioms_item, perms, run_config.workers, "axioms")

    ## the checker must reject a broken band
    control = r_of_perm(splus(4, 2))
    band = control.h_band.copy()
    band[0, 2] = 2
    if check_axioms(CyclicRankMatrix(4, 2, band)).passed:
        results.append(([_failure("check_axioms flags a perturbed band", h_band=band.tolist())], None))
    return _result("axioms", results, {"n_max": run_config.n_max})


def suite_bruhat(run_config):
    n_top = min(run_config.n_max, config.bruhat_n_max)
    results, unit_covers, all_covers = [], 0, 0
    for n in range(2, n_top + 1):
        for k in range(1, n):
            poset = bruhat_poset(n, k, "bounded")
            found = []
            if poset.minimum() != splus(n, k):
                found.append(_failure("s_+^k is the unique minimum", n=n, k=k))
            for g in tqdm(poset.elements, desc=f"bruhat ({k},{n})", disable=_progress_disabled()):
                if not bruhat_leq(splus(n, k), g):
                    found.append(_failure("s_+^k <= g", g=str(g)))
                for f in poset.elements:
                    if poset.leq(f, g) != bruhat_leq(f, g):
                        found.append(_failure("swap closure agrees with r-matrix order", f=str(f), g=str(g)))
                for h in poset.down[g]:
                    if poset.covers(g, h):
                        all_covers += 1
                        drop = length(g) - length(h)
                        unit_covers += drop == 1
                        if drop < 1:
                            found.append(_failure("covers lowers length", f=str(g), g=str(h)))
            results.append((found, None))
    return _result("bruhat", results, {"n_max": n_top, "covers": all_covers, "covers_of_length_one": unit_covers})


def suite_orbits(run_config):
    perms = _perm_classes(run_config.n_max, "plus")
    results = _map(_check_orbits, perms, run_config.workers, "orbits")
    return _result("orbits", results, {"n_max": run_config.n_max})


def suite_enumeration(run_config):
    results = []
    for (n, k), expected in sorted(FROZEN_COUNTS.items()):
        if n > run_config.n_max:
            continue
        got = len(enumerate_perms(n, k, "bounded", n_max=run_config.n_max))
        results.append(([] if got == expected else [_failure("frozen count", n=n, k=k, expected=expected, got=got)], None))
    counts = {}
    for n in range(2, run_config.n_max + 1):
        for k in range(1, n):
            bounded = enumerate_perms(n, k, "bounded", n_max=run_config.n_max)
            plus = set(enumerate_perms(n, k, "plus", n_max=run_config.n_max))
            counts[f"{k},{n}"] = {"bounded": len(bounded), "plus": len(plus)}
            found = [_failure("bounded is a subset of plus", f=str(f)) for f in bounded
                     if f not in plus or not classify(f)["bounded"]]
            results.append((found, None))
    return _result("enumeration", results, {"counts": counts})


def suite_matrices(run_config):
    items = _sampled_items(run_config, with_gauge=True)
    results = _map(_check_matrices, items, run_config.workers, "matrices")
    return _result("matrices", results, {"seed": run_config.seed, "samples_per_pair": run_config.sample_count})


def suite_dihedral(run_config):
    perms = _perm_classes(run_config.n_max, "bounded")
    results = _map(_check_dihedral, perms, run_config.workers, "dihedral")
    return _result("dihedral", results, {"n_max": run_config.n_max})


def suite_census(run_config):
    rows = []
    for n in range(2, run_config.n_max + 1):
        for k in range(1, n):
            rows.extend(stratum_census(n, k, n_max=run_config.n_max))
    results = _map(_check_census_row, rows, 1, "census")
    return _result("census", results, {"n_max": run_config.n_max})


SUITES = {
    "roundtrip": suite_roundtrip,
    "prop_end": suite_prop_end,
    "brackets": suite_brackets,
    "ranks": suite_ranks,
    "jacobi": suite_jacobi,
    "axioms": suite_axioms,
    "bruhat": suite_bruhat,
    "orbits": suite_orbits,
    "enumeration": suite_enumeration,
    "matrices": suite_matrices,
    "dihedral": suite_dihedral,
    "census": suite_census,
}


def run_suites(name, run_config):
    """
    Run one suite, or every suite for name="all", and wrap the results in a
    report carrying the run settings.
    """
    if name != "all" and name not in SUITES:
        raise ParameterError(f"unknown suite {name!r}, choose from {sorted(SUITES) + ['all']}")
    names = list(SUITES) if name == "all" else [name]
    suites = []
    for suite_name in names:
        logger.info(f"running suite {suite_name}")
        result = SUITES[suite_name](run_config)
        logger.info(f"{suite_name}: {result['checked']} checked, {result['failures']} failures")
        suites.append(result)
    failures = sum(result["failures"] for result in suites)
    return {
        "suite": name,
        "passed": failures == 0,
        "failures": failures,
        "seed": run_config.seed,
        "config": run_config.to_dict(),
        "suites": suites,
    }
