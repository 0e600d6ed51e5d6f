"""Grid sweeps behind ``fiblike verify``.

Each family expands into a list of picklable jobs.  Jobs run serially or on
a process pool; reports are merged per identity and sorted by parameter
tuple, so the result is the same for any worker count.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from . import binomial as bk
from . import sums
from .identities import CATALOG, IDENTITIES, STANDARD_SPECS
from .report import IdentityReport
from .sequence import SequenceSpec, g_at

FAMILIES = ("main", "catalog", "sums", "gf", "binomial")

SUM_SPECS = (
    SequenceSpec(0, 1),
    SequenceSpec(2, 1),
    SequenceSpec(1, 1),
    SequenceSpec(1, 0),
    SequenceSpec(3, -5),
    SequenceSpec(-2, 7),
)
WEIGHTS = tuple(
    Fraction(v)
    for v in ("0", "1", "-1", "2", "-2", "1/2", "-1/3", "3/7", "-7/2")
)
UPPER_LIMITS = (0, 1, 2, 3, 5, 10, 37, 100)

# Above this bound the 3- and 4-parameter catalog entries switch from a full
# grid to the full grid at this bound plus a seeded random sample.
FULL_GRID_BOUND = 12


Job = tuple  # (function name, args...)


def _spec_key(spec: SequenceSpec) -> tuple[int, int]:
    return (spec.g0, spec.g1)


# -- job bodies (module level so they pickle) --------------------------------

def _job_identity(name: str, spec: SequenceSpec, tuples: list[tuple]) -> list[IdentityReport]:
    report = IdentityReport(name)
    fn = IDENTITIES[name].residual
    for params in tuples:
        report.record(_spec_key(spec) + tuple(params), fn(spec, *params))
    return [report]


def _job_square_sums(spec: SequenceSpec, k: int) -> list[IdentityReport]:
    closed = IdentityReport("SUM_SQ_CLOSED")
    initfree = IdentityReport("SUM_SQ_INITFREE")
    spread = IdentityReport("SPREAD_PRODUCT")
    unit = IdentityReport("UNIT_SUMS")
    spread_unit = IdentityReport("SPREAD_PRODUCT_UNIT")
    for x, n in itertools.product(WEIGHTS, UPPER_LIMITS):
        p = _spec_key(spec) + (k, x, n)
        brute = sums.sum_sq_brute(spec, k, x, n)
        closed.record(p, sums.sum_sq_closed(spec, k, x, n) - brute)
        initfree.record(p, sums.sum_sq_initfree(spec, k, x, n) - brute)
        sbrute = sums.product_sum_brute(spec, k, -k, x, n)
        spread.record(p, sums.spread_product_closed(spec, k, x, n) - sbrute)
        if x == 1:
            rec = sums.unit_sum_specials(spec, k, n)
            worst = next((v - brute for v in rec.values() if v != brute), 0)
            unit.record(p, worst)
            spread_unit.record(p, sums.spread_product_unit(spec, k, n) - sbrute)
    return [closed, initfree, spread, unit, spread_unit]


def _job_product_sums(spec: SequenceSpec, k: int, s_values: list[int]) -> list[IdentityReport]:
    prod = IdentityReport("SUM_PRODUCT")
    unit = IdentityReport("SUM_PRODUCT_UNIT")
    unit2 = IdentityReport("SUM_PRODUCT_UNIT_SHIFT_FREE")
    for s in s_values:
        for x, n in itertools.product(WEIGHTS, UPPER_LIMITS):
            p = _spec_key(spec) + (k, s, x, n)
            if k == 0 or s == 0:
                prod.skip(p)
                continue
            brute = sums.product_sum_brute(spec, k, s, x, n)
            prod.record(p, sums.sum_product_closed(spec, k, s, x, n) - brute)
            if x == 1:
                unit.record(p, sums.product_sum_unit(spec, k, s, n) - brute)
                unit2.record(p, sums.product_sum_unit_shift_free(spec, k, s, n) - brute)
    return [prod, unit, unit2]


def _job_spec_sums(spec: SequenceSpec) -> list[IdentityReport]:
    first = IdentityReport("COROLLARY_FIRST")
    second = IdentityReport("COROLLARY_SECOND")
    unit = IdentityReport("COROLLARY_UNIT")
    for x, n in itertools.product(WEIGHTS, UPPER_LIMITS):
        p = _spec_key(spec) + (x, n)
        a, b = sums.corollary_product_sums(spec, x, n)
        ba = sums.product_sum_brute(spec, 1, -2, x, n)
        bb = sums.product_sum_brute(spec, 0, -1, x, n)
        first.record(p, a - ba)
        second.record(p, b - bb)
        if x == 1:
            ua, ub = sums.corollary_unit(spec, n)
            unit.record(p, (ua - ba) or (ub - bb))
    return [first, second, unit]


def _job_fib_sums() -> list[IdentityReport]:
    fsq = IdentityReport("SUM_F_SQ")
    fib = SequenceSpec(0, 1)
    for x, n in itertools.product(WEIGHTS, UPPER_LIMITS):
        fsq.record((x, n), sums.sum_F_sq_closed(x, n) - sums.sum_sq_brute(fib, 0, x, n))
    alt = IdentityReport("ALTERNATING_F_SQ")
    for n in range(201):
        alt.record((n,), sums.sum_F_sq_closed(-1, n) - sums.sum_sq_brute(fib, 0, -1, n))
    return [fsq, alt]


def _job_gf_fib(order: int) -> list[IdentityReport]:
    return [sums.gf_fib_square_check(order)]


def _job_gf_spread(spec: SequenceSpec, k: int, order: int) -> list[IdentityReport]:
    return [sums.gf_spread_product_check(spec, k, order)]


@lru_cache(maxsize=16)
def _square_table(spec: SequenceSpec, lo: int, hi: int) -> dict[int, int]:
    return {j: g_at(spec, j) ** 2 for j in range(lo, hi + 1)}


def _table_oracle(spec: SequenceSpec, reach: int) -> Callable[[int], int]:
    table = _square_table(spec, -reach, reach)

    def oracle(j: int) -> int:
        v = table.get(j)
        return v if v is not None else g_at(spec, j) ** 2

    return oracle


def _job_binomial(
    spec: SequenceSpec, s: int, k: int, m: int, rs: list[int], ns: list[int]
) -> list[IdentityReport]:
    t7 = [IdentityReport(f"THEOREM7_{w}") for w in (1, 2, 3)]
    l5 = [IdentityReport(f"LEMMA5_{v}") for v in range(1, 7)]
    reach = max(map(abs, rs)) + 3 * max(ns) * max(abs(s), abs(k), abs(m), 1) + 8
    oracle = _table_oracle(spec, reach)
    nondeg = bk.theorem7_nondegenerate(s, k, m)
    desc = bk.main_descriptor(s, k, m) if nondeg else None
    if desc is not None:
        # one recurrence check for the whole window this job touches
        bk.check_oracle(desc, oracle, -reach + 5, reach - 5)
    for r, n in itertools.product(rs, ns):
        p = _spec_key(spec) + (s, k, m, r, n)
        for w, rep in zip((1, 2, 3), t7):
            rep.record(p, bk.theorem7_residual(spec, w, n, s, k, m, r, oracle), degenerate=not nondeg)
        if desc is not None:
            for v, rep in zip(range(1, 7), l5):
                rep.record(p, bk.lemma5_residual(desc, oracle, v, r, n, check=False))
    return t7 + l5


JOB_FUNCS = {
    "identity": _job_identity,
    "square_sums": _job_square_sums,
    "product_sums": _job_product_sums,
    "spec_sums": _job_spec_sums,
    "fib_sums": _job_fib_sums,
    "gf_fib": _job_gf_fib,
    "gf_spread": _job_gf_spread,
    "binomial": _job_binomial,
}


def _run(job: Job) -> list[IdentityReport]:
    return JOB_FUNCS[job[0]](*job[1:])


# -- job planning -----------------------------------------------------------

def _catalog_tuples(arity: int, bound: int, rng: random.Random, samples: int) -> list[tuple]:
    if arity <= 2 or bound <= FULL_GRID_BOUND:
        return list(itertools.product(range(-bound, bound + 1), repeat=arity))
    full = set(itertools.product(range(-FULL_GRID_BOUND, FULL_GRID_BOUND + 1), repeat=arity))
    extra = {tuple(rng.randint(-bound, bound) for _ in range(arity)) for _ in range(samples)}
    return sorted(full | extra)


def plan_jobs(family: str, bound: int, seed: int = 0, samples: int = 20000) -> list[Job]:
    """Expand one family at a given parameter bound into jobs."""
    jobs: list[Job] = []
    if family == "main":
        axis = range(-bound, bound + 1)
        tails = list(itertools.product(axis, repeat=3))
        for spec in STANDARD_SPECS:
            for j in axis:
                jobs.append(("identity", "MAIN", spec, [(j,) + t for t in tails]))
    elif family == "catalog":
        rng = random.Random(seed)
        for name in CATALOG:
            ident = IDENTITIES[name]
            tuples = _catalog_tuples(len(ident.params), bound, rng, samples)
            specs = STANDARD_SPECS if ident.uses_spec else (SequenceSpec(0, 1),)
            for spec in specs:
                for i in range(0, len(tuples), 20000):
                    jobs.append(("identity", name, spec, tuples[i:i + 20000]))
    elif family == "sums":
        kb = min(bound, 6)
        ks = list(range(-kb, kb + 1))
        jobs.append(("fib_sums",))
        for spec in SUM_SPECS:
            jobs.append(("spec_sums", spec))
            for k in ks:
                jobs.append(("square_sums", spec, k))
                jobs.append(("product_sums", spec, k, ks))
    elif family == "gf":
        jobs.append(("gf_fib", 64))
        kb = min(bound, 6)
        for spec in SUM_SPECS:
            for k in range(-kb, kb + 1):
                jobs.append(("gf_spread", spec, k, 32))
    elif family == "binomial":
        sb = min(bound, 4)
        rb = min(bound, 6)
        axis = range(-sb, sb + 1)
        rs = list(range(-rb, rb + 1))
        ns = list(range(0, min(bound, 5) + 1))
        for spec in STANDARD_SPECS:
            for s, k, m in itertools.product(axis, repeat=3):
                jobs.append(("binomial", spec, s, k, m, rs, ns))
    else:
        raise ValueError(f"unknown family {family!r}")
    return jobs


def run_jobs(jobs: Iterable[Job], workers: int = 1) -> list[IdentityReport]:
    """Run jobs and merge reports by identity name, sorted by name."""
    jobs = list(jobs)
    merged: dict[str, IdentityReport] = {}
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk = max(1, len(jobs) // (workers * 4))
            results = list(pool.map(_run, jobs, chunksize=chunk))
    else:
        results = [_run(job) for job in jobs]
    for parts in results:
        for rep in parts:
            if rep.identity in merged:
                merged[rep.identity].merge(rep)
            else:
                merged[rep.identity] = rep
    return [merged[name].canonicalize() for name in sorted(merged)]


def run_family(family: str, bound: int, workers: int = 1, seed: int = 0,
               samples: int = 20000) -> list[IdentityReport]:
    return run_jobs(plan_jobs(family, bound, seed, samples), workers)
