"""
Timing runs of the quotient data structure against the naive pair closure on
random inverse semigroups.
"""
import csv
import time
from typing import Optional, Sequence

import numpy as np
from tqdm import tqdm

from app.core.logging_config import logger
from app.models.report_models import BenchRecord, BenchReport
from app.services import congruence
from app.services.oracle import pair_closure
from app.services.samples import random_pairs, random_semigroup

BENCH_FIELDS = list(BenchRecord.model_fields)


def bench_instance(seed: int, degrees: Sequence[int], limit: int, max_generators: int = 3) -> BenchRecord:
    rng = np.random.default_rng(seed)
    degree = int(rng.choice(degrees))
    ds = random_semigroup(rng, degree, max_generators=max_generators, limit=limit)
    pairs = random_pairs(rng, ds, int(rng.integers(1, 6)))

    start = time.perf_counter()
    fast = congruence.compute(ds, pairs).nr_classes()
    fast_seconds = time.perf_counter() - start

    start = time.perf_counter()
    naive = len(pair_closure(ds, pairs))
    naive_seconds = time.perf_counter() - start

    if fast != naive:
        logger.error(f"Engines disagree on seed {seed}: {fast} != {naive} classes")
        raise AssertionError(f"engines disagree on seed {seed}")
    return BenchRecord(
        seed=seed,
        degree=degree,
        size=len(ds),
        idempotents=len(ds.idempotents),
        pairs=len(pairs),
        fast_seconds=fast_seconds,
        naive_seconds=naive_seconds,
        ratio=naive_seconds / max(fast_seconds, 1e-9),
    )


def median_ratio(records: Sequence[BenchRecord], min_size: int) -> Optional[float]:
    ratios = [r.ratio for r in records if r.size >= min_size]
    if not ratios:
        return None
    return float(np.median(ratios))


def run_bench(
    samples: int,
    seed: int = 0,
    degrees: Sequence[int] = (6, 7),
    limit: int = 50_000,
    min_size: int = 5000,
    progress: bool = True,
) -> BenchReport:
    logger.info(f"Benchmarking {samples} random instances from seed {seed}, degrees {list(degrees)}")
    records = [
        bench_instance(s, degrees, limit)
        for s in tqdm(range(seed, seed + samples), desc="bench", disable=not progress)
    ]
    report = BenchReport(records=records, min_size=min_size, median_ratio=median_ratio(records, min_size))
    logger.info(f"Median naive/fast ratio for |S| >= {min_size}: {report.median_ratio}")
    return report


def write_csv(report: BenchReport, path: str) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=BENCH_FIELDS)
        writer.writeheader()
        for record in report.records:
            writer.writerow(record.model_dump())
    logger.info(f"Wrote {len(report.records)} bench records to {path}")
