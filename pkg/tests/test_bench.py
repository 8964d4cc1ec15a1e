from app.models.report_models import BenchRecord
from app.services.bench import bench_instance, median_ratio, run_bench, write_csv


def record(size, ratio):
    return BenchRecord(
        seed=0, degree=3, size=size, idempotents=1, pairs=1,
        fast_seconds=1.0, naive_seconds=ratio, ratio=ratio,
    )


def test_median_ratio_filters_small_instances():
    records = [record(10, 100.0), record(6000, 2.0), record(7000, 4.0)]
    assert median_ratio(records, 5000) == 3.0
    assert median_ratio(records, 10_000) is None


def test_bench_instance_is_reproducible():
    first = bench_instance(5, (3, 4), 400)
    second = bench_instance(5, (3, 4), 400)
    assert (first.degree, first.size, first.pairs) == (second.degree, second.size, second.pairs)
    assert first.ratio > 0


def test_run_bench_writes_csv(tmp_path):
    report = run_bench(3, seed=1, degrees=(3,), limit=200, min_size=1, progress=False)
    assert [r.seed for r in report.records] == [1, 2, 3]
    path = tmp_path / "bench.csv"
    write_csv(report, str(path))
    lines = path.read_text().splitlines()
    assert len(lines) == 4
    assert lines[0].split(",") == list(BenchRecord.model_fields)
