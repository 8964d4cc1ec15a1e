import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from app.cli import cli

DATA = Path(__file__).resolve().parent.parent / "data"
I4 = str(DATA / "I4.sgp")
PAIR = str(DATA / "pair.prs")
UNIVERSAL = str(DATA / "universal.prs")
EMPTY = str(DATA / "empty.prs")


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args):
    return runner.invoke(cli, list(args))


def test_info(runner):
    result = run(runner, "info", I4)
    assert result.exit_code == 0
    assert "|S| = 209" in result.stdout
    assert "|E(S)| = 16" in result.stdout


def test_info_dot(runner, tmp_path):
    path = tmp_path / "gamma.dot"
    assert run(runner, "info", I4, "--dot", str(path)).exit_code == 0
    text = path.read_text()
    assert text.startswith("digraph")
    assert text.count(" -> ") == 16 * 5
    assert 'label="x3^-1"' in text


def test_info_json(runner):
    result = run(runner, "info", I4, "--json")
    report = json.loads(result.stdout)
    assert report["size"] == 209
    assert sorted(report["d_class_sizes"]) == [1, 16, 24, 72, 96]


@pytest.mark.parametrize("engine", ["fast", "naive"])
def test_congruence(runner, engine):
    result = run(runner, "congruence", I4, PAIR, "--engine", engine)
    assert result.exit_code == 0
    assert "classes: 57" in result.stdout
    assert "trace classes: 6" in result.stdout


def test_congruence_json(runner):
    report = json.loads(run(runner, "congruence", I4, PAIR, "--json").stdout)
    assert report["nr_classes"] == 57
    assert sorted(c["quotient_group_order"] for c in report["components"]) == [1, 2, 24]
    assert report["pairs"] == [["[1,2,3,-]", "[2,3,1,-]"]]


def test_empty_pairs_give_the_identity_congruence(runner):
    assert "classes: 209" in run(runner, "congruence", I4, EMPTY).stdout


def test_class_of(runner):
    result = run(runner, "class-of", I4, PAIR, "[2,4,3,-]")
    assert result.exit_code == 0
    lines = result.stdout.split()
    assert lines[:2] == ["size", "3"]
    assert set(lines[2:]) == {"[2,4,3,-]", "[4,3,2,-]", "[3,2,4,-]"}


def test_contains(runner):
    result = run(runner, "contains", I4, PAIR, "(1)(2)(3)", "(1 2 3)")
    assert result.exit_code == 0
    assert result.stdout.strip() == "true"
    result = run(runner, "contains", I4, PAIR, "(1)(2)(3)", "(1 2)(3)")
    assert result.exit_code == 1
    assert result.stdout.strip() == "false"
    assert run(runner, "contains", I4, PAIR, "[1 2 4] (3)", "[1 4] (2 3)").exit_code == 0


def test_contains_json(runner):
    result = run(runner, "contains", I4, PAIR, "(1)(2)(3)", "(1 2 3)", "--json")
    assert json.loads(result.stdout)["contains"] is True


@pytest.mark.parametrize(
    "command, expected",
    [("kernel", "size 102"), ("reps", "size 57")],
)
def test_element_listings(runner, command, expected):
    result = run(runner, command, I4, PAIR)
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == expected


def test_trace(runner):
    result = run(runner, "trace", I4, PAIR)
    assert len(result.stdout.splitlines()) == 6


@pytest.mark.parametrize("engine", ["fast", "naive"])
def test_join_and_meet(runner, engine):
    assert "classes: 1" in run(runner, "join", I4, PAIR, UNIVERSAL, "--engine", engine).stdout
    assert "classes: 57" in run(runner, "meet", I4, PAIR, UNIVERSAL, "--engine", engine).stdout


def test_mu(runner):
    result = run(runner, "mu", I4)
    assert result.exit_code == 0
    assert "classes: 209" in result.stdout
    assert "trivial: yes" in result.stdout
    assert json.loads(run(runner, "mu", I4, "--json").stdout)["atoms"] == [[1], [2], [3], [4]]


def test_missing_file(runner, tmp_path):
    result = run(runner, "info", str(tmp_path / "missing.sgp"))
    assert result.exit_code == 3


def test_bad_element(runner):
    assert run(runner, "class-of", I4, PAIR, "(1 5)").exit_code == 3


def test_missing_argument_is_a_usage_error(runner):
    assert run(runner, "congruence", I4).exit_code == 2


def test_pair_outside_the_semigroup(runner, tmp_path):
    sgp = tmp_path / "c2.sgp"
    sgp.write_text("degree 2\n(1 2)\n")
    prs = tmp_path / "outside.prs"
    prs.write_text("[-,-]\t(1 2)\n")
    assert run(runner, "congruence", str(sgp), str(prs)).exit_code == 4


def test_bench(runner, tmp_path):
    csv_path = tmp_path / "bench.csv"
    result = run(
        runner, "bench", "--samples", "2", "--degree", "3", "--limit", "500",
        "--min-size", "1", "--csv", str(csv_path), "--json",
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert len(report["records"]) == 2
    assert report["median_ratio"] is not None
    header = csv_path.read_text().splitlines()[0]
    assert header.startswith("seed,degree,size")


def test_bench_rejects_zero_samples(runner):
    assert run(runner, "bench", "--samples", "0").exit_code == 2
