"""명령행 / 배치 검증 테스트"""

import json
import os
import sys
from pathlib import Path

import pytest
from loguru import logger

# 프로젝트 루트를 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

import cli.batch
from topology import Message, load_topology, parse_topology, serialize_topology, validate_convexity
from utils.errors import ScheduleMismatch, UnknownMessage
from generator import GeneratorParams, fixture
from cli import run
from utils import setup_logger
from cli.batch import (
    INVARIANT_COUNTERS,
    BatchConfig,
    BatchItem,
    batch_verify,
    check_instance,
    items_from_dir,
    items_from_random,
)


FIXTURES = Path(__file__).parent.parent / "data" / "fixtures"

SMALL_BATCH = BatchConfig(
    wrap_full_subset_limit=8,
    wrap_sample_size=20,
    codec_payload_trials=5,
    codec_exhaustive_picks=3,
    workers=1
)


def run_cli(capsys, *argv):
    code = run(["--log-level", "ERROR", *argv])
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, "--format", "json", *argv)
    return code, json.loads(out)


# ----------------------------------------------------------------------
# 하위 명령
# ----------------------------------------------------------------------

def test_solve_fig2like(capsys):
    code, out = run_cli(capsys, "solve", str(FIXTURES / "fig2like.tim"))

    assert code == 0
    assert out.splitlines() == ["schedule (1,1),(4,4),(8,8)", "sum_dof 3"]


def test_solve_rtl_trace(capsys):
    code, out = run_cli(capsys, "solve", "fig2like", "--direction", "rtl", "--mode", "literal", "--trace")

    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "schedule (9,10),(7,8),(3,3)"
    assert len(lines) == 2 + 9


def test_solve_json(capsys):
    code, data = run_json(capsys, "solve", "chain3")

    assert code == 0
    assert data["sum_dof"] == 2


def test_validate(capsys):
    code, out = run_cli(capsys, "validate", "chain3")
    assert code == 0
    assert out.strip() == "convex yes"

    code, out = run_cli(capsys, "validate", "fourcell")
    assert code == 1
    assert out.startswith("convex no\nviolation ")


def test_validate_json(capsys):
    code, data = run_json(capsys, "validate", "fourcell")

    assert code == 1
    assert data["convex"] is False
    assert data["violations"]


def test_solve_non_convex_exit_code(capsys):
    code, out = run_cli(capsys, "solve", "fourcell")

    assert code == 1
    assert out.startswith("error NotConvex")


def test_oracle_runs_on_non_convex(capsys):
    code, out = run_cli(capsys, "oracle", "fourcell")

    assert code == 0
    assert out.splitlines()[0] == "max_orthogonal 2"


def test_certify(capsys):
    code, out = run_cli(capsys, "certify", "unit1")

    assert code == 0
    assert out.rstrip("\n").endswith("SUM-DOF\n  1")


def test_reciprocal(capsys):
    code, out = run_cli(capsys, "reciprocal", "unit1")

    assert code == 0
    assert "placement D1 S1" in out.splitlines()


def test_indexcode(capsys):
    code, out = run_cli(capsys, "indexcode", "chain3", "--payload-seed", "3")

    assert code == 0
    lines = out.splitlines()
    assert "max_clique 2" in lines
    assert "schedule (1,1),(3,3)" in lines
    assert lines[-1] == "sum_rate 2"
    assert "FAIL" not in out


def test_indexcode_non_convex_skips_codec(capsys):
    code, data = run_json(capsys, "indexcode", "fourcell")

    assert code == 0
    assert data["max_clique"] == 2
    assert "decode" not in data


def test_output_is_deterministic(capsys):
    first = run_cli(capsys, "--format", "json", "certify", "fig3like")
    second = run_cli(capsys, "--format", "json", "certify", "fig3like")

    assert first == second


def test_usage_errors(capsys):
    assert run(["solve"]) == 2
    assert run(["frobnicate"]) == 2
    assert run(["generate", "--sources", "5..2", "--out", "x"]) == 2
    capsys.readouterr()


def test_invalid_generator_arguments_are_usage_errors(capsys, tmp_path):
    code, out = run_cli(capsys, "generate", "--seed", "-1", "--out", str(tmp_path / "gen"))
    assert code == 2
    assert out.startswith("error ValidationError")
    assert not (tmp_path / "gen").exists()

    code, data = run_json(capsys, "batch", "--random", "2", "--seed", "-1")
    assert code == 2
    assert data["error"] == "ValidationError"
    assert data["exit_code"] == 2


def test_missing_file(capsys, tmp_path):
    code, out = run_cli(capsys, "solve", str(tmp_path / "nope.tim"))

    assert code == 2
    assert out.startswith("error ")


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.tim"
    path.write_text("TIM v9\n", encoding="utf-8")

    code, data = run_json(capsys, "validate", str(path))

    assert code == 2
    assert data["error"] == "ParseError"


def test_generate(capsys, tmp_path):
    out_dir = tmp_path / "gen"
    code, out = run_cli(
        capsys, "generate", "--sources", "2..4", "--destinations", "3..5",
        "--seed", "42", "--count", "4", "--out", str(out_dir)
    )

    assert code == 0
    assert out.splitlines()[-1] == "wrote 4"
    paths = sorted(out_dir.glob("*.tim"))
    assert len(paths) == 4
    for path in paths:
        topology = load_topology(path)
        assert 2 <= topology.num_sources <= 4
        assert 3 <= topology.num_destinations <= 5
        assert validate_convexity(topology).is_convex


def test_generate_is_reproducible(capsys, tmp_path):
    for name in ("a", "b"):
        run_cli(capsys, "generate", "--seed", "5", "--count", "3", "--out", str(tmp_path / name))

    first = [p.read_text(encoding="utf-8") for p in sorted((tmp_path / "a").glob("*.tim"))]
    second = [p.read_text(encoding="utf-8") for p in sorted((tmp_path / "b").glob("*.tim"))]
    assert first == second


def test_enumerate(capsys, tmp_path):
    code, out = run_cli(
        capsys, "enumerate", "--max-sources", "2", "--max-destinations", "2", "--out", str(tmp_path)
    )

    assert code == 0
    assert out.splitlines()[-1] == "wrote 50"
    assert len(list(tmp_path.glob("*.tim"))) == 50


def test_enumerate_budget_exceeded(capsys, tmp_path):
    code, _ = run_cli(
        capsys, "enumerate", "--max-sources", "4", "--max-destinations", "4", "--out", str(tmp_path)
    )

    assert code == 2


# ----------------------------------------------------------------------
# 배치 검증
# ----------------------------------------------------------------------

def test_batch_fixtures_dir(capsys):
    code, data = run_json(capsys, "batch", "--dir", str(FIXTURES))

    assert code == 0
    assert data["instances_run"] == 5
    assert data["validation_failures"] == 1
    for counter in INVARIANT_COUNTERS:
        assert data[counter] == 0
    assert data["failures"] == []
    assert "elapsed_seconds" not in data


def test_batch_enumerate(capsys):
    code, data = run_json(capsys, "batch", "--enumerate", "2", "2")

    assert code == 0
    assert data["instances_run"] == 50
    assert data["validation_failures"] == 0


def test_batch_random_with_timing(capsys):
    code, data = run_json(
        capsys, "batch", "--random", "5", "--seed", "7",
        "--sources", "1..4", "--destinations", "1..5", "--timing"
    )

    assert code == 0
    assert data["instances_run"] == 5
    assert "elapsed_seconds" in data


def test_check_instance_fixture():
    item = BatchItem("chain3", serialize_topology(fixture("chain3")))
    outcome = check_instance(item, SMALL_BATCH)

    assert outcome.convex
    assert outcome.failed == []


def test_check_instance_non_convex_and_garbage():
    assert not check_instance(BatchItem("four", serialize_topology(fixture("fourcell"))), SMALL_BATCH).convex
    assert not check_instance(BatchItem("junk", "not a topology"), SMALL_BATCH).convex


def test_items_from_dir_sorted():
    names = [item.name for item in items_from_dir(FIXTURES)]

    assert names == sorted(names)
    assert "chain3.tim" in names


def test_items_from_random_seeds():
    items = list(items_from_random(3, 11))

    assert [item.seed for item in items] == ["11:0", "11:1", "11:2"]
    assert items == list(items_from_random(3, 11))


@pytest.mark.parametrize("workers", [1, 2])
def test_batch_verify_workers(workers):
    items = list(items_from_random(6, 21))
    report = batch_verify(items, SMALL_BATCH, workers=workers)

    assert report.instances_run == 6
    assert report.invariant_failures == 0
    assert report.to_dict() == batch_verify(items, SMALL_BATCH, workers=1).to_dict()


def always_extendable(topology, schedule):
    """매번 추가 가능한 메시지가 있다고 답하는 is_maximal 대체"""
    return Message(1, 1)


def test_batch_failure_dump(monkeypatch):
    monkeypatch.setattr(cli.batch, "is_maximal", always_extendable)
    items = list(items_from_random(1, 5))
    report = batch_verify(items, SMALL_BATCH, workers=1)

    assert report.maximality_failures == 1
    assert report.invariant_failures == 1
    [dump] = report.to_dict()["failures"]
    assert dump["name"] == items[0].name
    assert dump["seed"] == "5:0"
    assert dump["checks"] == ["maximality_failures"]
    assert dump["tim"] == items[0].text
    assert parse_topology(dump["tim"]) is not None


def test_batch_failure_exit_code_and_rendering(monkeypatch, capsys):
    monkeypatch.setattr(cli.batch, "is_maximal", always_extendable)
    code, out = run_cli(capsys, "batch", "--dir", str(FIXTURES))

    assert code == 3
    lines = out.splitlines()
    assert "maximality_failures 4" in lines
    assert "--- chain3.tim (seed None): maximality_failures" in lines
    chain3_text = (FIXTURES / "chain3.tim").read_text(encoding="utf-8").rstrip("\n")
    assert chain3_text in out


def test_unexpected_errors_count_against_their_own_check(monkeypatch):
    def broken_index_coding(topology):
        raise UnknownMessage("인덱스 코딩 변환 실패")

    def mismatched_certificate(topology):
        raise ScheduleMismatch("스케줄 불일치")

    monkeypatch.setattr(cli.batch, "to_index_coding", broken_index_coding)
    monkeypatch.setattr(cli.batch, "certify", mismatched_certificate)
    outcome = check_instance(BatchItem("chain3", serialize_topology(fixture("chain3"))), SMALL_BATCH)

    assert outcome.failed == ["partition_acyclicity_failures", "codec_failures"]
    assert "triple_equality_failures" not in outcome.failed


def test_batch_oracle_covers_largest_default_draws():
    params = GeneratorParams.from_config()
    assert params.sources[1] * params.destinations[1] <= BatchConfig.from_config().oracle_message_limit

    large = params.model_copy(update={"sources": (10, 10), "destinations": (12, 12)})
    report = batch_verify(list(items_from_random(2, 13, large)), SMALL_BATCH, workers=1)

    assert report.oracle_skipped == 0
    assert report.invariant_failures == 0


def test_log_file_records_worker_process(tmp_path):
    log_file = tmp_path / "logs" / "tim.log"
    setup_logger(log_level="debug", log_file=log_file)
    logger.debug("배치 검증 시작")
    logger.complete()
    setup_logger(log_level="ERROR")

    line = log_file.read_text(encoding="utf-8").strip()
    assert line.endswith("배치 검증 시작")
    assert f"| {os.getpid()} |" in line
