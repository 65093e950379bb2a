"""배치 검증: 인스턴스마다 불변식 전체를 돌리고 실패 사례를 모은다"""

import hashlib
import time
from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator, List, Optional

from loguru import logger
from pydantic import BaseModel, Field

from utils import get_settings
from utils.errors import InvariantViolation, NotAClique, ScheduleMismatch, TopologyError
from topology import Topology, eliminate, parse_topology, reciprocal, serialize_topology, validate_convexity
from greedy import Direction, Mode, greedy_schedule, is_maximal
from oracle import (
    build_demand_graph,
    certify,
    find_cycle,
    find_wrap_pattern,
    max_orthogonal,
    max_orthogonal_exhaustive,
    verify_certificate,
)
from indexcoding import one_bit_payloads, random_payloads, simulate_xor_code, to_index_coding
from generator import GeneratorParams, derive_rng, random_convex_topology


INVARIANT_COUNTERS = (
    "triple_equality_failures",
    "direction_equality_failures",
    "duality_failures",
    "mode_equivalence_failures",
    "partition_acyclicity_failures",
    "wrap_pattern_failures",
    "codec_failures",
    "recursion_failures",
    "maximality_failures",
)


class BatchConfig(BaseModel):
    """config.json 의 batch 섹션"""

    wrap_full_subset_limit: int = Field(default=12, ge=0)
    wrap_sample_size: int = Field(default=200, ge=0)
    codec_payload_trials: int = Field(default=100, ge=0)
    codec_exhaustive_picks: int = Field(default=6, ge=0)
    workers: int = Field(default=1, ge=1)
    oracle_message_limit: int = Field(default=120, ge=1)

    @classmethod
    def from_config(cls) -> "BatchConfig":
        return cls(**get_settings().get_batch_config())


@dataclass(frozen=True)
class BatchItem:
    """검증할 인스턴스 하나 (TIM v1 원문과 재현용 시드)"""

    name: str
    text: str
    seed: Optional[str] = None

    def rng_seed(self) -> int:
        key = self.seed if self.seed is not None else self.text
        return int.from_bytes(hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest(), "big")


@dataclass
class InstanceOutcome:
    name: str
    convex: bool = True
    oracle_skipped: bool = False
    failed: List[str] = field(default_factory=list)
    details: List[str] = field(default_factory=list)

    def fail(self, counter: str, detail: str) -> None:
        if counter not in self.failed:
            self.failed.append(counter)
        self.details.append(f"{counter}: {detail}")


@dataclass
class FailureDump:
    name: str
    seed: Optional[str]
    checks: List[str]
    details: List[str]
    tim: str

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "checks": self.checks,
            "details": self.details,
            "tim": self.tim
        }


@dataclass
class BatchReport:
    """배치 검증 집계 (불변식 카운터는 모두 0이어야 정상)"""

    instances_run: int = 0
    validation_failures: int = 0
    triple_equality_failures: int = 0
    direction_equality_failures: int = 0
    duality_failures: int = 0
    mode_equivalence_failures: int = 0
    partition_acyclicity_failures: int = 0
    wrap_pattern_failures: int = 0
    codec_failures: int = 0
    recursion_failures: int = 0
    maximality_failures: int = 0
    oracle_skipped: int = 0
    elapsed: Optional[float] = None
    dumps: List[FailureDump] = field(default_factory=list)

    @property
    def invariant_failures(self) -> int:
        return sum(getattr(self, counter) for counter in INVARIANT_COUNTERS)

    def add(self, item: BatchItem, outcome: InstanceOutcome) -> None:
        self.instances_run += 1
        if not outcome.convex:
            self.validation_failures += 1
            return
        self.oracle_skipped += int(outcome.oracle_skipped)
        for counter in outcome.failed:
            setattr(self, counter, getattr(self, counter) + 1)
        if outcome.failed:
            self.dumps.append(FailureDump(item.name, item.seed, outcome.failed, outcome.details, item.text))

    def to_dict(self) -> dict:
        data = {
            "instances_run": self.instances_run,
            "validation_failures": self.validation_failures,
        }
        data.update({counter: getattr(self, counter) for counter in INVARIANT_COUNTERS})
        data["oracle_skipped"] = self.oracle_skipped
        if self.elapsed is not None:
            data["elapsed_seconds"] = round(self.elapsed, 3)
        data["failures"] = [dump.to_dict() for dump in self.dumps]
        return data


# ----------------------------------------------------------------------
# 인스턴스별 검사
# ----------------------------------------------------------------------

def _check_schedules(topology: Topology, outcome: InstanceOutcome):
    ltr = greedy_schedule(topology, Direction.LTR, Mode.SAFE)
    rtl = greedy_schedule(topology, Direction.RTL, Mode.SAFE)
    if ltr.size != rtl.size:
        outcome.fail("direction_equality_failures", f"LTR {ltr.pairs_text()} / RTL {rtl.pairs_text()}")

    for direction, safe in ((Direction.LTR, ltr), (Direction.RTL, rtl)):
        literal = greedy_schedule(topology, direction, Mode.LITERAL)
        if literal.picks != safe.picks:
            outcome.fail(
                "mode_equivalence_failures",
                f"{direction.value}: safe {safe.pairs_text()} / literal {literal.pairs_text()}"
            )

    extra = is_maximal(topology, ltr)
    if extra is not None:
        outcome.fail("maximality_failures", f"{extra} 추가 가능")
    return ltr


def _check_optimality(topology: Topology, ltr, config: BatchConfig, outcome: InstanceOutcome) -> None:
    try:
        certificate = certify(topology)
        verify_certificate(topology, certificate)
    except (InvariantViolation, ScheduleMismatch) as e:
        outcome.fail("partition_acyclicity_failures", e.describe())
        return

    settings = get_settings()
    message_count = len(topology.messages())
    sizes = [ltr.size, certificate.sum_dof]
    if message_count <= config.oracle_message_limit:
        sizes.append(max_orthogonal(topology, limit=config.oracle_message_limit).size)
    else:
        outcome.oracle_skipped = True
    if message_count <= settings.exhaustive_cross_check_limit:
        sizes.append(max_orthogonal_exhaustive(topology).size)
    if len(set(sizes)) != 1:
        outcome.fail("triple_equality_failures", f"greedy/certificate/oracle = {sizes}")

    try:
        dual = greedy_schedule(reciprocal(topology), Direction.LTR, Mode.SAFE)
    except TopologyError as e:
        outcome.fail("duality_failures", e.describe())
    else:
        if dual.size != ltr.size:
            outcome.fail("duality_failures", f"원본 {ltr.size} / 상반 {dual.size}")


def _check_recursion(topology: Topology, ltr, outcome: InstanceOutcome) -> None:
    if ltr.size < 2:
        return
    second = ltr.picks[1]
    try:
        reduced = eliminate(
            topology,
            sources=range(1, second.source),
            destinations=range(1, second.destination)
        )
        tail = greedy_schedule(reduced, Direction.LTR, Mode.SAFE)
    except TopologyError as e:
        outcome.fail("recursion_failures", e.describe())
        return

    shift_s, shift_d = second.source - 1, second.destination - 1
    expected = [(m.source - shift_s, m.destination - shift_d) for m in ltr.picks[1:]]
    actual = [(m.source, m.destination) for m in tail.picks]
    if actual != expected:
        outcome.fail("recursion_failures", f"축약 후 {actual} / 기대 {expected}")


def _subsets(messages, config: BatchConfig, rng) -> Iterator[tuple]:
    if len(messages) <= config.wrap_full_subset_limit:
        for size in range(2, len(messages) + 1):
            yield from combinations(messages, size)
        return
    for _ in range(config.wrap_sample_size):
        subset = tuple(m for m in messages if rng.random() < 0.5)
        if len(subset) >= 2:
            yield subset


def _check_wrap_patterns(topology: Topology, config: BatchConfig, rng, outcome: InstanceOutcome) -> None:
    for subset in _subsets(topology.messages(), config, rng):
        cycle = find_cycle(build_demand_graph(topology, subset))
        if cycle is None:
            continue
        try:
            find_wrap_pattern(topology, cycle)
        except InvariantViolation as e:
            outcome.fail("wrap_pattern_failures", f"{[str(m) for m in subset]}: {e.describe()}")
            return


def _check_codec(topology: Topology, ltr, config: BatchConfig, rng, outcome: InstanceOutcome) -> None:
    instance = to_index_coding(topology)
    bits = get_settings().payload_bits
    trials = [(random_payloads(ltr.size, bits, rng), bits) for _ in range(config.codec_payload_trials)]
    if ltr.size <= config.codec_exhaustive_picks:
        trials.extend((vector, 1) for vector in one_bit_payloads(ltr.size))

    for payloads, width in trials:
        try:
            report = simulate_xor_code(instance, ltr, payloads, bits=width)
        except NotAClique as e:
            outcome.fail("codec_failures", e.describe())
            return
        if not report.all_decoded:
            outcome.fail("codec_failures", f"페이로드 {payloads} 복호 실패")
            return


def check_instance(item: BatchItem, config: BatchConfig) -> InstanceOutcome:
    """인스턴스 하나에 대한 불변식 전체 검사 (순수 함수)"""
    outcome = InstanceOutcome(item.name)
    try:
        topology = parse_topology(item.text)
    except TopologyError as e:
        logger.warning(f"{item.name}: 읽을 수 없는 인스턴스 ({e.describe()})")
        outcome.convex = False
        return outcome

    report = validate_convexity(topology)
    if not report.is_convex:
        logger.warning(f"{item.name}: 볼록 토폴로지가 아님 ({report.violations[0]})")
        outcome.convex = False
        return outcome

    rng = derive_rng(item.rng_seed())
    try:
        ltr = _check_schedules(topology, outcome)
    except TopologyError as e:
        outcome.fail("direction_equality_failures", f"예상치 못한 오류: {e.describe()}")
        ltr = None

    if ltr is not None:
        checks = (
            ("triple_equality_failures", _check_optimality, (topology, ltr, config, outcome)),
            ("recursion_failures", _check_recursion, (topology, ltr, outcome)),
            ("wrap_pattern_failures", _check_wrap_patterns, (topology, config, rng, outcome)),
            ("codec_failures", _check_codec, (topology, ltr, config, rng, outcome)),
        )
        for counter, check, args in checks:
            try:
                check(*args)
            except TopologyError as e:
                outcome.fail(counter, f"예상치 못한 오류: {e.describe()}")

    if outcome.failed:
        logger.warning(f"{item.name}: 불변식 위반 {outcome.failed}")
    return outcome


def _check_star(args) -> InstanceOutcome:
    return check_instance(*args)


# ----------------------------------------------------------------------
# 인스턴스 소스
# ----------------------------------------------------------------------

def items_from_dir(directory: Path) -> List[BatchItem]:
    """디렉토리의 *.tim 파일 (이름순)"""
    return [
        BatchItem(name=path.name, text=path.read_text(encoding="utf-8"))
        for path in sorted(Path(directory).glob("*.tim"))
    ]


def items_from_topologies(topologies: Iterable[Topology], prefix: str = "instance") -> Iterator[BatchItem]:
    for index, topology in enumerate(topologies):
        yield BatchItem(name=f"{prefix}_{index:05d}", text=serialize_topology(topology))


def items_from_random(count: int, seed: int, params: Optional[GeneratorParams] = None) -> Iterator[BatchItem]:
    """(seed, index) 별 시드 스트림으로 만든 랜덤 인스턴스"""
    params = params or GeneratorParams.from_config(seed=seed)
    for index in range(count):
        topology = random_convex_topology(params, derive_rng(seed, index))
        yield BatchItem(
            name=f"random_{index:05d}",
            text=serialize_topology(topology),
            seed=f"{seed}:{index}"
        )


def batch_verify(
    items: Iterable[BatchItem],
    config: Optional[BatchConfig] = None,
    workers: Optional[int] = None,
    timing: bool = False
) -> BatchReport:
    """인스턴스 스트림 전체 검증

    Args:
        items: 검증할 인스턴스
        config: 배치 설정 (기본: config.json)
        workers: 프로세스 수 (1이면 현재 프로세스에서 순차 실행)
        timing: 보고서에 경과 시간 포함 여부
    """
    config = config or BatchConfig.from_config()
    workers = workers or config.workers
    report = BatchReport()
    started = time.perf_counter()

    items = list(items)
    if workers > 1:
        with Pool(processes=workers) as pool:
            outcomes = pool.imap(_check_star, [(item, config) for item in items], chunksize=8)
            for item, outcome in zip(items, outcomes):
                report.add(item, outcome)
    else:
        for item in items:
            report.add(item, check_instance(item, config))

    if timing:
        report.elapsed = time.perf_counter() - started
    logger.info(
        f"배치 검증 완료: {report.instances_run}개, 비볼록 {report.validation_failures}개, "
        f"불변식 위반 {report.invariant_failures}건"
    )
    return report
