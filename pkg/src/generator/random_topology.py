"""시드 기반 랜덤 볼록 토폴로지 생성

배치를 섞은 뒤 수신 단말마다 바로 옆 송신을 포함하는 Desired 구간과
그것을 양쪽으로 넓힌 청취 구간을 뽑는다. 수신 단말 쪽 구간만으로는 송신 기지국
쪽 규칙이 보장되지 않으므로 validate_convexity 와 커버리지 검사로 받아들일지 정한다.
"""

import hashlib
import random
from collections import Counter
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from loguru import logger

from utils.errors import GenerationExhausted, StructureError
from topology import LinkLabel, NodeRef, Placement, Topology, save_topology, validate_convexity
from .models import GeneratorParams, Strategy


Interval = Tuple[int, int]


def derive_rng(seed: int, index: Optional[int] = None) -> random.Random:
    """(seed, index) 를 해시해 서로 겹치지 않는 난수 스트림 생성"""
    key = str(seed) if index is None else f"{seed}:{index}"
    digest = hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def _geometric(rng: random.Random, mean: float) -> int:
    """평균 mean 인 기하분포 (실패 횟수)"""
    if mean <= 0:
        return 0
    keep = mean / (1.0 + mean)
    count = 0
    while rng.random() < keep:
        count += 1
    return count


def _sample_placement(rng: random.Random, num_sources: int, num_destinations: int) -> Placement:
    slots = set(rng.sample(range(num_sources + num_destinations), num_sources))
    order: List[NodeRef] = []
    next_source, next_destination = 1, 1
    for slot in range(num_sources + num_destinations):
        if slot in slots:
            order.append(NodeRef.source(next_source))
            next_source += 1
        else:
            order.append(NodeRef.destination(next_destination))
            next_destination += 1
    return Placement(tuple(order))


def _sources_left_of(placement: Placement) -> List[int]:
    """수신 단말별 왼쪽에 있는 송신 수 (0번 자리는 비움)"""
    counts = [0]
    seen = 0
    for node in placement.order:
        if node.is_source:
            seen += 1
        else:
            counts.append(seen)
    return counts


def _anchors(left_count: int, num_sources: int) -> List[int]:
    anchors = []
    if left_count >= 1:
        anchors.append(left_count)
    if left_count + 1 <= num_sources:
        anchors.append(left_count + 1)
    return anchors


def _monotone_intervals(
    rng: random.Random,
    params: GeneratorParams,
    num_sources: int,
    left_counts: List[int]
) -> List[Tuple[Interval, Interval]]:
    """끝점이 단조 증가하도록 왼쪽부터 (Desired, 청취) 구간 샘플링"""
    num_destinations = len(left_counts) - 1
    shrink = params.desired_extension / (1.0 + params.desired_extension)
    columns = []
    a_prev, b_prev = 1, 0
    h_prev, g_prev = 1, 1

    for k in range(1, num_destinations + 1):
        anchors = _anchors(left_counts[k], num_sources)
        a_range = range(1, 2) if k == 1 else range(a_prev, b_prev + 2)
        candidates = []
        for a in a_range:
            b_range = range(num_sources, num_sources + 1) if k == num_destinations else range(
                max(a, b_prev), num_sources + 1
            )
            for b in b_range:
                if any(a <= anchor <= b for anchor in anchors):
                    candidates.append((a, b))
        weights = [shrink ** (b - a) for a, b in candidates]
        if not any(weights):
            weights = [1.0] * len(candidates)
        a, b = rng.choices(candidates, weights=weights)[0]

        h = max(a - _geometric(rng, params.interference_extension), h_prev, 1)
        g = min(max(b + _geometric(rng, params.interference_extension), g_prev), num_sources)
        columns.append(((a, b), (h, g)))
        a_prev, b_prev, h_prev, g_prev = a, b, h, g
    return columns


def _independent_intervals(
    rng: random.Random,
    params: GeneratorParams,
    num_sources: int,
    left_counts: List[int]
) -> List[Tuple[Interval, Interval]]:
    """수신 단말마다 독립적으로 (Desired, 청취) 구간 샘플링"""
    columns = []
    for left_count in left_counts[1:]:
        anchor = rng.choice(_anchors(left_count, num_sources))
        a = max(1, anchor - _geometric(rng, params.desired_extension))
        b = min(num_sources, anchor + _geometric(rng, params.desired_extension))
        h = max(1, a - _geometric(rng, params.interference_extension))
        g = min(num_sources, b + _geometric(rng, params.interference_extension))
        columns.append(((a, b), (h, g)))
    return columns


def _assemble(
    num_sources: int,
    placement: Placement,
    columns: List[Tuple[Interval, Interval]]
) -> Topology:
    rows = []
    for i in range(1, num_sources + 1):
        row = []
        for (a, b), (h, g) in columns:
            if a <= i <= b:
                row.append(LinkLabel.DESIRED)
            elif h <= i <= g:
                row.append(LinkLabel.INTERFERING)
            else:
                row.append(LinkLabel.WEAK)
        rows.append(tuple(row))
    return Topology(
        num_sources=num_sources,
        num_destinations=len(columns),
        placement=placement,
        links=tuple(rows)
    )


def random_convex_topology(params: GeneratorParams, rng: Optional[random.Random] = None) -> Topology:
    """랜덤 볼록 토폴로지 (같은 파라미터면 같은 결과)

    Args:
        params: 생성 파라미터
        rng: 난수 생성기 (없으면 params.seed 로 생성)

    Raises:
        GenerationExhausted: max_attempts 안에 볼록 토폴로지를 얻지 못했을 때
    """
    if rng is None:
        rng = derive_rng(params.seed)
    num_sources = rng.randint(*params.sources)
    num_destinations = rng.randint(*params.destinations)
    sample = _monotone_intervals if params.strategy is Strategy.MONOTONE else _independent_intervals

    rejections: Counter = Counter()
    for attempt in range(1, params.max_attempts + 1):
        placement = _sample_placement(rng, num_sources, num_destinations)
        columns = sample(rng, params, num_sources, _sources_left_of(placement))
        topology = _assemble(num_sources, placement, columns)

        try:
            topology.check_structure()
        except StructureError as e:
            rejections[e.rule_id] += 1
            continue
        report = validate_convexity(topology)
        if not report.is_convex:
            rejections[report.violations[0].rule_id] += 1
            continue

        if rejections:
            logger.debug(f"T={num_sources}, K={num_destinations}: {attempt}번째 시도에서 채택 (기각 {dict(rejections)})")
        return topology

    raise GenerationExhausted(
        f"{params.max_attempts}번 시도 동안 볼록 토폴로지를 얻지 못했습니다 "
        f"(T={num_sources}, K={num_destinations}, 채택 0/{params.max_attempts}, 기각 사유 {dict(rejections)})",
        attempts=params.max_attempts,
        rejections=dict(rejections)
    )


def generate_batch(params: GeneratorParams, count: int) -> List[Topology]:
    """인덱스별로 분리된 시드 스트림으로 count 개 생성"""
    topologies = [random_convex_topology(params, derive_rng(params.seed, index)) for index in range(count)]
    logger.info(f"랜덤 볼록 토폴로지 {len(topologies)}개 생성 (seed={params.seed}, {params.strategy.value})")
    return topologies


def write_instances(topologies: Iterable[Topology], out_dir: Path, prefix: str = "random") -> List[Path]:
    """TIM v1 파일로 저장"""
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for index, topology in enumerate(topologies):
        path = out_dir / f"{prefix}_{index:04d}.tim"
        save_topology(topology, path)
        paths.append(path)
    logger.info(f"{len(paths)}개 인스턴스 저장: {out_dir}")
    return paths
