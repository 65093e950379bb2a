"""작은 크기 볼록 토폴로지 전수 열거"""

from itertools import combinations, product
from math import comb
from typing import Iterator, List, Optional, Tuple

from loguru import logger

from utils import get_settings
from utils.errors import BudgetExceeded
from topology import LinkLabel, NodeRef, Placement, Topology, validate_convexity


Column = Tuple[LinkLabel, ...]


def enumeration_size(max_sources: int, max_destinations: int) -> int:
    """열거 공간 크기: 크기별 (배치 수 × 라벨 행렬 수) 합"""
    return sum(
        comb(T + K, T) * 3 ** (T * K)
        for T in range(1, max_sources + 1)
        for K in range(1, max_destinations + 1)
    )


def _placements(num_sources: int, num_destinations: int) -> Iterator[Placement]:
    total = num_sources + num_destinations
    for slots in combinations(range(total), num_sources):
        order: List[NodeRef] = []
        next_source, next_destination = 1, 1
        for slot in range(total):
            if next_source <= num_sources and slot == slots[next_source - 1]:
                order.append(NodeRef.source(next_source))
                next_source += 1
            else:
                order.append(NodeRef.destination(next_destination))
                next_destination += 1
        yield Placement(tuple(order))


def _candidate_columns(num_sources: int, anchors: List[int]) -> List[Column]:
    """바로 옆 송신을 포함하는 Desired 구간 ⊆ 청취 구간 형태의 열 후보"""
    columns = []
    for a in range(1, num_sources + 1):
        for b in range(a, num_sources + 1):
            if not any(a <= anchor <= b for anchor in anchors):
                continue
            for h in range(1, a + 1):
                for g in range(b, num_sources + 1):
                    columns.append(tuple(
                        LinkLabel.DESIRED if a <= i <= b
                        else LinkLabel.INTERFERING if h <= i <= g
                        else LinkLabel.WEAK
                        for i in range(1, num_sources + 1)
                    ))
    return columns


def _enumerate_size(num_sources: int, num_destinations: int) -> Iterator[Topology]:
    for placement in _placements(num_sources, num_destinations):
        per_destination = []
        seen = 0
        for node in placement.order:
            if node.is_source:
                seen += 1
                continue
            anchors = [index for index in (seen, seen + 1) if 1 <= index <= num_sources]
            per_destination.append(_candidate_columns(num_sources, anchors))

        for columns in product(*per_destination):
            links = tuple(
                tuple(column[i] for column in columns)
                for i in range(num_sources)
            )
            if any(LinkLabel.DESIRED not in row for row in links):
                continue
            topology = Topology(
                num_sources=num_sources,
                num_destinations=num_destinations,
                placement=placement,
                links=links
            )
            if validate_convexity(topology).is_convex:
                yield topology


def enumerate_topologies(
    max_sources: int,
    max_destinations: int,
    budget: Optional[int] = None
) -> Iterator[Topology]:
    """T <= max_sources, K <= max_destinations 인 모든 볼록 토폴로지를 한 번씩

    순서: (T, K) 크기, 배치(송신 자리 조합의 사전순), 라벨 행렬 순

    Raises:
        BudgetExceeded: 열거 공간이 enumeration_budget 을 넘을 때
    """
    budget = get_settings().enumeration_budget if budget is None else budget
    size = enumeration_size(max_sources, max_destinations)
    if size > budget:
        raise BudgetExceeded(f"열거 공간 {size:,}이 한도 {budget:,}를 넘습니다 (T<={max_sources}, K<={max_destinations})")

    logger.debug(f"열거 시작: T<={max_sources}, K<={max_destinations}, 공간 {size:,}")
    return _enumerate_all(max_sources, max_destinations)


def _enumerate_all(max_sources: int, max_destinations: int) -> Iterator[Topology]:
    for T in range(1, max_sources + 1):
        for K in range(1, max_destinations + 1):
            yield from _enumerate_size(T, K)
