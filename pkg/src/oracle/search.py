"""최대 직교 메시지 집합 탐색

충돌 구조를 비트마스크로 표현한 분기 한정(branch-and-bound) 탐색.
메시지를 사전순으로 정렬해 포함 우선으로 내려가므로 처음 만난 최대 크기 집합이
사전순으로 가장 작은 최적해가 된다.
"""

from itertools import combinations
from typing import List, Optional

import networkx as nx
from loguru import logger

from utils import get_settings
from utils.errors import SizeLimit
from topology import Message, Topology
from greedy.orthogonal import compatible
from .models import OracleResult


def _compatibility_masks(topology: Topology, messages: List[Message]) -> List[int]:
    masks = [0] * len(messages)
    for a, b in combinations(range(len(messages)), 2):
        if compatible(topology, messages[a], messages[b]):
            masks[a] |= 1 << b
            masks[b] |= 1 << a
    return masks


def _group_masks(keys: List[int]) -> List[int]:
    groups = {}
    for at, key in enumerate(keys):
        groups[key] = groups.get(key, 0) | (1 << at)
    return list(groups.values())


def max_orthogonal(topology: Topology, limit: Optional[int] = None) -> OracleResult:
    """최대 크기 직교 메시지 집합

    볼록성을 요구하지 않는다 (반례 토폴로지에도 사용).

    Args:
        topology: 구조적으로 유효한 토폴로지
        limit: 메시지 수 한도 (기본: 설정의 oracle_message_limit)

    Raises:
        SizeLimit: 메시지 수가 한도를 넘을 때
    """
    limit = get_settings().oracle_message_limit if limit is None else limit
    messages = list(topology.messages())
    if len(messages) > limit:
        raise SizeLimit(f"메시지 {len(messages)}개가 탐색 한도 {limit}개를 넘습니다")
    if not messages:
        return OracleResult(0, ())

    masks = _compatibility_masks(topology, messages)
    by_destination = _group_masks([m.destination for m in messages])
    by_source = _group_masks([m.source for m in messages])

    def upper_bound(candidates: int) -> int:
        return min(
            bin(candidates).count("1"),
            sum(1 for group in by_destination if candidates & group),
            sum(1 for group in by_source if candidates & group),
        )

    # 초기 해: 사전순 first-fit (포함 우선 탐색의 첫 잎과 같다)
    best: List[int] = []
    candidates = (1 << len(messages)) - 1
    while candidates:
        low = (candidates & -candidates).bit_length() - 1
        best.append(low)
        candidates &= masks[low] & ~((1 << (low + 1)) - 1)

    visited = 0

    def search(chosen: List[int], candidates: int) -> None:
        nonlocal best, visited
        visited += 1
        if not candidates:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + upper_bound(candidates) <= len(best):
            return
        low = (candidates & -candidates).bit_length() - 1
        chosen.append(low)
        search(chosen, candidates & masks[low] & ~((1 << (low + 1)) - 1))
        chosen.pop()
        search(chosen, candidates & ~(1 << low))

    search([], (1 << len(messages)) - 1)
    witness = tuple(messages[at] for at in best)
    logger.debug(f"max_orthogonal: 메시지 {len(messages)}개, 탐색 노드 {visited}개, 최적 {len(witness)}")
    return OracleResult(len(witness), witness)


def max_orthogonal_exhaustive(topology: Topology, limit: Optional[int] = None) -> OracleResult:
    """전수 탐색 교차검증용 (큰 크기부터 사전순 조합)

    Raises:
        SizeLimit: 메시지 수가 exhaustive_cross_check_limit 을 넘을 때
    """
    limit = get_settings().exhaustive_cross_check_limit if limit is None else limit
    messages = list(topology.messages())
    if len(messages) > limit:
        raise SizeLimit(f"전수 탐색은 메시지 {limit}개까지만 지원합니다 ({len(messages)}개)")

    upper = min(len({m.source for m in messages}), len({m.destination for m in messages}))
    for size in range(upper, 0, -1):
        for subset in combinations(messages, size):
            if all(compatible(topology, a, b) for a, b in combinations(subset, 2)):
                return OracleResult(size, subset)
    return OracleResult(0, ())


def conflict_graph(topology: Topology) -> nx.Graph:
    """메시지 충돌 그래프 (함께 직교 전송할 수 없는 쌍을 간선으로)"""
    graph = nx.Graph()
    messages = topology.messages()
    graph.add_nodes_from(messages)
    for a, b in combinations(messages, 2):
        if not compatible(topology, a, b):
            graph.add_edge(a, b)
    return graph
