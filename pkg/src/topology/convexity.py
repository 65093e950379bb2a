"""1차원 볼록 셀룰러 모델 검증 모듈

수신 단말 관점 규칙(DC-a..d)과 송신 기지국 관점 규칙(SC-a..d)을
노드 삼중쌍 전수 검사로 확인한다. interval_profile 은 같은 조건을
노드별 구간 구조로 독립적으로 확인한다.
"""

from typing import Dict, List, Optional, Sequence

from loguru import logger

from utils.errors import InvariantViolation, NotConvex
from .models import (
    IndexInterval,
    IntervalProfile,
    NodeIntervals,
    NodeKind,
    NodeRef,
    Topology,
    ValidationReport,
    Violation,
    neighbours,
)


RULE_ORDER = ("DC-a", "DC-b", "DC-c", "DC-d", "SC-a", "SC-b", "SC-c", "SC-d")


def _witness(topology: Topology, *nodes: NodeRef) -> tuple:
    return tuple(sorted(nodes, key=topology.position))


def validate_convexity(topology: Topology) -> ValidationReport:
    """8개 볼록성 규칙 위반 사례를 모두 찾는다

    Args:
        topology: 구조적으로 유효한 토폴로지

    Returns:
        규칙 순서, 노드 번호 순으로 정렬된 위반 목록 (비어 있으면 볼록)
    """
    found: Dict[str, List[Violation]] = {rule: [] for rule in RULE_ORDER}
    T, K = topology.num_sources, topology.num_destinations

    def add(rule: str, *nodes: NodeRef) -> None:
        found[rule].append(Violation(rule, _witness(topology, *nodes)))

    # 수신 단말 관점
    for k in range(1, K + 1):
        d_node = NodeRef.destination(k)
        d_pos = topology.position(d_node)
        for i in range(1, T + 1):
            s_i = NodeRef.source(i)
            for j in range(i + 1, T + 1):
                s_j = NodeRef.source(j)
                if topology.position(s_j) < d_pos:
                    # S_i < S_j < D_k : S_j 가 더 가깝다
                    if topology.is_desired(i, k) and not topology.is_desired(j, k):
                        add("DC-a", s_i, s_j, d_node)
                    if topology.is_weak(j, k) and not topology.is_weak(i, k):
                        add("DC-c", s_i, s_j, d_node)
                elif topology.position(s_i) > d_pos:
                    # D_k < S_i < S_j : S_i 가 더 가깝다
                    if topology.is_desired(j, k) and not topology.is_desired(i, k):
                        add("DC-b", s_i, s_j, d_node)
                    if topology.is_weak(i, k) and not topology.is_weak(j, k):
                        add("DC-d", s_i, s_j, d_node)

    # 송신 기지국 관점
    for k in range(1, T + 1):
        s_node = NodeRef.source(k)
        s_pos = topology.position(s_node)
        for i in range(1, K + 1):
            d_i = NodeRef.destination(i)
            for j in range(i + 1, K + 1):
                d_j = NodeRef.destination(j)
                if topology.position(d_j) < s_pos:
                    # D_i < D_j < S_k
                    if topology.is_desired(k, i) and not topology.is_desired(k, j):
                        add("SC-a", d_i, d_j, s_node)
                    if topology.is_weak(k, j) and not topology.is_weak(k, i):
                        add("SC-c", d_i, d_j, s_node)
                elif topology.position(d_i) > s_pos:
                    # S_k < D_i < D_j
                    if topology.is_desired(k, j) and not topology.is_desired(k, i):
                        add("SC-b", d_i, d_j, s_node)
                    if topology.is_weak(k, i) and not topology.is_weak(k, j):
                        add("SC-d", d_i, d_j, s_node)

    violations = tuple(v for rule in RULE_ORDER for v in found[rule])
    if violations:
        logger.debug(f"볼록성 위반 {len(violations)}건: {', '.join(sorted({v.rule_id for v in violations}))}")
    return ValidationReport(violations)


def is_convex(topology: Topology) -> bool:
    return validate_convexity(topology).is_convex


def _anchored(members: Sequence[int], left: Optional[int], right: Optional[int]) -> Optional[IndexInterval]:
    """연속 구간이면서 바로 옆 노드(left 또는 right)를 포함하면 구간 반환"""
    if not members:
        return None
    lo, hi = min(members), max(members)
    if hi - lo + 1 != len(members):
        return None
    if (left is not None and lo <= left <= hi) or (right is not None and lo <= right <= hi):
        return IndexInterval(lo, hi)
    return None


def interval_profile(topology: Topology) -> IntervalProfile:
    """노드별 Desired/청취 구간 구조 계산

    Returns:
        수신 단말별 송신 구간, 송신 기지국별 수신 구간

    Raises:
        NotConvex: 구간 구조가 성립하지 않을 때 (첫 번째 규칙 위반을 witness로)
    """
    destinations: Dict[int, NodeIntervals] = {}
    sources: Dict[int, NodeIntervals] = {}
    broken: Optional[NodeRef] = None

    for j in range(1, topology.num_destinations + 1):
        node = NodeRef.destination(j)
        left, right = neighbours(topology, node, NodeKind.SOURCE)
        desired = _anchored(topology.desired_sources(j), left, right)
        heard = _anchored(topology.heard_sources(j), left, right)
        if desired is None or heard is None:
            broken = node
            break
        destinations[j] = NodeIntervals(desired, heard)

    if broken is None:
        for i in range(1, topology.num_sources + 1):
            node = NodeRef.source(i)
            left, right = neighbours(topology, node, NodeKind.DESTINATION)
            desired = _anchored(topology.desired_destinations(i), left, right)
            reaching = _anchored(topology.reaching_destinations(i), left, right)
            if desired is None or reaching is None:
                broken = node
                break
            sources[i] = NodeIntervals(desired, reaching)

    if broken is not None:
        report = validate_convexity(topology)
        if report.is_convex:
            raise InvariantViolation(
                f"{broken}의 구간 구조가 깨졌지만 규칙 검사는 위반을 찾지 못했습니다", (broken,)
            )
        first = report.violations[0]
        raise NotConvex(f"볼록 토폴로지가 아닙니다 ({first})", first.rule_id, first.witness)

    return IntervalProfile(destinations=destinations, sources=sources)
