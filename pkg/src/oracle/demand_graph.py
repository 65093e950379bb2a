"""요구 그래프 구성, 순환 탐색, U턴(wrap) 패턴 추출"""

from typing import Iterable, List, Optional

import networkx as nx

from utils.errors import InvariantViolation
from topology import Message, NodeRef, Topology
from greedy.orthogonal import require_messages
from .models import DemandEdge, DemandGraph, EdgeKind, WrapPattern


def build_demand_graph(topology: Topology, messages: Iterable[Message]) -> DemandGraph:
    """메시지 부분집합의 요구 그래프

    Desired 간선은 부분집합의 메시지(S -> D)만, Weak 간선은 노드 집합 안의
    모든 Weak 쌍(D -> S)이다.

    Raises:
        UnknownMessage: Desired 쌍이 아닌 메시지가 있을 때
    """
    ordered = require_messages(topology, messages)
    nodes = {NodeRef.source(m.source) for m in ordered}
    nodes |= {NodeRef.destination(m.destination) for m in ordered}
    nodes_sorted = tuple(sorted(nodes, key=topology.position))

    edges: List[DemandEdge] = [
        DemandEdge(NodeRef.source(m.source), NodeRef.destination(m.destination), EdgeKind.DESIRED)
        for m in ordered
    ]
    sources = [node for node in nodes_sorted if node.is_source]
    destinations = [node for node in nodes_sorted if not node.is_source]
    for d_node in destinations:
        for s_node in sources:
            if topology.is_weak(s_node.index, d_node.index):
                edges.append(DemandEdge(d_node, s_node, EdgeKind.WEAK))
    return DemandGraph(nodes=nodes_sorted, edges=tuple(edges))


def find_cycle(graph: DemandGraph) -> Optional[List[NodeRef]]:
    """방향 순환 탐색

    깊이 우선으로 가장 왼쪽 노드부터 찾은 첫 순환을, 가장 왼쪽 수신 단말에서
    시작하도록 회전해 반환한다 (D, S, D, S, ... 교대).
    """
    if not graph.edges:
        return None
    try:
        cycle_edges = nx.find_cycle(graph.to_networkx())
    except nx.NetworkXNoCycle:
        return None

    cycle = [edge[0] for edge in cycle_edges]
    rank = graph.rank()
    start = min(
        (at for at, node in enumerate(cycle) if not node.is_source),
        key=lambda at: rank[cycle[at]]
    )
    return cycle[start:] + cycle[:start]


def topological_order(graph: DemandGraph) -> Optional[List[NodeRef]]:
    """배치 순서 기준 사전식 위상 정렬 (순환이면 None)"""
    rank = graph.rank()
    try:
        return list(nx.lexicographical_topological_sort(graph.to_networkx(), key=rank.get))
    except nx.NetworkXUnfeasible:
        return None


def find_wrap_pattern(topology: Topology, cycle: List[NodeRef]) -> WrapPattern:
    """순환에서 U턴 패턴 D_j1 -/-> S_j2 -> D_j3 -/-> S_j4 -> D_j5 추출

    가장 왼쪽 수신 단말에서 출발해 수신 단말만 따라가다 처음으로
    방향을 되돌리는 지점을 D_j3 로 삼는다.

    Raises:
        InvariantViolation: 순환 형식이 맞지 않거나 네 순서 관계 중 하나가 깨질 때
    """
    if len(cycle) < 4 or len(cycle) % 2:
        raise InvariantViolation("순환 길이가 짝수(4 이상)가 아닙니다", tuple(cycle))

    start = min(
        (at for at, node in enumerate(cycle) if not node.is_source),
        key=lambda at: topology.position(cycle[at])
    )
    rotated = cycle[start:] + cycle[:start]
    destinations = rotated[0::2]
    sources = rotated[1::2]
    if any(node.is_source for node in destinations) or not all(node.is_source for node in sources):
        raise InvariantViolation("수신/송신이 교대로 나타나지 않습니다", tuple(cycle))

    count = len(destinations)
    for at in range(count):
        d_node, s_node, d_next = destinations[at], sources[at], destinations[(at + 1) % count]
        if not topology.is_weak(s_node.index, d_node.index):
            raise InvariantViolation(f"{d_node}가 {s_node}를 들을 수 있습니다", (d_node, s_node))
        if not topology.is_desired(s_node.index, d_next.index):
            raise InvariantViolation(f"{s_node}->{d_next}가 Desired 가 아닙니다", (s_node, d_next))

    position = topology.position
    turn = next(
        at for at in range(1, count + 1)
        if position(destinations[(at + 1) % count]) < position(destinations[at % count])
    )
    d1 = destinations[turn - 1]
    s2 = sources[turn - 1]
    d3 = destinations[turn % count]
    s4 = sources[turn % count]
    d5 = destinations[(turn + 1) % count]
    pattern = WrapPattern(d1.index, s2.index, d3.index, s4.index, d5.index)

    checks = (
        (position(d1) < position(d3), "D_j1 < D_j3", (d1, d3)),
        (position(d5) < position(d3), "D_j5 < D_j3", (d5, d3)),
        (position(s4) < position(d3), "S_j4 < D_j3", (s4, d3)),
        (position(d1) < position(s2), "D_j1 < S_j2", (d1, s2)),
    )
    for holds, relation, witness in checks:
        if not holds:
            raise InvariantViolation(f"U턴 패턴 순서 관계 {relation} 불성립", witness)
    return pattern
