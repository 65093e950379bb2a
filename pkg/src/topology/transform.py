"""토폴로지 변환 모듈 (상반 네트워크, 좌우 반전, 왼쪽 접두 제거)"""

from typing import Iterable, List

from utils.errors import CoverageLost, EmptyResult
from .models import NodeKind, NodeRef, Placement, Topology


def reciprocal(topology: Topology) -> Topology:
    """통신 방향을 뒤집은 상반(reciprocal) 네트워크

    송신/수신 역할을 바꾸고 쌍별 라벨은 유지한다. 같은 종류 노드는
    원래도 왼쪽부터 번호가 매겨져 있으므로 번호는 그대로 유지된다.
    """
    flipped = tuple(
        NodeRef(
            NodeKind.DESTINATION if node.is_source else NodeKind.SOURCE,
            node.index
        )
        for node in topology.placement.order
    )
    links = tuple(
        tuple(topology.links[i][j] for i in range(topology.num_sources))
        for j in range(topology.num_destinations)
    )
    return Topology(
        num_sources=topology.num_destinations,
        num_destinations=topology.num_sources,
        placement=Placement(flipped),
        links=links
    )


def mirror(topology: Topology) -> Topology:
    """좌우 반전: 배치를 뒤집고 S_i -> S_{T+1-i}, D_j -> D_{K+1-j}"""
    T, K = topology.num_sources, topology.num_destinations
    order = tuple(
        NodeRef(node.kind, (T if node.is_source else K) + 1 - node.index)
        for node in reversed(topology.placement.order)
    )
    links = tuple(tuple(reversed(row)) for row in reversed(topology.links))
    return Topology(
        num_sources=T,
        num_destinations=K,
        placement=Placement(order),
        links=links
    )


def _prefix_length(indices: Iterable[int], limit: int, what: str) -> int:
    chosen = sorted(set(indices))
    if chosen != list(range(1, len(chosen) + 1)):
        raise ValueError(f"{what}는 왼쪽 접두 구간이어야 합니다: {chosen}")
    if len(chosen) > limit:
        raise ValueError(f"{what} 범위가 노드 수({limit})를 넘습니다")
    return len(chosen)


def eliminate(
    topology: Topology,
    sources: Iterable[int] = (),
    destinations: Iterable[int] = ()
) -> Topology:
    """왼쪽 접두 노드와 그 메시지를 제거하고 남은 노드를 다시 번호 매김

    Args:
        topology: 원본 토폴로지
        sources: 제거할 송신 번호 ({1..a} 형태)
        destinations: 제거할 수신 번호 ({1..b} 형태)

    Returns:
        남은 노드의 배치 순서를 유지한 새 토폴로지

    Raises:
        EmptyResult: 모든 송신 또는 모든 수신이 제거될 때
        CoverageLost: 남은 노드가 Desired 링크를 모두 잃을 때
    """
    T, K = topology.num_sources, topology.num_destinations
    a = _prefix_length(sources, T, "송신")
    b = _prefix_length(destinations, K, "수신")
    if a == 0 and b == 0:
        return topology
    if a == T or b == K:
        raise EmptyResult(f"제거 후 남는 노드가 없습니다 (송신 {T - a}, 수신 {K - b})")

    order = tuple(
        NodeRef(node.kind, node.index - (a if node.is_source else b))
        for node in topology.placement.order
        if node.index > (a if node.is_source else b)
    )
    links = tuple(row[b:] for row in topology.links[a:])
    result = Topology(
        num_sources=T - a,
        num_destinations=K - b,
        placement=Placement(order),
        links=links
    )

    orphans: List[NodeRef] = [
        NodeRef.source(i + a) for i in range(1, result.num_sources + 1)
        if not result.desired_destinations(i)
    ]
    orphans += [
        NodeRef.destination(j + b) for j in range(1, result.num_destinations + 1)
        if not result.desired_sources(j)
    ]
    if orphans:
        raise CoverageLost("제거 후 Desired 링크가 없는 노드가 생겼습니다", tuple(orphans))
    return result
