"""합 DoF 최적성 증명서 발급 및 검증"""

from loguru import logger

from utils.errors import InvariantViolation
from topology import Topology
from greedy import Direction, Mode, greedy_schedule, is_orthogonal
from .demand_graph import build_demand_graph, find_cycle, topological_order
from .models import Certificate
from .partition import greedy_partition


def certify(topology: Topology) -> Certificate:
    """그리디 스케줄 + 블록 분할 + 블록별 위상 순서로 증명서 구성

    Raises:
        NotConvex: 볼록 토폴로지가 아닐 때
        InvariantViolation: 어떤 블록의 요구 그래프에 순환이 있을 때
    """
    schedule = greedy_schedule(topology, Direction.LTR, Mode.SAFE)
    blocks = greedy_partition(topology, schedule)

    orders = []
    for number, block in enumerate(blocks, start=1):
        graph = build_demand_graph(topology, block)
        order = topological_order(graph)
        if order is None:
            cycle = find_cycle(graph)
            raise InvariantViolation(f"블록 {number}의 요구 그래프에 순환이 있습니다", tuple(cycle or ()))
        orders.append(tuple(order))

    certificate = Certificate(
        schedule=schedule,
        blocks=tuple(blocks),
        topo_orders=tuple(orders),
        sum_dof=len(blocks)
    )
    logger.debug(f"증명서 발급: sum_dof={certificate.sum_dof}, 블록 {len(blocks)}개")
    return certificate


def verify_certificate(topology: Topology, certificate: Certificate) -> None:
    """증명서를 독립적으로 재검증

    Raises:
        InvariantViolation: 분할, 위상 순서, 직교성, 개수 중 하나라도 맞지 않을 때
    """
    schedule = certificate.schedule
    if not (len(certificate.blocks) == schedule.size == certificate.sum_dof == len(certificate.topo_orders)):
        raise InvariantViolation(
            f"블록 {len(certificate.blocks)}, 선택 {schedule.size}, sum_dof {certificate.sum_dof} 불일치"
        )

    seen = [m for block in certificate.blocks for m in block]
    if len(seen) != len(set(seen)) or set(seen) != set(topology.messages()):
        raise InvariantViolation("블록이 전체 메시지를 정확히 한 번씩 덮지 않습니다")

    result = is_orthogonal(topology, schedule.picks)
    if not result:
        raise InvariantViolation("스케줄이 직교하지 않습니다", result.witness)

    for number, (block, order) in enumerate(zip(certificate.blocks, certificate.topo_orders), start=1):
        graph = build_demand_graph(topology, block)
        if set(order) != set(graph.nodes) or len(order) != len(graph.nodes):
            raise InvariantViolation(f"블록 {number} 위상 순서의 노드 집합이 다릅니다")
        at = {node: rank for rank, node in enumerate(order)}
        for edge in graph.edges:
            if at[edge.tail] >= at[edge.head]:
                raise InvariantViolation(f"블록 {number} 위상 순서가 간선 {edge}를 어깁니다", (edge.tail, edge.head))
