"""최적성 증명 데이터 모델"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import networkx as nx

from topology import Message, NodeRef
from greedy import Schedule


class EdgeKind(str, Enum):
    DESIRED = "desired"   # S -> D
    WEAK = "weak"         # D -> S (들을 수 없음)


@dataclass(frozen=True)
class DemandEdge:
    tail: NodeRef
    head: NodeRef
    kind: EdgeKind

    def __str__(self) -> str:
        return f"{self.tail}->{self.head}"


@dataclass(frozen=True)
class DemandGraph:
    """메시지 부분집합의 요구 그래프

    nodes 는 배치 순서로 정렬되어 있어 순위가 곧 왼쪽→오른쪽 위치다.
    """

    nodes: Tuple[NodeRef, ...]
    edges: Tuple[DemandEdge, ...]

    def rank(self) -> Dict[NodeRef, int]:
        return {node: rank for rank, node in enumerate(self.nodes)}

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, kind=edge.kind.value)
        return graph

    def to_dict(self) -> dict:
        return {
            "nodes": [str(node) for node in self.nodes],
            "edges": [
                {"tail": str(e.tail), "head": str(e.head), "kind": e.kind.value}
                for e in self.edges
            ]
        }


@dataclass(frozen=True)
class WrapPattern:
    """D_j1 -/-> S_j2 -> D_j3 -/-> S_j4 -> D_j5 와 U턴 순서 관계

    j1, j3, j5 는 수신 번호, j2, j4 는 송신 번호
    """

    j1: int
    j2: int
    j3: int
    j4: int
    j5: int

    def nodes(self) -> Tuple[NodeRef, ...]:
        return (
            NodeRef.destination(self.j1),
            NodeRef.source(self.j2),
            NodeRef.destination(self.j3),
            NodeRef.source(self.j4),
            NodeRef.destination(self.j5),
        )

    def to_dict(self) -> dict:
        return {"j1": self.j1, "j2": self.j2, "j3": self.j3, "j4": self.j4, "j5": self.j5}


@dataclass(frozen=True)
class OracleResult:
    """최대 직교 메시지 집합"""

    size: int
    witness: Tuple[Message, ...]

    def to_dict(self) -> dict:
        return {"size": self.size, "witness": [m.to_dict() for m in self.witness]}


@dataclass(frozen=True)
class Certificate:
    """합 DoF 최적성 증명서

    blocks[k] 는 k번째 선택에 대응하는 메시지 블록,
    topo_orders[k] 는 그 블록 요구 그래프의 위상 순서(비순환 증거)
    """

    schedule: Schedule
    blocks: Tuple[Tuple[Message, ...], ...]
    topo_orders: Tuple[Tuple[NodeRef, ...], ...]
    sum_dof: int

    def render_text(self) -> str:
        lines: List[str] = ["SCHEDULE"]
        lines.append(f"  direction {self.schedule.direction.value}")
        lines.append(f"  picks {self.schedule.pairs_text()}")
        lines.append("BLOCKS")
        for number, block in enumerate(self.blocks, start=1):
            lines.append(f"  {number}: " + " ".join(str(m) for m in block))
        lines.append("TOPO-ORDERS")
        for number, order in enumerate(self.topo_orders, start=1):
            lines.append(f"  {number}: " + " ".join(str(node) for node in order))
        lines.append("SUM-DOF")
        lines.append(f"  {self.sum_dof}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "schedule": self.schedule.to_dict(),
            "blocks": [[m.to_dict() for m in block] for block in self.blocks],
            "topo_orders": [[str(node) for node in order] for order in self.topo_orders],
            "sum_dof": self.sum_dof
        }
