"""1차원 셀룰러 네트워크 토폴로지 데이터 모델"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from utils.errors import StructureError


class NodeKind(str, Enum):
    """노드 종류 (송신 기지국 / 수신 단말)"""

    SOURCE = "S"
    DESTINATION = "D"


@dataclass(frozen=True, order=True)
class NodeRef:
    """노드 참조 (종류 내에서 왼쪽부터 1번)"""

    kind: NodeKind
    index: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.index}"

    @property
    def is_source(self) -> bool:
        return self.kind is NodeKind.SOURCE

    @classmethod
    def source(cls, index: int) -> "NodeRef":
        return cls(NodeKind.SOURCE, index)

    @classmethod
    def destination(cls, index: int) -> "NodeRef":
        return cls(NodeKind.DESTINATION, index)

    @classmethod
    def parse(cls, token: str) -> "NodeRef":
        """"S3" / "D12" 형식의 토큰 파싱

        Raises:
            ValueError: 형식이 맞지 않을 때
        """
        if len(token) < 2 or token[0] not in ("S", "D") or not (token[1:].isascii() and token[1:].isdigit()):
            raise ValueError(f"잘못된 노드 토큰: {token!r}")
        index = int(token[1:])
        if index < 1:
            raise ValueError(f"노드 번호는 1 이상이어야 합니다: {token!r}")
        return cls(NodeKind(token[0]), index)


class LinkLabel(str, Enum):
    """(송신, 수신) 쌍의 채널 라벨"""

    WEAK = "weak"
    INTERFERING = "interfering"
    DESIRED = "desired"

    @property
    def heard(self) -> bool:
        """수신 단말이 송신 기지국을 들을 수 있는지 여부"""
        return self is not LinkLabel.WEAK


@dataclass(frozen=True, order=True)
class Message:
    """유니캐스트 메시지 = Desired (송신, 수신) 쌍"""

    source: int
    destination: int

    def __str__(self) -> str:
        return f"S{self.source}->D{self.destination}"

    def to_dict(self) -> dict:
        return {"source": self.source, "destination": self.destination}

    @classmethod
    def from_dict(cls, data: dict) -> "Message":
        return cls(source=int(data["source"]), destination=int(data["destination"]))


@dataclass(frozen=True)
class Placement:
    """직선 위의 노드 배치 (왼쪽에서 오른쪽 순서)"""

    order: Tuple[NodeRef, ...]

    @cached_property
    def _positions(self) -> Dict[NodeRef, int]:
        return {node: rank for rank, node in enumerate(self.order)}

    def position(self, node: NodeRef) -> int:
        """0부터 시작하는 배치 순위"""
        return self._positions[node]

    def __contains__(self, node: NodeRef) -> bool:
        return node in self._positions

    def tokens(self) -> List[str]:
        return [str(node) for node in self.order]

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "Placement":
        return cls(tuple(NodeRef.parse(token) for token in tokens))


@dataclass(frozen=True)
class Topology:
    """부분 연결 1차원 네트워크

    links[i-1][j-1] 은 송신 S_i 와 수신 D_j 사이의 라벨이다.
    볼록성은 생성 시점에 강제하지 않는다 (비볼록 반례도 표현 가능해야 함).
    """

    num_sources: int
    num_destinations: int
    placement: Placement
    links: Tuple[Tuple[LinkLabel, ...], ...]

    @classmethod
    def build(
        cls,
        num_sources: int,
        num_destinations: int,
        placement: Sequence[str],
        desired: Iterable[Tuple[int, int]] = (),
        interfering: Iterable[Tuple[int, int]] = ()
    ) -> "Topology":
        """링크 목록으로 토폴로지 생성 (목록에 없는 쌍은 Weak)

        Args:
            num_sources: 송신 기지국 수 T
            num_destinations: 수신 단말 수 K
            placement: "S1", "D1" 등의 토큰 (왼쪽부터)
            desired: Desired (i, j) 쌍
            interfering: Interfering (i, j) 쌍

        Returns:
            구조 검사를 통과한 토폴로지
        """
        matrix = [[LinkLabel.WEAK] * num_destinations for _ in range(num_sources)]
        for label, pairs in ((LinkLabel.DESIRED, desired), (LinkLabel.INTERFERING, interfering)):
            for i, j in pairs:
                matrix[i - 1][j - 1] = label
        topology = cls(
            num_sources=num_sources,
            num_destinations=num_destinations,
            placement=Placement.from_tokens(placement),
            links=tuple(tuple(row) for row in matrix)
        )
        topology.check_structure()
        return topology

    # ------------------------------------------------------------------
    # 구조 검사
    # ------------------------------------------------------------------

    def check_structure(self) -> None:
        """배치 순서와 커버리지 검사

        Raises:
            StructureError: PLACE-ORDER, COVER-D, COVER-S 위반
        """
        if self.num_sources < 1 or self.num_destinations < 1:
            raise StructureError("PLACE-ORDER", "송신/수신 노드가 각각 1개 이상 필요합니다")
        if len(self.links) != self.num_sources or any(
            len(row) != self.num_destinations for row in self.links
        ):
            raise StructureError("PLACE-ORDER", "링크 행렬 크기가 T×K와 다릅니다")

        expected = {NodeRef.source(i) for i in range(1, self.num_sources + 1)}
        expected |= {NodeRef.destination(j) for j in range(1, self.num_destinations + 1)}
        order = self.placement.order
        if len(order) != len(expected) or set(order) != expected:
            missing = sorted(expected - set(order))
            raise StructureError(
                "PLACE-ORDER",
                "배치가 모든 노드를 정확히 한 번씩 포함하지 않습니다",
                tuple(missing) or None
            )
        for kind in NodeKind:
            indices = [node for node in order if node.kind is kind]
            for left, right in zip(indices, indices[1:]):
                if left.index >= right.index:
                    raise StructureError(
                        "PLACE-ORDER",
                        f"{kind.value} 노드가 번호 순서대로 배치되지 않았습니다",
                        (left, right)
                    )

        for j in range(1, self.num_destinations + 1):
            if not self.desired_sources(j):
                raise StructureError(
                    "COVER-D", f"D{j}에 Desired 메시지가 없습니다", (NodeRef.destination(j),)
                )
        for i in range(1, self.num_sources + 1):
            if not self.desired_destinations(i):
                raise StructureError(
                    "COVER-S", f"S{i}에 Desired 메시지가 없습니다", (NodeRef.source(i),)
                )

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------

    def label(self, source: int, destination: int) -> LinkLabel:
        return self.links[source - 1][destination - 1]

    def is_desired(self, source: int, destination: int) -> bool:
        return self.links[source - 1][destination - 1] is LinkLabel.DESIRED

    def is_weak(self, source: int, destination: int) -> bool:
        return self.links[source - 1][destination - 1] is LinkLabel.WEAK

    def hears(self, destination: int, source: int) -> bool:
        """D_destination 이 S_source 를 들을 수 있는지"""
        return self.links[source - 1][destination - 1] is not LinkLabel.WEAK

    def position(self, node: NodeRef) -> int:
        return self.placement.position(node)

    @cached_property
    def _messages(self) -> Tuple[Message, ...]:
        return tuple(
            Message(i, j)
            for i in range(1, self.num_sources + 1)
            for j in range(1, self.num_destinations + 1)
            if self.links[i - 1][j - 1] is LinkLabel.DESIRED
        )

    def messages(self) -> Tuple[Message, ...]:
        """(source, destination) 순으로 정렬된 전체 메시지"""
        return self._messages

    def desired_sources(self, destination: int) -> List[int]:
        return [
            i for i in range(1, self.num_sources + 1)
            if self.links[i - 1][destination - 1] is LinkLabel.DESIRED
        ]

    def heard_sources(self, destination: int) -> List[int]:
        return [
            i for i in range(1, self.num_sources + 1)
            if self.links[i - 1][destination - 1] is not LinkLabel.WEAK
        ]

    def desired_destinations(self, source: int) -> List[int]:
        return [
            j for j, label in enumerate(self.links[source - 1], start=1)
            if label is LinkLabel.DESIRED
        ]

    def reaching_destinations(self, source: int) -> List[int]:
        """S_source 를 들을 수 있는 수신 단말"""
        return [
            j for j, label in enumerate(self.links[source - 1], start=1)
            if label is not LinkLabel.WEAK
        ]

    def pairs_with(self, label: LinkLabel) -> List[Tuple[int, int]]:
        """해당 라벨의 (source, destination) 쌍 (정렬됨)"""
        return [
            (i, j)
            for i in range(1, self.num_sources + 1)
            for j in range(1, self.num_destinations + 1)
            if self.links[i - 1][j - 1] is label
        ]

    def to_dict(self) -> dict:
        """딕셔너리로 변환"""
        return {
            "num_sources": self.num_sources,
            "num_destinations": self.num_destinations,
            "placement": self.placement.tokens(),
            "desired": [list(pair) for pair in self.pairs_with(LinkLabel.DESIRED)],
            "interfering": [list(pair) for pair in self.pairs_with(LinkLabel.INTERFERING)]
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Topology":
        """딕셔너리에서 생성"""
        return cls.build(
            num_sources=data["num_sources"],
            num_destinations=data["num_destinations"],
            placement=data["placement"],
            desired=[tuple(pair) for pair in data.get("desired", [])],
            interfering=[tuple(pair) for pair in data.get("interfering", [])]
        )


@dataclass(frozen=True)
class Violation:
    """볼록성 규칙 위반 사례 (witness는 배치 순서로 정렬)"""

    rule_id: str
    witness: Tuple[NodeRef, ...]

    def __str__(self) -> str:
        return f"{self.rule_id}: ({', '.join(str(node) for node in self.witness)})"

    def to_dict(self) -> dict:
        return {"rule_id": self.rule_id, "witness": [str(node) for node in self.witness]}


@dataclass(frozen=True)
class ValidationReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def is_convex(self) -> bool:
        return not self.violations

    def rules(self) -> List[str]:
        return sorted({violation.rule_id for violation in self.violations})

    def to_dict(self) -> dict:
        return {
            "convex": self.is_convex,
            "violations": [violation.to_dict() for violation in self.violations]
        }


@dataclass(frozen=True)
class IndexInterval:
    """닫힌 번호 구간 [lo, hi]"""

    lo: int
    hi: int

    def __contains__(self, index: int) -> bool:
        return self.lo <= index <= self.hi

    def covers(self, other: "IndexInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class NodeIntervals:
    """한 노드의 Desired 구간과 들리는(도달) 구간"""

    desired: IndexInterval
    heard: IndexInterval

    def to_dict(self) -> dict:
        return {
            "desired": [self.desired.lo, self.desired.hi],
            "heard": [self.heard.lo, self.heard.hi]
        }


@dataclass(frozen=True)
class IntervalProfile:
    """볼록 토폴로지의 노드별 구간 구조

    destinations[j]: 송신 번호 구간, sources[i]: 수신 번호 구간
    """

    destinations: Dict[int, NodeIntervals] = field(default_factory=dict)
    sources: Dict[int, NodeIntervals] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "destinations": {f"D{j}": v.to_dict() for j, v in sorted(self.destinations.items())},
            "sources": {f"S{i}": v.to_dict() for i, v in sorted(self.sources.items())}
        }


def neighbours(topology: Topology, node: NodeRef, kind: NodeKind) -> Tuple[Optional[int], Optional[int]]:
    """node 바로 왼쪽/오른쪽에 있는 kind 노드 번호 (없으면 None)"""
    left: Optional[int] = None
    right: Optional[int] = None
    seen_node = False
    for other in topology.placement.order:
        if other == node:
            seen_node = True
            continue
        if other.kind is not kind:
            continue
        if not seen_node:
            left = other.index
        elif right is None:
            right = other.index
    return left, right
