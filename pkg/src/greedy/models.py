"""그리디 직교 스케줄 데이터 모델"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from topology import Message


class Direction(str, Enum):
    """스캔 방향"""

    LTR = "ltr"
    RTL = "rtl"


class Mode(str, Enum):
    """후보 검사 방식

    literal: 직전 선택 메시지와만 비교 (절차 서술 그대로)
    safe: 지금까지 선택된 전체 집합과 직교성 비교
    """

    SAFE = "safe"
    LITERAL = "literal"


class StepOutcome(str, Enum):
    ACCEPTED = "accepted"
    HEARD_BY_LAST_DESTINATION = "heard_by_last_destination"
    NO_DESTINATION = "no_destination"
    NOT_ORTHOGONAL = "not_orthogonal"


@dataclass(frozen=True)
class GreedyStep:
    """후보 송신 기지국 하나에 대한 판단 기록 (원본 번호 기준)"""

    source: int
    outcome: StepOutcome
    destination: Optional[int] = None
    reference: Optional[Message] = None

    def __str__(self) -> str:
        if self.outcome is StepOutcome.ACCEPTED:
            return f"S{self.source}: accept S{self.source}->D{self.destination}"
        if self.outcome is StepOutcome.HEARD_BY_LAST_DESTINATION:
            return f"S{self.source}: heard by D{self.reference.destination}"
        if self.outcome is StepOutcome.NO_DESTINATION:
            return f"S{self.source}: every desired destination hears S{self.reference.source}"
        return f"S{self.source}: no desired destination orthogonal to the chosen set"

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "outcome": self.outcome.value,
            "destination": self.destination,
            "reference": self.reference.to_dict() if self.reference else None
        }


@dataclass(frozen=True)
class Schedule:
    """선택 순서대로의 직교 메시지 집합"""

    direction: Direction
    picks: Tuple[Message, ...]

    @property
    def size(self) -> int:
        return len(self.picks)

    def pairs_text(self) -> str:
        """"(1,1),(4,4),(8,8)" 형식"""
        return ",".join(f"({m.source},{m.destination})" for m in self.picks)

    def to_dict(self) -> dict:
        return {
            "direction": self.direction.value,
            "picks": [m.to_dict() for m in self.picks],
            "size": self.size
        }


@dataclass(frozen=True)
class OrthogonalityResult:
    """직교성 판정 결과

    witness = (m, m2): m 의 수신 단말이 m2 의 송신 기지국을 들음
    """

    orthogonal: bool
    witness: Optional[Tuple[Message, Message]] = None

    def __bool__(self) -> bool:
        return self.orthogonal

    def to_dict(self) -> dict:
        return {
            "orthogonal": self.orthogonal,
            "witness": [m.to_dict() for m in self.witness] if self.witness else None
        }
