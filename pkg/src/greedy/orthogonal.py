"""직교 메시지 집합 판정"""

from typing import Iterable, Optional

from utils.errors import UnknownMessage
from topology import Message, Topology
from .models import OrthogonalityResult, Schedule


def compatible(topology: Topology, first: Message, second: Message) -> bool:
    """두 메시지의 수신 단말이 서로 상대 송신 기지국을 듣지 않는지"""
    return (
        topology.is_weak(second.source, first.destination)
        and topology.is_weak(first.source, second.destination)
    )


def require_messages(topology: Topology, messages: Iterable[Message]) -> list:
    """모든 메시지가 토폴로지의 Desired 쌍인지 확인하고 정렬된 목록 반환"""
    ordered = sorted(set(messages))
    for message in ordered:
        if not (
            1 <= message.source <= topology.num_sources
            and 1 <= message.destination <= topology.num_destinations
            and topology.is_desired(message.source, message.destination)
        ):
            raise UnknownMessage(f"{message}는 Desired 쌍이 아닙니다", (message,))
    return ordered


def is_orthogonal(topology: Topology, messages: Iterable[Message]) -> OrthogonalityResult:
    """메시지 집합의 직교성 판정

    각 메시지의 수신 단말이 관련 송신 기지국 중 자신의 송신 기지국만
    들을 수 있어야 한다. 송신/수신이 겹치면 Desired 링크 때문에 자동으로 실패.

    Raises:
        UnknownMessage: Desired 쌍이 아닌 메시지가 있을 때
    """
    ordered = require_messages(topology, messages)
    for message in ordered:
        for other in ordered:
            if other != message and topology.hears(message.destination, other.source):
                return OrthogonalityResult(False, (message, other))
    return OrthogonalityResult(True)


def is_maximal(topology: Topology, schedule: Schedule) -> Optional[Message]:
    """직교성을 유지하며 더 추가할 수 있는 메시지 (없으면 None)"""
    chosen = set(schedule.picks)
    for candidate in topology.messages():
        if candidate in chosen:
            continue
        if all(compatible(topology, candidate, pick) for pick in chosen):
            return candidate
    return None
