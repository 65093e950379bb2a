"""왼쪽→오른쪽 그리디 직교 접속 스케줄러

S1->D1 에서 시작해 직전 선택 S_i->D_j 오른쪽의 송신 기지국을 차례로 보며,
D_j 가 듣지 못하는 S_k 의 Desired 수신 단말 중 S_i 를 듣지 못하는 첫 단말을 고른다.
오른쪽→왼쪽 스캔은 좌우 반전한 토폴로지에서 같은 절차를 돌린 뒤 번호를 되돌린다.
"""

from typing import List, Tuple

from loguru import logger

from utils.errors import BaseCaseMissing, NotConvex
from topology import Message, Topology, mirror, validate_convexity
from .models import Direction, GreedyStep, Mode, Schedule, StepOutcome
from .orthogonal import compatible


def _scan(topology: Topology, mode: Mode) -> Tuple[List[Message], List[GreedyStep]]:
    if not topology.is_desired(1, 1):
        raise BaseCaseMissing("S1->D1 이 Desired 가 아닙니다 (커버리지/볼록성 검증 누락)")

    picks = [Message(1, 1)]
    steps = [GreedyStep(1, StepOutcome.ACCEPTED, destination=1)]

    for k in range(2, topology.num_sources + 1):
        last = picks[-1]
        accepted = None

        if mode is Mode.LITERAL:
            if topology.hears(last.destination, k):
                steps.append(GreedyStep(k, StepOutcome.HEARD_BY_LAST_DESTINATION, reference=last))
                continue
            for destination in topology.desired_destinations(k):
                if topology.is_weak(last.source, destination):
                    accepted = Message(k, destination)
                    break
            if accepted is None:
                steps.append(GreedyStep(k, StepOutcome.NO_DESTINATION, reference=last))
                continue
        else:
            for destination in topology.desired_destinations(k):
                candidate = Message(k, destination)
                if all(compatible(topology, candidate, pick) for pick in picks):
                    accepted = candidate
                    break
            if accepted is None:
                steps.append(GreedyStep(k, StepOutcome.NOT_ORTHOGONAL, reference=last))
                continue

        picks.append(accepted)
        steps.append(GreedyStep(k, StepOutcome.ACCEPTED, destination=accepted.destination))

    return picks, steps


def _unmirror(topology: Topology, message: Message) -> Message:
    return Message(
        topology.num_sources + 1 - message.source,
        topology.num_destinations + 1 - message.destination
    )


def greedy_trace(
    topology: Topology,
    direction: Direction = Direction.LTR,
    mode: Mode = Mode.SAFE
) -> Tuple[Schedule, List[GreedyStep]]:
    """그리디 스케줄과 후보별 판단 기록

    Raises:
        NotConvex: 볼록 토폴로지가 아닐 때
        BaseCaseMissing: 첫 송신/수신 쌍이 Desired 가 아닐 때
    """
    report = validate_convexity(topology)
    if not report.is_convex:
        first = report.violations[0]
        raise NotConvex(f"그리디 스케줄은 볼록 토폴로지에서만 보장됩니다 ({first})", first.rule_id, first.witness)

    if direction is Direction.LTR:
        picks, steps = _scan(topology, mode)
    else:
        mirrored_picks, mirrored_steps = _scan(mirror(topology), mode)
        picks = [_unmirror(topology, m) for m in mirrored_picks]
        T, K = topology.num_sources, topology.num_destinations
        steps = [
            GreedyStep(
                T + 1 - step.source,
                step.outcome,
                destination=None if step.destination is None else K + 1 - step.destination,
                reference=None if step.reference is None else _unmirror(topology, step.reference)
            )
            for step in mirrored_steps
        ]

    schedule = Schedule(direction=direction, picks=tuple(picks))
    logger.debug(f"그리디 {direction.value}/{mode.value}: {schedule.pairs_text()} (크기 {schedule.size})")
    return schedule, steps


def greedy_schedule(
    topology: Topology,
    direction: Direction = Direction.LTR,
    mode: Mode = Mode.SAFE
) -> Schedule:
    """그리디 직교 스케줄

    Args:
        topology: 볼록 토폴로지
        direction: 스캔 방향
        mode: safe(전체 직교성 검사) 또는 literal(직전 선택과만 비교)

    Returns:
        선택 순서대로의 스케줄
    """
    schedule, _ = greedy_trace(topology, direction, mode)
    return schedule
