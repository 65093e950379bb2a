"""그리디 스케줄 모듈 테스트"""

import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from utils.errors import BaseCaseMissing, NotConvex, UnknownMessage
from topology import LinkLabel, Message, Placement, Topology
from greedy import (
    Direction,
    Mode,
    Schedule,
    StepOutcome,
    greedy_schedule,
    greedy_trace,
    is_maximal,
    is_orthogonal,
)
from generator import fixture


def pairs(schedule: Schedule):
    return [(m.source, m.destination) for m in schedule.picks]


# ----------------------------------------------------------------------
# 직교성
# ----------------------------------------------------------------------

def test_orthogonal_pair():
    result = is_orthogonal(fixture("chain3"), [Message(1, 1), Message(3, 3)])

    assert result
    assert result.witness is None


def test_not_orthogonal_pair_witness():
    result = is_orthogonal(fixture("chain3"), [Message(1, 1), Message(2, 2)])

    assert not result
    assert result.witness == (Message(1, 1), Message(2, 2))


def test_singleton_is_orthogonal():
    topology = fixture("fig3like")

    for message in topology.messages():
        assert is_orthogonal(topology, [message])


def test_shared_source_is_not_orthogonal():
    assert not is_orthogonal(fixture("fig3like"), [Message(1, 1), Message(1, 2)])


def test_unknown_message():
    with pytest.raises(UnknownMessage) as excinfo:
        is_orthogonal(fixture("chain3"), [Message(1, 3)])

    assert excinfo.value.witness == (Message(1, 3),)


# ----------------------------------------------------------------------
# 그리디 스케줄
# ----------------------------------------------------------------------

def test_chain3_ltr():
    schedule = greedy_schedule(fixture("chain3"))

    assert pairs(schedule) == [(1, 1), (3, 3)]
    assert schedule.size == 2
    assert schedule.pairs_text() == "(1,1),(3,3)"


def test_unit1():
    assert pairs(greedy_schedule(fixture("unit1"))) == [(1, 1)]
    assert pairs(greedy_schedule(fixture("unit1"), Direction.RTL)) == [(1, 1)]


@pytest.mark.parametrize("mode", list(Mode))
def test_fig2like_ltr(mode):
    schedule = greedy_schedule(fixture("fig2like"), Direction.LTR, mode)

    assert pairs(schedule) == [(1, 1), (4, 4), (8, 8)]


@pytest.mark.parametrize("mode", list(Mode))
def test_fig2like_rtl(mode):
    schedule = greedy_schedule(fixture("fig2like"), Direction.RTL, mode)

    assert pairs(schedule) == [(9, 10), (7, 8), (3, 3)]
    assert schedule.direction is Direction.RTL


@pytest.mark.parametrize("mode", list(Mode))
def test_fig3like_both_directions(mode):
    topology = fixture("fig3like")

    assert pairs(greedy_schedule(topology, Direction.LTR, mode)) == [(1, 1), (3, 5), (5, 7), (6, 10), (8, 14)]
    assert pairs(greedy_schedule(topology, Direction.RTL, mode)) == [(8, 14), (6, 12), (5, 7), (3, 5), (1, 2)]


def test_fig2like_trace_narrative():
    """D1 이 듣지 못하는 첫 송신은 S4, S4 의 Desired 중 S1 을 듣지 못하는 첫 수신은 D4"""
    _, steps = greedy_trace(fixture("fig2like"), Direction.LTR, Mode.LITERAL)
    by_source = {step.source: step for step in steps}

    assert [step.source for step in steps] == list(range(1, 10))
    assert by_source[2].outcome is StepOutcome.HEARD_BY_LAST_DESTINATION
    assert by_source[3].outcome is StepOutcome.HEARD_BY_LAST_DESTINATION
    assert by_source[2].reference == Message(1, 1)
    assert by_source[4].outcome is StepOutcome.ACCEPTED
    assert by_source[4].destination == 4
    assert by_source[8].destination == 8
    assert by_source[9].outcome is StepOutcome.NO_DESTINATION


def test_safe_trace_marks_not_orthogonal():
    _, steps = greedy_trace(fixture("fig2like"), Direction.LTR, Mode.SAFE)

    assert steps[-1].outcome is StepOutcome.NOT_ORTHOGONAL
    assert str(steps[0]) == "S1: accept S1->D1"


def test_rtl_trace_uses_original_indices():
    _, steps = greedy_trace(fixture("fig2like"), Direction.RTL, Mode.LITERAL)

    assert steps[0].source == 9
    assert steps[0].destination == 10
    assert [step.source for step in steps] == list(range(9, 0, -1))


@pytest.mark.parametrize("name", ["unit1", "chain3", "fig2like", "fig3like"])
def test_picks_are_orthogonal_monotone_and_maximal(name):
    topology = fixture(name)
    for direction in Direction:
        schedule = greedy_schedule(topology, direction)
        assert is_orthogonal(topology, schedule.picks)
        assert is_maximal(topology, schedule) is None

        sources = [m.source for m in schedule.picks]
        destinations = [m.destination for m in schedule.picks]
        if direction is Direction.RTL:
            sources.reverse()
            destinations.reverse()
        assert sources == sorted(set(sources))
        assert destinations == sorted(set(destinations))


def test_is_maximal_finds_addition():
    schedule = Schedule(Direction.LTR, (Message(1, 1),))

    assert is_maximal(fixture("chain3"), schedule) == Message(3, 3)


def test_greedy_refuses_non_convex():
    with pytest.raises(NotConvex) as excinfo:
        greedy_schedule(fixture("fourcell"))

    assert excinfo.value.rule_id is not None


def test_base_case_missing():
    """구조 검사를 건너뛴 볼록 토폴로지에서 S1->D1 이 없으면 BaseCaseMissing"""
    topology = Topology(
        num_sources=2,
        num_destinations=1,
        placement=Placement.from_tokens(["S1", "S2", "D1"]),
        links=((LinkLabel.INTERFERING,), (LinkLabel.DESIRED,))
    )

    with pytest.raises(BaseCaseMissing):
        greedy_schedule(topology)
