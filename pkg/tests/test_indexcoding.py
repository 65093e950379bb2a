"""인덱스 코딩 모듈 테스트"""

import random
import sys
from pathlib import Path

import pytest

# 프로젝트 루트를 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from utils.errors import NotAClique, UnknownMessage
from topology import Message, NodeRef
from greedy import Direction, Schedule, greedy_schedule, is_orthogonal
from oracle import max_orthogonal
from indexcoding import (
    max_clique_size,
    one_bit_payloads,
    random_payloads,
    side_information_graph,
    simulate_xor_code,
    to_index_coding,
    verify_clique,
    xor_all,
)
from generator import FIXTURE_NAMES, fixture


W1, W2, W3 = Message(1, 1), Message(2, 2), Message(3, 3)


def schedule_of(*messages: Message) -> Schedule:
    return Schedule(Direction.LTR, tuple(messages))


def test_chain3_side_information():
    instance = to_index_coding(fixture("chain3"))

    assert instance.messages == (W1, W2, W3)
    assert instance.side_information[W1] == {W3}
    assert instance.side_information[W2] == frozenset()
    assert instance.side_information[W3] == {W1}
    assert instance.receiver(W2) == NodeRef.destination(2)


def test_unit1_side_information():
    instance = to_index_coding(fixture("unit1"))

    assert instance.side_information == {W1: frozenset()}


def test_fourcell_side_information_sizes():
    """수신 단말이 듣지 못하는 송신 2개 × 메시지 2개 = 4"""
    instance = to_index_coding(fixture("fourcell"))

    assert len(instance.messages) == 8
    for message in instance.messages:
        known = instance.side_information[message]
        assert len(known) == 4
        assert message not in known
        assert all(other.source != message.source for other in known)


def test_side_information_graph():
    graph = side_information_graph(to_index_coding(fixture("chain3")))

    assert set(graph.edges) == {(W1, W3), (W3, W1)}


def test_verify_clique():
    instance = to_index_coding(fixture("chain3"))

    assert verify_clique(instance, [W1, W3])
    check = verify_clique(instance, [W1, W2])
    assert not check
    assert check.witness == (W1, W2)
    assert verify_clique(instance, [W2])


def test_verify_clique_unknown_message():
    with pytest.raises(UnknownMessage):
        verify_clique(to_index_coding(fixture("chain3")), [Message(1, 2)])


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_max_clique_equals_max_orthogonal(name):
    topology = fixture(name)

    assert max_clique_size(to_index_coding(topology)) == max_orthogonal(topology).size


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_clique_matches_orthogonality_on_pairs(name):
    topology = fixture(name)
    instance = to_index_coding(topology)
    messages = topology.messages()
    for first in messages:
        for second in messages:
            if first.source != second.source and first.destination != second.destination:
                assert bool(verify_clique(instance, [first, second])) == bool(
                    is_orthogonal(topology, [first, second])
                )


# ----------------------------------------------------------------------
# XOR 코덱
# ----------------------------------------------------------------------

def test_xor_chain3():
    instance = to_index_coding(fixture("chain3"))
    report = simulate_xor_code(instance, schedule_of(W1, W3), [0xA5, 0x3C], bits=8)

    assert report.broadcast == 0x99
    assert report.decoded == {W1: 0xA5, W3: 0x3C}
    assert report.all_decoded
    assert report.sum_rate == 2
    assert report.to_dict()["broadcast"] == "0x99"


def test_xor_singleton():
    instance = to_index_coding(fixture("unit1"))
    report = simulate_xor_code(instance, schedule_of(W1), [0xDEADBEEF])

    assert report.broadcast == 0xDEADBEEF
    assert report.decoded[W1] == 0xDEADBEEF
    assert report.sum_rate == 1


def test_xor_rejects_non_clique():
    with pytest.raises(NotAClique):
        simulate_xor_code(to_index_coding(fixture("chain3")), schedule_of(W1, W2), [1, 2])


def test_xor_payload_checks():
    instance = to_index_coding(fixture("chain3"))

    with pytest.raises(ValueError):
        simulate_xor_code(instance, schedule_of(W1, W3), [1])
    with pytest.raises(ValueError):
        simulate_xor_code(instance, schedule_of(W1, W3), [256, 1], bits=8)


def test_xor_accepts_payload_mapping():
    instance = to_index_coding(fixture("chain3"))
    report = simulate_xor_code(instance, schedule_of(W1, W3), {W3: 7, W1: 12}, bits=4)

    assert report.broadcast == 12 ^ 7
    assert report.all_decoded


@pytest.mark.parametrize("name", ["chain3", "fig2like", "fig3like"])
def test_xor_decodes_certified_schedules(name):
    topology = fixture(name)
    instance = to_index_coding(topology)
    schedule = greedy_schedule(topology)
    rng = random.Random(name)

    for _ in range(100):
        payloads = random_payloads(schedule.size, 64, rng)
        assert simulate_xor_code(instance, schedule, payloads, bits=64).all_decoded
    for payloads in one_bit_payloads(schedule.size):
        assert simulate_xor_code(instance, schedule, payloads, bits=1).all_decoded


def test_payload_helpers():
    assert xor_all([]) == 0
    assert xor_all([0xA5, 0x3C]) == 0x99
    assert len(list(one_bit_payloads(3))) == 8
    assert all(0 <= p < 2 ** 16 for p in random_payloads(20, 16, random.Random(1)))
