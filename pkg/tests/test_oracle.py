"""오라클 / 증명서 모듈 테스트"""

import sys
from dataclasses import replace
from pathlib import Path

import networkx as nx
import pytest

# 프로젝트 루트를 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from utils.errors import InvariantViolation, NotConvex, ScheduleMismatch, SizeLimit, UnknownMessage
from topology import Message, NodeRef, Topology
from greedy import Direction, Mode, Schedule, greedy_schedule, is_orthogonal
from oracle import (
    DemandGraph,
    EdgeKind,
    WrapPattern,
    build_demand_graph,
    certify,
    conflict_graph,
    find_cycle,
    find_wrap_pattern,
    greedy_partition,
    max_orthogonal,
    max_orthogonal_exhaustive,
    topological_order,
    verify_certificate,
)
from generator import FIXTURE_NAMES, fixture


S, D = NodeRef.source, NodeRef.destination


def crossed() -> Topology:
    """S1->D2, S2->D1 이 엇갈린 비볼록 네트워크"""
    return Topology.build(2, 2, ["S1", "D1", "S2", "D2"], desired=[(1, 2), (2, 1)])


def edge_set(graph: DemandGraph):
    return {(e.tail, e.head, e.kind) for e in graph.edges}


# ----------------------------------------------------------------------
# 최대 직교 집합
# ----------------------------------------------------------------------

def test_max_orthogonal_chain3():
    result = max_orthogonal(fixture("chain3"))

    assert result.size == 2
    assert result.witness == (Message(1, 1), Message(3, 3))


def test_max_orthogonal_unit1():
    result = max_orthogonal(fixture("unit1"))

    assert (result.size, result.witness) == (1, (Message(1, 1),))


def test_max_orthogonal_fourcell():
    """비볼록 반례에서도 동작, 최대 2"""
    topology = fixture("fourcell")
    result = max_orthogonal(topology)

    assert result.size == 2
    assert result.witness == (Message(1, 1), Message(3, 5))
    assert is_orthogonal(topology, result.witness)


@pytest.mark.parametrize("name, size", [("fig2like", 3), ("fig3like", 5)])
def test_max_orthogonal_matches_greedy(name, size):
    topology = fixture(name)

    assert max_orthogonal(topology).size == size == greedy_schedule(topology).size


def test_max_orthogonal_size_limit():
    with pytest.raises(SizeLimit):
        max_orthogonal(fixture("chain3"), limit=2)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_exhaustive_and_networkx_agree(name):
    """분기 한정 / 전수 탐색 / networkx 클리크 세 가지 결과 비교"""
    topology = fixture(name)
    pruned = max_orthogonal(topology)
    exhaustive = max_orthogonal_exhaustive(topology)
    _, clique_size = nx.max_weight_clique(nx.complement(conflict_graph(topology)), weight=None)

    assert pruned.size == exhaustive.size == clique_size
    assert pruned.witness == exhaustive.witness


def test_conflict_graph_chain3():
    graph = conflict_graph(fixture("chain3"))

    assert set(graph.nodes) == {Message(1, 1), Message(2, 2), Message(3, 3)}
    assert graph.has_edge(Message(1, 1), Message(2, 2))
    assert not graph.has_edge(Message(1, 1), Message(3, 3))


# ----------------------------------------------------------------------
# 요구 그래프 / 순환 / U턴 패턴
# ----------------------------------------------------------------------

def test_demand_graph_with_weak_edges():
    graph = build_demand_graph(fixture("chain3"), [Message(1, 1), Message(3, 3)])

    assert graph.nodes == (S(1), D(1), S(3), D(3))
    assert edge_set(graph) == {
        (S(1), D(1), EdgeKind.DESIRED),
        (S(3), D(3), EdgeKind.DESIRED),
        (D(1), S(3), EdgeKind.WEAK),
        (D(3), S(1), EdgeKind.WEAK),
    }


def test_demand_graph_without_weak_edges():
    graph = build_demand_graph(fixture("chain3"), [Message(1, 1), Message(2, 2)])

    assert edge_set(graph) == {(S(1), D(1), EdgeKind.DESIRED), (S(2), D(2), EdgeKind.DESIRED)}


@pytest.mark.parametrize("name", ["chain3", "fig3like", "fourcell"])
def test_singleton_demand_graph_has_one_edge(name):
    topology = fixture(name)
    for message in topology.messages():
        graph = build_demand_graph(topology, [message])
        assert len(graph.nodes) == 2
        assert len(graph.edges) == 1


def test_demand_graph_unknown_message():
    with pytest.raises(UnknownMessage):
        build_demand_graph(fixture("chain3"), [Message(2, 1)])


def test_find_cycle_chain3():
    graph = build_demand_graph(fixture("chain3"), [Message(1, 1), Message(3, 3)])

    assert find_cycle(graph) == [D(1), S(3), D(3), S(1)]
    assert topological_order(graph) is None


def test_find_cycle_absent():
    graph = build_demand_graph(fixture("chain3"), [Message(1, 1), Message(2, 2)])

    assert find_cycle(graph) is None
    assert topological_order(graph) == [S(1), D(1), S(2), D(2)]


def test_find_cycle_empty_graph():
    assert find_cycle(DemandGraph(nodes=(), edges=())) is None


def test_wrap_pattern_chain3():
    pattern = find_wrap_pattern(fixture("chain3"), [D(1), S(3), D(3), S(1)])

    assert pattern == WrapPattern(j1=1, j2=3, j3=3, j4=1, j5=1)
    assert pattern.nodes() == (D(1), S(3), D(3), S(1), D(1))


def test_wrap_pattern_rotation_does_not_matter():
    topology = fixture("chain3")

    assert find_wrap_pattern(topology, [S(3), D(3), S(1), D(1)]) == WrapPattern(1, 3, 3, 1, 1)


def test_wrap_pattern_two_message_cycles_fig3like():
    """두 메시지 순환은 항상 j1 = j5 = 왼쪽 수신"""
    topology = fixture("fig3like")
    for first, second in [(Message(1, 1), Message(3, 5)), (Message(5, 7), Message(8, 14))]:
        cycle = find_cycle(build_demand_graph(topology, [first, second]))
        pattern = find_wrap_pattern(topology, cycle)
        assert pattern.j1 == pattern.j5 == first.destination
        assert pattern.j3 == second.destination


def test_wrap_pattern_fails_on_crossed_network():
    topology = crossed()
    cycle = find_cycle(build_demand_graph(topology, topology.messages()))

    assert cycle == [D(1), S(1), D(2), S(2)]
    with pytest.raises(InvariantViolation):
        find_wrap_pattern(topology, cycle)


def test_wrap_pattern_rejects_malformed_cycle():
    with pytest.raises(InvariantViolation):
        find_wrap_pattern(fixture("chain3"), [D(1), S(3)])


# ----------------------------------------------------------------------
# 블록 분할 / 증명서
# ----------------------------------------------------------------------

def test_partition_chain3():
    topology = fixture("chain3")
    blocks = greedy_partition(topology, greedy_schedule(topology))

    assert blocks == [(Message(1, 1), Message(2, 2)), (Message(3, 3),)]


def test_partition_single_pick():
    topology = fixture("unit1")

    assert greedy_partition(topology, greedy_schedule(topology)) == [(Message(1, 1),)]


def test_partition_fig2like_covers_all_messages():
    topology = fixture("fig2like")
    blocks = greedy_partition(topology, greedy_schedule(topology))

    assert len(blocks) == 3
    flat = [m for block in blocks for m in block]
    assert sorted(flat) == list(topology.messages())
    assert blocks[1] == (Message(4, 4), Message(5, 5), Message(6, 6), Message(7, 7), Message(7, 8))
    for block in blocks:
        assert topological_order(build_demand_graph(topology, block)) is not None


def test_partition_schedule_mismatch():
    topology = fixture("fig2like")

    with pytest.raises(ScheduleMismatch):
        greedy_partition(topology, greedy_schedule(topology, Direction.RTL))
    with pytest.raises(ScheduleMismatch):
        greedy_partition(topology, Schedule(Direction.LTR, (Message(1, 1),)))


def test_certify_chain3():
    certificate = certify(fixture("chain3"))

    assert certificate.sum_dof == 2
    assert len(certificate.blocks) == 2
    assert certificate.render_text() == (
        "SCHEDULE\n"
        "  direction ltr\n"
        "  picks (1,1),(3,3)\n"
        "BLOCKS\n"
        "  1: S1->D1 S2->D2\n"
        "  2: S3->D3\n"
        "TOPO-ORDERS\n"
        "  1: S1 D1 S2 D2\n"
        "  2: S3 D3\n"
        "SUM-DOF\n"
        "  2\n"
    )


def test_certify_unit1():
    assert certify(fixture("unit1")).sum_dof == 1


def test_certify_fig3like():
    topology = fixture("fig3like")
    certificate = certify(topology)

    assert certificate.sum_dof == 5
    verify_certificate(topology, certificate)


def test_certify_is_deterministic():
    topology = fixture("fig2like")

    assert certify(topology).render_text() == certify(topology).render_text()
    assert certify(topology).to_dict() == certify(topology).to_dict()


def test_certify_refuses_non_convex():
    with pytest.raises(NotConvex):
        certify(fixture("fourcell"))


def test_verify_certificate_detects_tampering():
    topology = fixture("chain3")
    certificate = certify(topology)

    with pytest.raises(InvariantViolation):
        verify_certificate(topology, replace(certificate, sum_dof=3))
    with pytest.raises(InvariantViolation):
        verify_certificate(topology, replace(certificate, blocks=(certificate.blocks[0], ())))

    reversed_order = tuple(reversed(certificate.topo_orders[0]))
    with pytest.raises(InvariantViolation):
        verify_certificate(topology, replace(certificate, topo_orders=(reversed_order, certificate.topo_orders[1])))
