"""토폴로지 → 인덱스 코딩 변환과 클리크 판정"""

from itertools import combinations
from typing import Iterable

import networkx as nx

from utils.errors import UnknownMessage
from topology import Topology
from .models import CliqueCheck, IndexCodingInstance


def to_index_coding(topology: Topology) -> IndexCodingInstance:
    """부가 정보 = 수신 단말이 듣지 못하는(Weak) 송신 기지국의 메시지"""
    messages = topology.messages()
    side_information = {
        m: frozenset(
            other for other in messages
            if other != m and topology.is_weak(other.source, m.destination)
        )
        for m in messages
    }
    return IndexCodingInstance(messages=messages, side_information=side_information)


def verify_clique(instance: IndexCodingInstance, messages: Iterable) -> CliqueCheck:
    """서로가 서로의 부가 정보인지 판정

    Raises:
        UnknownMessage: 인스턴스에 없는 메시지가 있을 때
    """
    chosen = sorted(set(messages))
    known = set(instance.messages)
    for m in chosen:
        if m not in known:
            raise UnknownMessage(f"{m}는 인덱스 코딩 메시지가 아닙니다", (m,))

    for m in chosen:
        for other in chosen:
            if other != m and other not in instance.side_information[m]:
                return CliqueCheck(False, (m, other))
    return CliqueCheck(True)


def side_information_graph(instance: IndexCodingInstance) -> nx.DiGraph:
    """m -> m' 간선: m' 가 m 의 부가 정보"""
    graph = nx.DiGraph()
    graph.add_nodes_from(instance.messages)
    for m, known in instance.side_information.items():
        graph.add_edges_from((m, other) for other in known)
    return graph


def max_clique_size(instance: IndexCodingInstance) -> int:
    """서로가 부가 정보인 메시지 집합의 최대 크기"""
    directed = side_information_graph(instance)
    mutual = nx.Graph()
    mutual.add_nodes_from(instance.messages)
    mutual.add_edges_from(
        (a, b) for a, b in combinations(instance.messages, 2)
        if directed.has_edge(a, b) and directed.has_edge(b, a)
    )
    if mutual.number_of_nodes() == 0:
        return 0
    _, size = nx.max_weight_clique(mutual, weight=None)
    return size
