"""최대 직교 집합 오라클과 최적성 증명 모듈"""

from .models import Certificate, DemandEdge, DemandGraph, EdgeKind, OracleResult, WrapPattern
from .search import conflict_graph, max_orthogonal, max_orthogonal_exhaustive
from .demand_graph import build_demand_graph, find_cycle, find_wrap_pattern, topological_order
from .partition import greedy_partition
from .certificate import certify, verify_certificate

__all__ = [
    "Certificate",
    "DemandEdge",
    "DemandGraph",
    "EdgeKind",
    "OracleResult",
    "WrapPattern",
    "conflict_graph",
    "max_orthogonal",
    "max_orthogonal_exhaustive",
    "build_demand_graph",
    "find_cycle",
    "find_wrap_pattern",
    "topological_order",
    "greedy_partition",
    "certify",
    "verify_certificate",
]
