"""1차원 네트워크 토폴로지 모듈"""

from .models import (
    IndexInterval,
    IntervalProfile,
    LinkLabel,
    Message,
    NodeIntervals,
    NodeKind,
    NodeRef,
    Placement,
    Topology,
    ValidationReport,
    Violation,
)
from .parser import load_topology, parse_topology, save_topology, serialize_topology
from .convexity import interval_profile, is_convex, validate_convexity
from .transform import eliminate, mirror, reciprocal

__all__ = [
    "IndexInterval",
    "IntervalProfile",
    "LinkLabel",
    "Message",
    "NodeIntervals",
    "NodeKind",
    "NodeRef",
    "Placement",
    "Topology",
    "ValidationReport",
    "Violation",
    "load_topology",
    "parse_topology",
    "save_topology",
    "serialize_topology",
    "interval_profile",
    "is_convex",
    "validate_convexity",
    "eliminate",
    "mirror",
    "reciprocal",
]
