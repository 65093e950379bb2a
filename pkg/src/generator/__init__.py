"""고정 토폴로지, 랜덤 생성, 전수 열거 모듈"""

from .models import GeneratorParams, Strategy
from .fixtures import FIXTURE_NAMES, fixture, fixture_path
from .random_topology import derive_rng, generate_batch, random_convex_topology, write_instances
from .enumeration import enumerate_topologies, enumeration_size

__all__ = [
    "GeneratorParams",
    "Strategy",
    "FIXTURE_NAMES",
    "fixture",
    "fixture_path",
    "derive_rng",
    "generate_batch",
    "random_convex_topology",
    "write_instances",
    "enumerate_topologies",
    "enumeration_size",
]
