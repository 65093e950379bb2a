"""명령행 인터페이스와 배치 검증 모듈"""

from .batch import (
    BatchConfig,
    BatchItem,
    BatchReport,
    batch_verify,
    check_instance,
    items_from_dir,
    items_from_random,
    items_from_topologies,
)
from .commands import build_parser, main, run

__all__ = [
    "BatchConfig",
    "BatchItem",
    "BatchReport",
    "batch_verify",
    "check_instance",
    "items_from_dir",
    "items_from_random",
    "items_from_topologies",
    "build_parser",
    "main",
    "run",
]
