"""그리디 직교 접속 스케줄 모듈"""

from .models import Direction, GreedyStep, Mode, OrthogonalityResult, Schedule, StepOutcome
from .orthogonal import compatible, is_maximal, is_orthogonal
from .scheduler import greedy_schedule, greedy_trace

__all__ = [
    "Direction",
    "GreedyStep",
    "Mode",
    "OrthogonalityResult",
    "Schedule",
    "StepOutcome",
    "compatible",
    "is_maximal",
    "is_orthogonal",
    "greedy_schedule",
    "greedy_trace",
]
