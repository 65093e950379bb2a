"""랜덤 토폴로지 생성 파라미터"""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, Field, field_validator

from utils import get_settings


class Strategy(str, Enum):
    MONOTONE = "monotone"     # 구간 끝점을 왼쪽→오른쪽으로 단조 증가시키며 샘플링
    REJECTION = "rejection"   # 수신 단말별 독립 구간 + 전체 기각


class GeneratorParams(BaseModel):
    """랜덤 볼록 토폴로지 생성 파라미터"""

    sources: Tuple[int, int] = Field(default=(1, 10), description="송신 기지국 수 범위 [lo, hi]")
    destinations: Tuple[int, int] = Field(default=(1, 12), description="수신 단말 수 범위 [lo, hi]")
    seed: int = Field(default=0, ge=0, lt=2 ** 64, description="64비트 시드")
    interference_extension: float = Field(
        default=1.0, ge=0,
        description="Desired 구간 양쪽에 덧붙는 간섭 송신 수 기댓값 (한쪽당)"
    )
    desired_extension: float = Field(default=0.5, ge=0, description="Desired 구간 확장 경향")
    max_attempts: int = Field(default=1000, ge=1, description="최대 기각 샘플링 횟수")
    strategy: Strategy = Strategy.MONOTONE

    model_config = {"frozen": True}

    @field_validator("sources", "destinations")
    @classmethod
    def check_range(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        lo, hi = value
        if lo < 1 or hi < lo:
            raise ValueError(f"빈 범위입니다: [{lo}, {hi}]")
        return value

    @classmethod
    def from_config(cls, **overrides) -> "GeneratorParams":
        """config.json 의 generator 섹션 위에 None 이 아닌 인자를 덮어써 생성"""
        values = dict(get_settings().get_generator_config())
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
