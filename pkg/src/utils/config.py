"""설정 관리 모듈"""

import json
from pathlib import Path
from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings


PROJECT_ROOT = Path(__file__).parent.parent.parent


class Settings(BaseSettings):
    """애플리케이션 설정"""
    
    # 실행 설정
    log_level: str = Field(default="INFO", description="로그 레벨")
    log_file: Optional[Path] = Field(default=None, description="로그 파일 경로 (선택)")
    
    # 탐색 한도
    oracle_message_limit: int = Field(default=64, description="max_orthogonal 탐색 메시지 수 한도")
    exhaustive_cross_check_limit: int = Field(default=14, description="전수 탐색 교차검증 메시지 수 한도")
    enumeration_budget: int = Field(default=5_000_000, description="열거 대상 (배치 × 링크 행렬) 수 한도")
    payload_bits: int = Field(default=64, description="XOR 코덱 페이로드 비트 폭")
    
    # 경로 설정
    config_path: Path = Field(
        default=PROJECT_ROOT / "config" / "config.json",
        description="설정 파일 경로"
    )
    fixtures_dir: Path = Field(
        default=PROJECT_ROOT / "data" / "fixtures",
        description="고정 토폴로지(TIM v1) 디렉토리"
    )
    
    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore"
    }
    
    def load_config(self) -> dict:
        """JSON 설정 파일 로드"""
        if self.config_path.exists():
            with open(self.config_path, "r", encoding="utf-8") as f:
                return json.load(f)
        return {}
    
    def get_generator_config(self) -> dict:
        """랜덤 생성기 기본값 반환"""
        config = self.load_config()
        return config.get("generator", {})
    
    def get_batch_config(self) -> dict:
        """배치 검증 설정 반환"""
        config = self.load_config()
        return config.get("batch", {})


@lru_cache()
def get_settings() -> Settings:
    """설정 싱글톤 반환"""
    return Settings()
