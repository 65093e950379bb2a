"""
1차원 볼록 셀룰러 네트워크 TIM 도구 메인 모듈

- TIM v1 토폴로지 검증 (볼록성 규칙)
- 그리디 직교 스케줄과 최적성 증명서
- 인덱스 코딩 대응, 랜덤 생성, 배치 검증

사용법:
    python src/main.py solve data/fixtures/fig2like.tim
    python src/main.py --format json certify chain3
"""

import sys
from pathlib import Path

# src 디렉토리를 경로에 추가
src_dir = Path(__file__).parent
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from cli import main


if __name__ == "__main__":
    main()
