#!/usr/bin/env python3
"""
인스턴스 내보내기 스크립트

랜덤 볼록 토폴로지 또는 전수 열거 결과를 TIM v1 파일로 저장합니다.

사용법:
    python scripts/export_instances.py random --count 50 --seed 3 --out data/random
    python scripts/export_instances.py enumerate --max-sources 2 --max-destinations 2 --out data/enum
"""

import sys
import argparse
from pathlib import Path

# 프로젝트 루트를 경로에 추가
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

# .env 파일 로드
from dotenv import load_dotenv
load_dotenv(project_root / ".env")

from utils.config import get_settings
from utils.logger import setup_logger
from generator import GeneratorParams, enumerate_topologies, generate_batch, write_instances


def parse_args():
    parser = argparse.ArgumentParser(description="TIM v1 인스턴스 내보내기")
    sub = parser.add_subparsers(dest="kind", required=True)

    random_parser = sub.add_parser("random", help="랜덤 볼록 토폴로지")
    random_parser.add_argument("--count", type=int, default=10)
    random_parser.add_argument("--seed", type=int, default=0)
    random_parser.add_argument("--strategy", choices=["monotone", "rejection"], default=None)
    random_parser.add_argument("--out", type=Path, required=True)

    enum_parser = sub.add_parser("enumerate", help="전수 열거")
    enum_parser.add_argument("--max-sources", type=int, default=2)
    enum_parser.add_argument("--max-destinations", type=int, default=2)
    enum_parser.add_argument("--out", type=Path, required=True)
    return parser.parse_args()


if __name__ == "__main__":
    args = parse_args()
    setup_logger(log_level=get_settings().log_level)

    if args.kind == "random":
        params = GeneratorParams.from_config(seed=args.seed, strategy=args.strategy)
        paths = write_instances(generate_batch(params, args.count), args.out, prefix=f"random_s{args.seed}")
    else:
        topologies = enumerate_topologies(args.max_sources, args.max_destinations)
        paths = write_instances(topologies, args.out, prefix="enum")

    print(f"✅ {len(paths)}개 파일 저장: {args.out}")
