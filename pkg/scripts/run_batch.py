#!/usr/bin/env python3
"""
전체 검증 스크립트

고정 토폴로지, T<=3/K<=3 전수 열거, 시드 랜덤 인스턴스에 대해
배치 검증을 차례로 돌리고 위반 건수를 요약합니다.

사용법:
    python scripts/run_batch.py                       # 기본값: 랜덤 1000개, 시드 7
    python scripts/run_batch.py --random 200 --seed 1
    python scripts/run_batch.py --workers 4 --skip-enumeration
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

from loguru import logger

from utils.config import get_settings
from utils.logger import setup_logger
from generator import GeneratorParams, enumerate_topologies
from cli.batch import BatchConfig, batch_verify, items_from_dir, items_from_random, items_from_topologies
from cli.render import to_json


def parse_args():
    parser = argparse.ArgumentParser(description="불변식 전체 배치 검증")
    parser.add_argument("--random", type=int, default=1000, help="랜덤 인스턴스 수 (기본값: 1000)")
    parser.add_argument("--seed", type=int, default=7, help="랜덤 시드 (기본값: 7)")
    parser.add_argument("--max-sources", type=int, default=3, help="전수 열거 최대 송신 수 (기본값: 3)")
    parser.add_argument("--max-destinations", type=int, default=3, help="전수 열거 최대 수신 수 (기본값: 3)")
    parser.add_argument("--skip-enumeration", action="store_true", help="전수 열거 단계 생략")
    parser.add_argument("--workers", type=int, default=None, help="프로세스 수")
    parser.add_argument("--report", type=Path, default=None, help="JSON 보고서 저장 경로")
    return parser.parse_args()


def main():
    args = parse_args()
    settings = get_settings()
    setup_logger(log_level=settings.log_level, log_file=settings.log_file)
    config = BatchConfig.from_config()

    stages = [("fixtures", items_from_dir(settings.fixtures_dir))]
    if not args.skip_enumeration:
        topologies = enumerate_topologies(args.max_sources, args.max_destinations)
        stages.append(("enumeration", items_from_topologies(topologies, prefix="enum")))
    params = GeneratorParams.from_config(seed=args.seed)
    stages.append(("random", items_from_random(args.random, args.seed, params)))

    results = {}
    failed = False
    for name, items in stages:
        logger.info(f"=== {name} 검증 시작 ===")
        report = batch_verify(items, config, workers=args.workers)
        results[name] = report.to_dict()
        failed = failed or report.invariant_failures > 0
        print(f"{name}: 인스턴스 {report.instances_run}개, 비볼록 {report.validation_failures}개, "
              f"불변식 위반 {report.invariant_failures}건, 오라클 생략 {report.oracle_skipped}개")

    if args.report:
        args.report.parent.mkdir(parents=True, exist_ok=True)
        args.report.write_text(to_json(results) + "\n", encoding="utf-8")
        print(f"보고서 저장: {args.report}")

    if failed:
        print("❌ 불변식 위반이 있습니다")
        sys.exit(3)
    print("✅ 모든 불변식 통과")


if __name__ == "__main__":
    main()
