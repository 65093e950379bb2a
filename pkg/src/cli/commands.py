"""명령행 진입점

종료 코드: 0 성공, 1 볼록성 검증 실패, 2 파싱/사용 오류, 3 불변식 위반
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import ValidationError

from utils import get_settings, setup_logger
from utils.errors import TopologyError
from topology import Topology, load_topology, reciprocal, validate_convexity
from greedy import Direction, Mode, greedy_schedule, greedy_trace
from oracle import certify, max_orthogonal
from indexcoding import max_clique_size, random_payloads, simulate_xor_code, to_index_coding
from generator import (
    FIXTURE_NAMES,
    GeneratorParams,
    Strategy,
    derive_rng,
    enumerate_topologies,
    fixture,
    generate_batch,
    write_instances,
)
from . import render
from .batch import BatchConfig, batch_verify, items_from_dir, items_from_random, items_from_topologies
from .render import OutputFormat


EXIT_OK = 0
EXIT_NOT_CONVEX = 1
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _index_range(text: str) -> Tuple[int, int]:
    """"3..8" 또는 "5" 형식"""
    lo, sep, hi = text.partition("..")
    try:
        bounds = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"A..B 형식이어야 합니다: {text!r}")
    if bounds[0] < 1 or bounds[1] < bounds[0]:
        raise argparse.ArgumentTypeError(f"빈 범위입니다: {text!r}")
    return bounds


def _load(argument: str) -> Topology:
    """파일 경로 또는 고정 토폴로지 이름"""
    path = Path(argument)
    if not path.exists() and argument in FIXTURE_NAMES:
        return fixture(argument)
    return load_topology(path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tim",
        description="1차원 볼록 셀룰러 네트워크 TIM 스케줄러/검증기"
    )
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.HUMAN.value,
                        help="출력 형식 (기본값: human)")
    parser.add_argument("--log-level", default=None, help="로그 레벨 (기본값: 설정의 log_level)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="볼록성 규칙 검사")
    p.add_argument("file", help="TIM v1 파일 또는 고정 토폴로지 이름")

    p = sub.add_parser("solve", help="그리디 직교 스케줄")
    p.add_argument("file")
    p.add_argument("--direction", choices=[d.value for d in Direction], default=Direction.LTR.value)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.SAFE.value)
    p.add_argument("--trace", action="store_true", help="후보별 판단 기록 출력")

    p = sub.add_parser("oracle", help="최대 직교 메시지 집합 (볼록성 불필요)")
    p.add_argument("file")

    p = sub.add_parser("certify", help="합 DoF 최적성 증명서")
    p.add_argument("file")

    p = sub.add_parser("reciprocal", help="상반 네트워크 출력")
    p.add_argument("file")

    p = sub.add_parser("indexcode", help="인덱스 코딩 대응과 XOR 방송 시연")
    p.add_argument("file")
    p.add_argument("--payload-seed", type=int, default=0, help="시연 페이로드 시드")

    p = sub.add_parser("generate", help="랜덤 볼록 토폴로지 생성")
    p.add_argument("--sources", type=_index_range, default=None, help="송신 수 범위 A..B")
    p.add_argument("--destinations", type=_index_range, default=None, help="수신 수 범위 C..D")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default=None)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("enumerate", help="작은 볼록 토폴로지 전수 열거")
    p.add_argument("--max-sources", type=int, required=True)
    p.add_argument("--max-destinations", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)

    p = sub.add_parser("batch", help="불변식 배치 검증")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--dir", type=Path, help="*.tim 파일 디렉토리")
    source.add_argument("--random", type=int, metavar="N", help="랜덤 인스턴스 N개")
    source.add_argument("--enumerate", type=int, nargs=2, metavar=("MAX_T", "MAX_K"), help="전수 열거 인스턴스")
    p.add_argument("--seed", type=int, default=0, help="--random 시드")
    p.add_argument("--sources", type=_index_range, default=None)
    p.add_argument("--destinations", type=_index_range, default=None)
    p.add_argument("--workers", type=int, default=None, help="프로세스 수 (기본값: 설정)")
    p.add_argument("--timing", action="store_true", help="경과 시간 포함 (출력이 실행마다 달라짐)")

    return parser


# ----------------------------------------------------------------------
# 하위 명령
# ----------------------------------------------------------------------

def _cmd_validate(args):
    topology = _load(args.file)
    report = validate_convexity(topology)
    return render.validation(topology, report), (EXIT_OK if report.is_convex else EXIT_NOT_CONVEX)


def _cmd_solve(args):
    topology = _load(args.file)
    direction, mode = Direction(args.direction), Mode(args.mode)
    if args.trace:
        result, steps = greedy_trace(topology, direction, mode)
        return render.schedule(result, steps), EXIT_OK
    return render.schedule(greedy_schedule(topology, direction, mode)), EXIT_OK


def _cmd_oracle(args):
    return render.oracle(max_orthogonal(_load(args.file))), EXIT_OK


def _cmd_certify(args):
    return render.certificate(certify(_load(args.file))), EXIT_OK


def _cmd_reciprocal(args):
    return render.topology_text(reciprocal(_load(args.file))), EXIT_OK


def _cmd_indexcode(args):
    topology = _load(args.file)
    instance = to_index_coding(topology)
    clique = max_clique_size(instance)
    if not validate_convexity(topology).is_convex:
        return render.index_coding(instance, clique), EXIT_OK

    result = greedy_schedule(topology, Direction.LTR, Mode.SAFE)
    bits = get_settings().payload_bits
    payloads = random_payloads(result.size, bits, derive_rng(args.payload_seed))
    report = simulate_xor_code(instance, result, payloads, bits=bits)
    code = EXIT_OK if report.all_decoded else EXIT_INVARIANT
    return render.index_coding(instance, clique, result, report), code


def _cmd_generate(args):
    params = GeneratorParams.from_config(
        sources=args.sources,
        destinations=args.destinations,
        seed=args.seed,
        strategy=args.strategy
    )
    paths = write_instances(generate_batch(params, args.count), args.out, prefix=f"random_s{args.seed}")
    return render.written(paths), EXIT_OK


def _cmd_enumerate(args):
    topologies = enumerate_topologies(args.max_sources, args.max_destinations)
    paths = write_instances(
        topologies, args.out, prefix=f"enum_t{args.max_sources}_k{args.max_destinations}"
    )
    return render.written(paths), EXIT_OK


def _cmd_batch(args):
    if args.dir is not None:
        items = items_from_dir(args.dir)
    elif args.enumerate is not None:
        max_sources, max_destinations = args.enumerate
        items = items_from_topologies(enumerate_topologies(max_sources, max_destinations), prefix="enum")
    else:
        params = GeneratorParams.from_config(
            sources=args.sources, destinations=args.destinations, seed=args.seed
        )
        items = items_from_random(args.random, args.seed, params)

    report = batch_verify(items, BatchConfig.from_config(), workers=args.workers, timing=args.timing)
    code = EXIT_INVARIANT if report.invariant_failures else EXIT_OK
    return render.batch(report.to_dict()), code


COMMANDS = {
    "validate": _cmd_validate,
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "certify": _cmd_certify,
    "reciprocal": _cmd_reciprocal,
    "indexcode": _cmd_indexcode,
    "generate": _cmd_generate,
    "enumerate": _cmd_enumerate,
    "batch": _cmd_batch,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """명령 실행 후 종료 코드 반환 (결과는 stdout, 로그는 stderr)"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    setup_logger(log_level=args.log_level or settings.log_level, log_file=settings.log_file)
    fmt = OutputFormat(args.format)

    try:
        rendered, code = COMMANDS[args.command](args)
    except TopologyError as e:
        logger.error(e.describe())
        rendered, code = render.error(e, e.exit_code), e.exit_code
    except ValidationError as e:
        logger.error(f"잘못된 인자: {e.errors()[0]['msg']}")
        rendered, code = render.error(e, EXIT_USAGE), EXIT_USAGE
    except OSError as e:
        logger.error(f"파일을 읽을 수 없습니다: {e}")
        rendered, code = render.error(e, EXIT_USAGE), EXIT_USAGE

    print(render.emit(fmt, rendered))
    return code


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))
