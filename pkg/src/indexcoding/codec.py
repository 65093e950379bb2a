"""클리크 커버 XOR 방송 코덱

스케줄된 메시지 페이로드를 모두 XOR 한 한 심볼을 방송하고,
각 수신 단말은 부가 정보 페이로드를 XOR 로 지워 자기 메시지를 복원한다.
"""

import operator
import random
from functools import reduce
from itertools import product
from typing import Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from utils import get_settings
from utils.errors import NotAClique
from topology import Message
from greedy import Schedule
from .mapping import verify_clique
from .models import DecodeReport, IndexCodingInstance


def xor_all(values: Sequence[int]) -> int:
    return reduce(operator.xor, values, 0)


def random_payloads(count: int, bits: int, rng: random.Random) -> Tuple[int, ...]:
    return tuple(rng.getrandbits(bits) for _ in range(count))


def one_bit_payloads(count: int) -> Iterator[Tuple[int, ...]]:
    """1비트 페이로드 벡터 전체 (2^count 개)"""
    return product((0, 1), repeat=count)


def simulate_xor_code(
    instance: IndexCodingInstance,
    schedule: Schedule,
    payloads: Union[Sequence[int], Mapping[Message, int]],
    bits: Optional[int] = None
) -> DecodeReport:
    """스케줄된 메시지를 XOR 한 심볼로 방송하고 복호 결과를 보고

    Args:
        instance: 인덱스 코딩 인스턴스
        schedule: 방송할 메시지 (클리크여야 함)
        payloads: 선택 순서대로의 페이로드 또는 메시지별 페이로드
        bits: 페이로드 비트 폭 (기본: 설정의 payload_bits)

    Raises:
        NotAClique: 스케줄이 부가 정보 클리크가 아닐 때
        ValueError: 페이로드 개수나 폭이 맞지 않을 때
    """
    bits = get_settings().payload_bits if bits is None else bits
    check = verify_clique(instance, schedule.picks)
    if not check:
        raise NotAClique(f"{check.witness[1]}는 {check.witness[0]}의 부가 정보가 아닙니다", check.witness)

    if isinstance(payloads, Mapping):
        assigned = {m: payloads[m] for m in schedule.picks}
    else:
        if len(payloads) != schedule.size:
            raise ValueError(f"페이로드 {len(payloads)}개, 스케줄 메시지 {schedule.size}개")
        assigned = dict(zip(schedule.picks, payloads))
    for m, payload in assigned.items():
        if not 0 <= payload < (1 << bits):
            raise ValueError(f"{m} 페이로드가 {bits}비트 범위를 벗어납니다: {payload}")

    broadcast = xor_all(list(assigned.values()))
    decoded = {}
    for m in schedule.picks:
        known: List[int] = [
            assigned[other] for other in schedule.picks
            if other in instance.side_information[m]
        ]
        decoded[m] = broadcast ^ xor_all(known)

    report = DecodeReport(broadcast=broadcast, payloads=assigned, decoded=decoded, bits=bits)
    if not report.all_decoded:
        logger.warning(f"복호 실패: {[str(m) for m, ok in report.success.items() if not ok]}")
    return report
