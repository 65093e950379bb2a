"""그리디 스케줄 기반 메시지 블록 분할"""

from typing import List, Tuple

from utils.errors import ScheduleMismatch
from topology import Message, Topology
from greedy import Direction, Mode, Schedule, greedy_schedule


def greedy_partition(topology: Topology, schedule: Schedule) -> List[Tuple[Message, ...]]:
    """선택 (S_ik, D_jk) 마다 하나의 블록으로 모든 메시지를 분할

    k < n 블록은 송신 번호가 [i_k, i_{k+1}) 이거나 수신 번호가 [j_k, j_{k+1}) 인
    메시지, 마지막 블록은 나머지 전부. 각 메시지는 조건을 만족하는 첫 블록에 들어간다.

    Raises:
        NotConvex: 볼록 토폴로지가 아닐 때
        ScheduleMismatch: schedule 이 LTR 그리디 스케줄과 다를 때
    """
    expected = greedy_schedule(topology, Direction.LTR, Mode.SAFE)
    if schedule.direction is not Direction.LTR or schedule.picks != expected.picks:
        raise ScheduleMismatch(
            f"LTR 그리디 스케줄 {expected.pairs_text()} 와 다릅니다: {schedule.pairs_text()}",
            schedule.picks
        )

    picks = schedule.picks
    blocks: List[List[Message]] = [[] for _ in picks]
    for message in topology.messages():
        for k in range(len(picks) - 1):
            here, after = picks[k], picks[k + 1]
            if (
                here.source <= message.source < after.source
                or here.destination <= message.destination < after.destination
            ):
                blocks[k].append(message)
                break
        else:
            blocks[-1].append(message)
    return [tuple(block) for block in blocks]
