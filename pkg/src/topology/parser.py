"""TIM v1 텍스트 형식 파싱/직렬화 모듈

형식 (줄 단위, '#' 이후는 주석, 빈 줄 무시):
    TIM v1
    sources <T>
    destinations <K>
    placement <S<i>|D<j>> ...
    desired <i> <j>
    interfering <i> <j>
"""

from pathlib import Path
from typing import Dict, List, Tuple

from loguru import logger

from utils.errors import ParseError, StructureError
from .models import LinkLabel, NodeRef, Placement, Topology


HEADER = "TIM v1"


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    """주석과 빈 줄을 제거한 (줄 번호, 토큰) 목록"""
    lines = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            lines.append((line_no, content.split()))
    return lines


def _positive_int(token: str, what: str, line_no: int) -> int:
    if not (token.isascii() and token.isdigit()) or int(token) < 1:
        raise ParseError(f"{what}는 양의 정수여야 합니다: {token!r}", line_no)
    return int(token)


def _counted(lines: List[Tuple[int, List[str]]], at: int, keyword: str) -> int:
    if at >= len(lines):
        raise ParseError(f"'{keyword} <n>' 줄이 없습니다")
    line_no, tokens = lines[at]
    if len(tokens) != 2 or tokens[0] != keyword:
        raise ParseError(f"'{keyword} <n>' 형식이어야 합니다", line_no)
    return _positive_int(tokens[1], keyword, line_no)


def parse_topology(text: str) -> Topology:
    """TIM v1 텍스트를 토폴로지로 파싱

    Args:
        text: 파일 내용

    Returns:
        구조 검사(배치 순서, 커버리지)를 통과한 토폴로지

    Raises:
        ParseError: 형식 오류, 중복 쌍, 번호 범위 초과
        StructureError: PLACE-ORDER, COVER-D, COVER-S 위반
    """
    lines = _content_lines(text)
    if not lines or " ".join(lines[0][1]) != HEADER:
        raise ParseError(f"첫 줄은 '{HEADER}' 이어야 합니다", lines[0][0] if lines else None)

    num_sources = _counted(lines, 1, "sources")
    num_destinations = _counted(lines, 2, "destinations")

    if len(lines) < 4 or lines[3][1][0] != "placement":
        raise ParseError("'placement ...' 줄이 없습니다", lines[3][0] if len(lines) > 3 else None)
    placement_line, placement_tokens = lines[3]
    order = []
    for token in placement_tokens[1:]:
        try:
            node = NodeRef.parse(token)
        except ValueError as e:
            raise ParseError(str(e), placement_line) from e
        limit = num_sources if node.is_source else num_destinations
        if node.index > limit:
            raise ParseError(f"배치 토큰 번호 범위 초과: {token}", placement_line)
        order.append(node)
    if len(order) != num_sources + num_destinations:
        raise StructureError(
            "PLACE-ORDER",
            f"배치 토큰 {len(order)}개, 송신+수신 {num_sources + num_destinations}개와 다릅니다"
        )

    matrix = [[LinkLabel.WEAK] * num_destinations for _ in range(num_sources)]
    seen: Dict[Tuple[int, int], int] = {}
    for line_no, tokens in lines[4:]:
        keyword = tokens[0]
        if keyword not in (LinkLabel.DESIRED.value, LinkLabel.INTERFERING.value) or len(tokens) != 3:
            raise ParseError(f"알 수 없는 줄: {' '.join(tokens)!r}", line_no)
        source = _positive_int(tokens[1], "송신 번호", line_no)
        destination = _positive_int(tokens[2], "수신 번호", line_no)
        if source > num_sources or destination > num_destinations:
            raise ParseError(f"링크 번호 범위 초과: ({source}, {destination})", line_no)
        pair = (source, destination)
        if pair in seen:
            raise ParseError(f"중복된 쌍 ({source}, {destination}), 처음 선언: {seen[pair]}번째 줄", line_no)
        seen[pair] = line_no
        matrix[source - 1][destination - 1] = LinkLabel(keyword)

    topology = Topology(
        num_sources=num_sources,
        num_destinations=num_destinations,
        placement=Placement(tuple(order)),
        links=tuple(tuple(row) for row in matrix)
    )
    topology.check_structure()
    return topology


def serialize_topology(topology: Topology) -> str:
    """정규형 TIM v1 텍스트로 직렬화

    desired 줄 다음 interfering 줄, 각각 (source, destination) 순 정렬.
    """
    lines = [
        HEADER,
        f"sources {topology.num_sources}",
        f"destinations {topology.num_destinations}",
        "placement " + " ".join(topology.placement.tokens())
    ]
    for label in (LinkLabel.DESIRED, LinkLabel.INTERFERING):
        lines.extend(f"{label.value} {i} {j}" for i, j in topology.pairs_with(label))
    return "\n".join(lines) + "\n"


def load_topology(path: Path) -> Topology:
    """파일에서 토폴로지 읽기"""
    text = Path(path).read_text(encoding="utf-8")
    topology = parse_topology(text)
    logger.debug(f"토폴로지 로드: {path} (T={topology.num_sources}, K={topology.num_destinations})")
    return topology


def save_topology(topology: Topology, path: Path) -> Path:
    """토폴로지를 정규형 파일로 저장"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_topology(topology), encoding="utf-8")
    return path
