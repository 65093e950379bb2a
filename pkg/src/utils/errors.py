"""예외 정의 모듈

CLI 종료 코드: 0 성공, 1 검증 실패, 2 파싱/사용 오류, 3 내부 불변식 위반
"""

from typing import Optional, Tuple


class TopologyError(Exception):
    """모든 도메인 예외의 기반 클래스"""

    exit_code = 2

    def __init__(self, message: str, witness: Optional[Tuple] = None):
        super().__init__(message)
        self.witness = witness

    def describe(self) -> str:
        """witness 포함 메시지"""
        if not self.witness:
            return str(self)
        return f"{self} (witness: {', '.join(str(w) for w in self.witness)})"


class ParseError(TopologyError):
    """TIM v1 파일 형식 오류"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class StructureError(TopologyError):
    """배치 순서/커버리지 규칙 위반 (PLACE-ORDER, COVER-D, COVER-S)"""

    def __init__(self, rule_id: str, message: str, witness: Optional[Tuple] = None):
        super().__init__(f"{rule_id}: {message}", witness)
        self.rule_id = rule_id


class NotConvex(TopologyError):
    exit_code = 1

    def __init__(self, message: str, rule_id: Optional[str] = None, witness: Optional[Tuple] = None):
        super().__init__(message, witness)
        self.rule_id = rule_id


class EmptyResult(TopologyError):
    pass


class CoverageLost(TopologyError):
    exit_code = 3


class UnknownMessage(TopologyError):
    pass


class BaseCaseMissing(TopologyError):
    exit_code = 3


class SizeLimit(TopologyError):
    pass


class InvariantViolation(TopologyError):
    exit_code = 3


class ScheduleMismatch(TopologyError):
    exit_code = 3


class UnknownFixture(TopologyError):
    pass


class GenerationExhausted(TopologyError):
    exit_code = 3

    def __init__(self, message: str, attempts: int, rejections: dict):
        super().__init__(message)
        self.attempts = attempts
        self.rejections = rejections


class BudgetExceeded(TopologyError):
    pass


class NotAClique(TopologyError):
    pass
