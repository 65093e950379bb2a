"""인덱스 코딩 데이터 모델"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from topology import Message, NodeRef


@dataclass(frozen=True)
class IndexCodingInstance:
    """Desired 쌍 하나당 메시지 하나, 수신자는 메시지의 수신 단말

    side_information[m] 은 m 의 수신 단말이 듣지 못하는 송신 기지국의 메시지 집합
    """

    messages: Tuple[Message, ...]
    side_information: Dict[Message, FrozenSet[Message]]

    def receiver(self, message: Message) -> NodeRef:
        return NodeRef.destination(message.destination)

    def to_dict(self) -> dict:
        return {
            "messages": [
                {
                    "message": str(m),
                    "receiver": str(self.receiver(m)),
                    "side_information": [str(other) for other in sorted(self.side_information[m])]
                }
                for m in self.messages
            ]
        }


@dataclass(frozen=True)
class CliqueCheck:
    """클리크 판정 결과

    witness 는 (m, m') 로, m' 가 m 의 부가 정보가 아니라는 뜻
    """

    is_clique: bool
    witness: Optional[Tuple[Message, Message]] = None

    def __bool__(self) -> bool:
        return self.is_clique

    def to_dict(self) -> dict:
        return {
            "is_clique": self.is_clique,
            "witness": [str(m) for m in self.witness] if self.witness else None
        }


@dataclass(frozen=True)
class DecodeReport:
    """XOR 방송 한 심볼의 복호 결과"""

    broadcast: int
    payloads: Dict[Message, int]
    decoded: Dict[Message, int]
    bits: int = 64
    symbols: int = 1
    success: Dict[Message, bool] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self, "success",
            {m: self.decoded.get(m) == payload for m, payload in self.payloads.items()}
        )

    @property
    def all_decoded(self) -> bool:
        return all(self.success.values())

    @property
    def sum_rate(self) -> int:
        """방송 심볼당 전달된 메시지 수"""
        return sum(self.success.values()) // self.symbols

    def _hex(self, value: int) -> str:
        return f"0x{value:0{max(1, (self.bits + 3) // 4)}x}"

    def to_dict(self) -> dict:
        return {
            "broadcast": self._hex(self.broadcast),
            "messages": [
                {
                    "message": str(m),
                    "payload": self._hex(payload),
                    "decoded": self._hex(self.decoded[m]),
                    "success": self.success[m]
                }
                for m, payload in self.payloads.items()
            ],
            "sum_rate": self.sum_rate,
            "all_decoded": self.all_decoded
        }
