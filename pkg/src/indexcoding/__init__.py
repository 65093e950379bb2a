"""인덱스 코딩 대응과 XOR 방송 코덱 모듈"""

from .models import CliqueCheck, DecodeReport, IndexCodingInstance
from .mapping import max_clique_size, side_information_graph, to_index_coding, verify_clique
from .codec import one_bit_payloads, random_payloads, simulate_xor_code, xor_all

__all__ = [
    "CliqueCheck",
    "DecodeReport",
    "IndexCodingInstance",
    "max_clique_size",
    "side_information_graph",
    "to_index_coding",
    "verify_clique",
    "one_bit_payloads",
    "random_payloads",
    "simulate_xor_code",
    "xor_all",
]
