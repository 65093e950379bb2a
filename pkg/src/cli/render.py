"""결과 출력 (human: 줄 단위 텍스트, json: 들여쓰기 2칸, 키 순서 고정)"""

import json
from enum import Enum
from typing import List, Optional

from topology import Topology, ValidationReport, serialize_topology
from greedy import GreedyStep, Schedule
from oracle import Certificate, OracleResult
from indexcoding import DecodeReport, IndexCodingInstance


class OutputFormat(str, Enum):
    HUMAN = "human"
    JSON = "json"


def to_json(data: dict) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def validation(topology: Topology, report: ValidationReport):
    lines = [f"convex {'yes' if report.is_convex else 'no'}"]
    lines += [f"violation {violation}" for violation in report.violations]
    data = {
        "num_sources": topology.num_sources,
        "num_destinations": topology.num_destinations,
        "convex": report.is_convex,
        "violations": [violation.to_dict() for violation in report.violations]
    }
    return "\n".join(lines), data


def schedule(result: Schedule, steps: Optional[List[GreedyStep]] = None):
    lines = [f"schedule {result.pairs_text()}", f"sum_dof {result.size}"]
    data = result.to_dict()
    data["sum_dof"] = result.size
    if steps is not None:
        lines += [f"  {step}" for step in steps]
        data["trace"] = [step.to_dict() for step in steps]
    return "\n".join(lines), data


def oracle(result: OracleResult):
    text = f"max_orthogonal {result.size}\nwitness " + " ".join(str(m) for m in result.witness)
    return text, result.to_dict()


def certificate(result: Certificate):
    return result.render_text().rstrip("\n"), result.to_dict()


def topology_text(topology: Topology):
    return serialize_topology(topology).rstrip("\n"), topology.to_dict()


def index_coding(
    instance: IndexCodingInstance,
    clique_size: int,
    result: Optional[Schedule] = None,
    report: Optional[DecodeReport] = None
):
    lines = []
    for m in instance.messages:
        known = " ".join(str(other) for other in sorted(instance.side_information[m]))
        lines.append(f"{m} receiver {instance.receiver(m)} side_info {{{known}}}")
    lines.append(f"max_clique {clique_size}")
    data = instance.to_dict()
    data["max_clique"] = clique_size
    if result is not None and report is not None:
        lines.append(f"schedule {result.pairs_text()}")
        lines.append(f"broadcast {report.to_dict()['broadcast']}")
        for entry in report.to_dict()["messages"]:
            status = "ok" if entry["success"] else "FAIL"
            lines.append(f"  {entry['message']} payload {entry['payload']} decoded {entry['decoded']} {status}")
        lines.append(f"sum_rate {report.sum_rate}")
        data["schedule"] = result.to_dict()
        data["decode"] = report.to_dict()
    return "\n".join(lines), data


def batch(data: dict):
    lines = [f"{key} {value}" for key, value in data.items() if key != "failures"]
    for failure in data["failures"]:
        lines.append(f"--- {failure['name']} (seed {failure['seed']}): {', '.join(failure['checks'])}")
        lines += [f"  {detail}" for detail in failure["details"]]
        lines.append(failure["tim"].rstrip("\n"))
    return "\n".join(lines), data


def written(paths):
    data = {"count": len(paths), "files": [str(path) for path in paths]}
    return "\n".join(str(path) for path in paths) + f"\nwrote {len(paths)}", data


def error(exc: Exception, exit_code: int):
    describe = getattr(exc, "describe", None)
    message = describe() if describe else str(exc)
    data = {"error": type(exc).__name__, "message": message, "exit_code": exit_code}
    witness = getattr(exc, "witness", None)
    if witness:
        data["witness"] = [str(item) for item in witness]
    rule_id = getattr(exc, "rule_id", None)
    if rule_id:
        data["rule_id"] = rule_id
    return f"error {type(exc).__name__}: {message}", data


def emit(fmt: OutputFormat, rendered) -> str:
    text, data = rendered
    return to_json(data) if fmt is OutputFormat.JSON else text
