"""Report records emitted by the CLI: one JSON object per line.

Weights are integer arrays; grading degrees and dimensions are decimal
strings so consumers with 64-bit integers do not overflow.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

from .equivariant import INFINITE, GradedDecomposition, IrreducibleSummand, graded_dim


@dataclass(frozen=True)
class ReportRecord:
    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    result: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "result": self.result},
            sort_keys=True,
            separators=(",", ":"),
            ensure_ascii=False,
        )

    @classmethod
    def from_json(cls, line: str) -> ReportRecord:
        obj = json.loads(line)
        return cls(obj["command"], obj["inputs"], obj["result"])

    def to_table(self) -> str:
        head = " ".join([self.command] + [f"{k}={_plain(v)}" for k, v in self.inputs.items()])
        lines = [head]
        for key, value in self.result.items():
            if key == "summands":
                lines.append(f"  summands ({len(value)}):")
                lines.extend(f"    {_summand_text(s)}" for s in value)
            else:
                lines.append(f"  {key}: {_plain(value)}")
        return "\n".join(lines)


def _plain(v: Any) -> str:
    if isinstance(v, list):
        return "(" + ",".join(_plain(x) for x in v) + ")"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


def _summand_text(s: dict[str, Any]) -> str:
    text = f"S{_plain(s['f'])}F"
    if "g" in s:
        text += f" ⊗ S{_plain(s['g'])}G"
    if s.get("multiplicity", 1) != 1:
        text = f"{s['multiplicity']} × {text}"
    return text


def summand_json(s: IrreducibleSummand) -> dict[str, Any]:
    out: dict[str, Any] = {"f": list(s.f_weight), "multiplicity": s.multiplicity}
    if s.g_weight is not None:
        out["g"] = list(s.g_weight)
    return out


def decomposition_result(dec: GradedDecomposition) -> dict[str, Any]:
    dim = graded_dim(dec, untruncated=True)
    result: dict[str, Any] = {
        "summands": [summand_json(s) for s in dec.summands],
        "dimension": dim if dim == INFINITE else str(dim),
        "exact": dec.exact,
        "floor": None if dec.floor_used is None else str(dec.floor_used),
    }
    if not dec.exact:
        result["truncated_dimension"] = str(graded_dim(dec))
    if not dec.in_theorem_range:
        result["in_theorem_range"] = False
    return result


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("loccoh").joinpath("report.schema.json").read_text())
