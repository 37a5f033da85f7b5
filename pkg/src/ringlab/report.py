"""Report assembly and rendering (JSON and line-oriented text)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .subsets import IdealSubset
from .suites import SuiteResult


def plain(value: Any) -> Any:
    """Convert report payloads to JSON-ready builtins."""
    if isinstance(value, IdealSubset):
        return value.labels()
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [plain(v) for v in value]
        return sorted(items, key=_order_key) if isinstance(value, (set, frozenset)) else items
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.ndarray):
        return [plain(v) for v in value.tolist()]
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return repr(value)


def _order_key(v: Any) -> str:
    return json.dumps(v, sort_keys=True)


@dataclass
class Report:
    command: str
    source: str
    objects: list[dict[str, Any]] = field(default_factory=list)
    suites: list[SuiteResult] = field(default_factory=list)
    elapsed_ms: float | None = None

    def add(self, name: str, order: int, **result: Any) -> None:
        self.objects.append({"name": name, "order": order, **result})

    @property
    def failed(self) -> bool:
        return any(s.failures for s in self.suites)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "source": self.source,
            "objects": [plain(o) for o in self.objects],
            "suites": [
                {
                    "name": s.name,
                    "cases": s.cases,
                    "failures": [
                        {"instance": f.instance, "check": f.check, "expected": plain(f.expected),
                         "actual": plain(f.actual), "witness": plain(f.witness)}
                        for f in s.failures
                    ],
                }
                for s in self.suites
            ],
            "elapsed_ms": None if self.elapsed_ms is None else round(self.elapsed_ms, 3),
        }


def emit_report(report: Report, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    return ("\n".join(_text_lines(report.to_dict())) + "\n").encode("utf-8")


def _scalar(v: Any, brackets: str = "{}") -> str:
    if isinstance(v, list) and all(not isinstance(x, (list, dict)) for x in v):
        return brackets[0] + ", ".join(_scalar(x) for x in v) + brackets[1]
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _walk(key: str, v: Any, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(v, dict):
        out = [f"{pad}{key}:"]
        for k, x in v.items():
            out += _walk(k, x, indent + 1)
        return out
    if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
        out = [f"{pad}{key}: {len(v)}"]
        for n, x in enumerate(v, 1):
            out += _walk(f"[{n}]", x, indent + 1)
        return out
    return [f"{pad}{key}: {_scalar(v)}"]


def _text_lines(d: dict[str, Any]) -> list[str]:
    lines = [f"command: {d['command']}", f"source: {d['source']}"]
    for obj in d["objects"]:
        lines.append(f"object {obj['name']} (order {obj['order']})")
        for k, v in obj.items():
            if k not in ("name", "order"):
                lines += _walk(k, v, 1)
    for s in d["suites"]:
        status = "PASS" if not s["failures"] else "FAIL"
        lines.append(f"suite {s['name']}: {status} ({s['cases']} cases, {len(s['failures'])} failures)")
        for f in s["failures"]:
            lines.append(f"  {f['instance']}: {f['check']}: expected {_scalar(f['expected'])}, "
                         f"got {_scalar(f['actual'])}, witness {_scalar(f['witness'], '()')}")
    if d["elapsed_ms"] is not None:
        lines.append(f"elapsed_ms: {d['elapsed_ms']}")
    return lines
