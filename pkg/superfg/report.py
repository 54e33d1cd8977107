import hashlib
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

VERDICTS = ("pass", "fail", "skipped")

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class Verdict:
    name: str
    status: str
    reason: str = ""

    def __post_init__(self):
        if self.status not in VERDICTS:
            raise ValueError(f"Unknown verdict: {self.status=}, expected one of {VERDICTS}")


def _jsonable(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if hasattr(x, "tolist"):
        return x.tolist()
    return str(x)


def digest(inputs: Dict[str, Any]) -> str:
    text = json.dumps(inputs, sort_keys=True, default=_jsonable)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class RunReport:
    """One CLI invocation: inputs, outputs and pass/fail/skipped verdicts."""

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Dict[str, Any] = field(default_factory=dict)
    verdicts: List[Verdict] = field(default_factory=list)
    wall_clock: float = 0.0

    def check(self, name: str, ok: bool, reason: str = "") -> bool:
        self.verdicts.append(Verdict(name, "pass" if ok else "fail", reason))
        return ok

    def skip(self, name: str, reason: str):
        self.verdicts.append(Verdict(name, "skipped", reason))

    @property
    def passed(self) -> bool:
        return all(v.status != "fail" for v in self.verdicts)

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.passed else EXIT_CHECK_FAILED

    def to_json(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "digest": digest(self.inputs),
            "outputs": self.outputs,
            "verdicts": [asdict(v) for v in self.verdicts],
            "passed": self.passed,
            "wall_clock": round(self.wall_clock, 6),
        }

    def __str__(self):
        return json.dumps(self.to_json(), indent=2, default=_jsonable)
