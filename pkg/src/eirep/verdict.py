"""Outcome records shared by the decision procedures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

# result each rule relies on, recorded in every trace entry
CITATIONS = {
    "normalize": "Prop 2.2",
    "N1": "Thm 1.1(1)",
    "N2": "Prop 3.7(3)",
    "N3": "Prop 3.7(4)",
    "N4": "Prop 8.1",
    "N5": "Prop 6.9",
    "N6": "Prop 6.10",
    "N7": "Prop 6.12",
    "N8": "Prop 6.15",
    "N9": "Prop 7.7",
    "N10": "Prop 8.3, Prop 8.5",
    "N11": "Prop 7.4",
    "R": "Prop 3.4",
    "S0": "Higman: kG has finite type iff Sylow p-subgroups are cyclic",
    "S1": "Lemma 7.1",
    "S2": "Cor 4.4",
    "S3": "Prop 5.1",
    "S4": "Prop 5.3",
    "S5": "Thm 7.2",
    "S6": "Thm 7.11",
    "S7": "Remark 5.4",
}

FINITE = "Finite"
INFINITE = "Infinite"
UNKNOWN = "Unknown"

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
INCONCLUSIVE = "unknown"


@dataclass
class CriterionResult:
    """One rule evaluation.

    For necessary rules ``fail`` proves infinite type.  For terminal rules
    ``pass`` proves finite type and ``fail`` proves infinite type.
    """
    rule: str
    citation: str
    status: str
    witness: Any = None
    note: str = ""
    terminal: bool = False

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError(f"rule {self.rule} failed without a witness")

    def to_dict(self) -> dict:
        d = {"rule": self.rule, "citation": self.citation, "status": self.status,
             "witness": _jsonable(self.witness)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Verdict:
    outcome: str
    trace: list = field(default_factory=list)
    field_used: str = ""
    char_p: int = 0

    def to_dict(self) -> dict:
        return {"schema": "eirep/verdict@1", "outcome": self.outcome, "char": self.char_p,
                "field": self.field_used, "trace": [r.to_dict() for r in self.trace]}


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=repr) if isinstance(x, (set, frozenset)) else items
    if hasattr(x, "item"):
        return x.item()
    return repr(x)
