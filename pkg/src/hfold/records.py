"""The per-set verification record shared by the classifier and the sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .core import IntSet, StructureClass, make_set, structure_from_dict

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

# key order of a serialized record; part of the report file format
RECORD_FIELDS = ("set", "h", "cardinality", "structure", "predicted", "checks", "caveats")


@dataclass(frozen=True)
class VerificationRecord:
    set: IntSet
    h: int
    cardinality: int
    structure: StructureClass
    predicted: Optional[int]
    checks: dict = field(default_factory=dict)
    caveats: tuple = ()

    @property
    def passed(self) -> bool:
        return FAIL not in self.checks.values()

    @property
    def sort_key(self) -> tuple:
        return (self.set.k, self.set.diameter, self.set.elements, self.h)

    def to_dict(self) -> dict:
        return {
            "set": self.set.tolist(),
            "h": self.h,
            "cardinality": self.cardinality,
            "structure": self.structure.to_dict(),
            "predicted": self.predicted,
            "checks": dict(sorted(self.checks.items())),
            "caveats": list(self.caveats),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationRecord":
        return cls(
            set=make_set(d["set"]),
            h=d["h"],
            cardinality=d["cardinality"],
            structure=structure_from_dict(d["structure"]),
            predicted=d["predicted"],
            checks=dict(d["checks"]),
            caveats=tuple(d["caveats"]),
        )

    @classmethod
    def from_json(cls, line: str) -> "VerificationRecord":
        return cls.from_dict(json.loads(line))
