"""Verdicts on tame multidegrees for arithmetic progressions (a, a+d, a+2d)."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from math import gcd

from .degree_analysis import exclude_all, type_iii_possible
from .semigroup import NONNEG, member


class Status(str, enum.Enum):
    IN = "In"
    NOT_IN = "NotIn"
    UNKNOWN = "Unknown"


# Verdicts proved elsewhere; (4,5,6) lies in the exceptional family.
FACT_TABLE = {
    (3, 4, 5): Status.NOT_IN,
    (4, 5, 6): Status.NOT_IN,
}


@dataclass(frozen=True)
class APTriple:
    a: int
    d: int

    def __post_init__(self):
        if self.a < 1 or self.d < 0:
            raise ValueError("need a >= 1 and d >= 0")

    @property
    def b(self) -> int:
        return gcd(self.a, self.d)

    @property
    def a_bar(self) -> int:
        return self.a // self.b

    @property
    def d_bar(self) -> int:
        return self.d // self.b

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.a + self.d, self.a + 2 * self.d)


@dataclass(frozen=True)
class Verdict:
    triple: tuple
    status: Status
    why: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"triple": list(self.triple), "status": self.status.value, "why": self.why}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "Verdict":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(obj["triple"]), Status(obj["status"]), obj.get("why", {}))


def exceptional_form(a: int, d: int) -> tuple[int, int] | None:
    """(i, j) when (a, a+d, a+2d) = (4i, 4i+ij, 4i+2ij) with j odd."""
    if a < 1 or d < 1 or a % 4 or (4 * d) % a:
        return None
    j = 4 * d // a
    if j % 2 == 0:
        return None
    return a // 4, j


def _mechanical_note(triple) -> dict:
    s = exclude_all(triple)
    return {"excluded_at_B2": list(s.excluded),
            "type_iii": type_iii_possible(triple) is not None}


def classify_ap(a: int, d: int, facts: dict | None = None) -> Verdict:
    ap = APTriple(a, d)
    t = ap.triple
    facts = FACT_TABLE if facts is None else facts
    if (2 * d) % a == 0:
        rep = member(t[2], t[0], t[1], NONNEG)
        why = {"rule": "TheoremMain1", "lemma": "Lemma31",
               "divides": {"a": a, "2d": 2 * d, "a_divides_d": d % a == 0}}
        if rep is not None:
            why["representation"] = rep.to_json()
        return Verdict(t, Status.IN, why)
    if t in facts:
        return Verdict(t, Status(facts[t]), {"rule": "FactTable", "entry": list(t)})
    ij = exceptional_form(a, d)
    if ij is not None:
        why = {"rule": "ExceptionalFamily", "i": ij[0], "j": ij[1]}
        # informational only; the verdict stays Unknown for the whole family
        why["mechanical"] = _mechanical_note(t)
        return Verdict(t, Status.UNKNOWN, why)
    return Verdict(t, Status.NOT_IN, {"rule": "TheoremMain2", "b": ap.b, "a_bar": ap.a_bar,
                                      "d_bar": ap.d_bar})


def _as_ap(t) -> tuple[int, int] | None:
    d1, d2, d3 = t
    if d2 - d1 == d3 - d2:
        return d1, d2 - d1
    return None


def classify_triple(d1: int, d2: int, d3: int, facts: dict | None = None) -> Verdict:
    t = tuple(sorted((int(d1), int(d2), int(d3))))
    if t[0] < 1:
        raise ValueError("degrees must be positive")
    if t[1] % t[0] == 0:
        return Verdict(t, Status.IN, {"rule": "Prop22Sufficient", "divides": [t[0], t[1]]})
    rep = member(t[2], t[0], t[1], NONNEG)
    if rep is not None:
        return Verdict(t, Status.IN, {"rule": "Prop22Sufficient", "representation": rep.to_json()})
    ap = _as_ap(t)
    if ap is not None:
        return classify_ap(*ap, facts=facts)
    return Verdict(t, Status.UNKNOWN, {"rule": "OutOfScope",
                                       "note": "not an arithmetic progression and no sufficient condition"})


SWEEP_KINDS = ("consecutive", "consecutive_odd", "consecutive_even")


def corollary_sweep(kind: str, d1_max: int) -> list[Verdict]:
    if kind == "consecutive":
        return [classify_ap(d1, 1) for d1 in range(1, d1_max + 1)]
    if kind == "consecutive_odd":
        return [classify_ap(d1, 2) for d1 in range(1, d1_max + 1, 2)]
    if kind == "consecutive_even":
        return [classify_ap(d1, 2) for d1 in range(2, d1_max + 1, 2)]
    raise ValueError(f"unknown sweep kind {kind!r}; expected one of {SWEEP_KINDS}")
