"""Degree-arithmetic exclusion of elementary and type-III reductions.

For a position t of a degree triple, a reduction F_t - g(F_u, F_v) needs
deg g(F_u, F_v) = T.  Writing deg_y g = p*q + r, the bracket bound
restricts (q, r); the surviving q = 0 forms reach only degrees
i*m + j*M with j <= r.  If none equals T the position is excluded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from . import kernels

DEFAULT_BRACKET_LB = 2
PAIRS = ((1, 2), (1, 3), (2, 3))


class BoundInapplicable(ValueError):
    """The q-coefficient of the bound is non-positive; (q, r) is unbounded."""


@dataclass(frozen=True)
class PositionQuery:
    T: int
    m: int
    M: int
    B: int = DEFAULT_BRACKET_LB
    strict: bool = False

    def __post_init__(self):
        if min(self.T, self.m, self.M) < 1:
            raise ValueError("degrees must be positive")
        if self.m > self.M:
            raise ValueError(f"need m <= M, got m={self.m}, M={self.M}")
        if self.B < 2:
            raise ValueError("bracket lower bound must be at least 2")

    @property
    def p(self) -> int:
        return self.m // gcd(self.m, self.M)

    @property
    def effective_B(self) -> int:
        return self.B + 1 if self.strict else self.B

    @property
    def q_coefficient(self) -> int:
        return self.p * self.M - self.m - self.M + self.effective_B


def feasible_qr(pq: PositionQuery) -> list[tuple[int, int]]:
    """All (q, r), 0 <= r < p, with q*coef + r*M <= T."""
    coef = pq.q_coefficient
    if coef <= 0:
        raise BoundInapplicable(f"bound coefficient non-positive ({coef}) for {pq}")
    out = []
    for q in range(pq.T // coef + 1):
        room = pq.T - q * coef
        for r in range(min(pq.p - 1, room // pq.M) + 1):
            out.append((q, r))
    return out


@dataclass(frozen=True)
class ExclusionReport:
    query: PositionQuery
    p: int
    feasible: list
    representable: frozenset
    excluded: bool
    trace: str

    def to_json(self) -> dict:
        return {"T": self.query.T, "m": self.query.m, "M": self.query.M,
                "B": self.query.B, "strict": self.query.strict, "p": self.p,
                "q_coefficient": self.query.q_coefficient,
                "feasible": [list(qr) for qr in self.feasible],
                "representable": sorted(self.representable),
                "excluded": self.excluded, "trace": self.trace}


def exclude_position(pq: PositionQuery) -> ExclusionReport:
    feasible = feasible_qr(pq)
    q_max = max(q for q, _ in feasible)
    r_max = max(r for q, r in feasible if q == 0)
    mask = kernels.representable_mask(pq.T, pq.m, pq.M, r_max)
    representable = frozenset(int(v) for v in mask.nonzero()[0])
    head = (f"p={pq.p}, bound q*{pq.q_coefficient} + r*{pq.M} <= {pq.T}"
            f"{' (strict bracket bound)' if pq.strict else ''}")
    if q_max >= 1:
        return ExclusionReport(pq, pq.p, feasible, representable, False,
                               f"{head}: q={q_max} survives, bound insufficient")
    if pq.T in representable:
        return ExclusionReport(pq, pq.p, feasible, representable, False,
                               f"{head}: q=0, r<={r_max}; {pq.T} is reachable")
    return ExclusionReport(pq, pq.p, feasible, representable, True,
                           f"{head}: q=0, r<={r_max}; {pq.T} not in "
                           f"{{i*{pq.m} + j*{pq.M} : j <= {r_max}}}")


def _pair_key(pair) -> tuple[int, int]:
    i, j = sorted(pair)
    if (i, j) not in PAIRS:
        raise ValueError(f"invalid component pair {pair}")
    return i, j


@dataclass(frozen=True)
class ExclusionSummary:
    mdeg: tuple
    reports: tuple  # indexed by target position 1..3

    @property
    def excluded(self) -> tuple:
        return tuple(r.excluded for r in self.reports)

    @property
    def no_elementary_reduction(self) -> bool:
        return all(self.excluded)

    def failing_positions(self) -> list[int]:
        return [t for t, r in enumerate(self.reports, start=1) if not r.excluded]

    def to_json(self) -> dict:
        return {"mdeg": list(self.mdeg),
                "positions": {str(t): r.to_json() for t, r in enumerate(self.reports, start=1)},
                "no_elementary_reduction": self.no_elementary_reduction}


def exclude_all(mdeg, B_map: dict | None = None, strict=()) -> ExclusionSummary:
    """Run :func:`exclude_position` for each target against the other two.

    ``B_map`` maps component pairs like ``(1, 3)`` to bracket-degree lower
    bounds (default 2); pairs in ``strict`` treat their bound as strict.
    """
    d = tuple(int(v) for v in mdeg)
    if len(d) != 3 or list(d) != sorted(d):
        raise ValueError(f"multidegree must be an ascending triple, got {mdeg}")
    bounds = {p: DEFAULT_BRACKET_LB for p in PAIRS}
    for k, v in (B_map or {}).items():
        bounds[_pair_key(k)] = int(v)
    strict_pairs = {_pair_key(k) for k in strict}
    reports = []
    for t in (1, 2, 3):
        u, v = (s for s in (1, 2, 3) if s != t)
        pq = PositionQuery(d[t - 1], d[u - 1], d[v - 1], bounds[(u, v)], (u, v) in strict_pairs)
        reports.append(exclude_position(pq))
    return ExclusionSummary(d, tuple(reports))


@dataclass(frozen=True)
class TypeIIIWitness:
    n: int
    system: int
    mdeg: tuple = field(default=())

    def to_json(self) -> dict:
        return {"n": self.n, "system": self.system, "mdeg": list(self.mdeg)}


def type_iii_possible(mdeg) -> TypeIIIWitness | None:
    """Search n >= 1 for the two type-III degree systems.

    System 1: n < d1 <= 3n/2, d2 = 2n, d3 = 3n.
    System 2: d1 = 3n/2, d2 = 2n, 5n/2 < d3 <= 3n.
    For each n, system 2 is tried first.
    """
    d1, d2, d3 = (int(v) for v in mdeg)
    if not 1 <= d1 <= d2 <= d3:
        raise ValueError(f"multidegree must be an ascending positive triple, got {mdeg}")
    n, system = kernels.type3(d1, d2, d3)
    if n < 0:
        return None
    return TypeIIIWitness(int(n), int(system), (d1, d2, d3))
