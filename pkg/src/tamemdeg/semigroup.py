"""Membership in degree sets m*N + M*N and the a | 2d equivalence."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

POSITIVE = "positive"
NONNEG = "nonneg"


@dataclass(frozen=True)
class Representation:
    i: int
    j: int
    target: int
    gens: tuple

    def __post_init__(self):
        m, M = self.gens
        if self.i < 0 or self.j < 0 or (self.i, self.j) == (0, 0):
            raise ValueError(f"invalid coefficients ({self.i}, {self.j})")
        if self.i * m + self.j * M != self.target:
            raise ValueError(f"{self.i}*{m} + {self.j}*{M} != {self.target}")

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "target": self.target, "gens": list(self.gens)}


def member(target: int, m: int, M: int, mode: str = NONNEG) -> Representation | None:
    """Find ``target = i*m + j*M`` by exhaustive search over ``j <= target // M``.

    ``mode="positive"`` demands i, j >= 1; ``mode="nonneg"`` allows zeros but
    not both.  The hit with the smallest j is returned.
    """
    if min(target, m, M) < 1:
        raise ValueError("target and generators must be positive")
    if mode not in (POSITIVE, NONNEG):
        raise ValueError(f"unknown mode {mode!r}")
    i, j = kernels.member(int(target), int(m), int(M), 1 if mode == POSITIVE else 0)
    if i < 0:
        return None
    return Representation(int(i), int(j), target, (m, M))


@dataclass(frozen=True)
class Lemma31Report:
    a: int
    d: int
    lhs: bool
    rhs: bool

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def lemma31_check(a: int, d: int) -> Lemma31Report:
    """Compare ``a | 2d`` against ``a | d or a+2d in aN + (a+d)N``."""
    if a < 1 or d < 0:
        raise ValueError("need a >= 1 and d >= 0")
    lhs = (2 * d) % a == 0
    rhs = d % a == 0 or member(a + 2 * d, a, a + d, NONNEG) is not None
    return Lemma31Report(a, d, lhs, rhs)


def lemma31_sweep(a_max: int, d_max: int) -> list[tuple[int, int]]:
    """All (a, d) with 1 <= a <= a_max, 0 <= d <= d_max where the equivalence fails."""
    lhs, rhs = kernels.lemma31_grid(a_max, d_max)
    bad = np.argwhere(lhs[1:] != rhs[1:])
    return [(int(a) + 1, int(d)) for a, d in bad]
