"""Partial derivatives, Jacobian minors and the Poisson bracket degree."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poly import NEG_INF, Polynomial, PolynomialError


def partial(p: Polynomial, i: int) -> Polynomial:
    """Formal derivative with respect to the 1-based variable ``i``."""
    return p.partial(i)


@dataclass(frozen=True)
class BracketValue:
    """Minors of [f, g] keyed by ``(i, j)``, ``i < j``, plus deg [f, g].

    The formal symbols [x_i, x_j] are not stored; each carries degree 2, so
    the bracket degree is two more than the largest nonzero minor degree.
    """

    minors: dict
    degree: int | float

    @property
    def is_zero(self) -> bool:
        return self.degree == NEG_INF

    def nonzero_minors(self) -> dict:
        return {k: v for k, v in self.minors.items() if not v.is_zero()}

    def to_json(self) -> dict:
        return {
            "minors": {f"{i},{j}": str(m) for (i, j), m in sorted(self.minors.items())},
            "degree": "-inf" if self.is_zero else self.degree,
        }


def minor(f: Polynomial, g: Polynomial, i: int, j: int) -> Polynomial:
    return f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i)


def bracket(f: Polynomial, g: Polynomial) -> BracketValue:
    if f.n != g.n:
        raise PolynomialError(f"dimension mismatch: {f.n} vs {g.n}")
    if f.n < 2:
        raise PolynomialError("the Poisson bracket needs at least two variables")
    df = [f.partial(i) for i in range(1, f.n + 1)]
    dg = [g.partial(i) for i in range(1, g.n + 1)]
    minors = {}
    for i, j in combinations(range(1, f.n + 1), 2):
        minors[(i, j)] = df[i - 1] * dg[j - 1] - df[j - 1] * dg[i - 1]
    degrees = [m.total_degree() for m in minors.values() if not m.is_zero()]
    degree = 2 + max(degrees) if degrees else NEG_INF
    return BracketValue(minors, degree)


def bracket_degree(f: Polynomial, g: Polynomial) -> int | float:
    return bracket(f, g).degree


def alg_independent(f: Polynomial, g: Polynomial) -> bool:
    """True iff f and g are algebraically independent (some minor is nonzero)."""
    if f.n != g.n:
        raise PolynomialError(f"dimension mismatch: {f.n} vs {g.n}")
    if f.n < 2:
        return False
    return not bracket(f, g).is_zero
