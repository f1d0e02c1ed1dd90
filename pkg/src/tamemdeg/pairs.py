"""*-reduced pairs and the Shestakov-Umirbaev degree bound for G(f, g).

For a pair (f, g) and G(x, y) with deg_y G = p*q + r, 0 <= r < p, where
p = deg f / gcd(deg f, deg g), the bound reads

    deg G(f, g) >= q * (p*deg g - deg f - deg g + deg [f, g]) + r * deg g.

f is always the polynomial whose degree defines p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .bracket import alg_independent, bracket
from .poly import NEG_INF, Polynomial, PolynomialError, substitute, try_divide


class PreconditionError(ValueError):
    """An input pair or query does not meet an operation's hypotheses."""


def in_generated_subalgebra(h: Polynomial, k: Polynomial) -> bool:
    """Whether homogeneous ``h`` is a polynomial in homogeneous ``k``.

    A homogeneous element of the algebra generated by ``k``, of degree
    ``e * deg k`` is a scalar multiple of ``k**e``, so membership reduces to
    one exact division with a constant quotient.
    """
    if h.is_zero():
        return True
    dh, dk = h.total_degree(), k.total_degree()
    if k.is_zero() or dk == 0:
        return dh == 0
    if dh % dk:
        return False
    q = try_divide(h, k ** (dh // dk))
    return q is not None and q.is_constant()


@dataclass(frozen=True)
class StarReducedReport:
    independent: bool
    tops_dependent: bool
    f_top_not_in_g_subalgebra: bool
    g_top_not_in_f_subalgebra: bool

    @property
    def is_star_reduced(self) -> bool:
        return (self.independent and self.tops_dependent
                and self.f_top_not_in_g_subalgebra and self.g_top_not_in_f_subalgebra)

    @property
    def is_remark_pair(self) -> bool:
        # the bound only needs independence and the two non-membership conditions
        return self.independent and self.f_top_not_in_g_subalgebra and self.g_top_not_in_f_subalgebra

    def to_json(self) -> dict:
        return {
            "independent": self.independent,
            "tops_dependent": self.tops_dependent,
            "f_top_not_in_g_subalgebra": self.f_top_not_in_g_subalgebra,
            "g_top_not_in_f_subalgebra": self.g_top_not_in_f_subalgebra,
            "is_star_reduced": self.is_star_reduced,
            "is_remark_pair": self.is_remark_pair,
        }


def star_reduced(f: Polynomial, g: Polynomial) -> StarReducedReport:
    if f.is_zero() or g.is_zero():
        raise PolynomialError("star_reduced needs nonzero polynomials")
    ft, gt = f.top(), g.top()
    return StarReducedReport(
        independent=alg_independent(f, g),
        tops_dependent=bracket(ft, gt).is_zero,
        f_top_not_in_g_subalgebra=not in_generated_subalgebra(ft, gt),
        g_top_not_in_f_subalgebra=not in_generated_subalgebra(gt, ft),
    )


@dataclass(frozen=True)
class SUQuery:
    deg_f: int
    deg_g: int
    p: int
    q: int
    r: int
    bracket_deg: int

    def __post_init__(self):
        if self.deg_f < 1 or self.deg_g < 1:
            raise PreconditionError("degrees must be positive")
        if self.p != self.deg_f // gcd(self.deg_f, self.deg_g):
            raise PreconditionError(f"p must be deg_f / gcd(deg_f, deg_g) = "
                                    f"{self.deg_f // gcd(self.deg_f, self.deg_g)}")
        if self.q < 0 or not 0 <= self.r < self.p:
            raise PreconditionError(f"need q >= 0 and 0 <= r < p, got q={self.q}, r={self.r}")
        if self.bracket_deg < 2:
            raise PreconditionError("bracket degree of an independent pair is at least 2")

    @classmethod
    def from_deg_y(cls, deg_f: int, deg_g: int, deg_y: int, bracket_deg: int) -> "SUQuery":
        """Split ``deg_y = p*q + r`` for the given degrees."""
        if deg_y < 0:
            raise PreconditionError("deg_y must be non-negative")
        p = deg_f // gcd(deg_f, deg_g)
        q, r = divmod(deg_y, p)
        return cls(deg_f, deg_g, p, q, r, bracket_deg)

    @property
    def q_coefficient(self) -> int:
        return self.p * self.deg_g - self.deg_f - self.deg_g + self.bracket_deg


def su_lower_bound(qy: SUQuery) -> int:
    return qy.q * qy.q_coefficient + qy.r * qy.deg_g


@dataclass(frozen=True)
class SUCheck:
    lhs: int | float
    rhs: int
    query: SUQuery
    orientation: str = "p is computed from deg f"

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds,
                "p": self.query.p, "q": self.query.q, "r": self.query.r,
                "bracket_deg": self.query.bracket_deg, "orientation": self.orientation}


def check_su_inequality(f: Polynomial, g: Polynomial, G: Polynomial) -> SUCheck:
    """Evaluate both sides of the bound for a concrete pair and G(x, y)."""
    if G.n != 2:
        raise PreconditionError("G must be a polynomial in two variables")
    if G.is_zero():
        raise PreconditionError("G must be nonzero")
    report = star_reduced(f, g)
    if not report.is_remark_pair:
        raise PreconditionError(f"(f, g) is not a valid pair for the bound: {report.to_json()}")
    lhs = substitute(G, [f, g]).total_degree()
    qy = SUQuery.from_deg_y(f.total_degree(), g.total_degree(), G.degree_in(2), bracket(f, g).degree)
    return SUCheck(lhs, su_lower_bound(qy), qy)


@dataclass(frozen=True)
class YuReport:
    checked_hypotheses: dict
    deg_bracket: int | float
    min_deg: int
    exceeds: bool
    not_checked: tuple = field(default=("f and g generate their integral closures",))

    @property
    def applicable(self) -> bool:
        """All decidable hypotheses hold (the integral-closure one is never decided)."""
        return all(self.checked_hypotheses.values())

    def to_json(self) -> dict:
        return {"checked_hypotheses": dict(self.checked_hypotheses),
                "not_checked": list(self.not_checked),
                "applicable": self.applicable,
                "deg_bracket": "-inf" if self.deg_bracket == NEG_INF else self.deg_bracket,
                "min_deg": self.min_deg, "exceeds": self.exceeds}


def yu_probe(f: Polynomial, g: Polynomial) -> YuReport:
    """Observe whether deg [f, g] > min(deg f, deg g); never a verdict on the conjecture."""
    if f.is_zero() or g.is_zero():
        raise PolynomialError("yu_probe needs nonzero polynomials")
    df, dg = f.total_degree(), g.total_degree()
    bdeg = bracket(f, g).degree
    hyps = {
        "algebraically_independent": bdeg != NEG_INF,
        "tops_dependent": bracket(f.top(), g.top()).is_zero,
        "degrees_not_dividing": (dg % df != 0) and (df % dg != 0) if df and dg else False,
    }
    return YuReport(hyps, bdeg, min(df, dg), bdeg > min(df, dg))
