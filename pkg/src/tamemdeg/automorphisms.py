"""Polynomial maps, elementary automorphisms, tame witnesses and reduction search."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

from . import linsolve
from .bracket import bracket
from .classifier import exceptional_form
from .degree_analysis import exclude_all
from .poly import NEG_INF, Polynomial, PolynomialError, parse, substitute, variables
from .semigroup import NONNEG, Representation, member


@dataclass(frozen=True)
class PolyMap:
    components: tuple
    inverse: tuple | None = None

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise PolynomialError("a polynomial map needs at least one component")
        n = comps[0].n
        if any(c.n != n for c in comps) or len(comps) != n:
            raise PolynomialError("a map of affine n-space needs n components in n variables")
        if self.inverse is not None:
            inv = tuple(self.inverse)
            if len(inv) != n or any(c.n != n for c in inv):
                raise PolynomialError("inverse has the wrong shape")
            object.__setattr__(self, "inverse", inv)

    @property
    def n(self) -> int:
        return len(self.components)

    @classmethod
    def identity(cls, n: int = 3) -> "PolyMap":
        xs = variables(n)
        return cls(xs, xs)

    def __getitem__(self, k: int) -> Polynomial:
        return self.components[k]

    def multidegree(self) -> tuple:
        return tuple(c.total_degree() for c in self.components)

    def inverse_map(self) -> "PolyMap":
        if self.inverse is None:
            raise PolynomialError("no inverse is tracked for this map")
        return PolyMap(self.inverse, self.components)

    def __call__(self, *args: Polynomial) -> tuple:
        return tuple(substitute(c, args) for c in self.components)

    def to_json(self) -> dict:
        return {"n": self.n, "components": [str(c) for c in self.components],
                "inverse": None if self.inverse is None else [str(c) for c in self.inverse]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, obj) -> "PolyMap":
        if isinstance(obj, str):
            obj = json.loads(obj)
        n = int(obj["n"])
        comps = tuple(parse(s, n) for s in obj["components"])
        inv = obj.get("inverse")
        return cls(comps, None if inv is None else tuple(parse(s, n) for s in inv))


def elementary(i: int, alpha, f: Polynomial | None = None, n: int = 3) -> PolyMap:
    """x_i -> alpha*x_i + f with every other coordinate fixed.

    ``f`` must not involve x_i; the inverse x_i -> (x_i - f)/alpha is tracked.
    """
    if not 1 <= i <= n:
        raise PolynomialError(f"index {i} out of range 1..{n}")
    alpha = Fraction(alpha)
    if alpha == 0:
        raise PolynomialError("alpha must be nonzero")
    f = Polynomial.zero(n) if f is None else f
    if f.n != n:
        raise PolynomialError("shift polynomial lives in the wrong dimension")
    if f.involves(i):
        raise PolynomialError(f"shift polynomial involves x{i}")
    xs = variables(n)
    comps = list(xs)
    comps[i - 1] = xs[i - 1] * alpha + f
    inv = list(xs)
    inv[i - 1] = (xs[i - 1] - f) * (1 / alpha)
    return PolyMap(tuple(comps), tuple(inv))


def compose(F: PolyMap, G: PolyMap) -> PolyMap:
    """F o G, i.e. x -> F(G(x))."""
    if F.n != G.n:
        raise PolynomialError(f"dimension mismatch: {F.n} vs {G.n}")
    comps = tuple(substitute(c, G.components) for c in F.components)
    inv = None
    if F.inverse is not None and G.inverse is not None:
        inv = tuple(substitute(c, F.inverse) for c in G.inverse)
    return PolyMap(comps, inv)


def multidegree(F: PolyMap) -> tuple:
    return F.multidegree()


def verify_identity(F: PolyMap) -> bool:
    return all(c == x for c, x in zip(F.components, variables(F.n)))


def verify_inverse(F: PolyMap) -> bool:
    if F.inverse is None:
        return False
    return (verify_identity(compose(F, F.inverse_map()))
            and verify_identity(compose(F.inverse_map(), F)))


def build_witness(d1: int, d2: int, d3: int) -> PolyMap | None:
    """Tame map of multidegree (d1, d2, d3) when d3 = i*d1 + j*d2, else None.

    F = (x + z^d1, y + z^d2, z + (x + z^d1)^i (y + z^d2)^j), built as a
    composition of three elementary maps with the inverse tracked.
    """
    if not 1 <= d1 <= d2 <= d3:
        raise ValueError(f"need 1 <= d1 <= d2 <= d3, got ({d1}, {d2}, {d3})")
    if member(d3, d1, d2, NONNEG) is None:
        return None
    rep = _fewest_factors(d3, d1, d2)
    x, y, z = variables(3)
    e1 = elementary(1, 1, z ** d1)
    e2 = elementary(2, 1, z ** d2)
    e3 = elementary(3, 1, x ** rep.i * y ** rep.j)
    F = compose(e3, compose(e1, e2))
    if F.multidegree() != (d1, d2, d3):  # pragma: no cover - degrees cannot cancel
        raise AssertionError(f"witness has multidegree {F.multidegree()}")
    return F


def _fewest_factors(target: int, m: int, M: int) -> Representation:
    # largest j keeps the power of (x + z^d1) small; same degree either way
    for j in range(target // M, -1, -1):
        rest = target - j * M
        if rest % m == 0 and (rest or j):
            return Representation(rest // m, j, target, (m, M))
    raise ValueError(f"{target} is not in {m}N + {M}N")


def _other_positions(t: int) -> tuple[int, int]:
    u, v = (s for s in (1, 2, 3) if s != t)
    return u, v


def default_support_degree(F: PolyMap, t: int) -> int:
    u, v = _other_positions(t)
    T = F[t - 1].total_degree()
    m = min(F[u - 1].total_degree(), F[v - 1].total_degree())
    return ceil(T / max(m, 1)) + 2


def reduction_search(F: PolyMap, t: int, max_support_degree: int | None = None) -> Polynomial | None:
    """Search g(u, v) of total degree <= budget with deg(F_t - g(F_u, F_v)) < deg F_t.

    The coefficients of g solve the exact linear system that kills every
    monomial of degree >= deg F_t.  ``None`` means nothing within budget,
    which does not prove that no reduction exists.
    """
    if F.n != 3:
        raise PolynomialError("reduction search works on maps of 3-space")
    if t not in (1, 2, 3):
        raise ValueError(f"position {t} out of range 1..3")
    K = default_support_degree(F, t) if max_support_degree is None else int(max_support_degree)
    u, v = _other_positions(t)
    Ft, Fu, Fv = F[t - 1], F[u - 1], F[v - 1]
    T = Ft.total_degree()
    if T == NEG_INF:
        return None
    support = [(i, j) for s in range(K + 1) for i in range(s, -1, -1) for j in (s - i,)]
    upow = [Polynomial.constant(1, 3)]
    vpow = [Polynomial.constant(1, 3)]
    for _ in range(K):
        upow.append(upow[-1] * Fu)
        vpow.append(vpow[-1] * Fv)
    products = [upow[i] * vpow[j] for i, j in support]
    monos = {m for m, _ in Ft.items() if sum(m) >= T}
    for P in products:
        monos.update(m for m, _ in P.items() if sum(m) >= T)
    monos = sorted(monos, reverse=True)
    A = [[P.coeff(mu) for P in products] for mu in monos]
    b = [Ft.coeff(mu) for mu in monos]
    sol = linsolve.solve(A, b)
    if sol is None:
        return None
    g = Polynomial(2, {(i, j): c for (i, j), c in zip(support, sol)})
    if (Ft - substitute(g, [Fu, Fv])).total_degree() >= T:  # pragma: no cover
        raise AssertionError("reduction search produced a non-reducing g")
    return g


@dataclass(frozen=True)
class Hypothesis4i:
    deg_bracket_13: int | float
    deg_F1: int | float
    exclusion: object | None = None

    @property
    def holds(self) -> bool:
        return self.deg_bracket_13 > self.deg_F1

    def to_json(self) -> dict:
        return {"deg_bracket_13": "-inf" if self.deg_bracket_13 == NEG_INF else self.deg_bracket_13,
                "deg_F1": self.deg_F1, "holds": self.holds,
                "exclusion": None if self.exclusion is None else self.exclusion.to_json()}


def thm_4i_hypothesis(F: PolyMap) -> Hypothesis4i:
    """Check deg [F1, F3] > deg F1.

    When it holds and mdeg F is an exceptional progression, the strict
    bound on pair (1, 3) is fed to :func:`exclude_all` and attached.
    """
    if F.n != 3:
        raise PolynomialError("needs a map of 3-space")
    b = bracket(F[0], F[2]).degree
    d1 = F[0].total_degree()
    report = Hypothesis4i(b, d1)
    md = F.multidegree()
    if report.holds and list(md) == sorted(md) and md[0] >= 1:
        a, d = md[0], md[1] - md[0]
        if md[2] - md[1] == d and exceptional_form(a, d) is not None:
            report = Hypothesis4i(b, d1, exclude_all(md, {(1, 3): d1}, strict=[(1, 3)]))
    return report
