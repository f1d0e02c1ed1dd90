"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent tuples to nonzero
coefficients.  Integral coefficients are stored as ``int`` and the rest as
``fractions.Fraction``; both compare and hash equal, so the map stays
canonical while integer-only arithmetic keeps Python's fast ``int`` path.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

NEG_INF = float("-inf")
MAX_EXPONENT = 1 << 16
_PACK_LIMIT = 1 << 21

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple[int, ...]

_ALIASES = {"x": 1, "y": 2, "z": 3}


class PolynomialError(ValueError):
    pass


class ParseError(PolynomialError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


def _norm(c) -> Coeff:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def variable_name(i: int, n: int) -> str:
    """Printable name of the 1-based variable ``i`` in ambient dimension ``n``."""
    if n <= 3:
        return "xyz"[i - 1]
    return f"x{i}"


class Polynomial:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, object] | None = None):
        if n < 0:
            raise PolynomialError("ambient dimension must be non-negative")
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != n:
                    raise PolynomialError(f"monomial {mono} does not have length {n}")
                if any(e < 0 for e in mono):
                    raise PolynomialError(f"negative exponent in {mono}")
                c = _norm(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        c = _norm(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def var(cls, i: int, n: int) -> "Polynomial":
        """The coordinate x_i (1-based)."""
        if not 1 <= i <= n:
            raise PolynomialError(f"variable index {i} out of range 1..{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def parse(cls, text: str, n: int = 3) -> "Polynomial":
        return parse(text, n)

    # basic queries --------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Sequence[int]) -> Coeff:
        return self._terms.get(tuple(mono), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def total_degree(self) -> int | float:
        if not self._terms:
            return NEG_INF
        return max(sum(m) for m in self._terms)

    degree = total_degree

    def degree_in(self, i: int) -> int | float:
        """Degree in the 1-based variable ``i``; ``-inf`` for zero."""
        if not self._terms:
            return NEG_INF
        return max(m[i - 1] for m in self._terms)

    def involves(self, i: int) -> bool:
        return any(m[i - 1] for m in self._terms)

    def top(self) -> "Polynomial":
        """Highest homogeneous component."""
        if not self._terms:
            raise PolynomialError("the zero polynomial has no highest homogeneous component")
        d = self.total_degree()
        return Polynomial._raw(self.n, {m: c for m, c in self._terms.items() if sum(m) == d})

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.n, {m: c for m, c in self._terms.items() if sum(m) == d})

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def sorted_terms(self) -> list:
        """Terms in graded-lex descending order."""
        return sorted(self._terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)

    def leading_monomial(self) -> Monomial:
        return max(self._terms, key=lambda m: (sum(m), m))

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.n != self.n:
                raise PolynomialError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Rational)):
            return Polynomial.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _norm(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            c = _norm(other)
            if not c:
                return Polynomial.zero(self.n)
            return Polynomial._raw(self.n, {m: _norm(v * c) for m, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if not b:
            return Polynomial.zero(self.n)
        out: dict = {}
        get = out.get
        n = self.n
        if n == 3 and max(map(max, a)) + max(map(max, b)) < _PACK_LIMIT:
            # pack exponents into one int key
            bp = [((q0 << 42) | (q1 << 21) | q2, d) for (q0, q1, q2), d in b.items()]
            for (p0, p1, p2), c in a.items():
                kp = (p0 << 42) | (p1 << 21) | p2
                for kq, d in bp:
                    k = kp + kq
                    out[k] = get(k, 0) + c * d
            mask = (1 << 21) - 1
            ints = all(type(c) is int for c in out.values())
            return Polynomial._raw(n, {(k >> 42, (k >> 21) & mask, k & mask): (c if ints else _norm(c))
                                       for k, c in out.items() if c})
        elif n == 3:
            for (p0, p1, p2), c in a.items():
                for (q0, q1, q2), d in b.items():
                    k = (p0 + q0, p1 + q1, p2 + q2)
                    out[k] = get(k, 0) + c * d
        elif n == 2:
            for (p0, p1), c in a.items():
                for (q0, q1), d in b.items():
                    k = (p0 + q0, p1 + q1)
                    out[k] = get(k, 0) + c * d
        else:
            for ma, c in a.items():
                for mb, d in b.items():
                    k = tuple(x + y for x, y in zip(ma, mb))
                    out[k] = get(k, 0) + c * d
        return Polynomial._raw(n, {m: _norm(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Polynomial):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolynomialError("only non-negative integer powers are supported")
        result = Polynomial.constant(1, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == Polynomial.constant(other, self.n)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # calculus and composition --------------------------------------------

    def partial(self, i: int) -> "Polynomial":
        if not 1 <= i <= self.n:
            raise PolynomialError(f"variable index {i} out of range 1..{self.n}")
        k = i - 1
        out = {}
        for m, c in self._terms.items():
            e = m[k]
            if e:
                out[m[:k] + (e - 1,) + m[k + 1:]] = c * e
        return Polynomial._raw(self.n, out)

    def __call__(self, *args: "Polynomial") -> "Polynomial":
        return substitute(self, args)

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {to_string(self)!r})"


def substitute(G: Polynomial, args: Sequence[Polynomial]) -> Polynomial:
    """Compose ``G(args[0], ..., args[k-1])`` exactly."""
    args = list(args)
    if len(args) != G.n:
        raise PolynomialError(f"arity mismatch: G has {G.n} variables, got {len(args)} arguments")
    if not args:
        return G
    n = args[0].n
    if any(a.n != n for a in args):
        raise PolynomialError("substitution arguments live in different dimensions")
    powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, n), 1: a} for a in args]

    def power(v: int, e: int) -> Polynomial:
        cache = powers[v]
        if e not in cache:
            h = e // 2
            cache[e] = power(v, h) * power(v, e - h)
        return cache[e]

    out = Polynomial.zero(n)
    for mono, c in G.sorted_terms():
        term = Polynomial.constant(c, n)
        for v, e in enumerate(mono):
            if e:
                term = term * power(v, e)
        out = out + term
    return out


def try_divide(f: Polynomial, h: Polynomial) -> Polynomial | None:
    """Exact quotient ``f / h`` or ``None`` when ``h`` does not divide ``f``.

    Leading-monomial division under graded-lex order.  The first leading
    term of the running remainder that is not a multiple of ``lm(h)``
    proves non-divisibility, since ``lm(q*h) = lm(q)*lm(h)``.
    """
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.n != h.n:
        raise PolynomialError(f"dimension mismatch: {f.n} vs {h.n}")
    lm_h = h.leading_monomial()
    lc_h = Fraction(h.coeff(lm_h))
    rem = f
    q_terms: dict = {}
    while not rem.is_zero():
        lm_r = rem.leading_monomial()
        shift = tuple(a - b for a, b in zip(lm_r, lm_h))
        if any(s < 0 for s in shift):
            return None
        c = _norm(Fraction(rem.coeff(lm_r)) / lc_h)
        q_terms[shift] = c
        rem = rem - Polynomial._raw(f.n, {shift: c}) * h
    q = Polynomial(f.n, q_terms)
    if q * h != f:  # pragma: no cover - guarded by construction
        raise AssertionError("division verification failed")
    return q


# text format ----------------------------------------------------------------


def _fmt_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def to_string(p: Polynomial) -> str:
    """Canonical text: graded-lex descending terms joined by ``" + "``.

    Negative coefficients stay attached to their term (``x^2 + -y^2``), so
    every term of the output is itself a valid signed term of the grammar.
    """
    if p.is_zero():
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        factors = []
        for i, e in enumerate(mono, start=1):
            if e == 1:
                factors.append(variable_name(i, p.n))
            elif e:
                factors.append(f"{variable_name(i, p.n)}^{e}")
        body = "*".join(factors)
        if not body:
            parts.append(_fmt_coeff(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{_fmt_coeff(c)}*{body}")
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[a-z]\d*)|(?P<op>[-+*/^−]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        value = m.group(kind)
        if value == "−":
            value = "-"
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _var_index(name: str, n: int, pos: int, text: str) -> int:
    if name in _ALIASES:
        i = _ALIASES[name]
    elif name[0] == "x" and name[1:].isdigit():
        i = int(name[1:])
    else:
        raise ParseError(f"unknown variable {name!r}", pos, text)
    if not 1 <= i <= n:
        raise ParseError(f"unknown variable {name!r} for dimension {n}", pos, text)
    return i


def parse(text: str, n: int = 3) -> Polynomial:
    """Parse the polynomial grammar used throughout the package.

    term := [sign] [coeff ["*"]] factor*, coeff := int | int "/" int,
    factor := var ["^" natural], var := x | y | z | x<index>.
    """
    tokens = _tokenize(text)
    k = 0

    def peek():
        return tokens[k]

    def take():
        nonlocal k
        tok = tokens[k]
        k += 1
        return tok

    if peek()[0] == "end":
        raise ParseError("empty polynomial", 0, text)

    terms: dict = {}
    first = True
    while peek()[0] != "end":
        sign = 1
        if not first:
            kind, val, pos = take()
            if val not in "+-" or kind != "op":
                raise ParseError(f"expected '+' or '-', got {val!r}", pos, text)
            sign = -1 if val == "-" else 1
        first = False
        # optional sign of the term itself
        while peek()[0] == "op" and peek()[1] in "+-":
            if take()[1] == "-":
                sign = -sign
        coeff: Fraction = Fraction(1)
        have_coeff = False
        if peek()[0] == "num":
            _, num, _ = take()
            coeff = Fraction(int(num))
            have_coeff = True
            if peek()[1] == "/" and peek()[0] == "op":
                _, _, pos = take()
                kind, den, dpos = take()
                if kind != "num":
                    raise ParseError("expected denominator", dpos, text)
                if int(den) == 0:
                    raise ParseError("zero denominator", dpos, text)
                coeff /= int(den)
        exps = [0] * n
        have_factor = False
        while True:
            kind, val, pos = peek()
            if kind == "op" and val == "*":
                if not (have_coeff or have_factor):
                    raise ParseError("'*' without a preceding factor", pos, text)
                take()
                kind, val, pos = peek()
                if kind != "var":
                    raise ParseError("expected variable after '*'", pos, text)
            if kind != "var":
                break
            take()
            idx = _var_index(val, n, pos, text)
            e = 1
            if peek()[0] == "op" and peek()[1] == "^":
                take()
                ekind, eval_, epos = take()
                if ekind != "num":
                    raise ParseError("expected exponent", epos, text)
                e = int(eval_)
                if e > MAX_EXPONENT:
                    raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", epos, text)
            exps[idx - 1] += e
            if exps[idx - 1] > MAX_EXPONENT:
                raise ParseError("exponent overflow", pos, text)
            have_factor = True
        if not (have_coeff or have_factor):
            kind, val, pos = peek()
            raise ParseError(f"expected a term, got {val or 'end of input'!r}", pos, text)
        mono = tuple(exps)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return Polynomial(n, terms)


def variables(n: int) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(i, n) for i in range(1, n + 1))


def poly_sum(items: Iterable[Polynomial], n: int) -> Polynomial:
    out = Polynomial.zero(n)
    for p in items:
        out = out + p
    return out
