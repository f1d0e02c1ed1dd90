import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from generators import random_poly
from tamemdeg.bracket import alg_independent, bracket, partial
from tamemdeg.poly import NEG_INF, Polynomial, PolynomialError, parse, substitute, variables

x, y, z = variables(3)


def test_partials():
    assert partial(parse("x^2*y"), 1) == parse("2*x*y")
    assert partial(parse("7"), 1).is_zero()
    assert partial(parse("x^3 + x*z^2"), 3) == parse("2*x*z")
    with pytest.raises(PolynomialError):
        partial(x, 4)


def test_coordinate_bracket_has_degree_two():
    b = bracket(x, y)
    assert b.nonzero_minors() == {(1, 2): Polynomial.constant(1, 3)}
    assert b.degree == 2


def test_dependent_pair_has_minus_infinity():
    p = parse("x*y + z^2 - 1")
    b = bracket(p, p * p)
    assert b.is_zero and b.degree == NEG_INF


def test_two_variable_example():
    # d(x+y)/dx * d(xy)/dy - d(x+y)/dy * d(xy)/dx = x - y
    X, Y = variables(2)
    b = bracket(X + Y, X * Y)
    assert b.minors == {(1, 2): X - Y}
    assert b.degree == 3


def test_needs_two_variables():
    with pytest.raises(PolynomialError):
        bracket(Polynomial.var(1, 1), Polynomial.var(1, 1))


def test_alg_independent_examples():
    p = parse("x - y*z")
    assert alg_independent(x, y)
    assert not alg_independent(p, p**3 + p)
    f, g = x + z**2, y + z**3
    assert alg_independent(f, g)
    assert bracket(f, g).minors[(1, 2)] == 1


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3).filter(bool),
                        max_size=4).map(lambda t: Polynomial(3, t))


@given(small, small)
def test_antisymmetry(f, g):
    a, b = bracket(f, g), bracket(g, f)
    assert all(a.minors[k] == -b.minors[k] for k in a.minors)
    assert a.degree == b.degree


@given(small, st.integers(-4, 4))
def test_degenerate_brackets(f, c):
    assert bracket(f, f).is_zero
    assert bracket(f, Polynomial.constant(c, 3)).is_zero


def _random_point(rng):
    return [Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3)]


def _eval(p, pt):
    return sum(c * pt[0] ** m[0] * pt[1] ** m[1] * pt[2] ** m[2] for m, c in p.items())


def test_random_point_jacobian_rank_agrees():
    rng = random.Random(3)
    X, Y = variables(2)
    for k in range(60):
        f = random_poly(rng, 3, 3, 3)
        if k % 2:
            G = Polynomial(2, {(rng.randint(0, 3), 0): 1, (rng.randint(0, 2), 0): rng.randint(-2, 2)})
            g = substitute(G, [f, y])
            g = substitute(parse("x^2 - 3*x", 1), [f]) if k % 4 == 1 else g
            if k % 4 == 3:
                g = f * f + 2 * f
        else:
            g = random_poly(rng, 3, 3, 3) + y * z
        indep = alg_independent(f, g)
        # rank of the 2x3 Jacobian at random points; resample when all minors vanish
        rank2 = False
        for _ in range(5):
            pt = _random_point(rng)
            vals = [_eval(m, pt) for m in bracket(f, g).minors.values()]
            if any(vals):
                rank2 = True
                break
        assert rank2 == indep
