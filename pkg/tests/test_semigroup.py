import pytest

from tamemdeg.semigroup import NONNEG, POSITIVE, Representation, lemma31_check, lemma31_sweep, member


def brute_force(target, m, M, mode):
    lo = 1 if mode == POSITIVE else 0
    return {(i, j) for i in range(lo, target + 1) for j in range(lo, target + 1)
            if i * m + j * M == target and (i, j) != (0, 0)}


def test_examples():
    r = member(5, 2, 3, POSITIVE)
    assert (r.i, r.j) == (1, 1)
    assert member(7, 3, 5, POSITIVE) is None
    r = member(8, 4, 6, NONNEG)
    assert (r.i, r.j) == (2, 0)
    assert member(8, 4, 6, POSITIVE) is None


@pytest.mark.parametrize("mode", [POSITIVE, NONNEG])
def test_against_brute_force(mode):
    for target in range(1, 31):
        for m in range(1, 11):
            for M in range(m, 13):
                got = member(target, m, M, mode)
                expected = brute_force(target, m, M, mode)
                if got is None:
                    assert not expected
                else:
                    assert (got.i, got.j) in expected
                    assert got.i * m + got.j * M == target


def test_positive_is_subset_of_nonneg():
    for target in range(1, 60):
        for m in range(1, 9):
            for M in range(1, 9):
                if member(target, m, M, POSITIVE) is not None:
                    assert member(target, m, M, NONNEG) is not None


def test_representation_invariants():
    with pytest.raises(ValueError):
        Representation(0, 0, 0, (2, 3))
    with pytest.raises(ValueError):
        Representation(1, 1, 6, (2, 3))


def test_bad_mode():
    with pytest.raises(ValueError):
        member(5, 2, 3, "signed")


def test_lemma31_examples():
    r = lemma31_check(3, 3)
    assert r.lhs and r.rhs and r.equal
    r = lemma31_check(3, 1)
    assert not r.lhs and not r.rhs and r.equal
    r = lemma31_check(4, 2)
    assert r.lhs and r.rhs and r.equal
    assert lemma31_check(7, 0).lhs


def test_lemma31_sweep_matches_pointwise():
    assert lemma31_sweep(40, 40) == []
    for a in range(1, 25):
        for d in range(0, 25):
            assert lemma31_check(a, d).equal
