import itertools

import pytest

from tamemdeg.automorphisms import build_witness
from tamemdeg.classifier import (FACT_TABLE, APTriple, Status, Verdict, classify_ap, classify_triple,
                                 corollary_sweep, exceptional_form)
from tamemdeg.degree_analysis import exclude_all, type_iii_possible


def test_ap_triple_fields():
    t = APTriple(6, 4)
    assert t.triple == (6, 10, 14) and t.b == 2 and (t.a_bar, t.d_bar) == (3, 2)
    for a in range(1, 40):
        for d in range(1, 40):
            t = APTriple(a, d)
            assert t.b == __import__("math").gcd(a, a + d) == __import__("math").gcd(a + d, a + 2 * d)
            if (2 * d) % a:
                assert t.a_bar >= 3


def test_exceptional_form():
    assert exceptional_form(8, 2) == (2, 1)
    assert exceptional_form(12, 3) == (3, 1)
    assert exceptional_form(6, 3) is None
    assert exceptional_form(4, 2) is None  # j = 2 even
    for a in range(1, 80):
        for d in range(1, 80):
            ij = exceptional_form(a, d)
            if ij:
                i, j = ij
                assert (a, a + d, a + 2 * d) == (4 * i, 4 * i + i * j, 4 * i + 2 * i * j)
                assert (2 * d) % a != 0


@pytest.mark.parametrize("a,d,status", [
    (1, 1, Status.IN), (4, 1, Status.NOT_IN), (8, 2, Status.UNKNOWN), (5, 2, Status.NOT_IN),
    (3, 1, Status.NOT_IN), (2, 1, Status.IN), (7, 0, Status.IN),
])
def test_classify_ap_examples(a, d, status):
    assert classify_ap(a, d).status is status


def test_justifications():
    assert classify_ap(4, 1).why["rule"] == "FactTable"
    assert classify_ap(5, 2).why["rule"] == "TheoremMain2"
    v = classify_ap(8, 2)
    assert v.why["rule"] == "ExceptionalFamily" and (v.why["i"], v.why["j"]) == (2, 1)
    v = classify_ap(4, 2)
    rep = v.why["representation"]
    assert rep["i"] * 4 + rep["j"] * 6 == 8


def test_in_carries_witness():
    for a in range(1, 30):
        for d in range(0, 30):
            v = classify_ap(a, d)
            if v.status is Status.IN:
                assert "representation" in v.why or v.why["divides"]["a_divides_d"]


def test_fact_table_is_load_bearing():
    assert classify_ap(4, 1, facts={}).status is Status.UNKNOWN
    assert classify_ap(3, 1, facts={}).status is Status.NOT_IN


def test_classify_triple_examples():
    assert classify_triple(3, 6, 7).status is Status.IN
    assert classify_triple(3, 4, 5).status is Status.NOT_IN
    v = classify_triple(5, 6, 13)
    assert v.status is Status.UNKNOWN and v.why["rule"] == "OutOfScope"


def test_permutation_invariance():
    for t in [(3, 4, 5), (8, 10, 12), (2, 3, 7), (5, 7, 9), (5, 6, 13), (4, 4, 9)]:
        base = classify_triple(*t)
        for perm in itertools.permutations(t):
            assert classify_triple(*perm) == base


def test_notin_consistent_with_mechanized_exclusion():
    for a in range(1, 70):
        for d in range(1, 70):
            v = classify_ap(a, d)
            if v.status is Status.NOT_IN and v.why["rule"] == "TheoremMain2":
                t = (a, a + d, a + 2 * d)
                assert exclude_all(t).no_elementary_reduction
                assert type_iii_possible(t) is None


def test_in_consistent_with_builder():
    for a in range(1, 16):
        for d in range(0, 16):
            v = classify_ap(a, d)
            if v.status is Status.IN:
                assert build_witness(*v.triple).multidegree() == v.triple


def test_corollary_sweeps():
    assert [v.status for v in corollary_sweep("consecutive", 3)] == [Status.IN, Status.IN, Status.NOT_IN]
    assert corollary_sweep("consecutive_odd", 3)[1].status is Status.NOT_IN
    assert corollary_sweep("consecutive_even", 8)[3].triple == (8, 10, 12)
    assert corollary_sweep("consecutive_even", 8)[3].status is Status.UNKNOWN
    with pytest.raises(ValueError):
        corollary_sweep("primes", 5)


def test_verdict_json_round_trip():
    for a, d in [(1, 1), (8, 2), (5, 2), (4, 1)]:
        v = classify_ap(a, d)
        assert Verdict.from_json(v.dumps()) == v


def test_fact_table_contents():
    assert FACT_TABLE == {(3, 4, 5): Status.NOT_IN, (4, 5, 6): Status.NOT_IN}
