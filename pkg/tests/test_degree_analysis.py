from math import gcd

import pytest

from tamemdeg.classifier import exceptional_form
from tamemdeg.degree_analysis import (BoundInapplicable, PositionQuery, exclude_all, exclude_position,
                                      feasible_qr, type_iii_possible)


def brute_feasible(T, m, M, B):
    p = m // gcd(m, M)
    coef = p * M - m - M + B
    return sorted((q, r) for q in range(T + 2) for r in range(p) if q * coef + r * M <= T)


class TestFeasible:
    def test_case_one(self):
        assert feasible_qr(PositionQuery(9, 5, 7, 2)) == [(0, 0), (0, 1)]

    def test_case_two(self):
        pq = PositionQuery(5, 7, 9, 2)
        assert pq.p == 7 and pq.q_coefficient == 2 * 5 + 5 * 2 + 2 + (7 - 4) * 9
        assert feasible_qr(pq) == [(0, 0)]

    def test_smallest(self):
        assert feasible_qr(PositionQuery(1, 1, 1, 2)) == [(0, 0), (1, 0)]

    def test_strict_adds_one(self):
        assert PositionQuery(10, 8, 12, 8, strict=True).q_coefficient == 2 * 12 - 8 - 12 + 9

    def test_against_brute_force(self):
        for T in range(1, 25):
            for m in range(1, 10):
                for M in range(m, 12):
                    for B in (2, 5):
                        pq = PositionQuery(T, m, M, B)
                        if pq.q_coefficient <= 0:
                            continue
                        assert feasible_qr(pq) == brute_feasible(T, m, M, B)

    def test_inapplicable(self):
        with pytest.raises(BoundInapplicable):
            feasible_qr(PositionQuery(5, 3, 3, 2))  # p = 1, coefficient 2 - 3 < 0

    def test_query_invariants(self):
        with pytest.raises(ValueError):
            PositionQuery(5, 7, 3)
        with pytest.raises(ValueError):
            PositionQuery(5, 3, 7, B=1)


class TestExcludePosition:
    def test_case_one_contradiction(self):
        r = exclude_position(PositionQuery(9, 5, 7))
        assert r.representable == {5, 7}
        assert r.excluded

    def test_case_two_contradiction(self):
        r = exclude_position(PositionQuery(5, 7, 9))
        assert r.representable == frozenset()
        assert r.excluded

    def test_exceptional_middle(self):
        r = exclude_position(PositionQuery(10, 8, 12))
        assert r.p == 2 and r.query.q_coefficient == 6
        assert (1, 0) in r.feasible and not r.excluded
        assert "bound insufficient" in r.trace

    def test_reachable_target_not_excluded(self):
        r = exclude_position(PositionQuery(7, 2, 3))
        assert 7 in r.representable and not r.excluded

    def test_representable_vs_brute_force(self):
        for T in range(1, 31):
            for m in range(1, 31):
                for M in range(m, 31):
                    pq = PositionQuery(T, m, M)
                    if pq.q_coefficient <= 0:
                        continue
                    r = exclude_position(pq)
                    rmax = max(r for q, r in r.feasible if q == 0)
                    brute = {i * m + j * M for i in range(T + 1) for j in range(rmax + 1)
                             if 0 < i * m + j * M <= T}
                    assert r.representable == brute
                    assert r.excluded == (all(q == 0 for q, _ in r.feasible) and T not in brute)


class TestExcludeAll:
    def test_five_seven_nine(self):
        assert exclude_all((5, 7, 9)).no_elementary_reduction

    def test_eight_ten_twelve(self):
        s = exclude_all((8, 10, 12))
        assert s.excluded == (True, False, True)
        assert not s.no_elementary_reduction
        s = exclude_all((8, 10, 12), {(1, 3): 8}, strict=[(3, 1)])
        assert s.no_elementary_reduction

    def test_unsorted_rejected(self):
        with pytest.raises(ValueError):
            exclude_all((10, 8, 12))

    def test_theorem_oracle_small_grid(self):
        for a in range(1, 60):
            for d in range(1, 60):
                if (2 * d) % a == 0 or exceptional_form(a, d):
                    continue
                assert exclude_all((a, a + d, a + 2 * d)).no_elementary_reduction, (a, d)

    def test_exceptional_j1_fails_only_in_middle(self):
        for i in range(1, 30):
            a, d = 4 * i, i
            s = exclude_all((a, a + d, a + 2 * d))
            assert s.failing_positions() == [2]

    def test_exceptional_boundary(self):
        # middle position: p = 2, q-coefficient 2ij + 2, so q >= 1 survives B = 2
        # exactly when i(4 - j) >= 2
        for a in range(4, 101, 4):
            for d in range(1, 101):
                ij = exceptional_form(a, d)
                if not ij:
                    continue
                i, j = ij
                s = exclude_all((a, a + d, a + 2 * d))
                expect = [2] if j == 1 or (j == 3 and i >= 2) else []
                assert s.failing_positions() == expect, (a, d)

    def test_exceptional_closed_when_strict(self):
        for a, d in ((4, 1), (8, 2), (8, 6), (12, 3)):
            s = exclude_all((a, a + d, a + 2 * d), B_map={(1, 3): a}, strict=((1, 3),))
            assert s.no_elementary_reduction, (a, d)


class TestTypeIII:
    def test_positive_control(self):
        w = type_iii_possible((6, 8, 12))
        assert (w.n, w.system) == (4, 2)

    def test_system_one_only(self):
        # n = 4: 4 < 5 <= 6, d2 = 8, d3 = 12; system 2 needs d1 = 6
        w = type_iii_possible((5, 8, 12))
        assert (w.n, w.system) == (4, 1)

    def test_smallest_ap(self):
        assert type_iii_possible((1, 2, 3)) is None

    def test_no_ap_small(self):
        for a in range(1, 80):
            for d in range(0, 80):
                assert type_iii_possible((a, a + d, a + 2 * d)) is None
