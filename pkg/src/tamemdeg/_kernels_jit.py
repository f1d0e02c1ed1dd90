"""Compiled loop kernels (numba)."""

import numpy as np
from numba import njit

EXCLUDED, BOUND_INSUFFICIENT, REPRESENTABLE, INAPPLICABLE = 0, 1, 2, 3

NAME = "numba"


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def member(target, m, M, imin):
    # first hit in increasing j, exhaustive over j <= target // M
    for j in range(imin, target // M + 1):
        rest = target - j * M
        if rest % m == 0:
            i = rest // m
            if i >= imin and (i > 0 or j > 0):
                return i, j
    return -1, -1


@njit(cache=True)
def representable_mask(T, m, M, jmax):
    mask = np.zeros(T + 1, dtype=np.bool_)
    for j in range(jmax + 1):
        v = j * M
        while v <= T:
            mask[v] = True
            v += m
    mask[0] = False
    return mask


@njit(cache=True)
def exclusion_code(T, m, M, B):
    p = m // _gcd(m, M)
    coef = p * M - m - M + B
    if coef <= 0:
        return INAPPLICABLE
    if coef <= T:
        return BOUND_INSUFFICIENT
    rmax = min(T // M, p - 1)
    for j in range(rmax + 1):
        rest = T - j * M
        if rest % m == 0 and (rest > 0 or j > 0):
            return REPRESENTABLE
    return EXCLUDED


@njit(cache=True)
def lemma31_grid(a_max, d_max):
    lhs = np.zeros((a_max + 1, d_max + 1), dtype=np.bool_)
    rhs = np.zeros((a_max + 1, d_max + 1), dtype=np.bool_)
    for a in range(1, a_max + 1):
        for d in range(d_max + 1):
            lhs[a, d] = (2 * d) % a == 0
            if d % a == 0:
                rhs[a, d] = True
            else:
                i, j = member(a + 2 * d, a, a + d, 0)
                rhs[a, d] = i >= 0
    return lhs, rhs


@njit(cache=True)
def ap_exclusion_grid(a_max, d_max, B, strict13_at_a):
    out = np.full((a_max + 1, d_max + 1, 3), -1, dtype=np.int8)
    for a in range(1, a_max + 1):
        b13 = a + 1 if strict13_at_a else B
        for d in range(d_max + 1):
            d1, d2, d3 = a, a + d, a + 2 * d
            out[a, d, 0] = exclusion_code(d1, d2, d3, B)
            out[a, d, 1] = exclusion_code(d2, d1, d3, b13)
            out[a, d, 2] = exclusion_code(d3, d1, d2, B)
    return out


@njit(cache=True)
def type3(d1, d2, d3):
    # d2 = 2n pins n in both systems
    if d2 % 2 or d2 < 2:
        return -1, -1
    n = d2 // 2
    if 2 * d1 == 3 * n and 5 * n < 2 * d3 and d3 <= 3 * n:
        return n, 2
    if n < d1 and 2 * d1 <= 3 * n and d3 == 3 * n:
        return n, 1
    return -1, -1


@njit(cache=True)
def type3_ap_grid(a_max, d_max):
    hit = np.zeros((a_max + 1, d_max + 1), dtype=np.bool_)
    for a in range(1, a_max + 1):
        for d in range(d_max + 1):
            n, _ = type3(a, a + d, a + 2 * d)
            hit[a, d] = n > 0
    return hit
