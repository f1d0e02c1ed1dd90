"""Numpy kernels; same contracts as the compiled ones, no numba needed."""

from math import gcd

import numpy as np

EXCLUDED, BOUND_INSUFFICIENT, REPRESENTABLE, INAPPLICABLE = 0, 1, 2, 3

NAME = "numpy"


def member(target, m, M, imin):
    j = np.arange(imin, target // M + 1, dtype=np.int64)
    rest = target - j * M
    ok = (rest % m == 0) & (rest // m >= imin) & ((rest > 0) | (j > 0))
    hits = np.flatnonzero(ok)
    if hits.size == 0:
        return -1, -1
    k = hits[0]
    return int(rest[k] // m), int(j[k])


def representable_mask(T, m, M, jmax):
    mask = np.zeros(T + 1, dtype=np.bool_)
    for j in range(min(jmax, T // M) + 1):
        mask[j * M::m] = True
    mask[0] = False
    return mask


def _codes(T, m, M, B):
    T, m, M, B = np.broadcast_arrays(*(np.asarray(v, dtype=np.int64) for v in (T, m, M, B)))
    p = m // np.gcd(m, M)
    coef = p * M - m - M + B
    rmax = np.minimum(T // M, p - 1)
    rep = np.zeros(T.shape, dtype=np.bool_)
    top = int(rmax.max()) if rmax.size else -1
    for j in range(top + 1):
        rest = T - j * M
        rep |= (j <= rmax) & (rest % m == 0) & ((rest > 0) | (j > 0))
    code = np.where(rep, REPRESENTABLE, EXCLUDED)
    code = np.where(coef <= T, BOUND_INSUFFICIENT, code)
    code = np.where(coef <= 0, INAPPLICABLE, code)
    return code.astype(np.int8)


def exclusion_code(T, m, M, B):
    return int(_codes(T, m, M, B))


def _member_grid(target, m, M, imin):
    found = np.zeros(target.shape, dtype=np.bool_)
    jmax = target // M
    top = int(jmax.max()) if jmax.size else -1
    for j in range(imin, top + 1):
        rest = target - j * M
        found |= (j <= jmax) & (rest % m == 0) & (rest // m >= imin) & ((rest > 0) | (j > 0))
    return found


def lemma31_grid(a_max, d_max):
    a, d = np.meshgrid(np.arange(a_max + 1, dtype=np.int64),
                       np.arange(d_max + 1, dtype=np.int64), indexing="ij")
    safe = np.maximum(a, 1)
    lhs = (2 * d) % safe == 0
    rhs = (d % safe == 0) | _member_grid(a + 2 * d, safe, safe + d, 0)
    lhs[0, :] = False
    rhs[0, :] = False
    return lhs, rhs


def ap_exclusion_grid(a_max, d_max, B, strict13_at_a):
    a, d = np.meshgrid(np.arange(1, a_max + 1, dtype=np.int64),
                       np.arange(d_max + 1, dtype=np.int64), indexing="ij")
    d1, d2, d3 = a, a + d, a + 2 * d
    b13 = a + 1 if strict13_at_a else B
    out = np.full((a_max + 1, d_max + 1, 3), -1, dtype=np.int8)
    out[1:, :, 0] = _codes(d1, d2, d3, B)
    out[1:, :, 1] = _codes(d2, d1, d3, b13)
    out[1:, :, 2] = _codes(d3, d1, d2, B)
    return out


def type3(d1, d2, d3):
    n = np.arange(1, d3 + 1, dtype=np.int64)
    sys2 = (2 * d1 == 3 * n) & (d2 == 2 * n) & (5 * n < 2 * d3) & (d3 <= 3 * n)
    sys1 = (n < d1) & (2 * d1 <= 3 * n) & (d2 == 2 * n) & (d3 == 3 * n)
    hit = np.flatnonzero(sys1 | sys2)
    if hit.size == 0:
        return -1, -1
    k = hit[0]
    return int(n[k]), 2 if sys2[k] else 1


def type3_ap_grid(a_max, d_max):
    a, d = np.meshgrid(np.arange(a_max + 1, dtype=np.int64),
                       np.arange(d_max + 1, dtype=np.int64), indexing="ij")
    d1, d2, d3 = a, a + d, a + 2 * d
    # d2 = 2n pins n in both systems
    n = d2 // 2
    even = (d2 % 2 == 0) & (n >= 1)
    sys1 = even & (n < d1) & (2 * d1 <= 3 * n) & (d3 == 3 * n)
    sys2 = even & (2 * d1 == 3 * n) & (5 * n < 2 * d3) & (d3 <= 3 * n)
    hit = sys1 | sys2
    hit[0, :] = False
    return hit
