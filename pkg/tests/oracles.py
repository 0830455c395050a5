"""Slow, independent reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd


def cofactor_det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def matching_pfaffian(rows, idx=None):
    """Sum over perfect matchings of sign * product of a_ij."""
    if idx is None:
        idx = list(range(len(rows)))
    if not idx:
        return 1
    i = idx[0]
    total = 0
    for pos in range(1, len(idx)):
        j = idx[pos]
        if rows[i][j]:
            rest = idx[1:pos] + idx[pos + 1:]
            total += (-1) ** (pos - 1) * rows[i][j] * matching_pfaffian(rows, rest)
    return total


def determinantal_divisor_snf(rows, ncols):
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_(k-1)."""
    m = len(rows)
    r = min(m, ncols)
    factors = []
    prev = 1
    for k in range(1, r + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(ncols), k):
                g = gcd(g, cofactor_det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            factors.extend([0] * (r - k + 1))
            break
        factors.append(g // prev)
        prev = g
    return factors


def congruence_inertia(rows):
    """(positive, negative, zero) by symmetric Gaussian elimination over Q."""
    a = [[Fraction(v) for v in r] for r in rows]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row/column i += row/column j makes a[i][i] = 2 a[i][j] (diagonal a[j][j] is 0)
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            p = i
        piv = a[p][p]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = a[i][p] / piv
            if f:
                for t in range(n):
                    a[i][t] -= f * a[p][t]
        for i in active:
            a[p][i] = a[i][p] = Fraction(0)
    return pos, neg, n - pos - neg


def random_skew(rng, k, lo=-9, hi=9):
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            v = rng.randint(lo, hi)
            rows[i][j] = v
            rows[j][i] = -v
    return rows
