"""Dense univariate polynomials over Q.

A polynomial is a list of coefficients, constant term first, with no
trailing zeros (the zero polynomial is ``[]``).  Coefficients are ints or
Fractions; results use Fractions only where division forces it.
"""
from __future__ import annotations

from fractions import Fraction


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p) -> int:
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    return add(p, [-c for c in q])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, e: int):
    out = [1]
    for _ in range(e):
        out = mul(out, p)
    return out


def scale(p, c):
    return trim([c * a for a in p])


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def divmod_(p, q):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in p]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    while len(r) - 1 >= dq and r:
        shift = len(r) - 1 - dq
        c = r[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            r[i + shift] -= c * b
        r = trim(r)
    return trim(quo), r


def monic(p):
    if not p:
        return []
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def gcd(p, q):
    p, q = trim(p), trim(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def squarefree(p):
    g = gcd(p, derivative(p))
    if len(g) <= 1:
        return trim(p)
    return divmod_(p, g)[0]


def taylor_shift(p, a):
    """Coefficients of p(a + h) in powers of h."""
    out = [Fraction(c) for c in p]
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return trim(out)


def sign_changes(seq) -> int:
    last = 0
    changes = 0
    for c in seq:
        if c == 0:
            continue
        s = 1 if c > 0 else -1
        if last and s != last:
            changes += 1
        last = s
    return changes


def sturm_sequence(p):
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = divmod_(seq[-2], seq[-1])[1]
        seq.append([-c for c in r])
    return [s for s in seq if s]


def count_distinct_roots(p, a, b) -> int:
    """Distinct real roots of p in the closed interval [a, b] (Sturm)."""
    p = trim(p)
    if not p:
        raise ValueError("zero polynomial has infinitely many roots")
    p = squarefree(p)
    seq = sturm_sequence(p)
    va = sign_changes([evaluate(s, a) for s in seq])
    vb = sign_changes([evaluate(s, b) for s in seq])
    # Sturm counts roots in (a, b]
    return va - vb + (1 if evaluate(p, a) == 0 else 0)


def cauchy_bound(p) -> Fraction:
    """Every real root of p has absolute value below this bound."""
    p = trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))
