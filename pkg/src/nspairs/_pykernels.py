"""Pure-Python integer kernels.

These are the reference implementations of the hot loops; ``_ckernels``
mirrors them on machine integers.  Every function takes a list of row lists
of Python ints and never mutates its argument.
"""


def det(rows):
    """Determinant by Bareiss fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (p * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def pfaffian(rows):
    """Pfaffian of a skew-symmetric matrix of even size.

    Fraction-free elimination on 2x2 pivot blocks.  After step t the working
    entry (i, j) equals the Pfaffian of the principal submatrix on the
    eliminated indices plus {i, j}, so each update divides exactly by the
    previous pivot.
    """
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    idx = list(range(n))
    sign = 1
    prev = 1
    for t in range(0, n, 2):
        r0 = idx[t]
        piv = None
        for s in range(t + 1, n):
            if a[r0][idx[s]] != 0:
                piv = s
                break
        if piv is None:
            return 0
        if piv != t + 1:
            idx[t + 1], idx[piv] = idx[piv], idx[t + 1]
            sign = -sign
        r1 = idx[t + 1]
        p = a[r0][r1]
        if t + 2 == n:
            return sign * p
        rest = idx[t + 2:]
        row0 = a[r0]
        row1 = a[r1]
        for ii, i in enumerate(rest):
            ai = a[i]
            b0i = row0[i]
            b1i = row1[i]
            for j in rest[ii + 1:]:
                v = (p * ai[j] + b1i * row0[j] - b0i * row1[j]) // prev
                ai[j] = v
                a[j][i] = -v
        prev = p
    raise AssertionError("unreachable")


def smith_diagonal(rows, ncols):
    """Diagonal of the Smith normal form, length min(rows, cols), non-negative.

    Pivot: smallest nonzero absolute value in the active block, ties broken
    leftmost column first, then uppermost row.
    """
    m = len(rows)
    n = ncols
    a = [list(r) for r in rows]
    diag = []
    for t in range(min(m, n)):
        while True:
            best = None
            for j in range(t, n):
                for i in range(t, m):
                    v = a[i][j]
                    if v != 0:
                        av = v if v > 0 else -v
                        if best is None or av < best[0]:
                            best = (av, i, j)
                            if av == 1:
                                break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                diag.extend([0] * (min(m, n) - t))
                return diag
            _, pi, pj = best
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for r in a:
                    r[t], r[pj] = r[pj], r[t]
            p = a[t][t]
            rt = a[t]
            clean = True
            for i in range(t + 1, m):
                ri = a[i]
                if ri[t] != 0:
                    q = ri[t] // p
                    if q:
                        for j in range(t, n):
                            ri[j] -= q * rt[j]
                    if ri[t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if rt[j] != 0:
                    q = rt[j] // p
                    if q:
                        for r in a[t:]:
                            r[j] -= q * r[t]
                    if rt[j] != 0:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m if p not in (1, -1) else t + 1):
                ri = a[i]
                for j in range(t + 1, n):
                    if ri[j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            ri = a[bad]
            for j in range(t, n):
                rt[j] += ri[j]
        diag.append(abs(a[t][t]))
    return diag
