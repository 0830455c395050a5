"""Local topological degree of a gradient germ at the origin.

Two independent routes:

* :func:`elk_degree` evaluates the Eisenbud-Levine-Khimshiashvili formula.
  The local algebra A = Q[x]_(x)/(dg/dx_1, ..., dg/dx_n) is finite exactly
  when the critical point is algebraically isolated.  With J the class of
  the Hessian determinant and phi any linear form on A with phi(J) > 0, the
  degree of grad g equals the signature of (a, b) -> phi(ab).
* :func:`winding_degree` (n = 2 only) counts quarter turns of the gradient
  along a rationally parametrized circle, certifying every arc with exact
  interval bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from nspairs import upoly
from nspairs.errors import (DimensionError, InconclusiveError, RadiusTooLargeError,
                            UnsupportedCaseError)
from nspairs.germs.polynomial import GradientGerm, Polynomial, gradient, _monomial_text
from nspairs.germs.standard_basis import local_algebra
from nspairs.linalg import exact_signature

MAX_ARCS = 2 ** 20


@dataclass(frozen=True)
class DegreeResult:
    degree: int
    local_algebra_dim: int
    method: str  # "ELK" or "winding"
    certificate: str

    def __post_init__(self):
        if self.method == "ELK" and abs(self.degree) > self.local_algebra_dim:
            raise AssertionError("|degree| exceeds the local algebra dimension")


def hessian_determinant(g: Polynomial) -> Polynomial:
    n = g.nvars
    H = [[g.diff(i).diff(j) for j in range(n)] for i in range(n)]

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple) -> Polynomial:
        # determinant of rows row.. and the given columns (Laplace along the first row)
        if not cols:
            return Polynomial.constant(g.variables, 1)
        total = Polynomial.zero(g.variables)
        for idx, c in enumerate(cols):
            entry = H[row][c]
            if entry:
                term = entry * minor(row + 1, cols[:idx] + cols[idx + 1:])
                total = total + term if idx % 2 == 0 else total - term
        return total

    return minor(0, tuple(range(n)))


def _mono_name(variables, e) -> str:
    return _monomial_text(variables, e) or "1"


def elk_degree(g: Polynomial) -> DegreeResult:
    """deg_0(grad g) by the signature formula in the local algebra."""
    grad = gradient(g)
    alg = local_algebra(grad.components)
    if alg.dim == 0:
        return DegreeResult(0, 0, "ELK", "gradient does not vanish at 0; local algebra is zero")
    J = alg.normal_form(hessian_determinant(g))
    if not J:
        raise AssertionError("Hessian determinant vanishes in a finite local algebra")
    # coordinate dual to a basis monomial of maximal degree (lex-largest on ties)
    top = max(J, key=lambda e: (sum(e), e))
    sign = 1 if J[top] > 0 else -1
    mons = alg.monomials
    gram = []
    for a in mons:
        row = []
        for b in mons:
            prod = tuple(x + y for x, y in zip(a, b))
            row.append(sign * alg.normal_form({prod: Fraction(1)}).get(top, Fraction(0)))
        gram.append(row)
    sig = exact_signature(gram)
    if sig.zero:
        raise AssertionError("bilinear form is degenerate; the functional is not admissible")
    names = [_mono_name(g.variables, e) for e in mons]
    cert = (f"phi = {'+' if sign > 0 else '-'}coefficient of {_mono_name(g.variables, top)}; "
            f"phi(J) = {abs(J[top])}; basis = [{', '.join(names)}]; "
            f"inertia (+{sig.positive}, -{sig.negative})")
    return DegreeResult(sig.signature, alg.dim, "ELK", cert)


# winding number oracle

def _circle_polys(P: Polynomial, r: Fraction, flip: bool) -> list:
    """P on the chart t -> s*r*((1 - t^2), 2t)/(1 + t^2), s = -1 if flip, cleared of denominators."""
    d = max(P.total_degree, 0)
    out: list = []
    x_num = [1, 0, -1]
    y_num = [0, 2]
    den = [1, 0, 1]
    for (a, b), c in P.terms.items():
        s = -1 if flip and (a + b) % 2 else 1
        term = upoly.mul(upoly.power(x_num, a), upoly.power(y_num, b))
        term = upoly.mul(term, upoly.power(den, d - a - b))
        out = upoly.add(out, upoly.scale(term, s * c * r ** (a + b)))
    return out


def _certified_sign(p, mid: Fraction, half: Fraction) -> int:
    """Sign of p on [mid - half, mid + half] if a centered-form bound fixes it, else 0."""
    q = upoly.taylor_shift(p, mid)
    if not q or q[0] == 0:
        return 0
    bound = Fraction(0)
    w = Fraction(1)
    for c in q[1:]:
        w *= half
        bound += abs(c) * w
    if abs(q[0]) > bound:
        return 1 if q[0] > 0 else -1
    return 0


def _quadrant(x, y) -> int:
    if x > 0 and y >= 0:
        return 0
    if x <= 0 and y > 0:
        return 1
    if x < 0 and y <= 0:
        return 2
    return 3


def _arc_quarters(p, q, a: Fraction, b: Fraction) -> int:
    """Signed quarter turns from t = a to t = b across an arc inside an open half-plane."""
    x0, y0 = upoly.evaluate(p, a), upoly.evaluate(q, a)
    x1, y1 = upoly.evaluate(p, b), upoly.evaluate(q, b)
    dq = (_quadrant(x1, y1) - _quadrant(x0, y0)) % 4
    if dq == 1:
        return 1
    if dq == 3:
        return -1
    if dq == 2:
        # the arc turns by less than pi, so the cross product picks the way round
        return 2 if x0 * y1 - y0 * x1 > 0 else -2
    return 0


def _chart_quarters(p, q, budget: list) -> int:
    total = 0
    stack = [(Fraction(-1), Fraction(1))]
    while stack:
        a, b = stack.pop()
        mid, half = (a + b) / 2, (b - a) / 2
        if _certified_sign(p, mid, half) or _certified_sign(q, mid, half):
            total += _arc_quarters(p, q, a, b)
            budget[0] += 1
            if budget[0] > MAX_ARCS:
                raise InconclusiveError(f"more than {MAX_ARCS} arcs needed to certify the winding")
            continue
        if half < Fraction(1, 2 ** 40):
            raise InconclusiveError("arc width underflow while certifying the winding")
        stack.append((mid, b))
        stack.append((a, mid))
    return total


def winding_degree(G: GradientGerm | Sequence[Polynomial], radius) -> int:
    """Winding number of the planar field G around the circle |x| = radius."""
    comps = tuple(G.components if isinstance(G, GradientGerm) else G)
    if len(comps) != 2 or comps[0].nvars != 2:
        raise DimensionError("winding_degree needs a planar field of two components in two variables")
    r = Fraction(radius)
    if r <= 0:
        raise DimensionError("radius must be positive")
    total = 0
    budget = [0]
    for flip in (False, True):
        p = _circle_polys(comps[0], r, flip)
        q = _circle_polys(comps[1], r, flip)
        if not p and not q:
            raise RadiusTooLargeError(f"the field vanishes identically on the circle of radius {r}")
        common = upoly.gcd(p, q) if p and q else (p or q)
        if upoly.degree(common) > 0 and upoly.count_distinct_roots(common, -1, 1):
            raise RadiusTooLargeError(f"the field has a zero on the circle of radius {r}")
        if not p or not q:
            # one component vanishes identically; the other has no root on the chart
            continue
        total += _chart_quarters(p, q, budget)
    if total % 4:
        raise AssertionError("quarter-turn count is not a multiple of four")
    return total // 4


def _real_part_power(k: int) -> Polynomial:
    """Re((x + iy)^k) as a polynomial in (x, y)."""
    from math import comb
    terms = {}
    for j in range(0, k + 1, 2):
        terms[(k - j, j)] = comb(k, j) * (-1) ** (j // 2)
    return Polynomial(("x", "y"), terms)


def holomorphic_milnor_number(f: Polynomial, m: int) -> int:
    """Milnor number m of c*z^(m+1), from the real part u of the germ.

    The complex derivative is u_x - i*u_y, so the degree of z -> (m+1) c z^m
    is the winding of (u_x, -u_y) around a small circle.
    """
    if m < 1:
        raise UnsupportedCaseError(f"exponent m must be at least 1, got {m}")
    if f.nvars != 2:
        raise UnsupportedCaseError("expected the real part of a germ in one complex variable")
    model = Polynomial(f.variables, _real_part_power(m + 1).terms)
    lead = f.terms.get((m + 1, 0))
    if not lead or f != model * lead:
        raise UnsupportedCaseError(f"germ is not Re(c*z^{m + 1}) for a rational c")
    field = (f.diff(0), -f.diff(1))
    return winding_degree(field, Fraction(1, 2))
