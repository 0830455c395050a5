"""Standard bases in the local ring Q[x]_(x) and exact residues in finite local algebras.

The monomial order is negative-degree-lexicographic: lower total degree is
larger, ties broken lexicographically with x_1 > x_2 > ...  Leading terms
are therefore lowest-degree terms, which is what makes the leading ideal
describe the localization at the origin rather than all of Q^n.

Standard bases come from Mora's normal form (ecart-based weak reduction);
residues in the finite quotient use truncated reduction modulo m^N, where N
exceeds the largest standard-monomial degree (so m^N lies in the ideal).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from nspairs.errors import DegenerateInputError, NonIsolatedError
from nspairs.germs.polynomial import Polynomial


def order_key(e):
    return (-sum(e), e)


def leading(f: dict):
    return max(f, key=order_key)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _ecart(f: dict) -> int:
    return max(sum(e) for e in f) - sum(leading(f))


def _monic(f: dict) -> dict:
    lc = f[leading(f)]
    return {e: c / lc for e, c in f.items()}


def _shift_sub(h: dict, g: dict, mono, coef) -> dict:
    """h - coef * x^mono * g."""
    out = dict(h)
    for e, c in g.items():
        t = tuple(a + b for a, b in zip(e, mono))
        v = out.get(t, 0) - coef * c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def _reduce_once(h: dict, g: dict) -> dict:
    lh, lg = leading(h), leading(g)
    mono = tuple(a - b for a, b in zip(lh, lg))
    return _shift_sub(h, g, mono, h[lh] / g[lg])


def mora_normal_form(f: dict, basis: list[dict]) -> dict:
    """Weak normal form: a unit multiple of f minus an ideal combination, with
    leading monomial outside the leading ideal (or zero)."""
    h = dict(f)
    T = list(basis)
    while h:
        lh = leading(h)
        cands = [g for g in T if _divides(leading(g), lh)]
        if not cands:
            break
        g = min(cands, key=_ecart)
        if _ecart(g) > _ecart(h):
            T.append(h)
        h = _reduce_once(h, g)
    return h


def _spoly(f: dict, g: dict) -> dict:
    lf, lg = leading(f), leading(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = tuple(a - b for a, b in zip(lcm, lf))
    mg = tuple(a - b for a, b in zip(lcm, lg))
    left = {tuple(a + b for a, b in zip(e, mf)): c / f[lf] for e, c in f.items()}
    return _shift_sub(left, g, mg, 1 / g[lg])


def standard_basis(gens: Sequence[dict]) -> list[dict]:
    """Standard basis of the ideal generated by `gens` in the local ring."""
    G = [_monic(g) for g in gens if g]
    pairs = list(combinations(range(len(G)), 2))
    while pairs:
        # normal selection: smallest lcm degree first, deterministic tiebreak
        def lcm_deg(p):
            a, b = leading(G[p[0]]), leading(G[p[1]])
            return (sum(max(x, y) for x, y in zip(a, b)), p)
        pairs.sort(key=lcm_deg)
        i, j = pairs.pop(0)
        a, b = leading(G[i]), leading(G[j])
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials: the S-polynomial reduces to zero
        h = mora_normal_form(_spoly(G[i], G[j]), G)
        if h:
            G.append(_monic(h))
            pairs.extend((t, len(G) - 1) for t in range(len(G) - 1))
    return _minimal(G)


def _minimal(G: list[dict]) -> list[dict]:
    out = []
    for idx, g in enumerate(G):
        lg = leading(g)
        redundant = any(
            _divides(leading(h), lg) and (leading(h) != lg or jdx < idx)
            for jdx, h in enumerate(G) if jdx != idx)
        if not redundant:
            out.append(g)
    return sorted(out, key=lambda g: order_key(leading(g)), reverse=True)


@dataclass(frozen=True, eq=False)
class LocalAlgebra:
    """Q[x]_(x) / I for an m-primary ideal I, with a monomial basis."""

    variables: tuple
    basis_elements: tuple  # standard basis of I (as term dicts)
    monomials: tuple  # standard monomials, ascending in degree then descending lex
    truncation: int  # N with m^N contained in I
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.monomials)

    def leading_monomials(self) -> tuple:
        return tuple(leading(g) for g in self.basis_elements)

    def normal_form(self, f) -> dict:
        """Coordinates of the residue of f in the monomial basis (zero entries omitted)."""
        terms = f.terms if isinstance(f, Polynomial) else f
        out: dict = {}
        for e, c in terms.items():
            for m, v in _nf_monomial(self, e).items():
                out[m] = out.get(m, 0) + c * v
        return {m: v for m, v in out.items() if v}


def _nf_monomial(alg: LocalAlgebra, e) -> dict:
    cache = alg._cache
    if e in cache:
        return cache[e]
    if sum(e) >= alg.truncation:
        res = {}
    else:
        res = None
        for g in alg.basis_elements:
            lg = leading(g)
            if _divides(lg, e):
                mono = tuple(a - b for a, b in zip(e, lg))
                lc = g[lg]
                res = {}
                for t, c in g.items():
                    if t == lg:
                        continue
                    shifted = tuple(a + b for a, b in zip(t, mono))
                    for m, v in _nf_monomial(alg, shifted).items():
                        res[m] = res.get(m, 0) - c / lc * v
                res = {m: v for m, v in res.items() if v}
                break
        if res is None:
            res = {e: Fraction(1)}
    cache[e] = res
    return res


def local_algebra(components: Sequence[Polynomial]) -> LocalAlgebra:
    """Local algebra of the ideal generated by `components` at the origin.

    Raises DegenerateInputError when every component is zero and
    NonIsolatedError when the quotient is infinite-dimensional.
    """
    components = list(components)
    variables = components[0].variables
    n = len(variables)
    gens = [dict(c.terms) for c in components if c]
    if not gens:
        raise DegenerateInputError("the gradient is identically zero")
    G = standard_basis(gens)
    lms = [leading(g) for g in G]
    if any(sum(lm) == 0 for lm in lms):
        # a unit lies in the ideal: the quotient is zero
        return LocalAlgebra(variables, tuple(G), (), 0)
    bounds = []
    for i in range(n):
        powers = [lm[i] for lm in lms if all(v == 0 for j, v in enumerate(lm) if j != i)]
        if not powers:
            raise NonIsolatedError(
                f"no pure power of {variables[i]} among the leading monomials; "
                "the critical point at the origin is not isolated")
        bounds.append(min(powers))
    mons = []
    stack = [(0,) * n]
    seen = set(stack)
    while stack:
        e = stack.pop()
        if any(_divides(lm, e) for lm in lms):
            continue
        mons.append(e)
        for i in range(n):
            if e[i] + 1 < bounds[i]:
                f = e[:i] + (e[i] + 1,) + e[i + 1:]
                if f not in seen:
                    seen.add(f)
                    stack.append(f)
    mons.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    N = max(sum(e) for e in mons) + 1
    return LocalAlgebra(variables, tuple(G), tuple(mons), N)
