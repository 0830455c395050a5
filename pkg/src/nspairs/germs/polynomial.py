"""Sparse multivariate polynomials with exact rational coefficients.

Grammar accepted by :func:`parse_germ` (whitespace ignored)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := rational | var | var '^' nat | '(' expr ')'
    rational := int ('/' nat)?

The canonical printer emits terms in descending graded-lexicographic order
and its output parses back to an equal polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from nspairs.errors import GermSyntaxError, NotAGermError, StructureError


class Polynomial:
    """Immutable polynomial in named variables; terms map exponent tuples to Fractions."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] = ()):
        self.variables = tuple(variables)
        n = len(self.variables)
        if len(set(self.variables)) != n:
            raise StructureError(f"repeated variable name in {self.variables}")
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != n or any(not isinstance(k, int) or k < 0 for k in e):
                raise StructureError(f"bad exponent vector {e} for {n} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, variables) -> Polynomial:
        return cls(variables)

    @classmethod
    def constant(cls, variables, c) -> Polynomial:
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def var(cls, variables, name: str) -> Polynomial:
        variables = tuple(variables)
        e = tuple(int(v == name) for v in variables)
        if sum(e) != 1:
            raise StructureError(f"unknown variable {name!r}")
        return cls(variables, {e: 1})

    def _new(self, terms) -> Polynomial:
        p = Polynomial.__new__(type(self) if type(self) is Polynomial else Polynomial)
        p.variables = self.variables
        p.terms = {e: c for e, c in terms.items() if c}
        p._hash = None
        return p

    def _check(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial.constant(self.variables, other)
        if other.variables != self.variables:
            raise StructureError(f"variable mismatch: {self.variables} vs {other.variables}")
        return other

    # arithmetic

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * len(self.variables): Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self.variables}, {self!s})"

    def __str__(self):
        return to_text(self)

    # structure

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def order(self) -> int:
        """Lowest total degree of a term (-1 for the zero polynomial)."""
        return min((sum(e) for e in self.terms), default=-1)

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def diff(self, i: int) -> Polynomial:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return self._new(out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t *= Fraction(x) ** k
            total += t
        return total

    def signed_permutation(self, perm: Sequence[int], signs: Sequence[int]) -> Polynomial:
        """Substitute x_i -> signs[i] * x_perm[i]."""
        n = self.nvars
        out = {}
        for e, c in self.terms.items():
            f = [0] * n
            s = 1
            for i, k in enumerate(e):
                f[perm[i]] += k
                if signs[i] < 0 and k % 2:
                    s = -s
            f = tuple(f)
            out[f] = out.get(f, 0) + s * c
        return self._new(out)

    def homogeneous_part(self, d: int) -> Polynomial:
        return self._new({e: c for e, c in self.terms.items() if sum(e) == d})


class PolynomialGerm(Polynomial):
    """A polynomial vanishing at the origin."""

    __slots__ = ()

    def __init__(self, variables, terms=()):
        super().__init__(variables, terms)
        if self.constant_term:
            raise NotAGermError(
                f"constant term {self.constant_term} is nonzero; a germ must send 0 to 0")

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> PolynomialGerm:
        return cls(p.variables, p.terms)


class GradientGerm:
    """The formal gradient of a germ: one partial derivative per variable."""

    __slots__ = ("components", "source")

    def __init__(self, components: Iterable[Polynomial], source: Polynomial | None = None):
        self.components = tuple(components)
        self.source = source
        if source is not None:
            for i, c in enumerate(self.components):
                if c != source.diff(i):
                    raise StructureError(f"component {i} is not the partial derivative of the source")

    @property
    def variables(self):
        return self.components[0].variables

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        return isinstance(other, GradientGerm) and self.components == other.components

    def __repr__(self):
        return "GradientGerm(" + ", ".join(str(c) for c in self.components) + ")"


def gradient(g: Polynomial) -> GradientGerm:
    return GradientGerm([g.diff(i) for i in range(g.nvars)], source=g)


# printing

def _grlex_key(e):
    return (sum(e), e)


def _coef_text(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial_text(variables, e) -> str:
    parts = []
    for v, k in zip(variables, e):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def to_text(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, e in enumerate(sorted(p.terms, key=_grlex_key, reverse=True)):
        c = p.terms[e]
        mono = _monomial_text(p.variables, e)
        mag = abs(c)
        if not mono:
            body = _coef_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coef_text(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# parsing

class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = tuple(variables)
        self.pos = 0

    def error(self, msg, pos=None):
        raise GermSyntaxError(msg, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}" + (f", found {self.peek()!r}" if self.peek() else ", found end of input"))
        self.pos += 1

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def ident(self) -> str:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def parse(self) -> Polynomial:
        p = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return p

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.pos += 1
        acc = self.term() * sign
        while self.peek() in ("+", "-") and self.peek():
            op = self.peek()
            self.pos += 1
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = acc * self.factor()
        return acc

    def factor(self) -> Polynomial:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner
        if ch.isdigit():
            num = self.nat()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den_pos = self.pos
                den = self.nat()
                if den == 0:
                    self.error("zero denominator", den_pos)
            return Polynomial.constant(self.variables, Fraction(num, den))
        if ch.isalpha() or ch == "_":
            name = self.ident()
            if name not in self.variables:
                self.error(f"unknown variable {name!r} (declared: {', '.join(self.variables)})", start)
            v = Polynomial.var(self.variables, name)
            if self.peek() == "^":
                self.pos += 1
                return v ** self.nat()
            return v
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    variables = tuple(variables)
    for v in variables:
        if not v or not (v[0].isalpha() or v[0] == "_") or not all(ch.isalnum() or ch == "_" for ch in v):
            raise StructureError(f"invalid variable name {v!r}")
    return _Parser(text, variables).parse()


def parse_germ(text: str, variables: Sequence[str]) -> PolynomialGerm:
    return PolynomialGerm.from_polynomial(parse_polynomial(text, variables))
