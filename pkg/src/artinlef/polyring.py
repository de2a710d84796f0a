"""Sparse exact polynomials in at most four variables and the contraction action.

One representation serves both the polynomial ring R = k[x, y, z, w] and
the divided-power ring S = k_DP[X, Y, Z, W]; which side a polynomial lives
on is decided by the operation that consumes it.  Monomials are plain
exponent tuples.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DomainMismatchError, ParseError
from .fields import FieldSpec, Scalar, check_same_field

MAX_VARS = 4
VAR_NAMES = ("x", "y", "z", "w")
MAX_EXPONENT = 2 ** 31

Monomial = tuple


def degree(mono: Monomial) -> int:
    return sum(mono)


def var_names(nvars: int, dual: bool = False) -> tuple[str, ...]:
    names = VAR_NAMES[:nvars]
    return tuple(n.upper() for n in names) if dual else names


@lru_cache(maxsize=None)
def _basis(d: int, r: int) -> tuple:
    if r == 0:
        return ((),) if d == 0 else ()
    if r == 1:
        return ((d,),)
    out = []
    for a in range(d, -1, -1):
        out.extend((a,) + rest for rest in _basis(d - a, r - 1))
    return tuple(out)


def monomial_basis(deg: int, nvars: int) -> list[Monomial]:
    """All monomials of the given degree, graded-lex with x > y > z > w."""
    if deg < 0:
        return []
    _check_nvars(nvars)
    return list(_basis(deg, nvars))


def _check_nvars(nvars):
    if not 1 <= nvars <= MAX_VARS:
        raise ValueError(f"number of variables must be between 1 and {MAX_VARS}, got {nvars}")


def grlex_key(mono: Monomial):
    """Sort key putting larger monomials first under ``sorted(..., key=grlex_key)``."""
    return (-sum(mono), tuple(-a for a in mono))


class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: nonzero scalar}``."""

    __slots__ = ("field", "nvars", "_terms", "_hash")

    def __init__(self, field: FieldSpec, nvars: int, terms: Mapping | Iterable = ()):
        _check_nvars(nvars)
        clean = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars or any(a < 0 for a in mono):
                raise ValueError(f"bad monomial {mono} for {nvars} variables")
            c = field(c)
            if mono in clean:
                c = field.add(clean[mono], c)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.field = field
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, field, nvars, terms: dict) -> "Polynomial":
        # trusted constructor: terms already reduced and zero-free
        p = object.__new__(cls)
        p.field, p.nvars, p._terms, p._hash = field, nvars, terms, None
        return p

    @classmethod
    def zero(cls, field: FieldSpec, nvars: int) -> "Polynomial":
        return cls(field, nvars)

    @classmethod
    def constant(cls, field: FieldSpec, nvars: int, c=1) -> "Polynomial":
        return cls(field, nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, field: FieldSpec, mono: Sequence[int], c=1) -> "Polynomial":
        return cls(field, len(mono), {tuple(mono): c})

    @classmethod
    def variable(cls, field: FieldSpec, nvars: int, i: int) -> "Polynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1})

    @property
    def terms(self) -> Mapping[Monomial, Scalar]:
        return MappingProxyType(self._terms)

    def coefficient(self, mono: Monomial) -> Scalar:
        return self._terms.get(tuple(mono), self.field.zero)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, key=grlex_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.field, self.nvars, {m: c for m, c in self._terms.items() if sum(m) == d})

    def _check(self, other: "Polynomial"):
        check_same_field(self.field, other.field)
        if self.nvars != other.nvars:
            raise DomainMismatchError(f"{self.nvars} vs {other.nvars} variables")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return Polynomial.constant(self.field, self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = f.add(out[m], c) if m in out else c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(f, self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return Polynomial._raw(f, self.nvars, {m: f.neg(c) for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        f = self.field
        c = f(c)
        if not c:
            return Polynomial.zero(f, self.nvars)
        return Polynomial._raw(f, self.nvars, {m: f.mul(c, v) for m, v in self._terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return power(self, k)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, int):
            return self == Polynomial.constant(self.field, self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_str(self, dual: bool = False) -> str:
        return format_polynomial(self, dual=dual)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {format_polynomial(self)!r})"


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    f = p.field
    out: dict = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            c = f.mul(c1, c2)
            out[m] = f.add(out[m], c) if m in out else c
    return Polynomial._raw(f, p.nvars, {m: c for m, c in out.items() if c})


def power(p: Polynomial, k: int) -> Polynomial:
    """``p**k`` by repeated multiplication inside the field.

    Multinomial coefficients are never formed as integers, so in
    characteristic p they vanish exactly when they should.
    """
    if k < 0:
        raise ValueError("negative exponent")
    result = Polynomial.constant(p.field, p.nvars, 1)
    base = p
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def contract(r_elt: Polynomial, f: Polynomial) -> Polynomial:
    """Contraction ``r_elt o f``: x^b o X^a = X^(a-b) when a >= b, else 0."""
    r_elt._check(f)
    fld = f.field
    out: dict = {}
    for b, cb in r_elt._terms.items():
        for a, ca in f._terms.items():
            if all(ai >= bi for ai, bi in zip(a, b)):
                m = tuple(ai - bi for ai, bi in zip(a, b))
                c = fld.mul(cb, ca)
                out[m] = fld.add(out[m], c) if m in out else c
    return Polynomial._raw(fld, f.nvars, {m: c for m, c in out.items() if c})


def contract_monomial(b: Monomial, f: Polynomial) -> Polynomial:
    """Fast path for ``x^b o f``."""
    out = {}
    for a, ca in f._terms.items():
        if all(ai >= bi for ai, bi in zip(a, b)):
            out[tuple(ai - bi for ai, bi in zip(a, b))] = ca
    return Polynomial._raw(f.field, f.nvars, out)


@dataclass(frozen=True)
class LinearForm:
    """``a_1 x_1 + ... + a_r x_r`` stored by its coefficient vector."""

    field: FieldSpec
    coefficients: tuple

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.field(c) for c in self.coefficients))
        _check_nvars(len(self.coefficients))

    @classmethod
    def ones(cls, field: FieldSpec, nvars: int) -> "LinearForm":
        return cls(field, (1,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def polynomial(self) -> Polynomial:
        n = self.nvars
        terms = {}
        for i, c in enumerate(self.coefficients):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return Polynomial(self.field, n, terms)

    def __str__(self):
        return str(self.polynomial())


# ---------------------------------------------------------------- text I/O

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z])|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, nvars: int, field: FieldSpec):
        self.tokens = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.field = field
        self.names = {name: k for k, name in enumerate(VAR_NAMES[:nvars])}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind, value=None):
        tok = self.take()
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        return tok

    def parse(self) -> Polynomial:
        terms: dict = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", self.peek()[2])
        while True:
            coeff, mono = self.term()
            c = self.field(coeff * sign)
            terms[mono] = self.field.add(terms[mono], c) if mono in terms else c
            tok = self.take()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                continue
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return Polynomial(self.field, self.nvars, terms)

    def term(self):
        coeff = Fraction(1)
        exps = [0] * self.nvars
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            coeff = Fraction(int(tok[1]))
            if self.peek()[:2] == ("op", "/"):
                slash = self.take()
                if self.field.characteristic:
                    raise ParseError("fractional coefficients are only allowed over QQ", slash[2])
                den = self.expect("num")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2])
                coeff /= int(den[1])
            if self.peek()[:2] != ("op", "*"):
                return coeff, tuple(exps)
            self.take()
            self.factor(exps)
        else:
            self.factor(exps)
        while self.peek()[:2] == ("op", "*"):
            self.take()
            self.factor(exps)
        return coeff, tuple(exps)

    def factor(self, exps):
        tok = self.take()
        if tok[0] != "var":
            raise ParseError(f"expected a variable, found {tok[1] or 'end of input'!r}", tok[2])
        name = tok[1].lower()
        if name not in self.names:
            raise ParseError(f"unknown variable {tok[1]!r} for {self.nvars} variables", tok[2])
        e = 1
        if self.peek()[:2] == ("op", "^"):
            self.take()
            num = self.expect("num")
            e = int(num[1])
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds 2^31", num[2])
        exps[self.names[name]] += e


def parse_polynomial(text: str, nvars: int = 3, field: FieldSpec = FieldSpec(0)) -> Polynomial:
    """Parse ``"x^3 + 2*y*z^2"``-style text. Upper-case variables parse identically."""
    _check_nvars(nvars)
    return _Parser(text, nvars, field).parse()


def parse_linear_form(text: str, nvars: int = 3, field: FieldSpec = FieldSpec(0)) -> LinearForm:
    p = parse_polynomial(text, nvars, field)
    if p.is_zero() or p.degree != 1 or not p.is_homogeneous():
        raise ParseError(f"{text!r} is not a nonzero linear form")
    coeffs = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = 1
        coeffs.append(p.coefficient(tuple(e)))
    return LinearForm(field, tuple(coeffs))


def format_monomial(mono: Monomial, dual: bool = False) -> str:
    names = var_names(len(mono), dual)
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, dual: bool = False) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for mono in p.monomials():
        c = p.coefficient(mono)
        neg = False
        if p.field.characteristic == 0 and c < 0:
            neg, c = True, -c
        body = format_monomial(mono, dual)
        if body == "1":
            text = str(c)
        elif c == 1:
            text = body
        else:
            text = f"{c}*{body}"
        if not pieces:
            pieces.append(("-" if neg else "") + text)
        else:
            pieces.append(("- " if neg else "+ ") + text)
    return " ".join(pieces)
