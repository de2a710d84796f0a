"""Independent reference computations used to freeze and cross-check expected values.

None of these go through the library's elimination, pairing or contraction
code paths: ranks come from sympy, Hessians from ordinary differentiation,
Jordan types from dense matrix powers on the module of derivatives of F.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import sympy
from sympy.polys.domains import GF, QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from artinlef.fields import FieldSpec
from artinlef.polyring import Polynomial, monomial_basis


def _domain(field: FieldSpec):
    return SQQ if field.characteristic == 0 else GF(field.characteristic)


def sympy_rank(rows, field: FieldSpec) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    dom = _domain(field)
    conv = [[dom.convert(sympy.Rational(int(Fraction(x).numerator), int(Fraction(x).denominator)))
             if field.characteristic == 0 else dom(int(x)) for x in r] for r in rows]
    return DomainMatrix(conv, (len(rows), len(rows[0])), dom).rank()


def sympy_det(rows) -> Fraction:
    M = sympy.Matrix([[sympy.Rational(str(Fraction(x))) for x in r] for r in rows])
    d = M.det()
    return Fraction(int(d.p), int(d.q))


# ------------------------------------------------------------ contractions

def contraction_images(F: Polynomial, d: int) -> list[Polynomial]:
    """m o F for every degree-d monomial m, by literal exponent subtraction."""
    out = []
    for m in monomial_basis(d, F.nvars):
        terms = {}
        for a, c in F.terms.items():
            if all(x >= y for x, y in zip(a, m)):
                terms[tuple(x - y for x, y in zip(a, m))] = c
        out.append(Polynomial(F.field, F.nvars, terms))
    return out


def hf_oracle(F: Polynomial) -> tuple[int, ...]:
    j = F.degree
    T = []
    for d in range(j + 1):
        imgs = contraction_images(F, d)
        basis = monomial_basis(j - d, F.nvars)
        T.append(sympy_rank([[g.coefficient(b) for b in basis] for g in imgs], F.field))
    return tuple(T)


# ------------------------------------------------------------ Jordan type

def dense_jordan_oracle_dual(F: Polynomial, ell) -> tuple[int, ...]:
    """Jordan type of contraction by ell on R o F (isomorphic to A = R/Ann F), char 0."""
    nvars = F.nvars
    j = F.degree
    # global basis of R o F
    vecs = []
    for d in range(j + 1):
        mons = monomial_basis(d, nvars)
        rows = [[g.coefficient(b) for b in mons] for g in contraction_images(F, j - d)]
        M = sympy.Matrix([[sympy.Rational(str(Fraction(x))) for x in r] for r in rows])
        for v in M.T.columnspace():
            vecs.append(Polynomial(F.field, nvars, {m: Fraction(str(c)) for m, c in zip(mons, v) if c != 0}))
    n = len(vecs)
    # coordinates: solve in the ambient monomial space
    all_mons = [m for d in range(j + 1) for m in monomial_basis(d, nvars)]
    B = sympy.Matrix([[sympy.Rational(str(Fraction(v.coefficient(m)))) for v in vecs] for m in all_mons])
    lin = {tuple(1 if k == i else 0 for k in range(nvars)): ell[i] for i in range(nvars)}
    cols = []
    for v in vecs:
        img = {}
        for a, c in v.terms.items():
            for b, lc in lin.items():
                if all(x >= y for x, y in zip(a, b)):
                    m = tuple(x - y for x, y in zip(a, b))
                    img[m] = img.get(m, 0) + Fraction(c) * Fraction(lc)
        w = sympy.Matrix([sympy.Rational(str(img.get(m, 0))) for m in all_mons])
        sol, params = B.gauss_jordan_solve(w)
        cols.append(list(sol))
    L = sympy.Matrix(n, n, lambda r, c: cols[c][r])
    return _blocks_from_powers(L, n)


def dense_jordan_oracle_monomial(gens, nvars, ell, p=0) -> tuple[int, ...]:
    """Jordan type of multiplication by ell on R/(monomials) using the full dense matrix."""
    std = []
    d = 0
    while True:
        layer = [m for m in monomial_basis(d, nvars)
                 if not any(all(x >= y for x, y in zip(m, g)) for g in gens)]
        if not layer:
            break
        std.extend(layer)
        d += 1
    idx = {m: k for k, m in enumerate(std)}
    n = len(std)
    L = sympy.zeros(n, n)
    for m in std:
        for i in range(nvars):
            t = list(m)
            t[i] += 1
            t = tuple(t)
            if t in idx:
                L[idx[t], idx[m]] += ell[i]
    return _blocks_from_powers(L, n, p)


def _blocks_from_powers(L, n, p=0):
    ranks = [n]
    P = sympy.eye(n)
    while ranks[-1] > 0:
        P = P * L
        if p:
            P = P.applyfunc(lambda x: x % p)
            dom = GF(p)
            r = DomainMatrix([[dom(int(x)) for x in P.row(i)] for i in range(n)], (n, n), dom).rank()
        else:
            r = P.rank()
        ranks.append(r)
    ranks += [0, 0]
    parts = []
    for size in range(1, len(ranks) - 1):
        parts += [size] * (ranks[size - 1] - 2 * ranks[size] + ranks[size + 1])
    return tuple(sorted(parts, reverse=True))


# ------------------------------------------------------------ Hessian

def hessian_oracle(F: Polynomial, i: int, point) -> Fraction:
    """det of the i-th Hessian of the ordinary polynomial sum F_a X^a / a!, at point."""
    xs = sympy.symbols(f"x0:{F.nvars}")
    f = 0
    for a, c in F.terms.items():
        term = sympy.Rational(str(Fraction(c)))
        for x, e in zip(xs, a):
            term *= x ** e / sympy.factorial(e)
        f += term
    mons = monomial_basis(i, F.nvars)
    subs = dict(zip(xs, point))
    M = sympy.zeros(len(mons), len(mons))
    for r, u in enumerate(mons):
        for c, v in enumerate(mons):
            g = f
            for x, e in zip(xs, [a + b for a, b in zip(u, v)]):
                if e:
                    g = sympy.diff(g, x, e)
            M[r, c] = g.subs(subs)
    d = M.det()
    return Fraction(int(d.p), int(d.q))


# ------------------------------------------------------------ Macaulay growth

def macaulay_bound_oracle(h: int, d: int) -> int:
    """Maximal degree-(d+1) Hilbert function after h in degree d, by lex-segment counting."""
    n = 1
    while comb(n - 1 + d, d) < h:
        n += 1
    n += 1
    mons_d = sorted(combinations_with_replacement(range(n), d))  # lex order, largest first
    keep = set(mons_d[len(mons_d) - h:])  # complement of a lex segment: the h smallest
    count = 0
    for m in combinations_with_replacement(range(n), d + 1):
        if all(tuple(m[:k] + m[k + 1:]) in keep for k in range(d + 1)):
            count += 1
    return count


# ------------------------------------------------------------ random instances

def random_form(rng: random.Random, field: FieldSpec, nvars: int, j: int, density=1.0, lo=-5, hi=5):
    terms = {}
    for m in monomial_basis(j, nvars):
        if rng.random() < density:
            terms[m] = rng.randint(lo, hi)
    return Polynomial(field, nvars, terms)
