"""Fixed reproduction suite: the positive-characteristic counterexamples and
spot checks of the Sperner-number-at-most-six families in characteristic zero."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .apolarity import ArtinAlgebra, DualGenerator
from .fields import FieldSpec, QQ
from .lefschetz import generic_verdict, jordan_type, mult_rank, pairing_matrix, verdict_at, power_images
from .polyring import LinearForm, Polynomial, monomial_basis
from .sequences import conjugate_partition, sperner_six_families, theorem_coverage


@dataclass
class SuiteItem:
    name: str
    passed: bool
    detail: str

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def power_sum_dual(points: Sequence[Sequence[int]], j: int, field: FieldSpec = QQ) -> Polynomial:
    """Sum of divided powers ``L_p^[j]`` of the linear forms with coefficient vectors ``points``."""
    nvars = len(points[0])
    terms: dict = {}
    for pt in points:
        for e in monomial_basis(j, nvars):
            c = Fraction(1)
            for a, k in zip(pt, e):
                c *= Fraction(a) ** k
            terms[e] = terms.get(e, 0) + c
    return Polynomial(field, nvars, terms)


def realize(T: Sequence[int]) -> Polynomial:
    """A dual generator over Q with Hilbert function ``T`` for each Sperner <= 6 family.

    Families rising (1,3,4,5,...) are connected sums ``X^j + G(Y, Z)``; the
    others are power sums of points in general position, or on a conic for
    (1,3,5,6^k,5,3,1).
    """
    T = tuple(T)
    j = len(T) - 1
    s = max(T)
    if j >= 4 and T[2] == 4 and s >= 5:
        binary = [(0, 1, c) for c in range(1, s)]
        return power_sum_dual([(1, 0, 0)] + binary, j)
    if len(T) > 3 and T[2] == 5 and s == 6:
        return power_sum_dual([(1, t, t * t) for t in range(6)], j)
    general = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), (1, 3, 7)]
    return power_sum_dual(general[:s], j)


def _monomial(gens, p):
    return ArtinAlgebra.from_monomial_ideal(gens, FieldSpec(p))


def _example_a() -> SuiteItem:
    A = _monomial([(3, 0, 0), (0, 3, 0), (0, 0, 2)], 3)
    ell = LinearForm.ones(A.field, 3)
    r = mult_rank(A, ell, 1, 3)
    g = generic_verdict(A)
    ok = A.hilbert == (1, 3, 5, 5, 3, 1) and r == 0 and g.wl is False and g.decisive
    return SuiteItem("counterexample (a) char 3, I=(x^3,y^3,z^2)", ok,
                     f"T={A.hilbert}, rank(l^3: A_1->A_4)={r}, generic wl={g.wl}, decisive={g.decisive}")


def _example_b() -> SuiteItem:
    A = _monomial([(4, 0), (0, 4)], 2)
    ell = LinearForm.ones(A.field, 2)
    r = mult_rank(A, ell, 2, 2)
    v = verdict_at(A, ell)
    ok = A.hilbert == (1, 2, 3, 4, 3, 2, 1) and r == 2 and v.almost_sl is False
    return SuiteItem("counterexample (b) char 2, I=(x^4,y^4)", ok,
                     f"T={A.hilbert}, rank(l^2: A_2->A_4)={r}, almost_sl={v.almost_sl}")


def _example_c() -> SuiteItem:
    A = _monomial([(3, 0, 0), (0, 3, 0), (0, 0, 4)], 3)
    ell = LinearForm.ones(A.field, 3)
    r = mult_rank(A, ell, 2, 3)
    v = verdict_at(A, ell)
    ok = A.hilbert == (1, 3, 6, 8, 8, 6, 3, 1) and r == 3 and v.almost_sl is False
    return SuiteItem("counterexample (c) char 3, I=(x^3,y^3,z^4)", ok,
                     f"T={A.hilbert}, rank(l^3: A_2->A_5)={r}, almost_sl={v.almost_sl}")


def example_d_data() -> dict:
    A = _monomial([(3, 0, 0), (0, 3, 0), (0, 0, 14)], 13)
    ell = LinearForm.ones(A.field, 3)
    M = pairing_matrix(A, ell, 2, 13)
    z2 = A.index_of((0, 0, 2))
    z2_in_kernel = not any(M.row(z2))
    top = power_images(A, ell)[17].coefficient((2, 2, 13))
    v = verdict_at(A, ell)
    # l^{2i+1}: A_{8-i} -> A_{9+i}
    failing = sorted(8 - e.i for e in v.strong_ranks if not e.full)
    return {"algebra": A, "z2_in_kernel": z2_in_kernel, "top_coefficient": top,
            "failing_i": failing, "almost_sl": v.almost_sl, "verdict": v}


def _example_d() -> SuiteItem:
    d = example_d_data()
    ok = d["z2_in_kernel"] and d["top_coefficient"] == 14280 % 13 and d["failing_i"] == [5, 6, 7] \
        and d["almost_sl"] is False
    return SuiteItem("counterexample (d) char 13, I=(x^3,y^3,z^14)", ok,
                     f"z^2 in ker(l^13: A_2->A_15)={d['z2_in_kernel']}, coefficient of x^2y^2z^13 in "
                     f"l^17 = {d['top_coefficient']}, failing i={d['failing_i']}, almost_sl={d['almost_sl']}")


def _table_one_checks(max_socle: int = 9) -> list[SuiteItem]:
    items = []
    seen = {}
    for T in sperner_six_families(max_socle):
        key = (T[:T.index(max(T))], max(T))
        seen[key] = seen.get(key, 0) + 1
        if seen[key] > 2:
            continue
        F = DualGenerator(realize(T))
        A = ArtinAlgebra.from_dual(F)
        tag = theorem_coverage(T)
        g = generic_verdict(A, trials=10, seed=1)
        jt = jordan_type(A, g.witness)
        ok = A.hilbert == T and tag.startswith("SL-") and g.sl is True and jt == conjugate_partition(T)
        items.append(SuiteItem(f"Sperner <= 6 family {T}", ok,
                               f"realized T={A.hilbert}, tag={tag}, generic sl={g.sl}, witness={g.witness}"))
    return items


EXAMPLES: list[Callable[[], SuiteItem]] = [_example_a, _example_b, _example_c, _example_d]


def run_suite(include_tables: bool = True) -> list[SuiteItem]:
    items = [fn() for fn in EXAMPLES]
    if include_tables:
        items.extend(_table_one_checks())
    return items
