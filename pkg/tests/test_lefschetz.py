import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from artinlef.apolarity import ArtinAlgebra, DualGenerator
from artinlef.errors import PreconditionError, UnsupportedCharacteristicError
from artinlef.fields import QQ, FieldSpec, det_eval, rank
from artinlef.lefschetz import (
    generic_verdict, hessian_det_at, hessian_matrix_at, is_cone, jordan_type, mult_rank, pairing_matrix,
    power_images, quotient_basis, verdict_at,
)
from artinlef.polyring import LinearForm, Polynomial, parse_polynomial
from artinlef.sequences import conjugate_partition

from oracles import dense_jordan_oracle_dual, hessian_oracle, random_form


def dual(text, nvars=3, field=QQ):
    return DualGenerator(parse_polynomial(text, nvars=nvars, field=field))


def ones(field, n=3):
    return LinearForm.ones(field, n)


F_MAIN = dual("X^4+Y^2*Z^2")
A_MAIN = ArtinAlgebra.from_dual(F_MAIN)
GF2, GF3, GF13 = FieldSpec(2), FieldSpec(3), FieldSpec(13)


def monomial_ci(degs, field=QQ):
    n = len(degs)
    return ArtinAlgebra.from_monomial_ideal([tuple(d if k == i else 0 for k in range(n))
                                             for i, d in enumerate(degs)], field)


def test_pairing_matrix_example():
    M = pairing_matrix(A_MAIN, ones(QQ), 1, 2)
    assert M.to_rows() == [[1, 0, 0], [0, 1, 2], [0, 2, 1]]
    assert rank(M) == 3
    assert det_eval(M) == -3
    assert rank(pairing_matrix(A_MAIN, ones(QQ), 2, 0)) == 4
    with pytest.raises(ValueError):
        pairing_matrix(A_MAIN, ones(QQ), 3, 2)


def test_pairing_matrix_monomial_zero():
    A = monomial_ci((3, 3, 2), GF3)
    assert pairing_matrix(A, ones(GF3), 1, 3).is_zero()


def test_mult_rank_counterexamples():
    assert mult_rank(monomial_ci((3, 3, 2), GF3), ones(GF3), 1, 3) == 0
    assert mult_rank(monomial_ci((4, 4), GF2), ones(GF2, 2), 2, 2) == 2
    assert mult_rank(monomial_ci((3, 3, 4), GF3), ones(GF3), 2, 3) == 3


def test_verdict_main_example():
    v = verdict_at(A_MAIN, ones(QQ))
    assert v.sl and v.wl and v.almost_sl
    assert power_images(A_MAIN, ones(QQ))[4].coefficient((0, 0, 0)) == 7


def test_verdict_char13():
    A = monomial_ci((3, 3, 14), GF13)
    v = verdict_at(A, ones(GF13))
    assert v.almost_sl is False
    assert sorted(8 - e.i for e in v.strong_ranks if not e.full) == [5, 6, 7]
    assert mult_rank(A, ones(GF13), 0, 17) == 1


def test_verdict_single_variable():
    assert verdict_at(monomial_ci((6,)), LinearForm(QQ, (1,))).sl


def test_verdict_rejects_zero_form():
    with pytest.raises(PreconditionError):
        verdict_at(A_MAIN, LinearForm(QQ, (0, 0, 0)))


def test_generic_verdict_examples():
    g = generic_verdict(monomial_ci((2, 2, 2)))
    assert g.sl and g.trials_used == 1 and tuple(g.witness.coefficients) == (1, 1, 1)
    g = generic_verdict(monomial_ci((3, 3, 2), GF3))
    assert g.wl is False and g.decisive


def test_generic_verdict_compressed_cubic():
    rng = random.Random(7)
    for _ in range(3):
        F = DualGenerator(random_form(rng, QQ, 3, 3))
        A = ArtinAlgebra.from_dual(F)
        assert A.hilbert == (1, 3, 3, 1)
        assert generic_verdict(A).sl


def test_generic_verdict_is_deterministic():
    A = ArtinAlgebra.from_dual(dual("X^3*Y+Y^2*Z^2+X*Z^3"))
    a, b = generic_verdict(A, seed=5), generic_verdict(A, seed=5)
    assert a.as_dict() == b.as_dict()


def test_jordan_type_examples():
    assert jordan_type(monomial_ci((2, 2, 2)), ones(QQ)) == (4, 2, 2)
    assert jordan_type(monomial_ci((2, 2)), ones(QQ, 2)) == (3, 1)
    assert jordan_type(monomial_ci((7,)), LinearForm(QQ, (1,))) == (7,)
    assert jordan_type(A_MAIN, ones(QQ)) == (5, 3, 3, 1)


def test_hessian_examples():
    assert hessian_det_at(F_MAIN, 1, (1, 1, 1)) == Fraction(-3, 8)
    assert hessian_matrix_at(F_MAIN, 0, (1, 1, 1)).to_rows() == [[Fraction(7, 24)]]
    assert hessian_matrix_at(F_MAIN, 1, (0, 0, 0)).is_zero()
    assert hessian_det_at(F_MAIN, 1, (0, 0, 0)) == 0


def test_hessian_characteristic_guard():
    with pytest.raises(UnsupportedCharacteristicError):
        hessian_det_at(dual("X^4+Y^4+Z^4", field=GF3), 1, (1, 1, 1))
    assert hessian_det_at(dual("X^4+Y^4+Z^4", field=GF13), 1, (1, 1, 1)) != 0


def test_hessian_quotient_basis():
    F = dual("X^4+Y^2*Z^2")
    basis = quotient_basis(F, 2)
    assert len(basis) == 4
    assert hessian_det_at(F, 2, (1, 1, 1), basis=basis) != 0
    assert hessian_det_at(F, 2, (1, 1, 1)) == 0


def test_is_cone_examples():
    assert is_cone(dual("X^3+X^2*Y"))
    assert not is_cone(dual("X*Y*Z"))
    assert not is_cone(F_MAIN)


@st.composite
def dual_algebras(draw, max_j=6):
    seed = draw(st.integers(0, 2**31))
    j = draw(st.integers(2, max_j))
    density = draw(st.sampled_from([0.3, 0.6, 1.0]))
    rng = random.Random(seed)
    F = random_form(rng, QQ, 3, j, density)
    if F.is_zero():
        F = Polynomial.monomial(QQ, (j, 0, 0))
    return ArtinAlgebra.from_dual(DualGenerator(F))


forms = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)).filter(any)


@settings(max_examples=30, deadline=None)
@given(dual_algebras(), forms, st.data())
def test_rank_duality_and_bounds(A, a, data):
    j = A.socle_degree
    ell = LinearForm(QQ, a)
    k = data.draw(st.integers(0, j))
    i = data.draw(st.integers(0, j - k))
    r = mult_rank(A, ell, i, k)
    assert r == mult_rank(A, ell, j - i - k, k)
    assert r <= min(A.hilbert[i], A.hilbert[i + k])


@settings(max_examples=30, deadline=None)
@given(dual_algebras(), forms)
def test_scaling_identity(A, a):
    F = A.dual
    j = A.socle_degree
    ell = LinearForm(QQ, a)
    for i in range(j // 2 + 1):
        k = j - 2 * i
        lhs = det_eval(pairing_matrix(A, ell, i, k))
        rhs = Fraction(factorial(k)) ** A.hilbert[i] * hessian_det_at(F, i, a)
        assert lhs == rhs


@settings(max_examples=15, deadline=None)
@given(dual_algebras(max_j=4), forms)
def test_hessian_matches_symbolic_oracle(A, a):
    i = A.socle_degree // 2
    assert hessian_det_at(A.dual, 1 if i >= 1 else 0, a) == hessian_oracle(A.dual.form, 1 if i >= 1 else 0, a)


@settings(max_examples=20, deadline=None)
@given(dual_algebras(max_j=5), forms)
def test_jordan_equivalences(A, a):
    ell = LinearForm(QQ, a)
    v = verdict_at(A, ell)
    jt = jordan_type(A, ell)
    assert sum(jt) == A.dim
    assert v.sl == (jt == conjugate_partition(A.hilbert))
    assert v.wl == (len(jt) == max(A.hilbert))
    if v.sl:
        assert v.wl and v.almost_sl


@settings(max_examples=8, deadline=None)
@given(dual_algebras(max_j=4), forms)
def test_jordan_matches_dense_oracle(A, a):
    assert jordan_type(A, LinearForm(QQ, a)) == dense_jordan_oracle_dual(A.dual.form, a)


@settings(max_examples=10, deadline=None)
@given(dual_algebras(max_j=4), forms)
def test_generic_soundness(A, a):
    if verdict_at(A, LinearForm(QQ, a)).sl:
        assert generic_verdict(A, trials=10).sl
