import random

import pytest
from hypothesis import given, strategies as st

from leflab.gin import random_change
from leflab.groebner import (
    GroebnerBasis,
    Ideal,
    MonomialIdeal,
    buchberger,
    ideal_quotient,
    ideal_quotient_by_syzygies,
    irrelevant_saturation,
    leading_term_ideal,
    normal_form,
    saturate,
)
from leflab.hilbert import hilbert_function
from leflab.polyring import Polynomial, graded_basis, parse_polynomials
from leflab.samples import random_form

import oracles


def ideal(text, n=3):
    polys, n = parse_polynomials(text, n)
    return Ideal(polys, n)


x0, x1, x2 = (Polynomial.variable(i, 3) for i in range(3))


@st.composite
def small_ideals(draw, n=3, max_gens=4, max_deg=3):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    k = draw(st.integers(1, max_gens))
    gens = [random_form(rng, n, rng.randint(1, max_deg), bound=3, nterms=rng.randint(1, 4))
            for _ in range(k)]
    return Ideal(gens, n)


@st.composite
def nonzero_forms(draw, n=3, max_deg=2):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    return random_form(rng, n, rng.randint(1, max_deg), bound=3, nterms=rng.randint(1, 3))


def test_buchberger_examples():
    assert set(buchberger(ideal("x0, x1"))) == {x0, x1}
    G = buchberger(ideal("x0^2 - x1^2, x0*x1"))
    assert x1 ** 3 in set(G)
    assert leading_term_ideal(G) == MonomialIdeal([(2, 0, 0), (1, 1, 0), (0, 3, 0)], 3)
    f = 3 * x0 * x1 - 6 * x2 ** 2
    assert list(buchberger(Ideal([f], 3))) == [f.monic()]


def test_normal_form_examples():
    assert normal_form(x0 ** 2, buchberger(Ideal([x0], 3))).is_zero()
    assert normal_form(x1 ** 2, buchberger(Ideal([x0], 3))) == x1 ** 2
    assert normal_form(x0 * x1 + x1 ** 2, buchberger(Ideal([x0 - x1], 3))) == 2 * x1 ** 2


def test_reduced_basis_is_interreduced():
    G = buchberger(ideal("x0^3 - x1*x2^2, x0^2*x1 - x2^3, x1^3 - x0*x2^2"))
    lms = G.leading_monomials()
    for i, f in enumerate(G):
        assert f.leading_coefficient() == 1
        for j, m in enumerate(lms):
            if i != j:
                assert not any(all(a <= b for a, b in zip(m, t)) for t in f.terms)


def test_non_homogeneous_rejected():
    with pytest.raises(ValueError):
        Ideal([x0 ** 2 + x1], 3)


@given(small_ideals())
def test_gb_hilbert_function_matches_linear_algebra(I):
    lt = I.leading_term_ideal()
    for d in range(5):
        assert hilbert_function(lt, d) == oracles.hf(I, d)


@given(small_ideals(), st.integers(0, 10 ** 6))
def test_membership_agrees_with_linear_algebra(I, seed):
    rng = random.Random(seed)
    d = rng.randint(1, 4)
    gens = [g for g in I.generators if g.degree() <= d]
    f = Polynomial.zero(3)
    for g in gens:
        f = f + g * random_form(rng, 3, d - g.degree(), bound=2)
    if rng.random() < 0.5:
        f = f + random_form(rng, 3, d, bound=2, nterms=1)
    if f.is_zero():
        return
    assert I.contains(f) == oracles.member(I, f)


def test_colon_examples():
    assert ideal_quotient(ideal("x0*x1"), x0) == ideal("x1")
    assert ideal_quotient(ideal("x0^2, x0*x1"), x0) == ideal("x0, x1")
    I = ideal("x0^2 + x1*x2, x1^3")
    assert ideal_quotient(I, Polynomial.constant(1, 3)) == I
    with pytest.raises(ValueError):
        ideal_quotient(I, Polynomial.zero(3))


@given(small_ideals(), nonzero_forms())
def test_colon_against_linear_algebra(I, f):
    Q = ideal_quotient(I, f)
    G = I.groebner_basis()
    for g in Q.generators:
        assert normal_form(g * f, G).is_zero()
    lt = Q.leading_term_ideal()
    for d in range(5):
        expected = len(graded_basis(d, 3)) - oracles.colon_piece_dim(I, f, d)
        assert hilbert_function(lt, d) == expected


@given(small_ideals())
def test_colon_last_variable_shortcut_matches_syzygies(I):
    assert ideal_quotient(I, x2) == ideal_quotient_by_syzygies(I, x2)


def test_saturate_examples():
    assert saturate(ideal("x0*x2"), x2) == ideal("x0")
    sat = ideal("x0, x1^2")
    assert saturate(sat, x2) == sat
    assert saturate(ideal("x0^2, x0*x1, x1^2, x0*x2^2"), x2) == sat


@given(small_ideals(), nonzero_forms(max_deg=1))
def test_saturate_idempotent_and_increasing(I, f):
    S1 = saturate(I, f)
    assert saturate(S1, f) == S1
    Q1 = ideal_quotient(I, f)
    Q2 = ideal_quotient(Q1, f)
    assert all(Q1.contains(g) for g in I.generators)
    assert all(Q2.contains(g) for g in Q1.generators)
    assert all(S1.contains(g) for g in Q2.generators)


def test_irrelevant_saturation_examples():
    rng = random.Random(3)
    g = random_change(rng, 3, 50)
    I = ideal("x0, x1^2")
    assert irrelevant_saturation(I, g) == I
    J = irrelevant_saturation(ideal("x0^2, x0*x1, x1^2, x0*x2^2"), g)
    target = MonomialIdeal([(1, 0, 0), (0, 2, 0)], 3)
    lt = J.leading_term_ideal()
    assert all(hilbert_function(lt, d) == hilbert_function(target, d) for d in range(6))
    m3 = Ideal([Polynomial.monomial(m) for m in graded_basis(3, 3)], 3)
    assert irrelevant_saturation(m3, g).is_unit()


def test_ideal_equality_is_gb_equality():
    assert ideal("x0^2, x0*x1") == ideal("x0*x1, x0^2 + x0*x1")
    assert ideal("x0^2") != ideal("x0^3")
    assert GroebnerBasis([x0 * 2], 3) == GroebnerBasis([x0], 3)


def test_monomial_ideal_minimalizes():
    M = MonomialIdeal([(2, 0, 0), (2, 1, 0), (0, 1, 1), (1, 1, 1)], 3)
    assert sorted(M.mingens) == [(0, 1, 1), (2, 0, 0)]
    assert M.contains((3, 5, 0)) and not M.contains((1, 1, 0))
    assert M.colon_monomial((1, 0, 0)) == MonomialIdeal([(1, 0, 0), (0, 1, 1)], 3)
