import random

import pytest
from hypothesis import given, settings, strategies as st

from leflab.arrangement import jacobian_ideal, pencil_arrangement
from leflab.gin import is_saturated, regularity, rgin, saturation
from leflab.groebner import Ideal, MonomialIdeal
from leflab.hilbert import hilbert_function
from leflab.lefschetz import (
    DimensionError,
    GradedQuotient,
    SaturationQuotient,
    aci_analyze,
    artinian_truncation,
    classify_quotient,
    has_slp,
    has_wlp,
    kernel_monomials,
    mult_rank_monomial,
    oracle_verdict,
    proposition_bounds,
    sat_quotient_rank,
)
from leflab.polyring import Polynomial, parse_polynomials
from leflab.samples import aci_triple, equivalence_corpus, forms_through_points, small_ideal

import oracles

REMARK_A = "x0^2, x0*x1, x1^2, x0*x2^2"
REMARK_B = "x0^3, x0^2*x1, x0*x1^3, x1^4, x0*x1^2*x2"


def ideal(text, n=3):
    polys, n = parse_polynomials(text, n)
    return Ideal(polys, n)


def mono(gens, n=3):
    return MonomialIdeal(gens, n)


@st.composite
def small_ideals(draw, nvars=None):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    return small_ideal(rng, nvars or draw(st.integers(2, 3)))


def brute_slp(I, top=7):
    """SLP of S/I checked with z and with a fixed dense form, all i, s <= top."""
    for ell in (Polynomial.variable(2, 3), oracles.linear_form([17, -23, 31])):
        if all(oracles.full_rank(I, ell, i, s) for i in range(top + 1)
               for s in range(1, top + 1)):
            return True
    return False


def test_mult_rank_monomial_examples(eight_lines_jacobian):
    rec = mult_rank_monomial(mono([(1, 0, 0), (0, 1, 0), (0, 0, 1)]), 0, 1)
    assert (rec.rank, rec.dim_source, rec.dim_target, rec.full_rank) == (0, 1, 0, True)
    rec = mult_rank_monomial(mono([]), 3, 2)
    assert rec.full_rank and rec.rank == rec.dim_source == 10
    M = rgin(eight_lines_jacobian).result
    rec = mult_rank_monomial(M, 8, 3)
    assert (rec.dim_source, rec.dim_target) == (36, 36)
    assert rec.rank < 36 and not rec.full_rank
    assert (2, 6, 0) in kernel_monomials(M, 8, 3)
    assert rec.witness_kind == "kernel"
    with pytest.raises(ValueError):
        mult_rank_monomial(M, 0, 0)


def test_artinian_truncation_examples():
    m = mono([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert artinian_truncation(ideal("x0, x1, x2")) == m
    T = artinian_truncation(ideal("x0^2, x1^2"))
    assert T == mono([(2, 0, 0), (1, 1, 0), (0, 3, 0)]) + MonomialIdeal.power_of_maximal(4, 3)
    assert artinian_truncation(Ideal([Polynomial.constant(1, 3)], 3)).is_unit()


def test_remark_first_ideal():
    I = ideal(REMARK_A)
    assert has_wlp(I, cross_validate=True).holds
    # the quotient has HF 1,3,3,2,2,... and z^s is bijective from degree 3 on
    assert [oracles.hf(I, d) for d in range(6)] == [1, 3, 3, 2, 2, 2]
    assert brute_slp(I)
    assert has_slp(I, cross_validate=True).holds
    assert not is_saturated(I)


def test_remark_second_ideal():
    I = ideal(REMARK_B)
    assert has_slp(I, cross_validate=True).holds
    assert brute_slp(I)
    assert not is_saturated(I)


def test_trivial_inputs():
    assert has_wlp(ideal("x0, x1, x2")).holds
    assert has_slp(Ideal([Polynomial.constant(1, 3)], 3)).notes
    assert has_slp(Ideal([], 3)).holds


def test_eight_lines_slp_failure_and_wlp(eight_lines_jacobian):
    J = eight_lines_jacobian
    slp = has_slp(J, cross_validate=True)
    assert not slp.holds
    assert (8, 3) in slp.failure_pairs
    wlp = has_wlp(J, cross_validate=True)
    assert wlp.holds and wlp.failures == []


def test_report_invariants(eight_lines_jacobian):
    rep = has_slp(eight_lines_jacobian)
    assert rep.holds == (not rep.failures)
    for rec in rep.failures:
        assert rec.rank < min(rec.dim_source, rec.dim_target)


def test_oracle_route_matches_fast_route():
    for text in (REMARK_A, REMARK_B, "x0^2, x1^2, x2^2", "x0*x1, x0*x2"):
        I = ideal(text)
        for decide in (has_wlp, has_slp):
            assert decide(I).holds == decide(I, route="oracle").holds


@settings(max_examples=15)
@given(small_ideals())
def test_oracle_agreement_property(I):
    for prop in ("WLP", "SLP"):
        fast = (has_wlp if prop == "WLP" else has_slp)(I).holds
        assert oracle_verdict(I, prop)[0] == fast


def test_classify_quotient_examples():
    c = classify_quotient(ideal("x0", 4))
    assert (c.dim, c.saturated, c.slp, c.wlp, c.equivalences_consistent) == (3, True, True,
                                                                                True, True)
    # x0 * <x0, x1, x2^2> is saturated in 4 variables: its embedded prime misses x3
    c = classify_quotient(ideal("x0^2, x0*x1, x0*x2^2", 4), cross_validate=True, direct=True)
    assert c.dim == 3 and c.saturated and c.slp and c.wlp
    c = classify_quotient(ideal("x0^2, x0*x1, x0*x2, x0*x3", 4), cross_validate=True,
                          direct=True)
    assert c.dim == 3 and not c.saturated and not c.slp and not c.wlp
    assert c.equivalences_consistent
    c = classify_quotient(ideal("x1*x2, x0*x2, x0*x1"))
    assert not c.applicable and c.equivalences_consistent is None


def test_classify_quotient_corpus():
    seen = set()
    for _, I in equivalence_corpus(seed=17, count=8):
        c = classify_quotient(I, cross_validate=True)
        assert c.equivalences_consistent
        seen.add(c.saturated)
    assert seen == {True, False}


def test_sat_quotient_rank_examples():
    rec = sat_quotient_rank(ideal("x0, x1^2"), 2)
    assert (rec.dim_source, rec.dim_target, rec.rank) == (0, 0, 0)
    I = ideal(REMARK_A)
    sq = SaturationQuotient(I)
    # I^sat = <x0, x1^2>: the quotient is spanned by x0 in degree 1 and x0*x2 in degree 2
    assert [len(sq.piece(d)) for d in range(5)] == [0, 1, 1, 0, 0]
    rec = sq.rank(1)
    assert (rec.dim_source, rec.dim_target, rec.rank) == (1, 1, 1)
    assert sq.rank(2).rank == 0
    assert sq.rank(30).dim_source == 0


def _sat_piece_dim_oracle(I, S, d):
    return oracles.hf(I, d) - oracles.hf(S, d)


@settings(max_examples=15)
@given(small_ideals(nvars=3))
def test_lefschetz_transfer_lemmas(I):
    if I.is_unit():
        return
    ell = oracles.linear_form([5, -3, 7])
    sq = SaturationQuotient(I, ell=ell)
    S = sq.sat
    top = regularity(rgin(I).result) + 1
    for i in range(top + 1):
        rec = sq.rank(i)
        assert rec.dim_source == _sat_piece_dim_oracle(I, S, i)
        r_full = oracles.mult_rank(I, ell, i, 1)
        injective = r_full == oracles.hf(I, i)
        surjective = r_full == oracles.hf(I, i + 1)
        assert injective == rec.injective
        sat_surjective = oracles.mult_rank(S, ell, i, 1) == oracles.hf(S, i + 1)
        assert surjective == (rec.surjective and sat_surjective)


@settings(max_examples=15)
@given(small_ideals(nvars=3))
def test_saturated_quotients_have_slp(I):
    S = saturation(I)
    if S.is_unit():
        return
    assert has_slp(S).holds
    M = rgin(S).result
    hf = [hilbert_function(M, d) for d in range(regularity(M) + 4)]
    assert all(b >= a for a, b in zip(hf, hf[1:]))


def test_aci_coordinate_points():
    x0, x1, x2 = (Polynomial.variable(i, 3) for i in range(3))
    rep = aci_analyze(x1 * x2, x0 * x2, x0 * x1, cross_validate=True)
    assert (rep.m, rep.deg_f, rep.f_at_one) == (3, 1, 3)
    assert rep.saturated and rep.sat_ranks == [] and rep.wlp and rep.identity_holds


def test_aci_two_points():
    rng = random.Random(8)
    pts = [(1, 0, 0), (0, 1, 0)]
    f0, f1 = (forms_through_points(rng, pts, 2) for _ in range(2))
    f2 = forms_through_points(rng, pts, 3)
    rep = aci_analyze(f0, f1, f2, cross_validate=True)
    assert rep.degrees == (2, 2, 3)
    assert rep.f_at_one == 2 and rep.wlp
    assert rep.identity_holds and rep.proposition_bounds_verified
    # I^sat/I has dims 1, 2, 1 in degrees 1..3 and deg F = 1: a line cannot map onto a plane
    assert [(r.i, r.dim_source, r.rank) for r in rep.sat_ranks[1:4]] == [(1, 1, 1), (2, 2, 1),
                                                                          (3, 1, 0)]
    assert rep.injective_failures == [] and rep.surjective_failures == [1]


def test_aci_eight_lines(eight_lines_jacobian):
    rep = aci_analyze(*eight_lines_jacobian.generators)
    assert rep.wlp and rep.degrees == (7, 7, 7)
    assert rep.deg_f == 21 - rep.m - 2
    assert rep.stability == "unstable"
    assert rep.unstable_sharp_failure == 21 - rep.m - 1


def test_aci_guards():
    x0, x1, x2 = (Polynomial.variable(i, 3) for i in range(3))
    with pytest.raises(DimensionError):
        aci_analyze(x0, x1, x2)
    with pytest.raises(DimensionError):
        aci_analyze(x0 * x1, x0 * x2, x0 ** 2)


def test_aci_corpus_wlp_and_injectivity():
    rng = random.Random(4)
    for _ in range(6):
        rep = aci_analyze(*aci_triple(rng, max_degree=3))
        assert rep.wlp
        assert rep.injective_failures == []
        assert rep.proposition_bounds_verified
        assert rep.deg_f <= sum(rep.degrees) - rep.m - 2


def test_unstable_sharpness_on_pencils():
    rng = random.Random(2024)
    checked = 0
    for d, k in [(6, 4), (7, 5), (6, 4)]:
        A = pencil_arrangement(d, k, rng)
        rep = aci_analyze(*jacobian_ideal(A).generators)
        if rep.stability != "unstable" or rep.saturated:
            continue
        checked += 1
        assert rep.unstable_sharp_failure == sum(rep.degrees) - rep.m - 1
    assert checked >= 2


def test_proposition_bounds():
    assert proposition_bounds((7, 7, 7), 10) == (9, 8)
    assert proposition_bounds((2, 2, 2), 3) == (1, 1)
    assert proposition_bounds((2, 2, 3), 4) == (1, 2)


def test_graded_quotient_dims_match_oracle():
    I = ideal(REMARK_B)
    Q = GradedQuotient(I, top=6)
    assert [Q.dim(d) for d in range(7)] == [oracles.hf(I, d) for d in range(7)]
