import random

import pytest
from hypothesis import given, strategies as st

from leflab.polyring import Polynomial
from leflab.samples import aci_triple, random_form
from leflab.syzygy import (
    FreeModuleElement,
    in_submodule,
    min_syzygy_degree,
    minimal_generators,
    minimalize,
    presentation,
    syzygies,
)

x0, x1, x2 = (Polynomial.variable(i, 3) for i in range(3))
ZERO = Polynomial.zero(3)


def vec(*comps, degrees):
    return FreeModuleElement(tuple(comps), tuple(degrees))


@st.composite
def columns(draw, k=None):
    rng = random.Random(draw(st.integers(0, 10 ** 6)))
    k = k or rng.randint(2, 3)
    return [random_form(rng, 3, rng.randint(1, 2), bound=3, nterms=rng.randint(1, 3))
            for _ in range(k)]


def test_koszul_pair():
    syz = minimal_generators(syzygies([x0, x1]))
    assert len(syz) == 1
    g = syz[0]
    assert g.degree == 2
    assert g.dot([x0, x1]).is_zero()
    assert {g.components[0], -g.components[0]} == {x1, -x1}


def test_three_monomials():
    cols = [x1 * x2, x0 * x2, x0 * x1]
    gens = syzygies(cols, [2, 2, 2])
    assert all(g.dot(cols).is_zero() for g in gens)
    mins = minimal_generators(gens)
    assert [g.degree for g in mins] == [3, 3]
    assert in_submodule(vec(x0, -x1, ZERO, degrees=(2, 2, 2)), mins)
    assert in_submodule(vec(ZERO, x1, -x2, degrees=(2, 2, 2)), mins)


def test_single_column_has_no_syzygies():
    assert syzygies([x0 ** 2 + x1 * x2]) == []


def test_zero_column_rejected():
    with pytest.raises(ValueError):
        syzygies([x0, ZERO])


def test_minimalize_drops_multiples():
    k = vec(x1, -x0, degrees=(1, 1))
    pres = minimalize([k, k * x0])
    assert pres.generator_degrees == [2]
    assert minimalize([]).generator_degrees == []


def test_presentation_of_koszul_module():
    # syzygies of (x0, x1, x2): three Koszul relations, one second syzygy in degree 3
    syz = minimal_generators(syzygies([x0, x1, x2]))
    pres = presentation(syz)
    assert pres.generator_degrees == [2, 2, 2]
    assert pres.relation_degrees == [3]


@given(columns())
def test_syzygies_satisfy_relation(cols):
    for g in syzygies(cols):
        assert g.dot(cols).is_zero()


@given(columns(), st.randoms(use_true_random=False))
def test_minimal_degrees_invariant(cols, rnd):
    gens = syzygies(cols)
    base = sorted(g.degree for g in minimal_generators(gens))
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    padded = shuffled + [g * x2 for g in gens[:2]] + ([gens[0] + gens[-1]] if
                                                       gens and gens[0].degree == gens[-1].degree
                                                       else [])
    assert sorted(g.degree for g in minimal_generators(padded)) == base


def test_min_syzygy_degree_examples():
    assert min_syzygy_degree(x1 * x2, x0 * x2, x0 * x1) == 3


def test_min_syzygy_degree_dimension_guard():
    with pytest.raises(ValueError):
        min_syzygy_degree(x0, x1, x2)


def test_min_syzygy_degree_koszul_bound():
    rng = random.Random(11)
    for _ in range(5):
        f = aci_triple(rng, max_degree=2)
        d = [g.degree() for g in f]
        assert min_syzygy_degree(*f) <= min(d[i] + d[j] for i in range(3) for j in range(i))
