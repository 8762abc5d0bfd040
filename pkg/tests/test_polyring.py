import pytest
from hypothesis import given, strategies as st

from leflab.polyring import (
    QQ,
    LinearChange,
    ParseError,
    Polynomial,
    apply_change,
    degrevlex_compare,
    graded_basis,
    parse_polynomial,
    parse_polynomials,
    partial_derivative,
)

N = 3


def monomials(n=N, max_e=4):
    return st.tuples(*[st.integers(0, max_e) for _ in range(n)])


def polynomials(n=N, max_e=3, max_terms=5):
    return st.dictionaries(monomials(n, max_e), st.integers(-9, 9), max_size=max_terms).map(
        lambda t: Polynomial(n, t))


@st.composite
def forms(draw, n=N, degree=None):
    d = draw(st.integers(0, 3)) if degree is None else degree
    basis = graded_basis(d, n)
    coeffs = draw(st.lists(st.integers(-5, 5), min_size=len(basis), max_size=len(basis)))
    return Polynomial(n, dict(zip(basis, coeffs)))


@st.composite
def changes(draw, n=N):
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                         min_size=n, max_size=n))
    try:
        return LinearChange(rows)
    except ValueError:
        return LinearChange.identity(n)


x0, x1, x2 = (Polynomial.variable(i, N) for i in range(N))


def test_degrevlex_examples():
    assert degrevlex_compare((1, 0, 0), (0, 1, 0)) == 1
    assert degrevlex_compare((0, 2, 0), (1, 0, 1)) == 1
    assert degrevlex_compare((1, 2, 3), (1, 2, 3)) == 0
    assert degrevlex_compare((0, 0, 2), (1, 0, 0)) == 1  # degree first


def test_degrevlex_length_mismatch():
    with pytest.raises(ValueError):
        degrevlex_compare((1, 0), (1, 0, 0))


@given(monomials(), monomials(), monomials())
def test_degrevlex_multiplicative(a, b, c):
    ac = tuple(p + q for p, q in zip(a, c))
    bc = tuple(p + q for p, q in zip(b, c))
    assert degrevlex_compare(ac, bc) == degrevlex_compare(a, b)


@given(monomials(), monomials())
def test_degrevlex_antisymmetric(a, b):
    assert degrevlex_compare(a, b) == -degrevlex_compare(b, a)


def test_graded_basis():
    assert graded_basis(0, 3) == ((0, 0, 0),)
    assert list(graded_basis(1, 3)) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    b = graded_basis(2, 3)
    assert len(b) == 6 and b[0] == (2, 0, 0) and b[-1] == (0, 0, 2)
    assert len(graded_basis(5, 4)) == 56


def test_apply_change_examples():
    assert apply_change(x0, LinearChange.identity(3)) == x0
    swap = LinearChange.permutation([1, 0, 2])
    assert apply_change(x0 ** 2, swap) == x1 ** 2
    g = LinearChange([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert apply_change(x0 + x1, g) == x0 + 2 * x1


def test_singular_change_rejected():
    with pytest.raises(ValueError):
        LinearChange([[1, 2], [2, 4]])


@given(polynomials(), polynomials(), changes())
def test_apply_change_is_homomorphism(f, g, h):
    assert apply_change(f + g, h) == apply_change(f, h) + apply_change(g, h)
    assert apply_change(f * g, h) == apply_change(f, h) * apply_change(g, h)


@given(polynomials(), changes(), changes())
def test_apply_change_composition(f, a, b):
    assert apply_change(apply_change(f, a), b) == apply_change(f, a.compose(b))


@given(polynomials(), changes())
def test_apply_change_inverse(f, g):
    assert apply_change(apply_change(f, g), g.inverse()) == f


@given(forms(), changes())
def test_apply_change_keeps_degree(f, g):
    h = apply_change(f, g)
    assert h.is_zero() or h.homogeneous_degree() == f.homogeneous_degree()


def test_partial_derivative_examples():
    assert partial_derivative(x0 ** 2, 0) == 2 * x0
    assert partial_derivative(x0 * x1 * x2, 1) == x0 * x2
    assert partial_derivative(Polynomial.constant(7, 3), 2).is_zero()


@given(forms())
def test_euler_relation(f):
    d = f.homogeneous_degree() if not f.is_zero() else 0
    lhs = sum((Polynomial.variable(i, N) * partial_derivative(f, i) for i in range(N)),
              Polynomial.zero(N))
    assert lhs == f.scale(d)


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


def test_leading_term_and_monic():
    f = 3 * x1 ** 2 + 6 * x0 * x2
    assert f.leading_monomial() == (0, 2, 0)
    assert f.monic().leading_coefficient() == 1


def test_parse_basic():
    f = parse_polynomial("x^2 - 3/4*x1*z + (y-z)^2", 3)
    assert f.coefficient((2, 0, 0)) == 1
    assert f.coefficient((0, 1, 1)) == QQ(-3, 4) - 2
    assert f.coefficient((0, 2, 0)) == 1
    assert parse_polynomial("2x0x1", 2) == 2 * Polynomial.variable(0, 2) * Polynomial.variable(1, 2)


def test_parse_list_with_header_and_comments():
    polys, n = parse_polynomials("# an ideal\nnvars: 4\nx0^2, x1*x3 # trailing\n x2\n")
    assert n == 4 and len(polys) == 3
    assert polys[1] == Polynomial.monomial((0, 1, 0, 1))


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomials("x0^2,\nx1 + * x2\n")
    assert info.value.line == 2
    assert info.value.column == 6


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_polynomial("x0 $ x1")
    with pytest.raises(ParseError):
        parse_polynomial("")


@given(polynomials())
def test_print_parse_roundtrip(f):
    assert parse_polynomial(str(f), N) == f
