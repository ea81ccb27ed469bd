import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlrc.code import encode
from hlrc.errors import DuplicateAbscissaError, EmptyInputError, FieldMismatchError, ZeroPolynomialError
from hlrc.gf import field_new
from hlrc.poly import ZERO_DEGREE, Poly, distinct_roots, interpolate

FIELDS = [(19, 1), (2, 6), (3, 2), (31, 1)]


def rand_poly(F, deg, rng):
    return Poly(F, [rng.randrange(F.q) for _ in range(deg + 1)])


def polys(F, max_deg=6):
    return st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1).map(lambda cs: Poly(F, cs))


def test_normalisation_and_degree(gf19):
    assert Poly(gf19, [1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly(gf19, [0, 0]).degree == ZERO_DEGREE < 0
    assert Poly.zero(gf19).is_zero()


def test_products(gf19):
    X = Poly.x(gf19)
    assert X * X == Poly.monomial(gf19, 2)
    X3 = Poly.monomial(gf19, 3)
    assert X3 * X3 == Poly.monomial(gf19, 6)
    f = Poly(gf19, [3, 0, 5, 1])
    assert (f + (-f)).is_zero()
    assert (f - f).is_zero()
    assert f * 2 == Poly(gf19, [6, 0, 10, 2])


def test_eval_toy_values(gf19):
    assert Poly.monomial(gf19, 9)(2) == 18
    assert Poly.monomial(gf19, 7)(2) == 14
    f = Poly(gf19, [4, 5, 6])
    assert f(0) == 4


def test_compose(gf19):
    f, h = Poly.monomial(gf19, 2), Poly.monomial(gf19, 3)
    assert f.compose(h) == Poly.monomial(gf19, 6)
    c = Poly.constant(gf19, 7)
    assert c.compose(h) == c


@pytest.mark.parametrize("pe", FIELDS)
def test_compose_commutes_with_eval_exhaustive(pe):
    F = field_new(*pe)
    rng = random.Random(F.q)
    for _ in range(5):
        f, h = rand_poly(F, rng.randrange(1, 4), rng), rand_poly(F, rng.randrange(1, 4), rng)
        fh = f.compose(h)
        assert fh.degree == f.degree * h.degree
        assert all(fh(x) == f(h(x)) for x in F.elements())


def test_field_mismatch(gf19, gf64):
    with pytest.raises(FieldMismatchError):
        Poly.x(gf19) + Poly.x(gf64)
    with pytest.raises(FieldMismatchError):
        Poly.x(gf19).compose(Poly.x(gf64))


def test_interpolate_single_point(gf19):
    assert interpolate(gf19, [(5, 9)]) == Poly.constant(gf19, 9)


def test_interpolate_recovers_quadratic(gf19):
    m = Poly(gf19, [3, 1, 4])
    assert interpolate(gf19, [(x, m(x)) for x in (2, 5, 11)]) == m


def test_interpolate_errors(gf19):
    with pytest.raises(EmptyInputError):
        interpolate(gf19, [])
    with pytest.raises(DuplicateAbscissaError):
        interpolate(gf19, [(1, 2), (1, 3)])


def test_subnest_interpolation_repairs_symbol(toy):
    rng = random.Random(7)
    for _ in range(50):
        cw = encode(toy, [rng.randrange(19) for _ in range(toy.k)])
        pos = toy.index_of_point
        local = interpolate(toy.field, [(1, cw[pos[1]]), (7, cw[pos[7]])])
        assert local(11) == cw[pos[11]]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_interpolation_round_trip(pe, data):
    F = field_new(*pe)
    t = data.draw(st.integers(1, min(12, F.q)))
    coeffs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=t, max_size=t))
    m = Poly(F, coeffs)
    xs = data.draw(st.lists(st.integers(0, F.q - 1), min_size=t, max_size=t, unique=True))
    assert interpolate(F, [(x, m(x)) for x in xs]) == m


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_degree_of_product(pe, data):
    F = field_new(*pe)
    u, v = data.draw(polys(F)), data.draw(polys(F))
    if not u.is_zero() and not v.is_zero():
        assert (u * v).degree == u.degree + v.degree
    assert u * v == v * u


def test_distinct_roots(gf19):
    assert distinct_roots(Poly.monomial(gf19, 6) - Poly.constant(gf19, 1)) == {1, 7, 11, 8, 12, 18}
    assert distinct_roots(Poly(gf19, [gf19.neg(5), 1])) == {5}
    assert distinct_roots(Poly(gf19, [1, 0, 1])) == set()
    with pytest.raises(ZeroPolynomialError):
        distinct_roots(Poly.zero(gf19))


def test_json(gf19):
    m = Poly(gf19, [0, 0, 1])
    assert m.to_dict() == {"coeffs": [0, 0, 1]}
    assert Poly.from_dict(gf19, m.to_dict()) == m
