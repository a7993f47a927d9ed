"""Exterior algebra core: scalars, monomials, wedge signs, inner products.

The wedge sign is cross-checked against a brute-force oracle that lists a
monomial as a word of 1-form symbols and counts inversions of the full
concatenation sort.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kahlerlab.exterior import (
    Form,
    GaussRational,
    Monomial,
    bidegree_basis,
    bidegree_project,
    conjugate,
    inner,
    monomial_basis,
    norm_sq,
    wedge,
)


def _symbols(mono: Monomial):
    return [(0, a) for a in mono.s] + [(1, a) for a in mono.t]


def _brute_wedge_sign(m1: Monomial, m2: Monomial):
    """None if the product vanishes, else the permutation sign."""
    word = _symbols(m1) + _symbols(m2)
    if len(set(word)) != len(word):
        return None
    inversions = sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )
    return -1 if inversions % 2 else 1


def _all_monomials(n: int):
    out = []
    for k in range(2 * n + 1):
        out.extend(monomial_basis(n, k))
    return out


def test_wedge_sign_matches_brute_force_oracle():
    for n in (1, 2, 3):
        monos = _all_monomials(n)
        for m1 in monos:
            a = Form(n, {m1: GaussRational(1)})
            for m2 in monos:
                b = Form(n, {m2: GaussRational(1)})
                got = a.wedge(b)
                sign = _brute_wedge_sign(m1, m2)
                if sign is None:
                    assert got.is_zero()
                else:
                    merged = Monomial(
                        tuple(sorted(m1.s + m2.s)), tuple(sorted(m1.t + m2.t))
                    )
                    assert got == Form(n, {merged: GaussRational(sign)})


rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)


@st.composite
def gauss_rationals(draw):
    return GaussRational(draw(rationals), draw(rationals))


@given(gauss_rationals(), gauss_rationals())
def test_scalar_ring_against_fraction_components(a, b):
    s = a + b
    assert (s.re, s.im) == (a.re + b.re, a.im + b.im)
    d = a - b
    assert (d.re, d.im) == (a.re - b.re, a.im - b.im)
    p = a * b
    assert p.re == a.re * b.re - a.im * b.im
    assert p.im == a.re * b.im + a.im * b.re
    if not b.is_zero():
        q = a / b
        assert q * b == a


@given(gauss_rationals())
def test_scalar_conjugation_and_modulus(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).re == a.abs_sq()
    assert (a * a.conjugate()).im == 0
    assert a.abs_sq() >= 0


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussRational(1) / GaussRational(0)
    with pytest.raises(ZeroDivisionError):
        GaussRational(0).inverse()


def test_i_power_cycle():
    i = GaussRational(0, 1)
    minus_i = GaussRational(0, -1)
    for e in range(-8, 9):
        expected = GaussRational(1)
        for _ in range(abs(e)):
            expected = expected * (i if e >= 0 else minus_i)
        assert GaussRational.i_power(e) == expected


def test_scalar_rendering():
    assert str(GaussRational(Fraction(3, 2), Fraction(1, 2))) == "3/2+1/2i"
    assert str(GaussRational(0)) == "0"
    assert str(GaussRational(-2, -1)) == "-2-1i"
    assert str(GaussRational(0, 1)) == "1i"


def test_monomial_validation_and_label():
    with pytest.raises(ValueError):
        Form(2, {Monomial((1, 1), ()): GaussRational(1)})
    with pytest.raises(ValueError):
        Form(2, {Monomial((3,), ()): GaussRational(1)})
    with pytest.raises(ValueError):
        Form(2, {Monomial((2, 1), ()): GaussRational(1)})
    mono = Monomial((1, 3), (2,))
    assert mono.degree == 3
    assert mono.bidegree == (2, 1)
    assert "dz" in mono.label()


def _random_form(rng_data, n: int, degrees) -> Form:
    terms = {}
    for k in degrees:
        for mono in monomial_basis(n, k):
            c = rng_data.draw(gauss_rationals())
            if c:
                terms[mono] = c
    return Form(n, terms)


small_forms = st.data()


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_wedge_bilinear_and_graded_commutative(data):
    n = data.draw(st.integers(min_value=1, max_value=2))
    ka = data.draw(st.integers(min_value=0, max_value=2 * n))
    kb = data.draw(st.integers(min_value=0, max_value=2 * n))
    a = _random_form(data, n, [ka])
    b = _random_form(data, n, [kb])
    c = _random_form(data, n, [kb])
    s = data.draw(gauss_rationals())
    assert a.wedge(b + c) == a.wedge(b) + a.wedge(c)
    assert a.wedge(b * s) == a.wedge(b) * s
    sign = -1 if (ka * kb) % 2 else 1
    assert a.wedge(b) == b.wedge(a) * sign
    assert wedge(a, b) == a.wedge(b)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_wedge_associative(data):
    n = 2
    parts = [
        _random_form(data, n, [data.draw(st.integers(min_value=0, max_value=2))])
        for _ in range(3)
    ]
    a, b, c = parts
    assert a.wedge(b).wedge(c) == a.wedge(b.wedge(c))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_conjugation_is_an_involution_swapping_bidegree(data):
    n = data.draw(st.integers(min_value=1, max_value=2))
    p = data.draw(st.integers(min_value=0, max_value=n))
    q = data.draw(st.integers(min_value=0, max_value=n))
    terms = {}
    for mono in bidegree_basis(n, p, q):
        c = data.draw(gauss_rationals())
        if c:
            terms[mono] = c
    a = Form(n, terms)
    ca = conjugate(a)
    if not a.is_zero():
        assert ca.bidegree() == (q, p)
    assert conjugate(ca) == a
    b = _random_form(data, n, [p + q])
    assert conjugate(a.wedge(b)) == ca.wedge(conjugate(b))


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_bidegree_projection_partitions_the_form(data):
    n = data.draw(st.integers(min_value=1, max_value=2))
    a = _random_form(data, n, range(2 * n + 1))
    total = Form.zero(n)
    for p in range(n + 1):
        for q in range(n + 1):
            piece = bidegree_project(a, p, q)
            assert bidegree_project(piece, p, q) == piece
            if not piece.is_zero():
                assert piece.bidegree() == (p, q)
            total = total + piece
    assert total == a


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_inner_product_structure(data):
    n = data.draw(st.integers(min_value=1, max_value=2))
    k = data.draw(st.integers(min_value=0, max_value=2 * n))
    a = _random_form(data, n, [k])
    b = _random_form(data, n, [k])
    c = _random_form(data, n, [k])
    s = data.draw(gauss_rationals())
    assert inner(a, b) == inner(b, a).conjugate()
    assert inner(a + c, b) == inner(a, b) + inner(c, b)
    assert inner(a * s, b) == s * inner(a, b)
    assert inner(a, b * s) == inner(a, b) * s.conjugate()
    nsq = norm_sq(a)
    assert isinstance(nsq, Fraction)
    assert nsq >= 0
    assert (nsq == 0) == a.is_zero()


def test_inner_requires_matching_space():
    a = Form.one(2)
    b = Form.one(3)
    with pytest.raises(ValueError):
        inner(a, b)
    with pytest.raises(ValueError):
        a.wedge(b)


def test_monomials_are_orthonormal():
    n = 2
    monos = _all_monomials(n)
    for i, m1 in enumerate(monos):
        for m2 in monos[i:]:
            a = Form(n, {m1: GaussRational(1)})
            b = Form(n, {m2: GaussRational(1)})
            expected = GaussRational(1 if m1 == m2 else 0)
            assert inner(a, b) == expected


def test_basis_enumeration_counts():
    from math import comb

    for n in (1, 2, 3):
        for k in range(2 * n + 1):
            assert len(monomial_basis(n, k)) == comb(2 * n, k)
        for p in range(n + 1):
            for q in range(n + 1):
                assert len(bidegree_basis(n, p, q)) == comb(n, p) * comb(n, q)


def test_form_text_rendering():
    n = 2
    a = Form(n, {Monomial((1,), (2,)): GaussRational(0, Fraction(1, 2))})
    text = str(a)
    assert "dz" in text and "1/2i" in text
    assert str(Form.zero(n)) == "0"


def test_homogeneous_parts_and_degrees():
    n = 2
    a = Form.one(n) + Form(n, {Monomial((1,), (2,)): GaussRational(1)})
    assert a.degree() is None
    assert a.degrees() == {0, 2}
    parts = a.homogeneous_parts()
    assert set(parts) == {0, 2}
    assert parts[0] + parts[2] == a
