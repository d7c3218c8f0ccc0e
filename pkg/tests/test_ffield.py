import math

import pytest
from hypothesis import given, settings, strategies as st

from gl2aut.ffield import (aut_rel_count, aut_rel_enumerate, euler_phi,
                           field_make, field_of_order, frobenius, is_prime,
                           prime_power, quad_ext)


def test_prime_power_factors_valid_orders():
    assert prime_power(2) == (2, 1)
    assert prime_power(49) == (7, 2)
    assert prime_power(32) == (2, 5)
    assert prime_power(27) == (3, 3)


@pytest.mark.parametrize("bad", [0, 1, 6, 12, 15, 100])
def test_prime_power_rejects_composite_orders(bad):
    with pytest.raises(ValueError):
        prime_power(bad)


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 13, 17, 19}
    for n in range(2, 21):
        assert is_prime(n) == (n in primes)


def test_euler_phi_matches_definition():
    for n in range(1, 60):
        assert euler_phi(n) == sum(1 for k in range(1, n + 1)
                                   if math.gcd(k, n) == 1)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_axioms_on_all_elements(q):
    field = field_of_order(q)
    elems = list(field.elements())
    assert len(elems) == q
    assert len(set(elems)) == q
    one = field.one
    zero = field.zero
    for a in elems:
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        if bool(a):
            assert a / a == one
            assert a * field.invert_unit(a) == one
    # units form a cyclic group of order q - 1
    units = list(field.units())
    assert len(units) == q - 1
    assert any(field.order_of(u) == q - 1 for u in units)


@given(a=st.integers(min_value=0, max_value=8), b=st.integers(min_value=0, max_value=8),
       c=st.integers(min_value=0, max_value=8))
@settings(max_examples=60, deadline=None)
def test_field_distributivity_f9(a, b, c):
    field = field_of_order(9)
    x, y, z = field.el(a), field.el(b), field.el(c)
    assert x * (y + z) == x * y + x * z
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)


def test_frobenius_in_characteristic_two():
    field = field_of_order(4)
    for a in field.elements():
        for b in field.elements():
            assert (a + b) ** 2 == a ** 2 + b ** 2


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_quadratic_extension_structure(q):
    field = field_of_order(q)
    ext = quad_ext(field)
    elems = list(ext.elements())
    assert len(elems) == q * q
    # the generator has full multiplicative order
    eps = ext.generator
    assert ext.order_of(eps) == q * q - 1
    # frobenius is an involutive field automorphism fixing exactly the base
    fixed = 0
    for x in elems:
        assert frobenius(frobenius(x)) == x
        if frobenius(x) == x:
            fixed += 1
    assert fixed == q
    for a in field.elements():
        assert frobenius(ext.embed(a)) == ext.embed(a)
    # norm and trace land in the base field and respect conjugation
    for x in elems:
        xb = ext.conj(x)
        assert ext.norm(x) == ext.norm(xb)
        assert ext.trace(x) == ext.trace(xb)


def test_quad_ext_norm_is_multiplicative():
    field = field_of_order(3)
    ext = quad_ext(field)
    elems = list(ext.elements())
    for x in elems:
        for y in elems:
            assert ext.norm(x * y) == ext.norm(x) * ext.norm(y)
            assert ext.trace(x + y) == ext.trace(x) + ext.trace(y)


def test_admissible_exponents_small_orders():
    assert aut_rel_enumerate(2) == [1, 2]
    assert aut_rel_enumerate(3) == [1, 3, 5, 7]
    assert aut_rel_enumerate(4) == [1, 4, 7, 13]
    assert aut_rel_enumerate(5) == [1, 5, 13, 17]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13])
def test_admissible_exponent_count_closed_form(q):
    # phi(q + 1) classes for even q, twice that for odd q
    expected = euler_phi(q + 1) * (2 if q % 2 else 1)
    assert aut_rel_count(q) == expected
    assert aut_rel_count(q) == len(aut_rel_enumerate(q))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_admissible_exponents_form_a_group(q):
    n = q * q - 1
    classes = set(aut_rel_enumerate(q))
    assert 1 in classes
    for a in classes:
        assert a * pow(a, -1, n) % n == 1
        assert pow(a, -1, n) in classes
        for b in classes:
            assert (a * b) % n in classes


def test_field_make_rejects_nonprime_characteristic():
    with pytest.raises(ValueError):
        field_make(4, 1)
    with pytest.raises(ValueError):
        field_make(2, 0)
