import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayspec.cyclotomic import CyclotomicInt, cyclotomic_polynomial

E = 12
small = st.lists(st.integers(-5, 5), min_size=E, max_size=E).map(lambda c: CyclotomicInt(E, c))


@pytest.mark.parametrize(
    "e, poly",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomial(e, poly):
    assert cyclotomic_polynomial(e) == poly


def test_sum_of_roots_vanishes():
    for e in (3, 5, 6, 12):
        total = CyclotomicInt.zero(e)
        for k in range(e):
            total = total + CyclotomicInt.root(e, k)
        assert total.is_zero()


def test_canonical_form_is_unique():
    # 1 + z + z^2 = 0 for e = 3
    assert CyclotomicInt(3, [1, 1, 1]) == 0
    assert CyclotomicInt(3, [0, 0, 1]) == CyclotomicInt(3, [-1, -1, 0])
    assert hash(CyclotomicInt(3, [0, 0, 1])) == hash(CyclotomicInt(3, [-1, -1, 0]))


def test_rational_values():
    x = CyclotomicInt.from_int(5, 7)
    assert x.is_rational() and x.to_int() == 7
    z = CyclotomicInt.root(5)
    assert not z.is_rational()
    assert (z * z.conjugate()).to_int() == 1


def test_galois_matches_complex_embedding():
    x = CyclotomicInt(7, [1, 2, 0, -1, 0, 0, 3])
    for k in range(1, 7):
        got = x.galois(k).to_complex()
        want = sum(c * cmath.exp(2j * cmath.pi * k * a / 7) for a, c in enumerate(x.coeffs))
        assert abs(got - want) < 1e-9


def test_from_exponent_counts():
    # trace of the 3-dimensional permutation rep of a 3-cycle: 1 + z + z^2 = 0
    assert CyclotomicInt.from_exponent_counts(3, [1, 1, 1]) == 0


@settings(max_examples=60)
@given(small, small, small)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@settings(max_examples=60)
@given(small, small)
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6
