"""Edge polynomial family: recurrence construction, factored forms, values."""

from fractions import Fraction
from math import factorial

import pytest

from trinom.qpolys import (
    FACTORED_FORMS,
    RationalPolynomial,
    q_edge_entry,
    q_factorization_check,
    q_family,
)

from frozen import A_ROWS


def test_rational_polynomial_basics():
    p = RationalPolynomial([-1, 0, 1])  # n^2 - 1
    lo = RationalPolynomial([1, 1]) * RationalPolynomial([-1, 1])
    assert lo == p
    assert p(5) == 24
    assert (p + RationalPolynomial([1]))(7) == 49
    assert (2 * RationalPolynomial([3, 1]))(0) == 6
    assert p.degree == 2


def test_render():
    assert RationalPolynomial([0, 1]).render("n") == "n"
    assert RationalPolynomial([1]).render("n") == "1"
    assert RationalPolynomial([0, -4, 3, 1]).render("n") == "n^3 + 3n^2 - 4n"
    assert RationalPolynomial([0]).render("n") == "0"


def test_family_head():
    family = q_family(3)
    assert family[0] == RationalPolynomial([1])
    assert family[1] == RationalPolynomial([0, 1])
    assert family[2] == RationalPolynomial([0, 1, 1])
    assert family[3] == RationalPolynomial([0, -4, 3, 1])


def test_family_degree_and_integrality():
    family = q_family(14)
    for k, q in enumerate(family):
        assert q.degree == k
        assert all(c.denominator == 1 for c in q.coeffs)


def test_all_factored_forms_expand_correctly():
    assert sorted(FACTORED_FORMS) == list(range(11))
    for k in FACTORED_FORMS:
        assert q_factorization_check(k)


def test_values_reproduce_triangle_near_edge():
    family = q_family(11)
    for n, row in enumerate(A_ROWS):
        for k in range(min(n, 11) + 1):
            assert family[k](n) == factorial(k) * row[n - k]


def test_edge_entry():
    assert q_edge_entry(10, 5) == 1452
    assert q_edge_entry(10, 1) == 10
    assert q_edge_entry(12, 12) == 73789
    assert q_edge_entry(0, 0) == 1
    for n, row in enumerate(A_ROWS):
        for k in range(n + 1):
            assert q_edge_entry(n, k) == row[n - k]


def test_edge_entry_rejects_bad_ranges():
    with pytest.raises(ValueError):
        q_edge_entry(3, 4)
    with pytest.raises(ValueError):
        q_edge_entry(3, -1)


def test_factored_form_values_match_recurrence_far_out():
    family = q_family(10)
    for k, factors in FACTORED_FORMS.items():
        for n in (50, 137):
            product = Fraction(1)
            for coeffs in factors:
                product *= RationalPolynomial(coeffs)(n)
            assert product == family[k](n)
