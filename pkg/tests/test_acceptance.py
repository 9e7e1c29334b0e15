"""Acceptance gate: one test per shipped guarantee, budgets included.

Run with -v to get one pass/fail line per criterion.  These tests overlap
the unit suites on purpose; they are the contract, stated end to end, at
the sizes the package promises to handle.
"""

import csv
import io
import json
import time
from fractions import Fraction
from math import factorial

import pytest

from trinom import (
    ROUTES,
    a_central_two_term,
    a_triangle_pascal,
    b_central_two_term,
    b_column_four_term,
    character,
    f_series,
    g_from_f_identity,
    g_series,
    inner_product,
    q_factorization_check,
    q_family,
    route_rows,
    run_all,
    trinomial_powers,
)
from trinom.cli import main
from trinom.errors import InexactDivision

from frozen import A_ROWS, B_ROWS, CENTRAL_A, CENTRAL_B


def cli_csv(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    assert code == 0
    return list(csv.reader(io.StringIO(out)))


def test_tables_reproduce_exactly(capsys):
    """Rows 0..10 of both triangles come out exactly, through the CLI, fast."""
    start = time.perf_counter()
    triangles = {}
    for kind in ("a", "b"):
        rows = cli_csv(capsys, "triangle", "--kind", kind, "--rows", "11",
                       "--format", "csv")
        assert rows[0] == ["n", "k", "value"]
        table = [[0] * (n + 1) for n in range(11)]
        for n, k, value in rows[1:]:
            table[int(n)][int(k)] = int(value)
        triangles[kind] = table
    elapsed = time.perf_counter() - start
    assert triangles["a"] == A_ROWS[:11]
    assert triangles["b"] == B_ROWS[:11]
    assert elapsed < 1.0


def test_route_agreement_to_300():
    """Every registered route agrees with every other on shared coverage."""
    start = time.perf_counter()
    max_n = 300
    rows_by_id = {rid: route_rows(rid, max_n) for rid in ROUTES}
    for rid, route in ROUTES.items():
        rows = rows_by_id[rid]
        assert len(rows) == max_n + 1
        for n, row in enumerate(rows):
            cap = n if route.k_cap is None else min(n, route.k_cap)
            assert len(row) == cap + 1
    ids = sorted(ROUTES)
    for i, ra in enumerate(ids):
        for rb in ids[i + 1:]:
            if ROUTES[ra].kind != ROUTES[rb].kind:
                continue
            for n in range(max_n + 1):
                row_a, row_b = rows_by_id[ra][n], rows_by_id[rb][n]
                shared = min(len(row_a), len(row_b))
                assert row_a[:shared] == row_b[:shared], (ra, rb, n)
    assert time.perf_counter() - start < 60.0


def test_series_match_sequences_to_order_200():
    """F and G to order 200: integral, equal to the recurrences, both sqrts."""
    order = 200
    a_vals = list(a_central_two_term(order))
    f_direct = f_series(order, method="direct")
    f_newton = f_series(order, method="newton")
    assert f_direct == f_newton
    assert [c.numerator for c in f_direct.coeffs] == a_vals
    assert all(c.denominator == 1 for c in f_direct.coeffs)

    g_direct = g_series(order, method="direct")
    g_newton = g_series(order, method="newton")
    assert g_direct == g_newton
    assert [c.numerator for c in g_direct.coeffs] == list(b_central_two_term(order))
    assert all(c.denominator == 1 for c in g_direct.coeffs)

    assert g_from_f_identity(order, f=f_direct, g=g_direct)


def test_q_polynomials_to_k11_n300():
    """Q_k(n) = k! a(n, n-k) for k <= 11, n <= 300; factored forms check out."""
    family = q_family(11)
    rows = a_triangle_pascal(300).rows
    for k, q in enumerate(family):
        assert q.degree == k
        assert all(c.denominator == 1 for c in q.coeffs)
        fact = factorial(k)
        for n in range(k, 301):
            assert q(n) == fact * rows[n][n - k]
    for k in range(11):
        assert q_factorization_check(k)


def test_representation_invariants_to_300():
    """Dimension count, telescoping, non-negativity, orthogonality."""
    a_rows = route_rows("oracle-a", 300)
    b_rows = route_rows("oracle-b", 300)
    for n in range(301):
        assert sum(b * (2 * k + 1) for k, b in enumerate(b_rows[n])) == 3**n
        assert all(b >= 0 for b in b_rows[n])
        tail = 0
        for k in range(n, -1, -1):
            tail += b_rows[n][k]
            assert a_rows[n][k] == tail
    for k in range(101):
        chi_k = character(k)
        for l in range(k, 101):
            assert inner_product(chi_k, character(l)) == (1 if k == l else 0)


def test_fourth_difference_rule_correction(capsys):
    """The miswritten b(n,4) rule fails loudly and documented; fixed one holds."""
    code = main(["verify", "--max-n", "300"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.splitlines()
    variant = [l for l in lines if l.startswith("XFAIL b4-fourth-difference-variant")]
    assert len(variant) == 1
    assert "(n=5, k=4)" in variant[0]
    assert "-32" in variant[0]
    assert "PASS  b4-fourth-difference" in lines
    assert lines[-1].startswith("ok:")
    # witness detail carries both the wrong and the true value
    report = run_all(12)
    check = next(c for c in report.checks if c.name == "b4-fourth-difference-variant")
    assert check.witness == (5, 4)
    assert "gives -32" in check.detail and "entry is 4" in check.detail


def test_division_exactness():
    """Quotients are verified, never rounded; corruption raises, with context."""
    with pytest.raises(InexactDivision) as exc:
        b_column_four_term(0, 10, seeds=[1, 0, 1, 2])
    assert exc.value.numerator == 1392
    assert exc.value.denominator == 240
    assert "n=4" in str(exc.value)

    for rid in ROUTES:
        for row in route_rows(rid, 40):
            assert all(type(v) is int for v in row)
    value = inner_product(character(3), character(3))
    assert isinstance(value, Fraction) and value == 1


def test_performance_budgets():
    """Central column to n=5000 under 5s; full powers to n=1000 under 30s."""
    start = time.perf_counter()
    vals = a_central_two_term(5000)
    assert time.perf_counter() - start < 5.0
    assert vals[12] == 73789

    start = time.perf_counter()
    powers = trinomial_powers(1000)
    assert time.perf_counter() - start < 30.0
    assert powers[1000].eval_at_one == 3**1000
    assert powers[1000].coeff(1000) == 1
