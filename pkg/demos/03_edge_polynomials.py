"""The triangle near its right edge is polynomial in the row index.

a(n, n-k) equals Q_k(n) / k! for a family of integer polynomials Q_k
built by a three term recurrence.  For k <= 10 the package also carries
fully factored forms of the same polynomials; q_factorization_check
expands them and compares against the recurrence output.
"""

from math import factorial

from trinom import (
    FACTORED_FORMS,
    RationalPolynomial,
    a_triangle_pascal,
    q_edge_entry,
    q_factorization_check,
    q_family,
)

family = q_family(8)
print("the polynomial family:")
for k, q in enumerate(family):
    print(f"    Q_{k} = {q.render('n')}")

print()
print("factored forms, expanded and compared against the recurrence:")
for k in sorted(FACTORED_FORMS):
    factors = " * ".join(
        f"({RationalPolynomial(c).render('n')})" for c in FACTORED_FORMS[k]
    )
    print(f"    k={k:<2} {'ok' if q_factorization_check(k) else 'MISMATCH'}   {factors}")

print()
rows = a_triangle_pascal(12).rows
print("Q_k(n) / k! against the pascal triangle, n <= 12:")
agree = all(
    family[k](n) == factorial(k) * rows[n][n - k]
    for n in range(13)
    for k in range(min(n, 8) + 1)
)
print("    all entries agree:", agree)

print()
print("a few entries far from anything tabulated:")
for n, k in [(100, 3), (250, 7), (300, 11)]:
    print(f"    a({n}, {n}-{k}) = {q_edge_entry(n, k)}")
