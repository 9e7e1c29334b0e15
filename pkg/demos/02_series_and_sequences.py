"""Generating functions meet recurrences.

F(t) = (1 - 2t - 3t^2)^(-1/2) generates the central a-column and
G(t) = (1 - sqrt(1-3t)/sqrt(1+t)) / (2t) the central b-column.  Nothing
here knows that in advance: the series are built from inversion and two
different square root algorithms over exact rationals, and the integer
sequences come from two term recurrences with checked division.  They
have no code in common, which is what makes the comparison interesting.
"""

from trinom import (
    a_central_two_term,
    b_central_two_term,
    f_series,
    g_from_f_identity,
    g_series,
)

ORDER = 30

f_direct = f_series(ORDER, method="direct")
f_newton = f_series(ORDER, method="newton")
print("F by direct recursion == F by Newton iteration:", f_direct == f_newton)

g = g_series(ORDER)
print("first coefficients of F:", [int(c) for c in f_direct.coeffs[:11]])
print("first coefficients of G:", [int(c) for c in g.coeffs[:11]])

a_vals = list(a_central_two_term(ORDER))
b_vals = list(b_central_two_term(ORDER))
print("F matches the a-recurrence up to order", ORDER, ":",
      [c.numerator for c in f_direct.coeffs] == a_vals)
print("G matches the b-recurrence up to order", ORDER, ":",
      [c.numerator for c in g.coeffs] == b_vals)

# The two series are not independent: 2t G(t) = 1 + (3t - 1) F(t).
print("2tG = 1 + (3t-1)F holds:", g_from_f_identity(ORDER, f=f_direct, g=g))

# Every coefficient stayed integral even though sqrt works over Fraction.
print("all denominators are 1:",
      all(c.denominator == 1 for c in f_direct.coeffs + g.coeffs))
