"""The edge polynomials Q_k: a(n, n-k) = Q_k(n) / k!.

Q_0 = 1, Q_1 = n, and Q_{k+1}(n) = (n - k) Q_k(n) + k (2n - k + 1) Q_{k-1}(n).
Each Q_k has degree exactly k with integer coefficients, and k! divides
Q_k(n) at every integer n >= k; both facts are checked, not assumed.
Coefficients are stored as exact rationals anyway to match the series
layer, so integrality failures would surface instead of truncating.

FACTORED_FORMS holds the known factored expressions for k <= 10 as plain
factor data; q_factorization_check expands them mechanically against the
recurrence output.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import NonIntegerResult, UnsupportedK

__all__ = [
    "RationalPolynomial",
    "FACTORED_FORMS",
    "q_family",
    "q_edge_entry",
    "q_factorization_check",
]


class RationalPolynomial:
    """Dense polynomial over Fraction, constant term first, tight degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.coeffs == (Fraction(0),)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPolynomial([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return RationalPolynomial([0])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def render(self, var="n"):
        """Human form, highest degree first: "n^2 + n", "n^3 + 3n^2 - 4n"."""
        if self.is_zero:
            return "0"
        parts = []
        for d in range(self.degree, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if d == 1 else f"{head}{var}^{d}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"RationalPolynomial({self.render()})"


# Factored forms of Q_0..Q_10; each factor is a coefficient list,
# constant term first.  Transcribed once, expanded mechanically.
FACTORED_FORMS = {
    0: [[1]],
    1: [[0, 1]],
    2: [[0, 1], [1, 1]],
    3: [[-1, 1], [0, 1], [4, 1]],
    4: [[-1, 1], [0, 1], [-6, 7, 1]],
    5: [[-2, 1], [-1, 1], [0, 1], [1, 1], [12, 1]],
    6: [[-2, 1], [-1, 1], [0, 1], [-120, 17, 18, 1]],
    7: [[-3, 1], [-2, 1], [-1, 1], [0, 1], [-120, 116, 27, 1]],
    8: [[-3, 1], [-2, 1], [-1, 1], [0, 1], [1, 1], [10, 1], [-84, 23, 1]],
    9: [[0, 1], [-1, 1], [-2, 1], [-3, 1], [-4, 1], [-3360, 86, 467, 46, 1]],
    10: [[0, 1], [-1, 1], [-2, 1], [-3, 1], [-4, 1], [15120, -16626, -895, 665, 55, 1]],
}


def q_family(max_k):
    """Q_0..Q_max_k via the two term polynomial recurrence."""
    if max_k < 0:
        raise ValueError("max_k must be >= 0")
    qs = [RationalPolynomial([1])]
    if max_k >= 1:
        qs.append(RationalPolynomial([0, 1]))
    for k in range(1, max_k):
        # Q_{k+1} = (n - k) Q_k + k (2n - k + 1) Q_{k-1}
        lin = RationalPolynomial([-k, 1])
        aff = RationalPolynomial([k * (1 - k), 2 * k])
        qs.append(lin * qs[k] + aff * qs[k - 1])
    return qs


def q_edge_entry(n, k):
    """a(n, n-k) as the exact integer Q_k(n) / k!.

    Q_k(n) is always divisible by k! on 0 <= k <= n, so a failed
    division here (NonIntegerResult) means the family construction is
    broken, not that the input was bad.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    value = q_family(k)[k](n)
    if value.denominator != 1:
        raise NonIntegerResult(f"Q_{k}({n}) = {value} is not an integer")
    quotient, remainder = divmod(value.numerator, factorial(k))
    if remainder:
        raise NonIntegerResult(f"{k}! does not divide Q_{k}({n}) = {value}")
    return quotient


def q_factorization_check(k):
    """Expand the stored factored form of Q_k and compare with the recurrence."""
    if k not in FACTORED_FORMS:
        raise UnsupportedK(f"no factored form stored for k={k}")
    expanded = RationalPolynomial([1])
    for factor in FACTORED_FORMS[k]:
        expanded = expanded * RationalPolynomial(factor)
    return expanded == q_family(k)[k]
