"""Truncated formal power series over exact rationals.

A PowerSeries of order N is the coefficient vector c_0..c_N of a series
sum c_i t^i with all arithmetic done in fractions.Fraction; there is no
floating point anywhere.  Binary operations truncate to the smaller
order.

The two series this package cares about are

    F(t) = (1 - 2t - 3t^2)^(-1/2)          coefficients A002426
    G(t) = (1 - sqrt(1-3t)/sqrt(1+t))/(2t)  coefficients A005043

whose n-th coefficients are the central entries of the two triangles.
Both are realized purely through the ring operations below, so the
integrality of their coefficients is a checkable outcome rather than an
input assumption.

series_sqrt ships two independent algorithms behind one contract, a
direct coefficient recursion and a Newton iteration with order doubling;
the test suite holds them equal.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import NonInvertible, NonSquareLeadingTerm

__all__ = [
    "PowerSeries",
    "series_mul",
    "series_inverse",
    "series_sqrt",
    "f_series",
    "g_series",
    "g_from_f_identity",
]


class PowerSeries:
    """Coefficients c_0..c_N of a truncated series, as exact rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = tuple(Fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant term")
        self.coeffs = cs

    @property
    def order(self):
        return len(self.coeffs) - 1

    def truncate(self, order):
        if order >= self.order:
            return self
        return PowerSeries(self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({[str(c) for c in self.coeffs]})"


def _lincomb(terms, order):
    """sum of scalar*series pairs, truncated to the given order."""
    out = [Fraction(0)] * (order + 1)
    for scalar, s in terms:
        for i, c in enumerate(s.coeffs[: order + 1]):
            out[i] += scalar * c
    return PowerSeries(out)


def series_mul(p, q):
    """Truncated product; result order is min(order p, order q)."""
    n = min(p.order, q.order)
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(p.coeffs[: n + 1]):
        if a == 0:
            continue
        for j in range(n + 1 - i):
            out[i + j] += a * q.coeffs[j]
    return PowerSeries(out)


def series_inverse(p):
    """Multiplicative inverse, same order as p; needs a nonzero constant term."""
    if p.coeffs[0] == 0:
        raise NonInvertible("constant term is zero")
    c0 = p.coeffs[0]
    n = p.order
    out = [Fraction(0)] * (n + 1)
    out[0] = 1 / c0
    for m in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, min(m, p.order) + 1):
            acc += p.coeffs[i] * out[m - i]
        out[m] = -acc / c0
    return PowerSeries(out)


def _sqrt_of_constant(c0):
    # The positive rational square root, or None.
    if c0 <= 0:
        return None
    num, den = c0.numerator, c0.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def _sqrt_direct(p, s0):
    # s_m = (c_m - sum_{i=1..m-1} s_i s_{m-i}) / (2 s_0), from squaring term by term.
    n = p.order
    out = [Fraction(0)] * (n + 1)
    out[0] = s0
    twice = 2 * s0
    for m in range(1, n + 1):
        acc = p.coeffs[m]
        for i in range(1, m):
            acc -= out[i] * out[m - i]
        out[m] = acc / twice
    return PowerSeries(out)


def _sqrt_newton(p, s0):
    # s <- (s + p/s)/2 doubles the number of correct coefficients per step.
    n = p.order
    s = PowerSeries([s0])
    half = Fraction(1, 2)
    while s.order < n:
        m = min(2 * s.order + 1, n)
        s_ext = PowerSeries(list(s.coeffs) + [Fraction(0)] * (m - s.order))
        quotient = series_mul(p.truncate(m), series_inverse(s_ext))
        s = _lincomb([(half, s_ext), (half, quotient)], m)
    return s


def series_sqrt(p, method="direct"):
    """Square root with positive leading term: result s has s*s = p, s_0 > 0.

    Parameters
    ----------
    p : PowerSeries
        Constant term must be the square of a rational (and nonzero).
    method : str
        "direct" for the coefficient recursion, "newton" for the
        quadratically convergent iteration.  Same result either way.
    """
    s0 = _sqrt_of_constant(p.coeffs[0])
    if s0 is None or p.coeffs[0] == 0:
        raise NonSquareLeadingTerm(f"constant term {p.coeffs[0]} has no rational sqrt")
    if method == "direct":
        return _sqrt_direct(p, s0)
    if method == "newton":
        return _sqrt_newton(p, s0)
    raise ValueError(f"unknown sqrt method: {method!r}")


def _poly_series(coeffs, order):
    cs = list(coeffs[: order + 1])
    cs += [0] * (order + 1 - len(cs))
    return PowerSeries(cs)


def f_series(order, method="direct"):
    """(1 - 2t - 3t^2)^(-1/2) to the given order; coefficient n is a_n.

    Computed as sqrt(1/(1 - 2t - 3t^2)) so the radicand already has
    integer coefficients.  Every output coefficient normalizes to an
    integer, which the verification layer checks rather than assumes.
    """
    base = _poly_series([1, -2, -3], order)
    return series_sqrt(series_inverse(base), method=method)


def g_series(order, method="direct"):
    """(1 - sqrt(1-3t)/sqrt(1+t)) / (2t) to the given order; coefficient n is b_n.

    The numerator u = 1 - sqrt(1-3t) * (sqrt(1+t))^(-1) has zero constant
    term (asserted), so dividing by 2t is a shift and a halving.
    """
    m = order + 1
    ratio = series_mul(
        series_sqrt(_poly_series([1, -3], m), method=method),
        series_inverse(series_sqrt(_poly_series([1, 1], m), method=method)),
    )
    u = _lincomb([(Fraction(1), _poly_series([1], m)), (Fraction(-1), ratio)], m)
    assert u.coeffs[0] == 0
    return PowerSeries([c / 2 for c in u.coeffs[1:]])


def g_from_f_identity(order, f=None, g=None):
    """Check 2t*G(t) = 1 + (3t - 1)*F(t) coefficientwise up to the given order.

    f and g default to f_series/g_series; passing a tampered series in is
    how the test suite checks that this returns False when it should.
    """
    if f is None:
        f = f_series(order)
    if g is None:
        g = g_series(max(order - 1, 0))

    def fc(i):
        return f.coeffs[i] if 0 <= i <= f.order else Fraction(0)

    def gc(i):
        return g.coeffs[i] if 0 <= i <= g.order else Fraction(0)

    for n in range(order + 1):
        lhs = 2 * gc(n - 1)
        rhs = (Fraction(1) if n == 0 else Fraction(0)) + 3 * fc(n - 1) - fc(n)
        if lhs != rhs:
            return False
    return True
