"""Exact engine for symmetric Laurent polynomials in x = e^(i*theta).

A symmetric (palindromic) Laurent polynomial

    p = c_0 + sum_{m=1..d} c_m (x^m + x^(-m))

is stored as the half vector c_0..c_d only; c_{-m} = c_m holds by
construction, so symmetry can never be violated by arithmetic here.
In trigonometric form p = c_0 + 2*sum c_m cos(m*theta).

The two special elements of interest are X = 1 + 2cos(theta), whose n-th
power carries the trinomial coefficient triangle (OEIS A027907, centered
half) in its coefficients, and the characters chi_k = sum_{m=-k..k} x^m
of the (2k+1)-dimensional irreducible sl2 representations.  decompose()
rewrites any symmetric element in the chi basis, which for X^n yields the
tensor-power multiplicities.

Multiplication dispatches between a schoolbook convolution and Kronecker
substitution (coefficients packed into one big integer so CPython's
subquadratic integer product does the convolution).  Both paths are exact
and are tested against each other.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

__all__ = [
    "SymmetricLaurentPoly",
    "MultiplicityVector",
    "X",
    "laurent_mul",
    "trinomial_power",
    "trinomial_powers",
    "trinomial_power_binary",
    "character",
    "decompose",
    "synthesize",
    "inner_product",
]

# Below this many coefficient pairs the packing overhead beats the loop.
_SCHOOLBOOK_CUTOFF = 1024


class SymmetricLaurentPoly:
    """Half-stored symmetric Laurent polynomial with integer coefficients.

    Parameters
    ----------
    coeffs : sequence of int
        c_0..c_d.  Trailing zeros are stripped so the degree is tight;
        the zero polynomial is stored as (0,).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return self.coeffs == (0,)

    def coeff(self, m):
        """Coefficient of x^m for any signed m (zero outside the support)."""
        m = abs(m)
        return self.coeffs[m] if m <= self.degree else 0

    @property
    def eval_at_one(self):
        """Value at x = 1 (theta = 0): c_0 + 2*sum_{m>=1} c_m."""
        return self.coeffs[0] + 2 * sum(self.coeffs[1:])

    def __eq__(self, other):
        if not isinstance(other, SymmetricLaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SymmetricLaurentPoly({list(self.coeffs)})"


class MultiplicityVector:
    """Multiplicities b_0..b_n of chi_0..chi_n in a character expansion."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(int(b) for b in entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other):
        if not isinstance(other, MultiplicityVector):
            return NotImplemented
        return self.entries == other.entries

    def __repr__(self):
        return f"MultiplicityVector({list(self.entries)})"


def _full_coeffs(p):
    """Signed coefficient list c_{-d}..c_d (length 2d+1)."""
    head = list(p.coeffs[::-1])
    return head + list(p.coeffs[1:])


def _conv_schoolbook(u, v):
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            out[i + j] += a * b
    return out


def _pack(vec, width):
    # Fixed-width little-endian slots; width chosen so sums never carry over.
    if width in (1, 2, 4, 8):
        return np.asarray(vec, dtype=f"<u{width}").tobytes()
    return b"".join(c.to_bytes(width, "little") for c in vec)


def _unpack(number, width, count):
    data = number.to_bytes(count * width, "little")
    if width in (1, 2, 4, 8):
        return np.frombuffer(data, dtype=f"<u{width}").tolist()
    return [
        int.from_bytes(data[i * width : (i + 1) * width], "little")
        for i in range(count)
    ]


def _conv_kron(u, v):
    # Requires non-negative entries.  Each output slot is bounded by
    # min(len) * max(u) * max(v), which fixes a carry-free slot width.
    bound = min(len(u), len(v)) * max(u) * max(v)
    width = max(1, (bound.bit_length() + 7) // 8)
    if width == 3:
        width = 4
    elif width in (5, 6, 7):
        width = 8
    prod = int.from_bytes(_pack(u, width), "little") * int.from_bytes(
        _pack(v, width), "little"
    )
    return _unpack(prod, width, len(u) + len(v) - 1)


def _conv_fast(u, v):
    if min(u) >= 0 and min(v) >= 0:
        return _conv_kron(u, v)
    # Signed case: split into positive and negative parts and combine the
    # four non-negative products.
    up = [a if a > 0 else 0 for a in u]
    un = [-a if a < 0 else 0 for a in u]
    vp = [b if b > 0 else 0 for b in v]
    vn = [-b if b < 0 else 0 for b in v]
    n = len(u) + len(v) - 1
    out = [0] * n
    for sign, a, b in ((1, up, vp), (1, un, vn), (-1, up, vn), (-1, un, vp)):
        if max(a) == 0 or max(b) == 0:
            continue
        part = _conv_kron(a, b)
        for i in range(n):
            out[i] += sign * part[i]
    return out


def laurent_mul(p, q):
    """Exact product of two symmetric Laurent polynomials.

    Parameters
    ----------
    p, q : SymmetricLaurentPoly

    Returns
    -------
    SymmetricLaurentPoly
        Coefficient of x^m is the full signed-index convolution
        sum_{i+j=m} p_i q_j; the degree is deg p + deg q unless a factor
        is zero.
    """
    if p.is_zero or q.is_zero:
        return SymmetricLaurentPoly([0])
    u = _full_coeffs(p)
    v = _full_coeffs(q)
    if len(u) * len(v) <= _SCHOOLBOOK_CUTOFF:
        full = _conv_schoolbook(u, v)
    else:
        full = _conv_fast(u, v)
    center = p.degree + q.degree
    return SymmetricLaurentPoly(full[center:])


X = SymmetricLaurentPoly([1, 1])  # 1 + 2cos(theta), character of the adjoint rep


def _times_x(half):
    """One multiplication by X on a half vector: c'_m = c_{m-1}+c_m+c_{m+1}."""
    d = len(half) - 1

    def at(m):
        m = abs(m)  # reflection c_{-1} = c_1 at the center
        return half[m] if m <= d else 0

    return [at(m - 1) + at(m) + at(m + 1) for m in range(d + 2)]


def trinomial_powers(n):
    """All powers X^0..X^n as a list, one iterated multiplication each."""
    rows = [SymmetricLaurentPoly([1])]
    half = [1]
    for _ in range(n):
        half = _times_x(half)
        rows.append(SymmetricLaurentPoly(half))
    return rows


def trinomial_power(n):
    """X^n by iterated multiplication; c_k is the trinomial coefficient (n, k).

    Parameters
    ----------
    n : int
        Non-negative exponent.

    Returns
    -------
    SymmetricLaurentPoly
        Degree n for n >= 1; row n of the coefficient triangle as c_0..c_n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return trinomial_powers(n)[-1]


def trinomial_power_binary(n):
    """X^n by binary powering; fast path, must agree with trinomial_power."""
    if n < 0:
        raise ValueError("n must be >= 0")
    result = SymmetricLaurentPoly([1])
    base = X
    while n:
        if n & 1:
            result = laurent_mul(result, base)
        n >>= 1
        if n:
            base = laurent_mul(base, base)
    return result


def character(k):
    """chi_k = sum_{m=-k..k} x^m, the character of the (2k+1)-dim irreducible."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return SymmetricLaurentPoly([1] * (k + 1))


def decompose(p):
    """Expand p in the character basis: p = sum_k b_k chi_k.

    Top-down peeling: the leading multiplicity is the leading coefficient,
    subtract that many copies of chi_d, continue.  Since chi_d contributes 1
    to every lower slot, the running subtraction at slot d is just the sum
    of the multiplicities already peeled, so the peel runs in O(d).

    Parameters
    ----------
    p : SymmetricLaurentPoly

    Returns
    -------
    MultiplicityVector
        Entries b_0..b_d; negative entries are possible for inputs that are
        not genuine non-negative combinations of characters.
    """
    cs = p.coeffs
    d = len(cs) - 1
    b = [0] * (d + 1)
    peeled = 0
    for m in range(d, -1, -1):
        b[m] = cs[m] - peeled
        peeled += b[m]
    # Telescoped closed form b_k = c_k - c_{k+1}; any mismatch is a bug.
    assert all(b[k] == p.coeff(k) - p.coeff(k + 1) for k in range(d + 1))
    return MultiplicityVector(b)


def synthesize(b):
    """Inverse of decompose: sum_k b_k chi_k as a symmetric Laurent polynomial."""
    entries = list(b)
    # c_m = sum_{k>=m} b_k, a suffix sum.
    cs = [0] * len(entries)
    tail = 0
    for m in range(len(entries) - 1, -1, -1):
        tail += entries[m]
        cs[m] = tail
    return SymmetricLaurentPoly(cs)


def inner_product(p, q):
    """Exact value of (1/pi) * integral_0^pi p q (1 - cos theta) d theta.

    Algebraic evaluation: multiply p*q, multiply by the weight
    w = 1 - (x + x^(-1))/2 and take the constant term, using that
    (1/pi) * integral_0^pi cos(m theta) d theta is 1 for m = 0, else 0.
    The weight introduces half-integer coefficients, hence the Fraction
    return type, although the characters pair to plain integers.

    Returns
    -------
    fractions.Fraction
        inner_product(chi_k, chi_l) is the Kronecker delta.
    """
    r = laurent_mul(p, q)
    return Fraction(r.coeff(0)) - Fraction(r.coeff(1) + r.coeff(-1), 2)
