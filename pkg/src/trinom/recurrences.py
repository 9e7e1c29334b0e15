"""Recurrence routes for the two triangles and their central columns.

Notation: a(n, k) is the trinomial coefficient triangle (coefficient k of
x^k in (1 + x + x^2)^n read from the center, 0 <= k <= n) and b(n, k) is
the multiplicity triangle of the character decomposition of X^n, with
b(n, k) = a(n, k) - a(n, k+1).  a(n) and b(n) are the k = 0 columns
(OEIS A002426 and A005043).  Out-of-range entries (k > n or k < 0 after
reflection) are 0.

Each function below is an independent computation route with its own
explicit seeds, so that agreement between routes is meaningful evidence:

    a_triangle_pascal          a(n+1, k) = a(n, k-1) + a(n, k) + a(n, k+1)
    a_central_two_term         n a(n) = (2n-1) a(n-1) + 3(n-1) a(n-2)
    a_column_two_term          (n^2 - k^2) a(n,k) = n(2n-1) a(n-1,k) + 3n(n-1) a(n-2,k)
    a_row_descending           (n+k+1) a(n,k+1) = (n-k+1) a(n,k-1) - k a(n,k)
    a_from_central_differences a(n,k) for k <= 4 from the central column alone
    b_from_a                   b(n,k) = a(n,k) - a(n,k+1)
    b_triangle_pascal          b(n+1,k) = b(n,k-1) + b(n,k) + b(n,k+1), k >= 1
    b_central_from_a           b(n) = (3 a(n) - a(n+1)) / 2
    b_central_two_term         (n+1) b(n) = (n-1) (2 b(n-1) + 3 b(n-2))
    b_column_four_term         five-coefficient column recurrence, see
                               four_term_coefficients
    b_row_descending           (k+1)(n+1-k) b(n,k-1) =
                               (k(k+1)-n-1) b(n,k) + k(n+k+2) b(n,k+1)

Every division is integer division with the remainder checked; a nonzero
remainder raises InexactDivision and means a formula or seed is wrong.
"""

from __future__ import annotations

from .errors import InexactDivision, InvalidRange, UnsupportedK

__all__ = [
    "Triangle",
    "CentralSequence",
    "exact_div",
    "a_triangle_pascal",
    "a_central_two_term",
    "a_column_two_term",
    "a_row_descending",
    "check_cross_row_identities",
    "a_from_central_differences",
    "b_from_a",
    "b_triangle_pascal",
    "b_central_from_a",
    "b_central_two_term",
    "four_term_coefficients",
    "b_column_four_term",
    "b_row_descending",
    "b1_from_central",
    "b2_from_central",
    "b3_from_central",
    "b4_from_central",
    "b4_from_central_variant",
]


class Triangle:
    """Rows 0..N of one of the two triangles; kind is "a" or "b"."""

    __slots__ = ("kind", "rows")

    def __init__(self, kind, rows):
        if kind not in ("a", "b"):
            raise ValueError("kind must be 'a' or 'b'")
        self.kind = kind
        self.rows = [list(r) for r in rows]

    def entry(self, n, k):
        """Entry (n, k), 0 for k outside 0..n."""
        if 0 <= n < len(self.rows) and 0 <= k <= n:
            return self.rows[n][k]
        if not 0 <= n < len(self.rows):
            raise IndexError(f"row {n} not built")
        return 0

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Triangle):
            return NotImplemented
        return self.kind == other.kind and self.rows == other.rows

    def __repr__(self):
        return f"Triangle({self.kind!r}, rows=0..{len(self.rows) - 1})"


class CentralSequence:
    """Central column values indexed by n; kind is "a" or "b"."""

    __slots__ = ("kind", "values")

    def __init__(self, kind, values):
        if kind not in ("a", "b"):
            raise ValueError("kind must be 'a' or 'b'")
        self.kind = kind
        self.values = [int(v) for v in values]

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if not isinstance(other, CentralSequence):
            return NotImplemented
        return self.kind == other.kind and self.values == other.values

    def __repr__(self):
        return f"CentralSequence({self.kind!r}, n<={len(self.values) - 1})"


def exact_div(numerator, denominator, context=""):
    """Integer quotient; raises InexactDivision on any remainder."""
    q, r = divmod(numerator, denominator)
    if r:
        raise InexactDivision(numerator, denominator, context)
    return q


def _values(central):
    # Accept a CentralSequence or any plain sequence of ints.
    return central.values if isinstance(central, CentralSequence) else central


def a_triangle_pascal(n_rows):
    """Rows 0..n_rows of the a-triangle from the three term rule.

    a(n+1, k) = a(n, k-1) + a(n, k) + a(n, k+1), with the reflection
    a(n, -1) = a(n, 1) at the center and zeros beyond the edge.
    """
    if n_rows < 0:
        raise ValueError("n_rows must be >= 0")
    rows = [[1]]
    for n in range(n_rows):
        prev = rows[-1]
        top = len(prev) - 1

        def at(k):
            k = abs(k)  # center reflection
            return prev[k] if k <= top else 0

        rows.append([at(k - 1) + at(k) + at(k + 1) for k in range(n + 2)])
    return Triangle("a", rows)


def a_central_two_term(count):
    """a(0)..a(count) by n a(n) = (2n-1) a(n-1) + 3(n-1) a(n-2)."""
    if count < 0:
        raise ValueError("count must be >= 0")
    vals = [1, 1][: count + 1]
    for n in range(2, count + 1):
        vals.append(
            exact_div(
                (2 * n - 1) * vals[n - 1] + 3 * (n - 1) * vals[n - 2],
                n,
                context=f"a central step n={n}",
            )
        )
    return CentralSequence("a", vals)


def a_column_two_term(k, max_n):
    """Column k of the a-triangle for n = k..max_n.

    (n^2 - k^2) a(n, k) = n(2n-1) a(n-1, k) + 3n(n-1) a(n-2, k), seeded
    with a(k, k) = 1 and a(k+1, k) = k + 1.  At n = k the equation is the
    degenerate 0 = 0, and at n = k+1 it only repeats the seed row, so
    stepping starts at n = k + 2 where the divisor n^2 - k^2 is positive.
    """
    if not 0 <= k <= max_n:
        raise ValueError("need 0 <= k <= max_n")
    vals = [1, k + 1][: max_n - k + 1]
    for n in range(k + 2, max_n + 1):
        vals.append(
            exact_div(
                n * (2 * n - 1) * vals[-1] + 3 * n * (n - 1) * vals[-2],
                n * n - k * k,
                context=f"a column step n={n} k={k}",
            )
        )
    return vals


def a_row_descending(n, a_n, a_n1):
    """Row n of the a-triangle from the two central values a(n), a(n+1).

    Seeds a(n, 1) = (a(n+1) - a(n)) / 2, then walks outward with
    a(n, k+1) = ((n-k+1) a(n, k-1) - k a(n, k)) / (n+k+1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [a_n]
    if n == 0:
        return row
    row.append(exact_div(a_n1 - a_n, 2, context=f"a row n={n} seed k=1"))
    for k in range(1, n):
        row.append(
            exact_div(
                (n - k + 1) * row[k - 1] - k * row[k],
                n + k + 1,
                context=f"a row n={n} step k={k + 1}",
            )
        )
    return row


def check_cross_row_identities(triangle, n, k):
    """Check the four identities linking a-rows n and n+1 at column k.

    (n+1) (a(n,k-1) - a(n,k+1))  = k a(n+1,k)
    (n-k+1) a(n,k-1)             = k a(n,k) + (n+k+1) a(n,k+1)
    (n-k+1) a(n+1,k)             = (n+1) (a(n,k) + 2 a(n,k+1))
    (n+k+1) a(n+1,k)             = (n+1) (a(n,k) + 2 a(n,k-1))

    Requires rows n and n+1 in the triangle and 1 <= k <= n.  Returns the
    conjunction; a corrupted entry makes at least one of them fail.
    """
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    e = triangle.entry
    lo, mid, hi = e(n, k - 1), e(n, k), e(n, k + 1)
    up = e(n + 1, k)
    return (
        (n + 1) * (lo - hi) == k * up
        and (n - k + 1) * lo == k * mid + (n + k + 1) * hi
        and (n - k + 1) * up == (n + 1) * (mid + 2 * hi)
        and (n + k + 1) * up == (n + 1) * (mid + 2 * lo)
    )


def a_from_central_differences(n, k, central):
    """a(n, k) for k <= 4 from central values alone.

    k=1: (a(n+1) - a(n)) / 2
    k=2: (a(n+2) - 2 a(n+1) - a(n)) / 2
    k=3: (a(n+3) - 3 a(n+2) + 2 a(n)) / 2
    k=4: (a(n+4) - 4 a(n+3) + 2 a(n+2) + 4 a(n+1) - a(n)) / 2

    These follow from iterating the three term rule at the center; no
    such closed difference form is shipped for k > 4 (UnsupportedK).
    """
    if not 0 <= k <= 4:
        raise UnsupportedK(f"central differences cover k <= 4 only, got k={k}")
    a = _values(central)
    if len(a) <= n + k:
        raise ValueError(f"need central values up to n+k = {n + k}")
    ctx = f"a central-difference n={n} k={k}"
    if k == 0:
        return a[n]
    if k == 1:
        return exact_div(a[n + 1] - a[n], 2, ctx)
    if k == 2:
        return exact_div(a[n + 2] - 2 * a[n + 1] - a[n], 2, ctx)
    if k == 3:
        return exact_div(a[n + 3] - 3 * a[n + 2] + 2 * a[n], 2, ctx)
    return exact_div(a[n + 4] - 4 * a[n + 3] + 2 * a[n + 2] + 4 * a[n + 1] - a[n], 2, ctx)


def b_from_a(a_row):
    """One b-row from the matching a-row: b(n,k) = a(n,k) - a(n,k+1)."""
    row = list(a_row)
    row.append(0)  # a(n, n+1) = 0
    return [row[k] - row[k + 1] for k in range(len(row) - 1)]


def b_triangle_pascal(n_rows):
    """Rows 0..n_rows of the b-triangle from its three term rule.

    Interior: b(n+1, k) = b(n, k-1) + b(n, k) + b(n, k+1) for k >= 1.
    The rule says nothing about k = 0; the boundary column uses
    b(n+1, 0) = b(n, 1), which is forced by b = first difference of a
    plus the a-triangle rule (and agrees with b(n, 1) = b(n+1) below).
    Rows 0..2 are seeded verbatim since the interior rule starts at n = 2.
    """
    if n_rows < 0:
        raise ValueError("n_rows must be >= 0")
    seed = [[1], [0, 1], [1, 1, 1]]
    rows = [list(r) for r in seed[: n_rows + 1]]
    for n in range(2, n_rows):
        prev = rows[-1]
        top = len(prev) - 1

        def at(k):
            return prev[k] if 0 <= k <= top else 0

        row = [prev[1]]
        row.extend(at(k - 1) + at(k) + at(k + 1) for k in range(1, n + 2))
        rows.append(row)
    return Triangle("b", rows)


def b_central_from_a(n, central):
    """b(n) = (3 a(n) - a(n+1)) / 2 from the central a-values."""
    a = _values(central)
    if len(a) <= n + 1:
        raise ValueError(f"need central values up to {n + 1}")
    return exact_div(3 * a[n] - a[n + 1], 2, context=f"b from a, n={n}")


def b_central_two_term(count):
    """b(0)..b(count) by (n+1) b(n) = (n-1) (2 b(n-1) + 3 b(n-2))."""
    if count < 0:
        raise ValueError("count must be >= 0")
    vals = [1, 0][: count + 1]
    for n in range(2, count + 1):
        vals.append(
            exact_div(
                (n - 1) * (2 * vals[n - 1] + 3 * vals[n - 2]),
                n + 1,
                context=f"b central step n={n}",
            )
        )
    return CentralSequence("b", vals)


def four_term_coefficients(n, k):
    """Coefficients (A, B, C, D, E) of the b-column recurrence at (n, k).

    A b(n,k) + B b(n-1,k) + C b(n-2,k) + D b(n-3,k) + E b(n-4,k) = 0 with

        A = (n^2 - (k+1)^2)(n^2 - k^2)
        B = -2n(2n-1)(n+k)(n-k-1)
        C = -2n(n-1)(n^2 - 2n + 3 - 3k(k+1))
        D = 6n(n-1)(n-2)(2n-3)
        E = 9n(n-1)(n-2)(n-3)

    A vanishes at n = k and n = k+1, so the recurrence can only be solved
    for b(n,k) once n >= k+2.
    """
    a_coeff = (n * n - (k + 1) * (k + 1)) * (n * n - k * k)
    b_coeff = -2 * n * (2 * n - 1) * (n + k) * (n - k - 1)
    c_coeff = -2 * n * (n - 1) * (n * n - 2 * n + 3 - 3 * k * (k + 1))
    d_coeff = 6 * n * (n - 1) * (n - 2) * (2 * n - 3)
    e_coeff = 9 * n * (n - 1) * (n - 2) * (n - 3)
    return a_coeff, b_coeff, c_coeff, d_coeff, e_coeff


def b_column_four_term(k, max_n, seeds=None):
    """Column k of the b-triangle for n = k..max_n via the four term rule.

    Needs the four seed values b(k,k)..b(k+3,k); by default they are read
    off b_from_a over small Pascal-built a-rows.  Stepping starts at
    n = k + 4 so that all five history slots hold genuine column values
    and the divisor A is nonzero.
    """
    if not 0 <= k <= max_n:
        raise ValueError("need 0 <= k <= max_n")
    if seeds is None:
        a_rows = a_triangle_pascal(k + 3).rows
        seeds = [b_from_a(a_rows[m])[k] for m in range(k, k + 4)]
    seeds = [int(s) for s in seeds]
    if len(seeds) != 4:
        raise ValueError("need the four seed values b(k,k)..b(k+3,k)")
    vals = seeds[: max_n - k + 1]
    for n in range(k + 4, max_n + 1):
        ca, cb, cc, cd, ce = four_term_coefficients(n, k)
        if ca == 0:
            raise InvalidRange(f"leading coefficient vanishes at n={n}, k={k}")
        vals.append(
            exact_div(
                -(cb * vals[-1] + cc * vals[-2] + cd * vals[-3] + ce * vals[-4]),
                ca,
                context=f"b column step n={n} k={k}",
            )
        )
    return vals


def b_row_descending(n):
    """Row n of the b-triangle from nothing but n.

    Starts at the edge, b(n, n) = 1 and b(n, n+1) = 0, and solves

        (k+1)(n+1-k) b(n,k-1) = (k(k+1)-n-1) b(n,k) + k(n+k+2) b(n,k+1)

    downward for k = n..1.  The divisor (k+1)(n+1-k) is positive on that
    whole range, so this route needs no external seeds at all.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [0] * (n + 1)
    row[n] = 1
    above = 0  # b(n, n+1)
    for k in range(n, 0, -1):
        row[k - 1] = exact_div(
            (k * (k + 1) - n - 1) * row[k] + k * (n + k + 2) * above,
            (k + 1) * (n + 1 - k),
            context=f"b row n={n} step k={k - 1}",
        )
        above = row[k]
    return row


def b1_from_central(n, central):
    """b(n, 1) = b(n+1)."""
    b = _values(central)
    return b[n + 1]


def b2_from_central(n, central):
    """b(n, 2) = b(n+2) - b(n+1) - b(n)."""
    b = _values(central)
    return b[n + 2] - b[n + 1] - b[n]


def b3_from_central(n, central):
    """b(n, 3) = b(n+3) - 2 b(n+2) - b(n+1) + b(n)."""
    b = _values(central)
    return b[n + 3] - 2 * b[n + 2] - b[n + 1] + b[n]


def b4_from_central(n, central):
    """b(n, 4) = b(n+4) - 3 b(n+3) + 3 b(n+1).

    This is the fourth-difference rule that actually holds; it follows
    from the k <= 3 rules plus the b-triangle three term rule.
    """
    b = _values(central)
    return b[n + 4] - 3 * b[n + 3] + 3 * b[n + 1]


def b4_from_central_variant(n, central):
    """The fourth-difference rule as sometimes stated, trailing term 3 b(n-1).

    This form is wrong: kept only so the verification report can document
    its failure (witness n=5: gives -32 where the entry is 4).  Needs
    n >= 1.
    """
    if n < 1:
        raise ValueError("the variant form needs n >= 1")
    b = _values(central)
    return b[n + 4] - 3 * b[n + 3] + 3 * b[n - 1]
