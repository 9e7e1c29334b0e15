"""Tensor powers of the three dimensional representation, decomposed.

X = 1 + x + 1/x is the character of the adjoint representation of sl2
on the unit circle (x = e^{i theta}).  Its n-th power decomposes into
irreducible characters chi_k = x^-k + ... + x^k with multiplicities
b(n, k), and the same numbers fall out of the orthogonality integral
inner_product(X^n, chi_k).
"""

from trinom import (
    character,
    decompose,
    inner_product,
    laurent_mul,
    synthesize,
    trinomial_power,
)

n = 6
p = trinomial_power(n)
b = decompose(p)
print(f"X^{n} has half-coefficients {list(p.coeffs)}")
print(f"decomposition multiplicities b({n}, k): {list(b)}")

dim = sum(m * (2 * k + 1) for k, m in enumerate(b))
print(f"dimension count: sum b(2k+1) = {dim} = 3^{n} = {3**n}")

print("round trip through synthesize:", synthesize(b) == p)

print()
print("the same multiplicities via the orthogonality integral:")
print("   ", [int(inner_product(p, character(k))) for k in range(n + 1)])

print()
print("characters are orthonormal, a corner of the Gram matrix:")
for k in range(5):
    print("   ", [int(inner_product(character(k), character(l))) for l in range(5)])

print()
print("chi_2 * chi_3 re-decomposed (one copy each of chi_1 .. chi_5):")
print("   ", list(decompose(laurent_mul(character(2), character(3)))))
