"""A walk through the two triangles and the routes that build them.

The a-triangle holds the coefficients of (1 + x + 1/x)^n for x^0..x^n;
the b-triangle holds the multiplicities you get when that power is
re-expanded in the character basis.  Every route registered in
trinom.ROUTES must produce the same numbers, so the demo ends by letting
first_divergence hunt for a disagreement that is not there.
"""

from trinom import ROUTES, first_divergence, route_rows

N = 10

print("a-triangle, rows 0..10 (pascal route):")
for row in route_rows("pascal-a", N):
    print("   ", row)

print()
print("b-triangle, rows 0..10 (decomposition of the same powers):")
for row in route_rows("oracle-b", N):
    print("   ", row)

print()
print("column k=0 of a is the central trinomial sequence,")
print("column k=0 of b is the Riordan sequence:")
print("   ", [row[0] for row in route_rows("central-a", N)])
print("   ", [row[0] for row in route_rows("central-b", N)])

print()
print("registered routes:")
for rid, route in sorted(ROUTES.items()):
    cover = "full rows" if route.k_cap is None else f"columns k <= {route.k_cap}"
    print(f"    {rid:<18} kind {route.kind}, {cover}")

print()
print("pairwise agreement up to row 120:")
ids = sorted(ROUTES)
for i, ra in enumerate(ids):
    for rb in ids[i + 1:]:
        if ROUTES[ra].kind != ROUTES[rb].kind:
            continue
        where = first_divergence(ra, rb, 120)
        marker = "agree" if where is None else f"DIVERGE at {where}"
        print(f"    {ra:<18} ~ {rb:<18} {marker}")
