"""Triple bijections: permutations phi, psi with g + phi(g) + psi(g) = 0.

These exist exactly for groups of odd order or with more than one
involution, and they power both the odd-block-size partitions and the
3-row Kotzig arrays.

Run:  python demos/03_triple_bijections.py
"""

from zsmagic import (
    base_tables,
    bijection_to_text,
    parse_group_spec,
    triple_bijection,
    triple_bijection_by_search,
    verify_triple_bijection,
)

# Odd order has a closed form: phi = identity, psi(g) = -2g.
print(bijection_to_text(triple_bijection(parse_group_spec("Z5"))))

# Three seed tables cover the smallest three-factor 2-groups.
for factors, tb in base_tables().items():
    print(f"seed table {factors}: {verify_triple_bijection(tb)}")

# Everything else reduces: products split componentwise, three-factor
# 2-groups lift through index-4 or index-8 subgroups, and two-factor
# 2-groups use a doubling construction (small ones: bounded search).
for text in ("Z2xZ2xZ3", "Z2xZ2xZ16", "Z4xZ4xZ4", "Z4xZ4", "Z2xZ32", "Z15"):
    spec = parse_group_spec(text)
    tb = triple_bijection(spec)
    print(f"{text}: verified = {verify_triple_bijection(tb).ok}")

# The bounded search fallback returns the lexicographically least pair.
tb = triple_bijection_by_search(parse_group_spec("Z2xZ2"))
print(bijection_to_text(tb))
