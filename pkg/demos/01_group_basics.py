"""Tour of the group layer: parsing, arithmetic, involutions, quotients.

Run:  python demos/01_group_basics.py
"""

from zsmagic import (
    canonical_factors,
    format_element,
    in_class_g,
    involutions,
    parse_group_spec,
    quotient,
    sum_all,
    sum_all_literal,
)

# Groups are direct products of cyclic groups, written Z2xZ2xZ4.
spec = parse_group_spec("Z2xZ2xZ4")
print(f"group {spec}: order {spec.order}")

# Elements are residue tuples; arithmetic is componentwise.
a, b = (1, 0, 3), (1, 1, 2)
print(f"{a} + {b} = {spec.add(a, b)}")
print(f"-{a} = {spec.neg(a)}")
print(f"5 * {a} = {spec.scale(5, a)}")

# Enumeration is mixed radix: sorting tuples sorts by index.
print("first five elements:", spec.elements()[:5])
print("index of (1,0,2):", spec.index_of((1, 0, 2)))

# Involutions are the order-2 elements; their count is 2^rank - 1.
iset = involutions(spec)
print(f"{len(iset.elements)} involutions:", [format_element(e) for e in iset.elements])

# The sum of all elements is the unique involution when there is exactly
# one, and the identity otherwise; the closed form matches the fold.
for text in ("Z4", "Z5", "Z2xZ2"):
    s = parse_group_spec(text)
    assert sum_all(s) == sum_all_literal(s)
    print(f"sum of all elements of {s}: {format_element(sum_all(s))}")

# Class G = odd order or more than one involution.  These are exactly the
# groups whose nonzero structure supports zero-sum constructions.
for text in ("Z7", "Z6", "Z2xZ2xZ4"):
    print(f"{text} in class G: {in_class_g(parse_group_spec(text))}")

# Isomorphic presentations share a canonical form.
print("canonical(Z6) =", canonical_factors(parse_group_spec("Z6")))
print("canonical(Z2xZ3) =", canonical_factors(parse_group_spec("Z2xZ3")))

# Quotients: cosets of the subgroup spanned by given generators.
dec = quotient(parse_group_spec("Z2xZ2xZ16"), [(1, 0, 0), (0, 1, 0), (0, 0, 8)])
print(
    f"quotient of Z2xZ2xZ16 by an index-8 subgroup: {dec.quotient_spec} "
    f"with representatives {[format_element(r) for r in dec.representatives]}"
)
