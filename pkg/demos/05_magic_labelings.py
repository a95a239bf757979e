"""Group distance magic labelings of lexicographic blow-ups.

A labeling assigns group elements bijectively to vertices; it is magic
when every open neighborhood sums to the same constant.  Blowing up each
vertex of a base graph into an independent set and labeling each fiber
with one zero-sum block makes every weight the identity.

Run:  python demos/05_magic_labelings.py
"""

from zsmagic import (
    bipartite_blowup_exists,
    blowup_even_label,
    blowup_label,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    eulerian_bipartite_label,
    labeling_to_text,
    lex_product,
    obstruction_check,
    parse_group_spec,
    path_graph,
    verify_labeling,
)

# Flagship: K4 blown up by 3 is the complete 4-partite graph on 12
# vertices, which is Z2xZ2xZ3-distance magic with constant (0,0,0).
base = complete_graph(4)
spec = parse_group_spec("Z2xZ2xZ3")
product = lex_product(base, empty_graph(3))
labeling = blowup_label(base, 3, spec)
print(labeling_to_text(labeling))
print("verdict:", verify_labeling(product, labeling))

# The same 9-regular graph is impossible over Z12 (one involution).
print("over Z12:", obstruction_check(product, parse_group_spec("Z12")))

# The zero-sum route needs no regularity: a path base works too.
p = path_graph(4)
lab = blowup_label(p, 3, parse_group_spec("Z2xZ2xZ3"))
print("path blow-up:", verify_labeling(lex_product(p, empty_graph(3)), lab).status)

# Even fibers on a regular base: fixed-sum pairs, any group of the order.
lab = blowup_even_label(cycle_graph(4), 2, parse_group_spec("Z8"))
print("C4 blown up by 2 over Z8:", verify_labeling(lex_product(cycle_graph(4), empty_graph(2)), lab))

# Eulerian bipartite bases of order 2 mod 4 with odd fibers: the group
# splits as Z2 x (odd part) and the even degrees cancel the Z2 bit.
lab = eulerian_bipartite_label(cycle_graph(6), 3, parse_group_spec("Z2xZ9"))
print("C6 blown up by 3 over Z2xZ9:", verify_labeling(lex_product(cycle_graph(6), empty_graph(3)), lab))

# For regular bipartite bases of order 2 mod 4, existence for every group
# of the right order comes down to the parity of degree times fiber size.
for n in (2, 3):
    print(f"K33 blown up by {n} magic for all groups:", bipartite_blowup_exists(complete_bipartite_graph(3, 3), n))
