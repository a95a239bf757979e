"""Exhaustive-search oracles: independent ground truth at small scale.

Every search is canonical backtracking with sound pruning, so
``found=False`` with ``exhausted=True`` proves nonexistence.  Witnesses
are re-verified and deterministic (the least solution in the documented
search order).

Run:  python demos/06_oracles_and_scan.py
"""

from zsmagic import (
    complete_bipartite_graph,
    cycle_graph,
    parse_group_spec,
    report_to_text,
    scan_conjecture,
    search_kotzig,
    search_labeling,
    search_triple_bijection,
    search_zsp,
)

# Constructor and oracle agree in both directions.
print(report_to_text(search_zsp(parse_group_spec("Z9"), 3)))
print(report_to_text(search_zsp(parse_group_spec("Z6"), 3), "zsp"))

# Triple bijections: Z4 has exactly one involution, so the total-sum
# constraint already refutes the root; Z2xZ2 yields a witness.
print(report_to_text(search_triple_bijection(parse_group_spec("Z4")), "bijection"))
print(report_to_text(search_triple_bijection(parse_group_spec("Z2xZ2"))))

# Kotzig arrays, group and integer mode.
print(report_to_text(search_kotzig(parse_group_spec("Z4"), 3), "kotzig"))
print(report_to_text(search_kotzig(3, 3)))

# Magic labelings: K_{3,3} over Z6 has none (order 2 mod 4, all degrees
# odd); C4 over Z4 has the least witness 0, 1, 3, 2 around the cycle.
print(report_to_text(search_labeling(complete_bipartite_graph(3, 3), parse_group_spec("Z6")), "labeling"))
print(report_to_text(search_labeling(cycle_graph(4), parse_group_spec("Z4"))))

# Unequal-part scan: for every group of even order up to 12 with at least
# three involutions, every block-size multiset with parts >= 3 summing to
# order - 1 admits a zero-sum partition of the nonidentity elements.
for spec, sizes, report in scan_conjecture(12):
    print(f"{spec} sizes={sizes}: found={report.found} nodes={report.nodes}")
