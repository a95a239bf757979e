"""Constructive zero-sum machinery for finite Abelian groups.

Three builders live here, each paired with an independent verifier:

* ``involution_quadruples`` partitions the involutions-plus-identity
  subgroup into zero-sum quadruples by a doubling recursion.
* ``triple_bijection`` produces permutations ``phi``, ``psi`` of the group
  with ``g + phi(g) + psi(g) = 0`` for every ``g``, via a ladder of
  closed forms, fixed seed tables for the three smallest three-factor
  2-groups, two quotient liftings, and a bounded deterministic search.
* ``zsp`` partitions the whole group into equal-size zero-sum blocks;
  it exists exactly when the order is odd, or the block size is at
  least 3 and the group has more than one involution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    ArityError,
    DivisibilityError,
    GroupSpecError,
    ImpossibilityError,
    NonexistenceError,
    ParameterError,
)
from .groups import (
    Element,
    GroupSpec,
    format_element,
    in_class_g,
    parse_element,
    parse_group_spec,
    prime_power_refinement,
    two_part_split,
    two_torsion_rank,
)

_SEARCH_ORDER_CAP = 256


@dataclass(frozen=True)
class TripleBijection:
    """Permutations phi, psi of the group with g + phi(g) + psi(g) = identity.

    Both are stored as permutations of element indices: ``phi[i]`` is the
    index of the image of the i-th element in enumeration order.
    """

    spec: GroupSpec
    phi: tuple[int, ...]
    psi: tuple[int, ...]

    def phi_of(self, g) -> Element:
        return self.spec.element_at(self.phi[self.spec.index_of(g)])

    def psi_of(self, g) -> Element:
        return self.spec.element_at(self.psi[self.spec.index_of(g)])

    def columns(self) -> list[tuple[Element, Element, Element]]:
        """(g, phi(g), psi(g)) triples in enumeration order of g."""
        elems = self.spec.elements()
        return [(g, elems[p], elems[q]) for g, p, q in zip(elems, self.phi, self.psi)]


@dataclass(frozen=True)
class ZeroSumPartition:
    """Disjoint blocks of m elements each, every block summing to the identity.

    Blocks normally cover the whole group; ``involution_quadruples`` returns
    a partition of the involution closure only (pass that set as the
    ``universe`` when verifying).
    """

    spec: GroupSpec
    m: int
    blocks: tuple[tuple[Element, ...], ...]

    @classmethod
    def from_blocks(cls, spec: GroupSpec, m: int, blocks) -> "ZeroSumPartition":
        normalized = tuple(
            sorted(tuple(sorted(spec.reduce(e) for e in block)) for block in blocks)
        )
        return cls(spec, m, normalized)


@dataclass(frozen=True)
class PartitionCheck:
    ok: bool
    block_index: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BijectionCheck:
    ok: bool
    index: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


# -- verifiers ----------------------------------------------------------------


def verify_zsp(spec: GroupSpec, partition, m: int, universe=None) -> PartitionCheck:
    """Check cover, disjointness, block sizes and zero sums.

    ``universe`` defaults to the whole group.  Rejection is a result, not
    an error; the first violating block index is reported.
    """
    if isinstance(partition, ZeroSumPartition):
        blocks = partition.blocks
    else:
        blocks = tuple(tuple(spec.reduce(e) for e in block) for block in partition)
    if universe is None:
        universe = spec.elements()
    universe_set = set(universe)

    for i, block in enumerate(blocks):
        if len(block) != m or len(set(block)) != m:
            return PartitionCheck(False, i, f"block {i} does not have {m} distinct elements")
    seen: set[Element] = set()
    for i, block in enumerate(blocks):
        for e in block:
            if e not in universe_set:
                return PartitionCheck(False, i, f"block {i} contains {format_element(e)} outside the universe")
            if e in seen:
                return PartitionCheck(False, i, f"block {i} repeats {format_element(e)}")
            seen.add(e)
    if seen != universe_set:
        return PartitionCheck(False, None, "blocks do not cover the universe")
    for i, block in enumerate(blocks):
        total = spec.sum(block)
        if total != spec.identity():
            return PartitionCheck(
                False, i, f"block {i} sums to {format_element(total)}"
            )
    return PartitionCheck(True)


def verify_triple_bijection(tb: TripleBijection) -> BijectionCheck:
    """Check that phi and psi are permutations with zero column sums."""
    n = tb.spec.order
    for name, perm in (("phi", tb.phi), ("psi", tb.psi)):
        if len(perm) != n or set(perm) != set(range(n)):
            return BijectionCheck(False, None, f"{name} is not a permutation")
    elems = tb.spec.elements()
    for i, g in enumerate(elems):
        total = tb.spec.sum((g, elems[tb.phi[i]], elems[tb.psi[i]]))
        if total != tb.spec.identity():
            return BijectionCheck(
                False, i, f"column at {format_element(g)} sums to {format_element(total)}"
            )
    return BijectionCheck(True)


# -- involution quadruples ------------------------------------------------------


def involution_quadruples(spec: GroupSpec) -> ZeroSumPartition:
    """Partition involutions plus identity into zero-sum quadruples.

    Requires at least two involutions (2-torsion rank >= 2).  The rank-2
    base block is the full order-4 subgroup; higher ranks double the
    previous partition along one more independent involution.
    """
    rank = two_torsion_rank(spec)
    if rank < 2:
        raise ParameterError(
            f"group {spec} has {2 ** rank - 1} involution(s); need at least 2"
        )
    basis = []
    for pos, f in enumerate(spec.factors):
        if f % 2 == 0:
            e = [0] * spec.arity
            e[pos] = f // 2
            basis.append(tuple(e))

    def doubled_blocks(gens: list[Element]) -> list[tuple[Element, ...]]:
        if len(gens) == 2:
            a, b = gens
            return [(spec.identity(), a, b, spec.add(a, b))]
        sub = doubled_blocks(gens[1:])
        top = gens[0]
        return sub + [tuple(spec.add(top, e) for e in blk) for blk in sub]

    return ZeroSumPartition.from_blocks(spec, 4, doubled_blocks(basis))


# -- triple bijections: seed tables ---------------------------------------------

_TABLE_2_2_2 = (
    ((0, 0, 0), (0, 0, 1), (0, 0, 1)),
    ((0, 0, 1), (1, 1, 1), (1, 1, 0)),
    ((0, 1, 0), (0, 1, 0), (0, 0, 0)),
    ((0, 1, 1), (1, 0, 0), (1, 1, 1)),
    ((1, 0, 0), (0, 0, 0), (1, 0, 0)),
    ((1, 0, 1), (1, 1, 0), (0, 1, 1)),
    ((1, 1, 0), (0, 1, 1), (1, 0, 1)),
    ((1, 1, 1), (1, 0, 1), (0, 1, 0)),
)

_TABLE_2_2_4 = (
    ((0, 0, 0), (0, 1, 0), (0, 1, 0)),
    ((0, 1, 0), (1, 1, 2), (1, 0, 2)),
    ((1, 0, 0), (1, 0, 1), (0, 0, 3)),
    ((1, 1, 0), (0, 0, 3), (1, 1, 1)),
    ((0, 0, 1), (1, 0, 3), (1, 0, 0)),
    ((0, 1, 1), (0, 0, 1), (0, 1, 2)),
    ((1, 0, 1), (0, 1, 3), (1, 1, 0)),
    ((1, 1, 1), (1, 1, 1), (0, 0, 2)),
    ((0, 0, 2), (0, 0, 2), (0, 0, 0)),
    ((0, 1, 2), (1, 0, 0), (1, 1, 2)),
    ((1, 0, 2), (1, 1, 3), (0, 1, 3)),
    ((1, 1, 2), (0, 1, 1), (1, 0, 1)),
    ((0, 0, 3), (0, 0, 0), (0, 0, 1)),
    ((0, 1, 3), (1, 0, 2), (1, 1, 3)),
    ((1, 0, 3), (1, 1, 0), (0, 1, 1)),
    ((1, 1, 3), (0, 1, 2), (1, 0, 3)),
)

# The 2x2x8 seed: one strip for third coordinate in {0, 4}, then four-column
# strata indexed by (a, b, c) triples with a + b + c = 0 mod 8.
_STRIP_2_2_8 = (
    ((0, 0, 0), (0, 1, 0), (0, 1, 0)),
    ((0, 1, 0), (1, 1, 4), (1, 0, 4)),
    ((1, 0, 0), (1, 0, 0), (0, 0, 0)),
    ((1, 1, 0), (0, 0, 4), (1, 1, 4)),
    ((0, 0, 4), (0, 0, 0), (0, 0, 4)),
    ((0, 1, 4), (1, 0, 4), (1, 1, 0)),
    ((1, 0, 4), (1, 1, 0), (0, 1, 4)),
    ((1, 1, 4), (0, 1, 4), (1, 0, 0)),
)

RESIDUE_TRIPLES_2_2_8 = ((2, 3, 3), (7, 2, 7), (5, 6, 5), (6, 1, 1), (1, 5, 2), (3, 7, 6))


def _columns_2_2_8():
    cols = list(_STRIP_2_2_8)
    for a, b, c in RESIDUE_TRIPLES_2_2_8:
        cols += [
            ((0, 0, a), (0, 0, b), (0, 0, c)),
            ((0, 1, a), (1, 0, b), (1, 1, c)),
            ((1, 0, a), (1, 1, b), (0, 1, c)),
            ((1, 1, a), (0, 1, b), (1, 0, c)),
        ]
    return tuple(cols)


@lru_cache(maxsize=None)
def base_tables() -> dict[tuple[int, ...], TripleBijection]:
    """The three seed tables, keyed by factor tuple."""
    out = {}
    for factors, cols in (
        ((2, 2, 2), _TABLE_2_2_2),
        ((2, 2, 4), _TABLE_2_2_4),
        ((2, 2, 8), _columns_2_2_8()),
    ):
        spec = GroupSpec(factors)
        phi = [0] * spec.order
        psi = [0] * spec.order
        for g, p, q in cols:
            i = spec.index_of(g)
            phi[i] = spec.index_of(p)
            psi[i] = spec.index_of(q)
        out[factors] = TripleBijection(spec, tuple(phi), tuple(psi))
    return out


# -- triple bijections: ladder ---------------------------------------------------


def _maps_from_tb(tb: TripleBijection) -> tuple[dict, dict]:
    elems = tb.spec.elements()
    phi = {g: elems[tb.phi[i]] for i, g in enumerate(elems)}
    psi = {g: elems[tb.psi[i]] for i, g in enumerate(elems)}
    return phi, psi


def _tb_from_maps(spec: GroupSpec, phi: dict, psi: dict) -> TripleBijection:
    elems = spec.elements()
    return TripleBijection(
        spec,
        tuple(spec.index_of(phi[g]) for g in elems),
        tuple(spec.index_of(psi[g]) for g in elems),
    )


def _odd_order_maps(spec: GroupSpec) -> tuple[dict, dict]:
    phi = {}
    psi = {}
    for g in spec.elements():
        phi[g] = g
        psi[g] = spec.scale(-2, g)
    return phi, psi


def _table_maps(spec: GroupSpec) -> tuple[dict, dict]:
    """Seed-table maps for any coordinate permutation of (2, 2, 2^k), k <= 3."""
    key = tuple(sorted(spec.factors))
    table = base_tables()[key]
    sigma = sorted(range(3), key=lambda i: (spec.factors[i], i))
    tphi, tpsi = _maps_from_tb(table)

    def permute(g):
        return tuple(g[sigma[j]] for j in range(3))

    def unpermute(g):
        out = [0, 0, 0]
        for j in range(3):
            out[sigma[j]] = g[j]
        return tuple(out)

    phi = {}
    psi = {}
    for g in spec.elements():
        t = permute(g)
        phi[g] = unpermute(tphi[t])
        psi[g] = unpermute(tpsi[t])
    return phi, psi


def _product_maps(spec: GroupSpec, pos_a, pos_b) -> tuple[dict, dict]:
    spec_a = GroupSpec(tuple(spec.factors[i] for i in pos_a))
    spec_b = GroupSpec(tuple(spec.factors[i] for i in pos_b))
    phi_a, psi_a = _ladder_maps(spec_a)
    phi_b, psi_b = _ladder_maps(spec_b)

    def scatter(ea, eb):
        out = [0] * spec.arity
        for i, x in zip(pos_a, ea):
            out[i] = x
        for i, x in zip(pos_b, eb):
            out[i] = x
        return tuple(out)

    phi = {}
    psi = {}
    for g in spec.elements():
        ga = tuple(g[i] for i in pos_a)
        gb = tuple(g[i] for i in pos_b)
        phi[g] = scatter(phi_a[ga], phi_b[gb])
        psi[g] = scatter(psi_a[ga], psi_b[gb])
    return phi, psi


def _embed(spec: GroupSpec, mults, e_sub) -> Element:
    return tuple(x * m for x, m in zip(e_sub, mults))


def _unembed(mults, e) -> Element:
    return tuple(x // m for x, m in zip(e, mults))


def _quotient22_maps(spec: GroupSpec) -> tuple[dict, dict]:
    """Lift through an index-4 subgroup with quotient Z2 x Z2.

    Applies to three-factor 2-groups whose two largest exponents are at
    least 2.  Representatives are 0, c, d, -c-d with c, d unit vectors in
    the two halved coordinates; the three nontrivial cosets are matched
    into zero-sum triples {c+b, d+phi0(b), -c-d+psi0(b)}.
    """
    pa, pb, pc = sorted(range(3), key=lambda i: (spec.factors[i], i))
    mults = [1, 1, 1]
    mults[pb] = 2
    mults[pc] = 2
    sub_spec = GroupSpec(tuple(f // m for f, m in zip(spec.factors, mults)))
    phi0, psi0 = _ladder_maps(sub_spec)
    phi0_inv = {v: k for k, v in phi0.items()}
    psi0_inv = {v: k for k, v in psi0.items()}

    def unit(pos):
        e = [0, 0, 0]
        e[pos] = 1
        return tuple(e)

    c = unit(pb)
    d = unit(pc)
    cd = spec.neg(spec.add(c, d))
    emb = lambda x: _embed(spec, mults, x)
    unemb = lambda x: _unembed(mults, x)

    phi = {}
    psi = {}
    for a in spec.elements():
        parity = (a[pb] % 2, a[pc] % 2)
        if parity == (0, 0):
            b = unemb(a)
            phi[a] = emb(phi0[b])
            psi[a] = emb(psi0[b])
        elif parity == (1, 0):
            b = unemb(spec.sub(a, c))
            phi[a] = spec.add(d, emb(phi0[b]))
            psi[a] = spec.add(cd, emb(psi0[b]))
        elif parity == (0, 1):
            b = phi0_inv[unemb(spec.sub(a, d))]
            phi[a] = spec.add(cd, emb(psi0[b]))
            psi[a] = spec.add(c, emb(b))
        else:
            b = psi0_inv[unemb(spec.sub(a, cd))]
            phi[a] = spec.add(c, emb(b))
            psi[a] = spec.add(d, emb(phi0[b]))
    return phi, psi


def _quotient8_maps(spec: GroupSpec) -> tuple[dict, dict]:
    """Lift through an index-8 subgroup with cyclic quotient Z8.

    Applies to Z2 x Z2 x Z2^k with k >= 4 (any coordinate order).  The
    quotient splits as {0,4} u {1,2,5} u {7,6,3}; the first part stays
    inside the intermediate subgroup, the two residue triples turn into
    zero-sum element triples that phi and psi rotate in opposite
    directions.
    """
    pz = max(range(3), key=lambda i: (spec.factors[i], i))
    mults0 = [1, 1, 1]
    mults0[pz] = 8
    mults1 = [1, 1, 1]
    mults1[pz] = 4
    spec0 = GroupSpec(tuple(f // m for f, m in zip(spec.factors, mults0)))
    spec1 = GroupSpec(tuple(f // m for f, m in zip(spec.factors, mults1)))
    phi0, psi0 = _ladder_maps(spec0)
    phi1, psi1 = _ladder_maps(spec1)
    phi0_inv = {v: k for k, v in phi0.items()}
    psi0_inv = {v: k for k, v in psi0.items()}

    def unit(value):
        e = [0, 0, 0]
        e[pz] = value
        return tuple(e)

    c = unit(1)
    d = unit(2)
    cd = spec.neg(spec.add(c, d))  # residue 5
    emb0 = lambda x: _embed(spec, mults0, x)
    unemb0 = lambda x: _unembed(mults0, x)
    emb1 = lambda x: _embed(spec, mults1, x)
    unemb1 = lambda x: _unembed(mults1, x)

    phi = {}
    psi = {}
    for a in spec.elements():
        z = a[pz] % 8
        if z in (0, 4):
            b = unemb1(a)
            phi[a] = emb1(phi1[b])
            psi[a] = emb1(psi1[b])
        elif z == 1:
            b = unemb0(spec.sub(a, c))
            phi[a] = spec.add(d, emb0(phi0[b]))
            psi[a] = spec.add(cd, emb0(psi0[b]))
        elif z == 2:
            b = phi0_inv[unemb0(spec.sub(a, d))]
            phi[a] = spec.add(cd, emb0(psi0[b]))
            psi[a] = spec.add(c, emb0(b))
        elif z == 5:
            b = psi0_inv[unemb0(spec.sub(a, cd))]
            phi[a] = spec.add(c, emb0(b))
            psi[a] = spec.add(d, emb0(phi0[b]))
        elif z == 7:
            b = unemb0(spec.add(a, c))
            phi[a] = spec.add(spec.neg(d), emb0(phi0[b]))
            psi[a] = spec.add(spec.neg(cd), emb0(psi0[b]))
        elif z == 6:
            b = phi0_inv[unemb0(spec.add(a, d))]
            phi[a] = spec.add(spec.neg(cd), emb0(psi0[b]))
            psi[a] = spec.add(spec.neg(c), emb0(b))
        else:  # z == 3
            b = psi0_inv[unemb0(spec.add(a, cd))]
            phi[a] = spec.add(spec.neg(c), emb0(b))
            psi[a] = spec.add(spec.neg(d), emb0(phi0[b]))
    return phi, psi


def _search_maps(spec: GroupSpec) -> tuple[dict, dict]:
    tb = triple_bijection_by_search(spec)
    return _maps_from_tb(tb)


def _fibonacci_maps(spec: GroupSpec) -> dict:
    """phi for Z_m x Z_m: (x, y) -> (y, x + y).

    Both the map and its sum with the identity are linear with unit
    determinant mod m, so phi and g -> g + phi(g) are bijections.
    """
    m = spec.factors[0]
    return {g: ((g[1]) % m, (g[0] + g[1]) % m) for g in spec.elements()}


def _two_factor_phi(spec: GroupSpec) -> dict:
    """phi for Z_m x Z_n (m <= n, both powers of 2, m >= 2).

    Doubling step: embed H = Z_m x Z_{n/2} as the even second coordinates,
    take H's map u recursively, and split both cosets of H along
    S = {h : h + u(h) has even first coordinate}.  On S the H-coset keeps
    u and the other coset uses u shifted by delta = (1, 0) pushed across;
    off S the roles swap.  The shift lands each piece's sums in
    complementary halves, so g -> -g - phi(g) stays bijective.
    """
    m, n = spec.factors
    if m == n:
        return _fibonacci_maps(spec)
    sub = GroupSpec((m, n // 2))
    u = _two_factor_phi(sub)
    in_even_half = {}
    for h in sub.elements():
        t = sub.add(h, u[h])
        in_even_half[h] = t[0] % 2 == 0
    delta = (1, 0)
    c = (0, 1)
    phi = {}
    for h in sub.elements():
        g = (h[0], 2 * h[1])
        gc = spec.add(c, g)
        straight = (u[h][0], 2 * u[h][1])
        ud = sub.add(u[h], delta)
        shifted = spec.add(c, (ud[0], 2 * ud[1]))
        if in_even_half[h]:
            phi[g] = straight
            phi[gc] = shifted
        else:
            phi[g] = shifted
            phi[gc] = straight
    return phi


def _two_factor_maps(spec: GroupSpec) -> tuple[dict, dict]:
    lo, hi = sorted(range(2), key=lambda i: (spec.factors[i], i))
    sorted_spec = GroupSpec((spec.factors[lo], spec.factors[hi]))
    phi_sorted = _two_factor_phi(sorted_spec)
    phi = {}
    psi = {}
    for g in spec.elements():
        p_sorted = phi_sorted[(g[lo], g[hi])]
        p = [0, 0]
        p[lo], p[hi] = p_sorted
        phi[g] = tuple(p)
        psi[g] = spec.neg(spec.add(g, phi[g]))
    return phi, psi


def _ladder_maps(spec: GroupSpec) -> tuple[dict, dict]:
    """Strategy ladder on a prime-power presentation known to admit a solution."""
    if spec.order % 2 == 1:
        return _odd_order_maps(spec)
    evens = [i for i, f in enumerate(spec.factors) if f % 2 == 0]
    odds = [i for i, f in enumerate(spec.factors) if f % 2 == 1]
    if odds:
        return _product_maps(spec, evens, odds)
    # pure 2-group
    k = len(spec.factors)
    if k >= 4:
        return _product_maps(spec, [0, 1], list(range(2, k)))
    if k == 3:
        exps = sorted(f.bit_length() - 1 for f in spec.factors)
        if exps[0] == 1 and exps[1] == 1 and exps[2] <= 3:
            return _table_maps(spec)
        if exps[1] >= 2:
            return _quotient22_maps(spec)
        return _quotient8_maps(spec)
    # two cyclic factors: the backtracking fallback is only tractable at
    # small orders, so larger groups use the doubling construction
    if spec.order <= 16:
        return _search_maps(spec)
    return _two_factor_maps(spec)


def triple_bijection_by_search(
    spec: GroupSpec, *, max_order: int = _SEARCH_ORDER_CAP
) -> TripleBijection:
    """Deterministic backtracking fallback; returns the enumeration-least pair.

    phi values are tried in enumeration order for each g in enumeration
    order; psi is forced to -g - phi(g) and pruned on injectivity.
    """
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution, so the element sum is that "
            "involution and no triple bijection exists"
        )
    n = spec.order
    if n > max_order:
        raise ParameterError(f"search fallback capped at order {max_order}, got {n}")
    elems = spec.elements()
    index = {e: i for i, e in enumerate(elems)}
    neg_sum = [
        [index[spec.neg(spec.add(g, v))] for v in elems] for g in elems
    ]
    phi = [-1] * n
    psi = [-1] * n
    used_phi = [False] * n
    used_psi = [False] * n

    def extend(g: int) -> bool:
        if g == n:
            return True
        for v in range(n):
            if used_phi[v]:
                continue
            w = neg_sum[g][v]
            if used_psi[w]:
                continue
            phi[g] = v
            psi[g] = w
            used_phi[v] = True
            used_psi[w] = True
            if extend(g + 1):
                return True
            used_phi[v] = False
            used_psi[w] = False
        return False

    if not extend(0):
        raise NonexistenceError(f"no triple bijection exists for {spec}")
    return TripleBijection(spec, tuple(phi), tuple(psi))


def triple_bijection(spec: GroupSpec) -> TripleBijection:
    """Build a verified triple bijection for any group of odd order or with
    more than one involution.

    Strategy order: odd-order closed form, componentwise product of two
    admissible parts, seed tables, the two quotient liftings, bounded
    search.  Mixed cyclic factors are refined to prime powers internally
    and the result is translated back to the given presentation.
    """
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution, so the element sum is that "
            "involution and no triple bijection exists"
        )
    if spec.order % 2 == 1:
        phi, psi = _odd_order_maps(spec)
        return _tb_from_maps(spec, phi, psi)
    ref = prime_power_refinement(spec)
    if ref.refined.factors == spec.factors:
        phi, psi = _ladder_maps(spec)
        return _tb_from_maps(spec, phi, psi)
    phi_r, psi_r = _ladder_maps(ref.refined)
    phi = {}
    psi = {}
    for g in spec.elements():
        r = ref.to_refined(g)
        phi[g] = ref.from_refined(phi_r[r])
        psi[g] = ref.from_refined(psi_r[r])
    return _tb_from_maps(spec, phi, psi)


# -- equal-size zero-sum partitions ---------------------------------------------


def _inverse_pairs(spec: GroupSpec, exclude: set[Element]) -> list[tuple[Element, Element]]:
    """Pairs {g, -g} of the elements outside ``exclude``, by ascending g."""
    pairs = []
    taken: set[Element] = set()
    for g in spec.elements():
        if g in exclude or g in taken:
            continue
        ng = spec.neg(g)
        pairs.append((g, ng))
        taken.add(g)
        taken.add(ng)
    return pairs


def zsp_even(spec: GroupSpec, m2: int) -> ZeroSumPartition:
    """Partition into blocks of even size ``m2 >= 4``.

    Blocks are assembled greedily, in enumeration order, from the
    involution quadruples and the inverse pairs of the remaining
    elements; a block size of 2 mod 4 forces one reserved pair per block.
    The result is verified before being returned.
    """
    if m2 % 2 != 0 or m2 < 4:
        raise ParameterError(f"block size must be even and >= 4, got {m2}")
    if spec.order % m2 != 0:
        raise DivisibilityError(f"{m2} does not divide group order {spec.order}")
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution; its element sum is the "
            "involution, so no zero-sum partition exists"
        )
    quads = list(involution_quadruples(spec).blocks)
    closure = {e for blk in quads for e in blk}
    pairs = _inverse_pairs(spec, exclude=closure)
    t = spec.order // m2
    blocks: list[list[Element]] = []
    qi = pi = 0
    if m2 % 4 == 2:
        if len(pairs) < t:
            raise ParameterError(f"cannot assemble blocks of size {m2} for {spec}")
        reserved, rest = pairs[:t], pairs[t:]
        for b in range(t):
            block = list(reserved[b])
            cap = m2 - 2
            while cap >= 4 and qi < len(quads):
                block.extend(quads[qi])
                qi += 1
                cap -= 4
            while cap >= 2:
                block.extend(rest[pi])
                pi += 1
                cap -= 2
            blocks.append(block)
    else:
        rest = pairs
        for b in range(t):
            block: list[Element] = []
            cap = m2
            while cap >= 4 and qi < len(quads):
                block.extend(quads[qi])
                qi += 1
                cap -= 4
            while cap >= 2:
                block.extend(rest[pi])
                pi += 1
                cap -= 2
            blocks.append(block)
    partition = ZeroSumPartition.from_blocks(spec, m2, blocks)
    check = verify_zsp(spec, partition, m2)
    if not check.ok:
        raise AssertionError(f"internal: assembled partition failed: {check.reason}")
    return partition


def _mirrored_triples(spec: GroupSpec, count: int, pool: tuple[Element, ...]):
    """Find ``count`` disjoint zero-sum triples whose negations are also
    disjoint from everything chosen; the leftover pool stays closed under
    negation.  Returns None when no arrangement exists."""
    if count == 0:
        return []
    if len(pool) < 6 * count:
        return None
    pool_set = set(pool)
    a = pool[0]
    for y in pool[1:]:
        z = spec.neg(spec.add(a, y))
        if z <= y or z not in pool_set or z == a:
            continue
        trip = (a, y, z)
        mirror = tuple(sorted(spec.neg(x) for x in trip))
        removed = set(trip) | set(mirror)
        if len(removed) != 6:
            continue
        sub = _mirrored_triples(
            spec, count - 1, tuple(e for e in pool if e not in removed)
        )
        if sub is not None:
            return [trip] + sub
    na = spec.neg(a)
    return _mirrored_triples(
        spec, count, tuple(e for e in pool if e != a and e != na)
    )


def _exhaustive_equal_blocks(spec: GroupSpec, m: int):
    """Plain canonical backtracking over full partitions; constructor fallback."""
    elems = spec.elements()
    index = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    assigned = [False] * n
    blocks: list[list[int]] = []

    def add(i, j):
        return index[spec.add(elems[i], elems[j])]

    neg = [index[spec.neg(e)] for e in elems]

    def least_free() -> int:
        for i in range(n):
            if not assigned[i]:
                return i
        return -1

    def extend(block: list[int], total: int) -> bool:
        if len(block) == m:
            if total != index[spec.identity()]:
                return False
            blocks.append(list(block))
            anchor = least_free()
            if anchor < 0:
                return True
            assigned[anchor] = True
            ok = extend([anchor], anchor)
            if not ok:
                assigned[anchor] = False
                blocks.pop()
            return ok
        if len(block) == m - 1:
            forced = neg[total]
            if forced > block[-1] and not assigned[forced]:
                assigned[forced] = True
                ok = extend(block + [forced], add(total, forced))
                if not ok:
                    assigned[forced] = False
                return ok
            return False
        for i in range(block[-1] + 1, n):
            if assigned[i]:
                continue
            assigned[i] = True
            if extend(block + [i], add(total, i)):
                return True
            assigned[i] = False
        return False

    assigned[0] = True
    if not extend([0], 0):
        return None
    return [[elems[i] for i in blk] for blk in blocks]


def _odd_base_partition(spec: GroupSpec, m: int) -> ZeroSumPartition:
    """Equal-size zero-sum partition of an odd-order group.

    The identity block takes (m-1)/2 inverse pairs; every other block is
    one zero-sum triple plus (m-3)/2 inverse pairs.  Triples are chosen in
    mirrored pairs so the leftover elements always split into inverse
    pairs; the block count t = n/m is odd, so t-1 is even.
    """
    n = spec.order
    t = n // m
    pool = tuple(e for e in spec.elements() if e != spec.identity())
    seeds = _mirrored_triples(spec, (t - 1) // 2, pool)
    if seeds is not None:
        used = {e for trip in seeds for e in trip}
        used |= {spec.neg(e) for e in used}
        pads = _inverse_pairs(spec, exclude=used | {spec.identity()})
        blocks: list[list[Element]] = []
        first = [spec.identity()]
        pi = 0
        for _ in range((m - 1) // 2):
            first.extend(pads[pi])
            pi += 1
        blocks.append(first)
        ordered: list[tuple[Element, ...]] = []
        for trip in seeds:
            ordered.append(trip)
            ordered.append(tuple(sorted(spec.neg(x) for x in trip)))
        for trip in ordered:
            block = list(trip)
            for _ in range((m - 3) // 2):
                block.extend(pads[pi])
                pi += 1
            blocks.append(block)
        partition = ZeroSumPartition.from_blocks(spec, m, blocks)
        if verify_zsp(spec, partition, m).ok:
            return partition
    found = _exhaustive_equal_blocks(spec, m)
    if found is None:
        raise AssertionError(f"internal: no {m}-block partition found for {spec}")
    return ZeroSumPartition.from_blocks(spec, m, found)


def zsp_odd(spec: GroupSpec, m: int) -> ZeroSumPartition:
    """Partition into blocks of odd size ``m >= 3``.

    Odd-order groups use the pair/triple base construction directly.  For
    even order the group splits as (2-part) x (odd part); the odd part is
    partitioned first and every block is lifted once per 2-part element
    ``w``, with first coordinates phi(w), psi(w) and m-2 copies of the
    preimage of w under w -> (m-2)w, so each lifted block still sums to
    the identity.
    """
    if m % 2 != 1 or m < 3:
        raise ParameterError(f"block size must be odd and >= 3, got {m}")
    if spec.order % m != 0:
        raise DivisibilityError(f"{m} does not divide group order {spec.order}")
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution; its element sum is the "
            "involution, so no zero-sum partition exists"
        )
    if spec.order % 2 == 1:
        return _odd_base_partition(spec, m)
    split = two_part_split(spec)
    two_spec = split.two_spec
    odd_spec = split.odd_spec
    lam_partition = _odd_base_partition(odd_spec, m)
    tb = triple_bijection(two_spec)
    exponent = math.lcm(*two_spec.factors)
    shrink = pow(m - 2, -1, exponent)
    blocks = []
    for w in two_spec.elements():
        phi_w = tb.phi_of(w)
        psi_w = tb.psi_of(w)
        gamma_inv_w = two_spec.scale(shrink, w)
        for block in lam_partition.blocks:
            lifted = [split.merge(phi_w, block[0]), split.merge(psi_w, block[1])]
            lifted.extend(split.merge(gamma_inv_w, a) for a in block[2:])
            blocks.append(lifted)
    partition = ZeroSumPartition.from_blocks(spec, m, blocks)
    check = verify_zsp(spec, partition, m)
    if not check.ok:
        raise AssertionError(f"internal: lifted partition failed: {check.reason}")
    return partition


def zsp(spec: GroupSpec, m: int) -> ZeroSumPartition:
    """Partition the group into m-element zero-sum blocks.

    Exists exactly when m >= 3 divides the order and the group is of odd
    order or has more than one involution.  m = 2 is always rejected: the
    block containing the identity cannot reach a zero sum with one other
    distinct element.
    """
    if m < 2:
        raise ParameterError(f"block size must be at least 2, got {m}")
    if m == 2:
        raise ImpossibilityError(
            "no partition into zero-sum blocks of size 2 exists: the identity "
            "has no distinct zero-sum partner"
        )
    if spec.order % m != 0:
        raise DivisibilityError(f"{m} does not divide group order {spec.order}")
    if spec.order % 2 == 1:
        return _odd_base_partition(spec, m)
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution; its element sum is the "
            "involution, so no zero-sum partition exists"
        )
    if m % 2 == 0:
        return zsp_even(spec, m)
    return zsp_odd(spec, m)


# -- certificates ----------------------------------------------------------------


def format_blocks(blocks) -> list[str]:
    return [" ".join(format_element(e) for e in block) for block in blocks]


def parse_blocks(lines, spec: GroupSpec) -> list[tuple[Element, ...]]:
    blocks = []
    for line in lines:
        parts = line.split()
        if not parts:
            continue
        try:
            block = tuple(spec.reduce(parse_element(p)) for p in parts)
        except ArityError as exc:
            raise GroupSpecError(str(exc)) from exc
        blocks.append(block)
    return blocks


def partition_to_text(partition: ZeroSumPartition) -> str:
    header = f"partition {partition.spec} m={partition.m}"
    return "\n".join([header] + format_blocks(partition.blocks)) + "\n"


def partition_from_text(text: str) -> ZeroSumPartition:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("partition "):
        raise GroupSpecError("not a partition certificate")
    header = lines[0].split()
    if len(header) != 3 or not header[2].startswith("m="):
        raise GroupSpecError(f"bad partition header {lines[0]!r}")
    spec = parse_group_spec(header[1])
    m = int(header[2][2:])
    blocks = parse_blocks(lines[1:], spec)
    return ZeroSumPartition.from_blocks(spec, m, blocks)


def bijection_to_text(tb: TripleBijection) -> str:
    lines = [f"bijection {tb.spec}"]
    for g, p, q in tb.columns():
        lines.append(f"{format_element(g)} {format_element(p)} {format_element(q)}")
    return "\n".join(lines) + "\n"


def bijection_from_text(text: str) -> TripleBijection:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("bijection "):
        raise GroupSpecError("not a bijection certificate")
    spec = parse_group_spec(lines[0].split()[1])
    n = spec.order
    phi = [-1] * n
    psi = [-1] * n
    if len(lines) - 1 != n:
        raise GroupSpecError(f"expected {n} rows, found {len(lines) - 1}")
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise GroupSpecError(f"bad bijection row {line!r}")
        g, p, q = (spec.reduce(parse_element(x)) for x in parts)
        i = spec.index_of(g)
        phi[i] = spec.index_of(p)
        psi[i] = spec.index_of(q)
    if -1 in phi:
        raise GroupSpecError("bijection rows do not cover the group")
    return TripleBijection(spec, tuple(phi), tuple(psi))
