"""Graph model, lexicographic blow-ups and group distance magic labelings.

A labeling assigns the elements of an Abelian group bijectively to the
vertices of a graph of matching order; it is magic when every vertex's
open-neighborhood label sum equals one constant.  The constructors here
realise the blow-up families; ``verify_labeling`` is the generic check
and ``obstruction_check`` the two parity obstructions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GroupSpecError, NonexistenceError, ParameterError
from .groups import (
    Element,
    GroupSpec,
    format_element,
    in_class_g,
    involution_count,
    parse_element,
    parse_group_spec,
    two_part_split,
)
from .zsp import zsp

OBSTRUCTION_ODD_REGULAR_ONE_INVOLUTION = "odd-regular-one-involution"
OBSTRUCTION_ODD_DEGREES_ORDER_2_MOD_4 = "odd-degrees-order-2-mod-4"


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency."""

    def __init__(self, n: int, edges=(), bipartition=None):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ParameterError(f"loop at vertex {u} not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self.degrees: tuple[int, ...] = tuple(len(a) for a in self.adj)
        self._given_bipartition = None
        if bipartition is not None:
            v1, v2 = (frozenset(bipartition[0]), frozenset(bipartition[1]))
            self._given_bipartition = (v1, v2)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self.degrees)) == 1

    @property
    def regular_degree(self) -> int | None:
        return self.degrees[0] if self.n and self.is_regular else None

    @property
    def all_degrees_even(self) -> bool:
        return all(d % 2 == 0 for d in self.degrees)

    @property
    def all_degrees_odd(self) -> bool:
        return all(d % 2 == 1 for d in self.degrees)

    def _bfs_components(self):
        """2-color each component; None if some component has an odd cycle."""
        color = [-1] * self.n
        components = []
        for root in range(self.n):
            if color[root] != -1:
                continue
            color[root] = 0
            comp = ([root], [])
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        comp[color[w]].append(w)
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
            components.append(comp)
        return components

    def _is_valid_two_coloring(self, v1: frozenset, v2: frozenset) -> bool:
        if v1 & v2 or (v1 | v2) != set(range(self.n)):
            return False
        for u, v in self.edges():
            if (u in v1) == (v in v1):
                return False
        return True

    def bipartition(self):
        """A valid (V1, V2) as sorted tuples, or None if not bipartite.

        A supplied bipartition is used when it is a proper 2-coloring and
        recomputed by BFS otherwise.
        """
        if self._given_bipartition is not None:
            v1, v2 = self._given_bipartition
            if self._is_valid_two_coloring(v1, v2):
                return (tuple(sorted(v1)), tuple(sorted(v2)))
        comps = self._bfs_components()
        if comps is None:
            return None
        v1: list[int] = []
        v2: list[int] = []
        for a, b in comps:
            v1.extend(a)
            v2.extend(b)
        return (tuple(sorted(v1)), tuple(sorted(v2)))

    @property
    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def balanced_bipartition(self):
        """A proper 2-coloring with equal sides, or None.

        A balanced supplied bipartition wins; otherwise component sides
        are swapped (subset-sum over components) to reach n/2.
        """
        if self.n % 2 != 0:
            return None
        bip = self.bipartition()
        if bip is None:
            return None
        if len(bip[0]) == len(bip[1]):
            return bip
        comps = self._bfs_components()
        half = self.n // 2
        # reachable[i] = set of side-1 totals using the first i components
        reachable = [{0}]
        for a, b in comps:
            reachable.append({t + len(a) for t in reachable[-1]} | {t + len(b) for t in reachable[-1]})
        if half not in reachable[-1]:
            return None
        v1: list[int] = []
        v2: list[int] = []
        need = half
        for i in range(len(comps) - 1, -1, -1):
            a, b = comps[i]
            if need - len(a) in reachable[i]:
                v1.extend(a)
                v2.extend(b)
                need -= len(a)
            else:
                v1.extend(b)
                v2.extend(a)
                need -= len(b)
        return (tuple(sorted(v1)), tuple(sorted(v2)))

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("a cycle needs at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    edges = [(u, a + v) for u in range(a) for v in range(b)]
    return Graph(a + b, edges, bipartition=(range(a), range(a, a + b)))


def lex_product(g: Graph, h: Graph) -> Graph:
    """Blow up each vertex of g into a copy of h.

    Vertex (u, v) sits at index u * |h| + v; (u, v) ~ (x, y) iff u ~ x in
    g, or u = x and v ~ y in h.
    """
    nh = h.n
    edges = []
    for u, x in g.edges():
        for v in range(nh):
            for y in range(nh):
                edges.append((u * nh + v, x * nh + y))
    for u in range(g.n):
        for v, y in h.edges():
            edges.append((u * nh + v, u * nh + y))
    return Graph(g.n * nh, edges)


@dataclass(frozen=True)
class Labeling:
    """A bijection from vertices onto the elements of a group."""

    spec: GroupSpec
    assignment: tuple[Element, ...]

    def __post_init__(self):
        reduced = tuple(self.spec.reduce(e) for e in self.assignment)
        object.__setattr__(self, "assignment", reduced)
        if len(reduced) != self.spec.order or len(set(reduced)) != len(reduced):
            raise ParameterError(
                "labeling must assign every group element to exactly one vertex"
            )

    def label(self, v: int) -> Element:
        return self.assignment[v]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a labeling check or an obstruction test."""

    status: str  # "magic" | "not-magic" | "impossible" | "unknown"
    mu: Element | None = None
    witness: tuple[int, int] | None = None
    obstruction: str | None = None

    @property
    def is_magic(self) -> bool:
        return self.status == "magic"


def weights(g: Graph, labeling: Labeling) -> list[Element]:
    """Open-neighborhood label sums; empty neighborhoods weigh the identity."""
    spec = labeling.spec
    return [spec.sum(labeling.assignment[w] for w in g.adj[v]) for v in range(g.n)]


def verify_labeling(g: Graph, labeling: Labeling) -> Verdict:
    """magic(mu) when all weights agree, else not-magic with a witness pair."""
    if g.n != labeling.spec.order:
        raise ParameterError(
            f"graph order {g.n} does not match group order {labeling.spec.order}"
        )
    ws = weights(g, labeling)
    if g.n == 0:
        return Verdict("magic", mu=labeling.spec.identity())
    for v in range(1, g.n):
        if ws[v] != ws[0]:
            return Verdict("not-magic", witness=(0, v))
    return Verdict("magic", mu=ws[0])


def obstruction_check(g: Graph, spec: GroupSpec) -> Verdict:
    """Known impossibility tests; unknown when neither applies.

    Order 2 mod 4 with all degrees odd rules out every group of that
    order, and is checked first; odd-regular graphs additionally fail for
    groups with exactly one involution.
    """
    if g.n != spec.order:
        raise ParameterError(f"graph order {g.n} does not match group order {spec.order}")
    if g.n % 4 == 2 and g.all_degrees_odd:
        return Verdict("impossible", obstruction=OBSTRUCTION_ODD_DEGREES_ORDER_2_MOD_4)
    if g.is_regular and g.n > 0 and g.regular_degree % 2 == 1 and involution_count(spec) == 1:
        return Verdict("impossible", obstruction=OBSTRUCTION_ODD_REGULAR_ONE_INVOLUTION)
    return Verdict("unknown")


# -- labelers ----------------------------------------------------------------------


def blowup_label(g: Graph, n: int, spec: GroupSpec) -> Labeling:
    """Label g o K̄_n by one zero-sum block per fiber; every weight is the
    identity, for any base graph g."""
    if n < 3:
        raise ParameterError(f"fiber size must be at least 3, got {n}")
    if spec.order != n * g.n:
        raise ParameterError(
            f"group order {spec.order} does not equal fiber size {n} times "
            f"graph order {g.n}"
        )
    partition = zsp(spec, n)
    assignment: list[Element] = []
    for block in partition.blocks:
        assignment.extend(block)
    return Labeling(spec, tuple(assignment))


def blowup_even_label(g: Graph, n2: int, spec: GroupSpec) -> Labeling:
    """Label g o K̄_n2 (n2 even, g regular) by fixed-sum pairs.

    Picks the least s outside the doubled group, pairs every element x
    with s - x, and gives each fiber n2/2 pairs; each vertex then weighs
    r * (n2/2) * s for an r-regular base.
    """
    if not g.is_regular:
        raise ParameterError("the base graph must be regular")
    if n2 % 2 != 0 or n2 < 2:
        raise ParameterError(f"fiber size must be even and >= 2, got {n2}")
    if spec.order != n2 * g.n:
        raise ParameterError(
            f"group order {spec.order} does not equal fiber size {n2} times "
            f"graph order {g.n}"
        )
    elems = spec.elements()
    doubled = {spec.scale(2, e) for e in elems}
    s = next((e for e in elems if e not in doubled), None)
    if s is None:
        raise ParameterError(f"{spec} has odd order; every element is a double")
    assignment: list[Element] = []
    used: set[Element] = set()
    for e in elems:
        if e in used:
            continue
        partner = spec.sub(s, e)
        used.add(e)
        used.add(partner)
        assignment.append(e)
        assignment.append(partner)
    return Labeling(spec, tuple(assignment))


def blowup_even_magic_constant(g: Graph, n2: int, spec: GroupSpec) -> Element:
    elems = spec.elements()
    doubled = {spec.scale(2, e) for e in elems}
    s = next(e for e in elems if e not in doubled)
    return spec.scale(g.regular_degree * (n2 // 2), s)


def eulerian_bipartite_label(g: Graph, n_odd: int, spec: GroupSpec) -> Labeling:
    """Label g o K̄_n  for an all-even-degree bipartite g with equal sides
    and order 2 mod 4, n odd.

    The group splits as Z2 x (odd part); fibers over one side carry
    (0, block), over the other (1, block).  Odd fibers sum to (1, 0) and
    even degrees cancel that coordinate, so every weight is the identity.
    """
    if n_odd % 2 != 1 or n_odd < 3:
        raise ParameterError(f"fiber size must be odd and >= 3, got {n_odd}")
    if g.n % 4 != 2:
        raise ParameterError(f"base graph order {g.n} is not 2 mod 4")
    if not g.all_degrees_even:
        raise ParameterError("base graph must have all degrees even")
    if spec.order != n_odd * g.n:
        raise ParameterError(
            f"group order {spec.order} does not equal fiber size {n_odd} times "
            f"graph order {g.n}"
        )
    bip = g.balanced_bipartition()
    if bip is None:
        raise ParameterError("base graph has no bipartition with equal sides")
    v1, v2 = bip
    split = two_part_split(spec)
    if split.two_spec.order != 2:
        raise ParameterError(f"{spec} does not split as Z2 x (odd order)")
    partition = zsp(split.odd_spec, n_odd)
    assignment: list[Element | None] = [None] * spec.order
    for side, bit in ((v1, (0,)), (v2, (1,))):
        for i, u in enumerate(side):
            block = partition.blocks[i]
            for t, a in enumerate(block):
                assignment[u * n_odd + t] = split.merge(bit, a)
    return Labeling(spec, tuple(assignment))


def bipartite_blowup_exists(g: Graph, n: int) -> bool:
    """Whether g o K̄_n admits a magic labeling for every group of its order,
    for r-regular bipartite g of order 2 mod 4: true iff r * n is even.

    Witnesses come from blowup_even_label for even n and from
    eulerian_bipartite_label for odd n with r even.
    """
    if n < 2:
        raise ParameterError(f"fiber size must be at least 2, got {n}")
    if not g.is_regular:
        raise ParameterError("the base graph must be regular")
    if not g.is_bipartite:
        raise ParameterError("the base graph must be bipartite")
    if g.n % 4 != 2:
        raise ParameterError(f"base graph order {g.n} is not 2 mod 4")
    return (g.regular_degree * n) % 2 == 0


# -- files and certificates ---------------------------------------------------------


def graph_to_text(g: Graph) -> str:
    lines = [f"p {g.n}"]
    for u, v in g.edges():
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p" and len(parts) == 2:
            if n is not None:
                raise GroupSpecError(f"line {lineno}: duplicate vertex-count line")
            n = int(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            if n is None:
                raise GroupSpecError(f"line {lineno}: edge before vertex-count line")
            edges.append((int(parts[1]), int(parts[2])))
        else:
            raise GroupSpecError(f"line {lineno}: bad graph line {raw!r}")
    if n is None:
        raise GroupSpecError("missing 'p <vertex-count>' line")
    return Graph(n, edges)


def labeling_to_text(labeling: Labeling) -> str:
    lines = [f"labeling {labeling.spec}"]
    for v, e in enumerate(labeling.assignment):
        lines.append(f"{v}\t{format_element(e)}")
    return "\n".join(lines) + "\n"


def labeling_from_text(text: str) -> Labeling:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("labeling "):
        raise GroupSpecError("not a labeling certificate")
    spec = parse_group_spec(lines[0].split()[1])
    assignment: list[Element | None] = [None] * spec.order
    if len(lines) - 1 != spec.order:
        raise GroupSpecError(f"expected {spec.order} vertex lines, found {len(lines) - 1}")
    for line in lines[1:]:
        parts = line.split("\t") if "\t" in line else line.split(None, 1)
        if len(parts) != 2:
            raise GroupSpecError(f"bad labeling line {line!r}")
        v = int(parts[0])
        if not 0 <= v < spec.order or assignment[v] is not None:
            raise GroupSpecError(f"bad or repeated vertex {v}")
        assignment[v] = spec.reduce(parse_element(parts[1]))
    return Labeling(spec, tuple(assignment))
