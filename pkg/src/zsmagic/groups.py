"""Exact arithmetic and structure queries for finite Abelian groups.

A group is presented as a direct product of cyclic groups ``Z_n1 x ... x
Z_nk``; elements are plain tuples of residues, one per factor.  Enumeration
is mixed radix with the first coordinate most significant, so sorting
element tuples sorts them by enumeration index.  Every "least element"
tie-break in the package refers to that order.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian

from .errors import ArityError, GroupSpecError, ParameterError

Element = tuple[int, ...]

#: Largest group order `elements()` will materialise.
DEFAULT_ORDER_BOUND = 1 << 20

_TOKEN_RE = re.compile(r"[zZ]([0-9]+)")


@dataclass(frozen=True)
class GroupSpec:
    """A finite Abelian group given as a sequence of cyclic factor orders."""

    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(f) for f in self.factors)
        for f in factors:
            if f < 2:
                raise GroupSpecError(f"cyclic factor must be >= 2, got {f}")
        object.__setattr__(self, "factors", factors)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def arity(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "Z1"
        return "x".join(f"Z{f}" for f in self.factors)

    # -- element arithmetic -------------------------------------------------

    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def reduce(self, a) -> Element:
        """Reduce each coordinate modulo its factor; validates arity."""
        a = tuple(a)
        if len(a) != len(self.factors):
            raise ArityError(
                f"element {a} has {len(a)} coordinates, group {self} has "
                f"{len(self.factors)}"
            )
        return tuple(int(x) % f for x, f in zip(a, self.factors))

    def add(self, a, b) -> Element:
        a = self.reduce(a)
        b = self.reduce(b)
        return tuple((x + y) % f for x, y, f in zip(a, b, self.factors))

    def neg(self, a) -> Element:
        a = self.reduce(a)
        return tuple((-x) % f for x, f in zip(a, self.factors))

    def sub(self, a, b) -> Element:
        return self.add(a, self.neg(b))

    def scale(self, k: int, a) -> Element:
        a = self.reduce(a)
        return tuple((k * x) % f for x, f in zip(a, self.factors))

    def sum(self, elems) -> Element:
        total = self.identity()
        for e in elems:
            total = self.add(total, e)
        return total

    # -- enumeration --------------------------------------------------------

    def elements(self, *, max_order: int = DEFAULT_ORDER_BOUND) -> list[Element]:
        """All elements in mixed-radix (enumeration) order."""
        if self.order > max_order:
            raise ParameterError(
                f"group order {self.order} exceeds enumeration bound {max_order}"
            )
        return [tuple(c) for c in _cartesian(*(range(f) for f in self.factors))]

    def element_at(self, index: int) -> Element:
        if not 0 <= index < self.order:
            raise ParameterError(f"index {index} out of range for {self}")
        coords = []
        for f in reversed(self.factors):
            index, r = divmod(index, f)
            coords.append(r)
        return tuple(reversed(coords))

    def index_of(self, a) -> int:
        a = self.reduce(a)
        index = 0
        for x, f in zip(a, self.factors):
            index = index * f + x
        return index

    def contains(self, a) -> bool:
        try:
            self.reduce(a)
        except ArityError:
            return False
        return True


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``Z<n>`` factors joined by ``x``, e.g. ``Z2xZ2xZ4``.

    Case-insensitive and whitespace-free; a parse error names the
    offending token.
    """
    if not isinstance(text, str) or not text:
        raise GroupSpecError("empty group spec")
    factors = []
    for token in text.split("x"):
        m = _TOKEN_RE.fullmatch(token)
        if m is None:
            raise GroupSpecError(f"bad group spec token {token!r} in {text!r}")
        n = int(m.group(1))
        if n < 2:
            raise GroupSpecError(f"bad group spec token {token!r}: order must be >= 2")
        factors.append(n)
    return GroupSpec(tuple(factors))


def format_element(a: Element) -> str:
    """Render an element; single-factor groups print as a bare integer."""
    if len(a) == 1:
        return str(a[0])
    return "(" + ",".join(str(x) for x in a) + ")"


def parse_element(text: str) -> Element:
    """Inverse of :func:`format_element` (arity is taken from the text)."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        body = text[1:-1]
        try:
            return tuple(int(p) for p in body.split(",")) if body else ()
        except ValueError as exc:
            raise GroupSpecError(f"bad element {text!r}") from exc
    try:
        return (int(text),)
    except ValueError as exc:
        raise GroupSpecError(f"bad element {text!r}") from exc


# -- factorisation and canonical form ----------------------------------------


def _factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation as (prime, exponent) pairs, primes ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@lru_cache(maxsize=None)
def canonical_factors(spec: GroupSpec) -> tuple[int, ...]:
    """Prime-power components of the presentation, sorted ascending.

    Two presentations describe isomorphic groups exactly when their
    canonical factor tuples are equal.
    """
    parts: list[int] = []
    for f in spec.factors:
        for p, e in _factorize(f):
            parts.append(p**e)
    return tuple(sorted(parts))


def is_isomorphic(a: GroupSpec, b: GroupSpec) -> bool:
    return canonical_factors(a) == canonical_factors(b)


def two_torsion_rank(spec: GroupSpec) -> int:
    """Number of even canonical components; the group has 2^rank - 1 involutions."""
    return sum(1 for f in spec.factors if f % 2 == 0)


def involution_count(spec: GroupSpec) -> int:
    return 2 ** two_torsion_rank(spec) - 1


@dataclass(frozen=True)
class InvolutionSet:
    """The order-2 elements of a group, in enumeration order.

    ``includes_identity`` distinguishes the bare involution set from its
    closure (involutions plus the identity, a subgroup of order 2^rank).
    """

    spec: GroupSpec
    elements: tuple[Element, ...]
    includes_identity: bool = False

    def with_identity(self) -> "InvolutionSet":
        if self.includes_identity:
            return self
        closed = tuple(sorted(self.elements + (self.spec.identity(),)))
        return InvolutionSet(self.spec, closed, includes_identity=True)


def involutions(spec: GroupSpec) -> InvolutionSet:
    """All elements of order exactly 2; count equals 2^rank - 1."""
    choices = []
    for f in spec.factors:
        choices.append((0, f // 2) if f % 2 == 0 else (0,))
    elems = tuple(
        e for e in _cartesian(*choices) if any(e)
    )
    return InvolutionSet(spec, elems, includes_identity=False)


def sum_all(spec: GroupSpec) -> Element:
    """Sum of all group elements, by closed form.

    Equals the unique involution when exactly one exists, and the identity
    otherwise.  :func:`sum_all_literal` is the brute-force cross-check.
    """
    invs = involutions(spec)
    if len(invs.elements) == 1:
        return invs.elements[0]
    return spec.identity()


def sum_all_literal(spec: GroupSpec, *, max_order: int = DEFAULT_ORDER_BOUND) -> Element:
    return spec.sum(spec.elements(max_order=max_order))


def in_class_g(spec: GroupSpec) -> bool:
    """True when the order is odd or the group has more than one involution."""
    return spec.order % 2 == 1 or two_torsion_rank(spec) >= 2


# -- subgroups, cosets, quotients ---------------------------------------------


def subgroup_closure(spec: GroupSpec, generators) -> tuple[Element, ...]:
    """Closure of the generators under addition, sorted in enumeration order."""
    gens = [spec.reduce(g) for g in generators]
    seen = {spec.identity()}
    queue = deque(seen)
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = spec.add(cur, g)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return tuple(sorted(seen))


def _quotient_spec_from_cosets(
    spec: GroupSpec, leaders: list[Element], leader_of: dict[Element, Element]
) -> GroupSpec:
    """Cyclic decomposition of the quotient group given one leader per coset.

    For each prime p, counting cosets killed by successive powers of p
    yields the number of cyclic p-power factors of each exponent.
    """
    q = len(leaders)
    if q == 1:
        return GroupSpec(())
    factors: list[int] = []
    for p, emax in _factorize(q):
        # e_k = log_p #(cosets x with p^k x = 0)
        e = [0]
        for k in range(1, emax + 1):
            count = 0
            mul = p**k
            for rep in leaders:
                if leader_of[spec.scale(mul, rep)] == leaders[0]:
                    count += 1
            e.append(round(math.log(count, p)))
            if e[-1] == e[-2]:
                break
        lam = [e[k] - e[k - 1] for k in range(1, len(e))]
        lam.append(0)
        for k in range(1, len(lam)):
            factors.extend([p**k] * (lam[k - 1] - lam[k]))
    return GroupSpec(tuple(sorted(factors)))


@dataclass(frozen=True)
class CosetDecomposition:
    """Cosets of a subgroup, one representative per coset.

    The representative of the trivial coset is always the identity;
    representatives are listed in enumeration order of their cosets'
    least elements.
    """

    spec: GroupSpec
    subgroup: tuple[Element, ...]
    representatives: tuple[Element, ...]
    quotient_spec: GroupSpec

    def representative_of(self, a) -> Element:
        a = self.spec.reduce(a)
        for rep in self.representatives:
            if self.spec.sub(a, rep) in self._subgroup_set:
                return rep
        raise ParameterError(f"element {a} not covered by the transversal")

    @property
    def _subgroup_set(self) -> frozenset:
        return frozenset(self.subgroup)


def quotient(
    spec: GroupSpec,
    generators,
    representatives=None,
) -> CosetDecomposition:
    """Coset decomposition of the group by the subgroup the generators span.

    Default representatives are the enumeration-least element of each
    coset.  Callers may override with any transversal that represents the
    trivial coset by the identity; anything else raises ``ParameterError``.
    """
    sub = subgroup_closure(spec, generators)
    sub_set = frozenset(sub)
    leader_of: dict[Element, Element] = {}
    leaders: list[Element] = []
    for e in spec.elements():
        if e in leader_of:
            continue
        leaders.append(e)
        for s in sub:
            leader_of[spec.add(e, s)] = e
    qspec = _quotient_spec_from_cosets(spec, leaders, leader_of)
    if representatives is None:
        reps = tuple(leaders)
    else:
        reps = tuple(spec.reduce(r) for r in representatives)
        covered = {leader_of[r] for r in reps}
        if len(reps) != len(leaders) or covered != set(leaders):
            raise ParameterError("representative override is not a transversal")
        trivial_rep = next(r for r in reps if leader_of[r] == spec.identity())
        if trivial_rep != spec.identity():
            raise ParameterError("trivial coset must be represented by the identity")
    return CosetDecomposition(spec, sub, reps, qspec)


# -- CRT refinement and the 2-part / odd-part split ---------------------------


@dataclass(frozen=True)
class Refinement:
    """Isomorphism between a presentation and its prime-power refinement."""

    original: GroupSpec
    refined: GroupSpec
    _splits: tuple[tuple[int, ...], ...]
    _coeffs: tuple[tuple[int, ...], ...]

    def to_refined(self, a) -> Element:
        a = self.original.reduce(a)
        out: list[int] = []
        for x, qs in zip(a, self._splits):
            out.extend(x % q for q in qs)
        return tuple(out)

    def from_refined(self, r) -> Element:
        r = self.refined.reduce(r)
        out = []
        pos = 0
        for f, qs, cs in zip(self.original.factors, self._splits, self._coeffs):
            x = 0
            for q, c in zip(qs, cs):
                x = (x + r[pos] * c) % f
                pos += 1
            out.append(x)
        return tuple(out)


@lru_cache(maxsize=None)
def prime_power_refinement(spec: GroupSpec) -> Refinement:
    """Split every factor into prime-power coordinates (CRT both ways)."""
    splits = []
    coeffs = []
    refined: list[int] = []
    for f in spec.factors:
        qs = tuple(p**e for p, e in _factorize(f))
        cs = []
        for q in qs:
            m = f // q
            cs.append((m * pow(m, -1, q)) % f)
        splits.append(qs)
        coeffs.append(tuple(cs))
        refined.extend(qs)
    return Refinement(spec, GroupSpec(tuple(refined)), tuple(splits), tuple(coeffs))


@dataclass(frozen=True)
class TwoPartSplit:
    """Decomposition of a group as (2-part) x (odd part)."""

    original: GroupSpec
    two_spec: GroupSpec
    odd_spec: GroupSpec
    _refinement: Refinement
    _two_pos: tuple[int, ...]
    _odd_pos: tuple[int, ...]

    def split(self, a) -> tuple[Element, Element]:
        r = self._refinement.to_refined(a)
        return (
            tuple(r[i] for i in self._two_pos),
            tuple(r[i] for i in self._odd_pos),
        )

    def merge(self, two_part, odd_part) -> Element:
        two_part = self.two_spec.reduce(two_part)
        odd_part = self.odd_spec.reduce(odd_part)
        r = [0] * self._refinement.refined.arity
        for i, x in zip(self._two_pos, two_part):
            r[i] = x
        for i, x in zip(self._odd_pos, odd_part):
            r[i] = x
        return self._refinement.from_refined(tuple(r))


@lru_cache(maxsize=None)
def two_part_split(spec: GroupSpec) -> TwoPartSplit:
    ref = prime_power_refinement(spec)
    two_pos = tuple(i for i, f in enumerate(ref.refined.factors) if f % 2 == 0)
    odd_pos = tuple(i for i, f in enumerate(ref.refined.factors) if f % 2 == 1)
    return TwoPartSplit(
        spec,
        GroupSpec(tuple(ref.refined.factors[i] for i in two_pos)),
        GroupSpec(tuple(ref.refined.factors[i] for i in odd_pos)),
        ref,
        two_pos,
        odd_pos,
    )


# -- isomorphism class enumeration --------------------------------------------


def _partitions(n: int) -> list[tuple[int, ...]]:
    """Integer partitions of n, parts non-increasing."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n, [])
    return out


def abelian_isomorphism_classes(order: int) -> list[GroupSpec]:
    """One presentation per isomorphism class of Abelian groups of this order.

    Factors are prime powers, grouped by prime ascending with exponents
    ascending within a prime.
    """
    if order < 1:
        raise ParameterError("order must be positive")
    if order == 1:
        return [GroupSpec(())]
    per_prime = []
    for p, e in _factorize(order):
        per_prime.append([tuple(sorted(p**k for k in part)) for part in _partitions(e)])
    specs = []
    for combo in _cartesian(*per_prime):
        factors: list[int] = []
        for group in combo:
            factors.extend(group)
        specs.append(GroupSpec(tuple(factors)))
    return sorted(specs, key=lambda s: s.factors)


def abelian_groups_up_to(max_order: int, *, min_order: int = 2):
    """Yield one GroupSpec per isomorphism class for every order in range."""
    for n in range(min_order, max_order + 1):
        yield from abelian_isomorphism_classes(n)
