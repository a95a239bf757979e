"""Builders and verifiers for group and integer Kotzig arrays.

A Kotzig array is a j x k grid whose rows are permutations (of a group of
order k, or of 0..k-1) and whose columns all have the same sum.  Group
arrays built here always reach column sum identity; the verifier accepts
any constant column sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    GroupSpecError,
    ImpossibilityError,
    NonexistenceError,
    ParameterError,
)
from .groups import Element, GroupSpec, format_element, in_class_g, parse_element, parse_group_spec
from .zsp import triple_bijection

INT_BASE_BLOCK_CAP = 99


@dataclass(frozen=True)
class GroupKotzigArray:
    spec: GroupSpec
    rows: tuple[tuple[Element, ...], ...]

    @property
    def j(self) -> int:
        return len(self.rows)

    @property
    def k(self) -> int:
        return self.spec.order

    def column_sum(self) -> Element:
        return self.spec.sum(row[0] for row in self.rows)


@dataclass(frozen=True)
class IntKotzigArray:
    k: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def j(self) -> int:
        return len(self.rows)

    def column_sum(self) -> int:
        return sum(row[0] for row in self.rows)


@dataclass(frozen=True)
class ArrayCheck:
    ok: bool
    row: int | None = None
    col: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_kotzig(array) -> ArrayCheck:
    """Check the row-permutation and constant-column-sum properties.

    Reports the first violating row or column.  Group arrays may have any
    constant column sum; integer column sums are forced to j(k-1)/2 by
    the row sums anyway.
    """
    if isinstance(array, GroupKotzigArray):
        spec = array.spec
        full = sorted(spec.elements())
        for r, row in enumerate(array.rows):
            if sorted(row) != full:
                return ArrayCheck(False, row=r, reason=f"row {r} is not a permutation of the group")
        sums = [spec.sum(row[c] for row in array.rows) for c in range(array.k)]
    elif isinstance(array, IntKotzigArray):
        full = list(range(array.k))
        for r, row in enumerate(array.rows):
            if sorted(row) != full:
                return ArrayCheck(False, row=r, reason=f"row {r} is not a permutation of 0..{array.k - 1}")
        sums = [sum(row[c] for row in array.rows) for c in range(array.k)]
    else:
        raise ParameterError(f"not a Kotzig array: {array!r}")
    for c in range(1, len(sums)):
        if sums[c] != sums[0]:
            return ArrayCheck(
                False, col=c, reason=f"column {c} sums to {sums[c]}, column 0 to {sums[0]}"
            )
    return ArrayCheck(True)


def _checked(array):
    check = verify_kotzig(array)
    if not check.ok:
        raise AssertionError(f"internal: built array failed verification: {check.reason}")
    return array


def build_group_kotzig_2(spec: GroupSpec) -> GroupKotzigArray:
    """2 x k array: first row the enumeration, second row the negations."""
    elems = spec.elements()
    rows = (tuple(elems), tuple(spec.neg(g) for g in elems))
    return _checked(GroupKotzigArray(spec, rows))


def build_group_kotzig_3(spec: GroupSpec) -> GroupKotzigArray:
    """3 x k array from a triple bijection; columns sum to the identity."""
    tb = triple_bijection(spec)
    elems = spec.elements()
    rows = (
        tuple(elems),
        tuple(tb.phi_of(g) for g in elems),
        tuple(tb.psi_of(g) for g in elems),
    )
    return _checked(GroupKotzigArray(spec, rows))


def build_group_kotzig(spec: GroupSpec, j: int) -> GroupKotzigArray:
    """j x k group Kotzig array; exists when j > 1 and j is even or the
    group is of odd order or has more than one involution.

    Even j stacks copies of the 2 x k array; odd j uses one 3 x k array
    plus 2 x k fillers.  For odd j and a single-involution group the total
    grid sum equals the involution while constant columns force identity,
    so the build refuses.
    """
    if j < 1:
        raise ParameterError(f"row count must be positive, got {j}")
    if j == 1:
        raise ImpossibilityError(
            "a 1 x k array has constant column sums only for the trivial group"
        )
    if j % 2 == 0:
        block = build_group_kotzig_2(spec)
        rows = block.rows * (j // 2)
        return _checked(GroupKotzigArray(spec, rows))
    if not in_class_g(spec):
        raise NonexistenceError(
            f"{spec} has exactly one involution: an odd row count would make "
            "the grid total equal that involution, not the identity"
        )
    rows = build_group_kotzig_3(spec).rows
    if j > 3:
        rows = rows + build_group_kotzig_2(spec).rows * ((j - 3) // 2)
    return _checked(GroupKotzigArray(spec, rows))


@lru_cache(maxsize=None)
def _int_base_3xk(k: int) -> tuple[tuple[int, ...], ...]:
    """Backtracking 3 x k block for odd k: row 1 fixed, row 3 forced.

    Column sums are 3(k-1)/2; the result is cached per k.
    """
    target = 3 * (k - 1) // 2
    row2 = [-1] * k
    used2 = [False] * k
    used3 = [False] * k

    def extend(c: int) -> bool:
        if c == k:
            return True
        for v in range(k):
            if used2[v]:
                continue
            w = target - c - v
            if w < 0 or w >= k or used3[w]:
                continue
            row2[c] = v
            used2[v] = True
            used3[w] = True
            if extend(c + 1):
                return True
            used2[v] = False
            used3[w] = False
        return False

    if not extend(0):
        raise AssertionError(f"internal: no 3 x {k} base block found")
    row1 = tuple(range(k))
    row3 = tuple(target - c - row2[c] for c in range(k))
    return (row1, tuple(row2), row3)


def build_int_kotzig(j: int, k: int) -> IntKotzigArray:
    """j x k integer Kotzig array; exists when j > 1 and j(k-1) is even.

    Even j stacks (identity row, reversed row) pairs; odd j (so k odd)
    adds one backtracked 3 x k block.
    """
    if j < 1 or k < 1:
        raise ParameterError(f"grid dimensions must be positive, got {j} x {k}")
    if j == 1:
        raise ImpossibilityError("a 1 x k array has constant column sums only for k = 1")
    if (j * (k - 1)) % 2 != 0:
        raise NonexistenceError(
            f"no {j} x {k} array exists: the column sum j(k-1)/2 = "
            f"{j * (k - 1) / 2} is not an integer"
        )
    identity = tuple(range(k))
    reverse = tuple(k - 1 - c for c in range(k))
    if j % 2 == 0:
        rows = (identity, reverse) * (j // 2)
    else:
        if k > INT_BASE_BLOCK_CAP:
            raise ParameterError(f"odd row counts supported up to k = {INT_BASE_BLOCK_CAP}")
        rows = _int_base_3xk(k) + (identity, reverse) * ((j - 3) // 2)
    return _checked(IntKotzigArray(k, rows))


# -- certificates ----------------------------------------------------------------


def array_to_text(array) -> str:
    if isinstance(array, GroupKotzigArray):
        lines = [f"kotzig {array.spec} j={array.j} k={array.k}"]
        for row in array.rows:
            lines.append(" ".join(format_element(e) for e in row))
    else:
        lines = [f"kotzig-int k={array.k} j={array.j}"]
        for row in array.rows:
            lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def array_from_text(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise GroupSpecError("empty array certificate")
    header = lines[0].split()
    if header[0] == "kotzig":
        spec = parse_group_spec(header[1])
        rows = tuple(
            tuple(spec.reduce(parse_element(p)) for p in ln.split()) for ln in lines[1:]
        )
        for row in rows:
            if len(row) != spec.order:
                raise GroupSpecError("row length does not match the group order")
        return GroupKotzigArray(spec, rows)
    if header[0] == "kotzig-int":
        fields = dict(part.split("=", 1) for part in header[1:])
        k = int(fields["k"])
        rows = tuple(tuple(int(v) for v in ln.split()) for ln in lines[1:])
        for row in rows:
            if len(row) != k:
                raise GroupSpecError("row length does not match k")
        return IntKotzigArray(k, rows)
    raise GroupSpecError("not a Kotzig array certificate")
