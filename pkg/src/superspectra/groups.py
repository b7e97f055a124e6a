"""Cayley tables for the dihedral, generalized quaternion, semidihedral and
cyclic families, plus exact structure queries (element orders, center,
conjugacy classes, cyclic subgroups).

Element indexing is canonical across the package: the rotations
``a^0 .. a^{k-1}`` occupy indices ``0 .. k-1`` (k = n, 2n, 4n for the
dihedral, quaternion and semidihedral groups of parameter n; k = n for the
cyclic group) and the reflections ``b, a*b, .. a^{k-1}*b`` follow at indices
``k .. 2k-1``.  The identity is always index 0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange

DIHEDRAL = "dihedral"
QUATERNION = "quaternion"
SEMIDIHEDRAL = "semidihedral"
CYCLIC = "cyclic"
FAMILIES = (DIHEDRAL, QUATERNION, SEMIDIHEDRAL, CYCLIC)

_MIN_N = {DIHEDRAL: 3, QUATERNION: 2, SEMIDIHEDRAL: 2, CYCLIC: 1}


def _rotation_label(i: int) -> str:
    if i == 0:
        return "e"
    if i == 1:
        return "a"
    return f"a^{i}"


def _reflection_label(i: int) -> str:
    if i == 0:
        return "b"
    if i == 1:
        return "a*b"
    return f"a^{i}*b"


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as an explicit multiplication table on 0..N-1."""

    family: str
    parameter: int
    product: np.ndarray
    inverse: np.ndarray
    labels: tuple[str, ...]
    identity: int = 0

    def __post_init__(self):
        self.product.setflags(write=False)
        self.inverse.setflags(write=False)

    @property
    def order(self) -> int:
        return int(self.product.shape[0])

    @property
    def rotation_count(self) -> int:
        """Size of the rotation block <a> at the front of the index space."""
        return self.order if self.family == CYCLIC else self.order // 2

    def mul(self, a: int, b: int) -> int:
        return int(self.product[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, g: int, m: int) -> int:
        """g**m for m >= 0."""
        acc = self.identity
        for _ in range(m):
            acc = int(self.product[acc, g])
        return acc

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return int(self.product[self.product[g, x], self.inverse[g]])

    def label_of(self, g: int) -> str:
        return self.labels[g]


def build_group(family: str, n: int) -> GroupTable:
    """Build one of the four supported families from its presentation.

    The multiplication rules are the closed forms obtained by normalising
    words to ``a^i`` / ``a^i b``; correctness is guarded by the exhaustive
    axiom check (:func:`verify_group_axioms`) rather than trusted.
    """
    if family not in FAMILIES:
        raise ParameterOutOfRange(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < _MIN_N[family]:
        raise ParameterOutOfRange(f"{family} needs n >= {_MIN_N[family]}, got {n}")

    if family == CYCLIC:
        k = n
    elif family == DIHEDRAL:
        k = n
    elif family == QUATERNION:
        k = 2 * n
    else:
        k = 4 * n

    i = np.arange(k, dtype=np.int64)
    rot_rot = (i[:, None] + i[None, :]) % k

    if family == CYCLIC:
        product = rot_rot
        labels = tuple(_rotation_label(int(x)) for x in range(k))
    else:
        if family == DIHEDRAL:
            refl_rot = (i[:, None] - i[None, :]) % k
            refl_refl = refl_rot
        elif family == QUATERNION:
            refl_rot = (i[:, None] - i[None, :]) % k
            refl_refl = (i[:, None] - i[None, :] + n) % k
        else:
            # b * a^j = a^{j(2n-1)} * b, and b^2 = e
            refl_rot = (i[:, None] + (2 * n - 1) * i[None, :]) % k
            refl_refl = refl_rot
        product = np.empty((2 * k, 2 * k), dtype=np.int64)
        product[:k, :k] = rot_rot
        product[:k, k:] = rot_rot + k
        product[k:, :k] = refl_rot + k
        product[k:, k:] = refl_refl
        labels = tuple(_rotation_label(int(x)) for x in range(k)) + tuple(
            _reflection_label(int(x)) for x in range(k)
        )

    inverse = np.argmax(product == 0, axis=1).astype(np.int64)
    return GroupTable(family=family, parameter=n, product=product, inverse=inverse, labels=labels)


def verify_group_axioms(table: GroupTable) -> None:
    """Exhaustively check the group axioms on the table; raise on violation.

    O(N^3) lookups for associativity; fine up to N of a few hundred.
    """
    p = table.product
    n = table.order
    idx = np.arange(n)
    if p.shape != (n, n):
        raise ValueError("product table is not square")
    if not np.array_equal(np.sort(p, axis=1), np.broadcast_to(idx, (n, n))):
        raise ValueError("rows are not permutations (Latin square violated)")
    if not np.array_equal(np.sort(p, axis=0), np.broadcast_to(idx[:, None], (n, n))):
        raise ValueError("columns are not permutations (Latin square violated)")
    e = table.identity
    if not (np.array_equal(p[e, :], idx) and np.array_equal(p[:, e], idx)):
        raise ValueError("identity element does not act as identity")
    if not np.all(p[idx, table.inverse] == e):
        raise ValueError("inverse table is wrong")
    for a in range(n):
        left = p[p[a, :], :]
        right = p[a, p]
        if not np.array_equal(left, right):
            raise ValueError(f"associativity fails at element {a}")
    expected = {DIHEDRAL: 2 * table.parameter, QUATERNION: 4 * table.parameter,
                SEMIDIHEDRAL: 8 * table.parameter, CYCLIC: table.parameter}
    if n != expected[table.family]:
        raise ValueError(f"order {n} inconsistent with family {table.family}, n={table.parameter}")


def element_order(table: GroupTable, g: int) -> int:
    """Smallest k >= 1 with g^k = identity."""
    cur = g
    k = 1
    while cur != table.identity:
        cur = int(table.product[cur, g])
        k += 1
    return k


def center(table: GroupTable) -> frozenset[int]:
    """Elements commuting with everything."""
    p = table.product
    return frozenset(int(g) for g in np.flatnonzero((p == p.T).all(axis=1)))


@dataclass(frozen=True, eq=False)
class Partition:
    """An equivalence relation on 0..N-1; blocks ordered by least member."""

    block_of: np.ndarray
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        self.block_of.setflags(write=False)
        seen = np.zeros(self.size, dtype=bool)
        for bid, block in enumerate(self.blocks):
            if not block:
                raise ValueError("empty block")
            for g in block:
                if seen[g]:
                    raise ValueError("blocks are not disjoint")
                seen[g] = True
                if self.block_of[g] != bid:
                    raise ValueError("block_of inconsistent with blocks")
        if not seen.all():
            raise ValueError("blocks do not cover the ground set")

    @property
    def size(self) -> int:
        return int(self.block_of.shape[0])

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block(self, g: int) -> tuple[int, ...]:
        return self.blocks[int(self.block_of[g])]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def refines(self, other: "Partition") -> bool:
        """True when every block of self lies inside a block of other."""
        if self.size != other.size:
            return False
        return all(len({int(other.block_of[g]) for g in block}) == 1 for block in self.blocks)


def _partition_from_blocks(n: int, blocks: list[tuple[int, ...]]) -> Partition:
    block_of = np.empty(n, dtype=np.int64)
    for bid, block in enumerate(blocks):
        for g in block:
            block_of[g] = bid
    return Partition(block_of=block_of, blocks=tuple(blocks))


def equality_partition(n: int) -> Partition:
    """Every element alone in its own block."""
    return _partition_from_blocks(n, [(g,) for g in range(n)])


def conjugacy_classes(table: GroupTable) -> Partition:
    """Orbit partition of the conjugation action, by brute-force closure."""
    p = table.product
    inv = table.inverse
    n = table.order
    assigned = np.full(n, -1, dtype=np.int64)
    blocks: list[tuple[int, ...]] = []
    for x in range(n):
        if assigned[x] >= 0:
            continue
        orbit = np.unique(p[p[:, x], inv])  # g*x*g^-1 over all g
        assigned[orbit] = len(blocks)
        blocks.append(tuple(int(g) for g in orbit))
    return Partition(block_of=assigned, blocks=tuple(blocks))


def order_partition(table: GroupTable) -> Partition:
    """Coarsest partition grouping elements of equal order."""
    orders = [element_order(table, g) for g in range(table.order)]
    by_order: dict[int, list[int]] = {}
    for g, k in enumerate(orders):
        by_order.setdefault(k, []).append(g)
    blocks = [tuple(by_order[k]) for k in sorted(by_order)]
    return _partition_from_blocks(table.order, blocks)


def cyclic_subgroups(table: GroupTable) -> frozenset[frozenset[int]]:
    """All subgroups <g>."""
    subgroups = set()
    for g in range(table.order):
        members = [table.identity]
        cur = g
        while cur != table.identity:
            members.append(cur)
            cur = int(table.product[cur, g])
        subgroups.add(frozenset(members))
    return frozenset(subgroups)


def maximal_cyclic_subgroups(table: GroupTable) -> frozenset[frozenset[int]]:
    """Cyclic subgroups not strictly contained in another cyclic subgroup."""
    subs = cyclic_subgroups(table)
    return frozenset(s for s in subs if not any(s < t for t in subs))
