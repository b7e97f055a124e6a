"""Tour of the four group families: presentations become multiplication
tables, and the structural queries read everything else off the table.

Run:  python demos/01_group_structure.py
"""

from superspectra import (
    build_group,
    center,
    conjugacy_classes,
    element_order,
    maximal_cyclic_subgroups,
    order_partition,
    verify_group_axioms,
)


def show(table):
    print(f"\n=== {table.family} n={table.parameter}  (order {table.order}) ===")
    verify_group_axioms(table)  # Latin square, identity, inverses, associativity
    print("axioms: exhaustively verified")
    print("center:", ", ".join(table.labels[g] for g in sorted(center(table))))

    classes = conjugacy_classes(table)
    shown = " | ".join(
        "{" + ", ".join(table.labels[g] for g in block) + "}" for block in classes.blocks[:6]
    )
    more = "" if classes.block_count <= 6 else f"  ... ({classes.block_count} classes total)"
    print("conjugacy classes:", shown + more)

    by_order = order_partition(table)
    print("element orders:", {element_order(table, block[0]): len(block) for block in by_order.blocks})

    maximal = sorted(maximal_cyclic_subgroups(table), key=len, reverse=True)
    sizes = {}
    for sub in maximal:
        sizes[len(sub)] = sizes.get(len(sub), 0) + 1
    print("maximal cyclic subgroups (size: count):", sizes)


# The dihedral group of the triangle: one rotation subgroup, three flips.
show(build_group("dihedral", 3))

# Even dihedral parameter: the center picks up a^{n/2} and the reflections
# split into two conjugacy classes.
show(build_group("dihedral", 4))

# The quaternion group: b^2 = a^n, every reflection has order 4.
show(build_group("quaternion", 2))

# Semidihedral groups: the twist b a = a^{2n-1} b makes the reflection
# classes depend on n mod 2 (four classes when n is odd, two when even).
show(build_group("semidihedral", 2))
show(build_group("semidihedral", 3))

print("\nmultiplication spot checks (semidihedral n=2):")
sd16 = build_group("semidihedral", 2)
b = sd16.rotation_count
for lhs, rhs in [(b, 1), (1, b), (b, b)]:
    print(f"  {sd16.labels[lhs]} * {sd16.labels[rhs]} = {sd16.labels[sd16.mul(lhs, rhs)]}")
