"""Sweep the closed-form catalog against exact computation.

The catalog stores, per family and parity, the predicted spectrum and
spanning-tree count.  In two even-parameter cases the polynomial-exponent
statement and the multiplicity-row statement disagree with each other, so
both variants are kept and the sweep adjudicates: exact computation decides
which one nature supports.

Run:  python demos/04_catalog_verification.py
"""

from superspectra import predicted_spectrum, verify

print("=== the two dual-variant cases ===")
for family, n in [("dihedral", 4), ("semidihedral", 2)]:
    variants = predicted_spectrum("csep", family, n)
    print(f"\n{family} n={n}:")
    for p in variants:
        print(f"  {p.source:>9}: {p.spectrum.compact()}  (degree {p.spectrum.total})")

print("\n=== verification sweeps ===")
for kind, family, ns in [
    ("csep", "dihedral", range(3, 11)),
    ("csep", "quaternion", range(2, 9)),
    ("csep", "semidihedral", range(2, 7)),
    ("cscom", "semidihedral", range(2, 7)),
]:
    report = verify(kind, family, ns)
    flagged = report.theorem_discrepancies()
    print(
        f"{kind} on {family:>12}, n in {min(ns)}..{max(ns)}: "
        f"{'all cases match' if report.all_passed else 'MISMATCH'}"
        + (f"; {len(flagged)} theorem-variant flags" if flagged else "")
    )

print("\n=== one full report ===")
print(verify("csep", "semidihedral", [2, 3]).to_table())
