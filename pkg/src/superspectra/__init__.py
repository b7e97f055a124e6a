"""Exact-arithmetic construction and Laplacian spectral analysis of super
graphs on the dihedral, generalized quaternion and semidihedral families."""

from .compose import CSCOM, CSEP, KINDS, CompositionSpec, complete, compose, join, structural_graph, union
from .errors import (
    ArityMismatch,
    DimensionMismatch,
    NotIntegral,
    ParameterOutOfRange,
    UnsupportedCombination,
)
from .formulas import (
    BASE_FOR_KIND,
    CaseResult,
    Prediction,
    VerificationReport,
    predicted_spectrum,
    predicted_tree_count,
    verify,
)
from .graphs import (
    BASES,
    RELATIONS,
    HierarchyReport,
    SimpleGraph,
    commuting_graph,
    enhanced_power_graph,
    graph_from_edges,
    hierarchy_report,
    named_super_graph,
    power_graph,
    relation_partition,
    super_graph,
)
from .groups import (
    CYCLIC,
    DIHEDRAL,
    FAMILIES,
    QUATERNION,
    SEMIDIHEDRAL,
    GroupTable,
    Partition,
    build_group,
    center,
    conjugacy_classes,
    cyclic_subgroups,
    element_order,
    equality_partition,
    maximal_cyclic_subgroups,
    order_partition,
    verify_group_axioms,
)
from .spectral import (
    IntegerPolynomial,
    SpectrumMultiset,
    char_poly,
    factor_integer_roots,
    integer_determinant,
    integral_spectrum,
    laplacian,
    nullity,
    spanning_tree_count,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BASES",
    "BASE_FOR_KIND",
    "CSCOM",
    "CSEP",
    "CYCLIC",
    "CaseResult",
    "CompositionSpec",
    "DIHEDRAL",
    "DimensionMismatch",
    "FAMILIES",
    "GroupTable",
    "HierarchyReport",
    "IntegerPolynomial",
    "KINDS",
    "NotIntegral",
    "ParameterOutOfRange",
    "Partition",
    "Prediction",
    "QUATERNION",
    "RELATIONS",
    "SEMIDIHEDRAL",
    "SimpleGraph",
    "SpectrumMultiset",
    "UnsupportedCombination",
    "VerificationReport",
    "build_group",
    "center",
    "char_poly",
    "commuting_graph",
    "complete",
    "compose",
    "conjugacy_classes",
    "cyclic_subgroups",
    "element_order",
    "enhanced_power_graph",
    "equality_partition",
    "factor_integer_roots",
    "graph_from_edges",
    "hierarchy_report",
    "integer_determinant",
    "integral_spectrum",
    "join",
    "laplacian",
    "maximal_cyclic_subgroups",
    "named_super_graph",
    "nullity",
    "order_partition",
    "power_graph",
    "predicted_spectrum",
    "predicted_tree_count",
    "relation_partition",
    "spanning_tree_count",
    "structural_graph",
    "super_graph",
    "union",
    "verify",
    "verify_group_axioms",
]
