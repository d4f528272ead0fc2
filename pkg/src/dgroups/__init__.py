"""Detection and classification of regular cyclic and dihedral subgroups
in finite permutation groups, with block systems, orbital graphs, and a
catalog of explicit example families."""

from .actions import (
    BlockSystem,
    CosetAction,
    InducedAction,
    IndexExceedsCap,
    IntransitiveGroup,
    PrimitiveGroupError,
    action_on_blocks,
    block_stabilizer_restriction,
    block_systems,
    is_primitive,
    is_regular,
    is_semiregular,
    is_transitive,
    is_two_transitive,
    minimal_block_containing,
    minimal_block_systems,
    orbit,
    orbits,
    point_stabilizer,
    system_of_block,
    transitivity_grade,
)
from .catalog import (
    CORPUS,
    BadParams,
    CatalogEntry,
    SearchFailed,
    build,
    catalog_ids,
    corpus_entries,
    verify_entry,
)
from .chain import (
    NotCentral,
    NotPrimeOrder,
    OrderExceedsCap,
    PermGroup,
    StabilizerChain,
)
from .classify import (
    AnalysisReport,
    CaseEvidence,
    DisconnectedGraph,
    NotDGroup,
    analyze_group,
    biprimitive_report,
    classify_case,
    kernel_trichotomy,
    lemma_suite,
    primitive_verdict,
)
from .gf import Field, UnsupportedOrder
from .io import GroupFileError, dumps_group, load_group, loads_group
from .orbital import (
    DiagonalArc,
    Digraph,
    OrbitalGraph,
    cayley_graph,
    circulant_components_check,
    complete_bipartite_parts,
    lex_blowup_quotient,
    orbital_graph,
    orbital_graphs,
    suborbits,
    to_dot,
)
from .perms import ParseError, Perm, format_perm, parse_perm
from .regular import (
    GroupClass,
    OddDegree,
    RegularWitness,
    find_regular_cyclic,
    find_regular_dihedral,
    group_class,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BadParams",
    "BlockSystem",
    "CORPUS",
    "CaseEvidence",
    "CatalogEntry",
    "CosetAction",
    "DiagonalArc",
    "Digraph",
    "DisconnectedGraph",
    "Field",
    "GroupClass",
    "GroupFileError",
    "IndexExceedsCap",
    "InducedAction",
    "IntransitiveGroup",
    "NotCentral",
    "NotDGroup",
    "NotPrimeOrder",
    "OddDegree",
    "OrbitalGraph",
    "OrderExceedsCap",
    "ParseError",
    "Perm",
    "PermGroup",
    "PrimitiveGroupError",
    "RegularWitness",
    "SearchFailed",
    "StabilizerChain",
    "UnsupportedOrder",
    "action_on_blocks",
    "analyze_group",
    "biprimitive_report",
    "block_stabilizer_restriction",
    "block_systems",
    "build",
    "catalog_ids",
    "cayley_graph",
    "circulant_components_check",
    "classify_case",
    "complete_bipartite_parts",
    "corpus_entries",
    "dumps_group",
    "find_regular_cyclic",
    "find_regular_dihedral",
    "format_perm",
    "group_class",
    "is_primitive",
    "is_regular",
    "is_semiregular",
    "is_transitive",
    "is_two_transitive",
    "kernel_trichotomy",
    "lemma_suite",
    "lex_blowup_quotient",
    "load_group",
    "loads_group",
    "minimal_block_containing",
    "minimal_block_systems",
    "orbit",
    "orbital_graph",
    "orbital_graphs",
    "orbits",
    "parse_perm",
    "point_stabilizer",
    "primitive_verdict",
    "suborbits",
    "system_of_block",
    "to_dot",
    "transitivity_grade",
    "verify_entry",
    "verify_witness",
    "__version__",
]
