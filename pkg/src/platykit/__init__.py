"""platykit: construct, verify, and exhaustively generate platypus graphs
(non-hamiltonian graphs whose every vertex-deleted subgraph is traceable)."""

__version__ = "0.1.0"

from platykit.graph import (
    EdgeMultiset,
    Graph,
    GraphError,
    HamWitness,
    complement,
    delete_vertex,
    from_edge_list,
    suppress_degree_two,
)
from platykit.graph6 import Graph6Error, decode_graph6, encode_graph6, iter_graph6, write_graph6
from platykit.hamiltonicity import (
    PropertyReport,
    SearchBudgetExceeded,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    is_hamiltonian,
    is_homogeneously_traceable,
    is_hypohamiltonian,
    is_hypotraceable,
    is_maximally_non_hamiltonian,
    is_platypus,
    is_traceable,
    lemma2_audit,
)
from platykit.invariants import (
    INFINITY,
    InvariantSummary,
    cyclic_edge_connectivity_at_least,
    girth,
    is_planar,
    is_snark,
    is_three_edge_colorable,
    vertex_connectivity,
)
from platykit.constructions import (
    Ear,
    FIXTURE_NAMES,
    apply_triangle_T,
    complete,
    cycle,
    d_operation,
    dotted_prism,
    expand_vertex_to_triangle,
    find_cubic_triangle,
    fixture,
    generalized_petersen,
    list_ears,
    petersen_prism,
    replace_ear,
)
from platykit.isomorphism import (
    CanonicalForm,
    are_isomorphic,
    automorphism_group_order,
    canonical_form,
    canonical_graph6,
)
from platykit.generation import (
    AuditReport,
    GenResult,
    GenSpec,
    Prunes,
    ResourceGuardError,
    audit_stream,
    generate_all_graphs,
    generate_platypuses,
)

__all__ = [name for name in dir() if not name.startswith("_")]
