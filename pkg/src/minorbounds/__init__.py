"""Desk-scale verification of extremal edge bounds for triangle-free and
apex graphs with excluded minors."""

from .constructions import (
    CockadeRecipe,
    GlueStep,
    build_cockade,
    cockade,
    exceptional_graph,
    extremal_bipartite,
    is_cockade,
    is_exceptional,
    k10_catalog,
    random_cockade_recipe,
)
from .corpus import (
    Filter,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    emit,
    enumerate_graphs,
    ingest,
    is_isomorphic,
    parse_filter,
)
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    join,
    path_graph,
)
from .minors import (
    MinorModel,
    SearchBudgetExceeded,
    delta_y,
    find_minor,
    hadwiger_number,
    is_linkless,
    petersen_family,
    petersen_graph,
    verify_model,
    y_delta,
)
from .planarity import (
    Embedding,
    apex_embedding,
    apex_vertices,
    embedding_from_rotation,
    face_sizes,
    is_planar,
    phi,
    planar_embedding,
    psi,
)
from .verifier import (
    BoundReport,
    BoundSpec,
    apex_bound,
    check_bound,
    check_strengthened_apex,
    exists_triangle_free_preimage,
    mader_bound,
    mantel_bound,
    run_theorem,
    theorem_spec,
    triangle_transversal_exceeds,
    trifree_bound,
    verify_min_degree_claim,
)

__version__ = "0.1.0"
