"""Short-cycle-free subgraph extraction, high-girth hypergraph generation,
coloring bounds, pastings, and exact desk-scale oracles."""

from .coloring import (
    Coloring,
    MultisetFamily,
    RandomlikeReport,
    SubhypergraphResult,
    best_subhypergraph,
    check_randomlike,
    check_randomlike_oriented,
    count_by_multiset,
    count_by_sequence,
    derandomization_trace,
    derandomized_coloring,
    max_multiset_probability,
    p_multiset_exact,
    rainbow_bound,
)
from .constructions import (
    BlowupGraph,
    PastedGraph,
    PastingCertificate,
    bipartite_blowup,
    blowup_groups,
    claim_one_thin_between_fat,
    clique_blowup,
    clique_decomposition_bound_ok,
    paste_doubled,
    paste_hyperdouble,
    verify_pasted,
)
from .errors import (
    DensityTooHighError,
    GirthLabError,
    InfeasibleError,
    MinDegreeError,
    NotBipartiteError,
    NotConnectedError,
    NotLinearError,
    SearchBudgetExceededError,
    StateSpaceTooLargeError,
    UniformityError,
)
from .generate import (
    GenConfig,
    high_girth_bipartite,
    hoeffding_sample_size,
    random_hypergraph,
    random_oriented,
    repair_girth,
    repair_girth_oriented,
)
from .graphs import (
    INFINITE,
    BipartiteGraph,
    Graph,
    OrientedHypergraph,
    UniformHypergraph,
    berge_girth,
    complete_bipartite,
    complete_graph,
    count_short_berge_cycles,
    cycle_bipartite,
    cycle_graph,
    enumerate_cycles,
    girth,
    has_cycle_of_length,
    is_acyclic,
    is_connected,
    largest_component,
    shortest_berge_cycle,
    two_shadow,
)
from .layering import EdgeLayering, build_layering, extract_c4free, longest_chain_length
from .oracles import (
    BipartiteGirthResult,
    SearchBudget,
    certify_c2k_free,
    complete_bipartite_c4free_bound,
    max_bipartite_girth_subgraph,
    max_c4free_subgraph,
    max_cut,
)
from .rng import SplitMix64, derive_seed

__version__ = "0.1.0"
