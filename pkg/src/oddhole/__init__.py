"""Graphs of odd girth with no long odd holes: membership, colouring,
structure and statement checks."""

__version__ = "0.1.0"

from .canon import are_isomorphic, canonical_form, canonical_labeling, is_petersen
from .coloring import (
    Coloring,
    G0Verdict,
    KempeQuery,
    chromatic_number,
    is_in_g0,
    is_proper,
    k_colorable,
    kempe_path_exists,
    kempe_swap,
)
from .cycles import (
    HoleWitness,
    MembershipVerdict,
    enumerate_chordless_cycles,
    family_ell,
    find_odd_hole_at_least,
    girth,
    is_member,
    shortest_cycle,
)
from .errors import *  # noqa: F401,F403
from .generate import enumerate_girth5
from .graph import Graph, cycle_graph, from_edge_list, induced_subgraph, is_stable, path_graph
from .harness import RunReport, run_battery
from .io import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .layers import (
    EdgeDeletionVerdict,
    LayerDecomposition,
    LayerOutcome,
    check_layer_theorem,
    decompose,
    edge_deletion_closure,
    layered_four_coloring,
)
from .named import p_minus, petersen, theta, theta_minus, theta_plus
from .structure import (
    CutsetReport,
    EarWitness,
    PatternEmbedding,
    bad_ears,
    enumerate_cutsets,
    find_induced_pattern,
    find_strong_ear,
    find_unstable_cutset_on_5cycle,
    five_cycles_sharing_edge,
    is_k_connected,
    neighborhood_cutset_check,
)
from .verify import STATEMENTS, TheoremVerdict, verify, verify_all
