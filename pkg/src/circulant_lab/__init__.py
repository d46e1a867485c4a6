"""circulant_lab: cubic arc-transitive k-circulant graphs.

Constructs the two infinite families of cubic arc-transitive k-circulants
from their group presentations and analyzes arbitrary cubic graphs for
symmetry (automorphism group, arc-transitivity, arc-type) and k-circulant
structure (semiregular elements, k-spectrum, order bounds).
"""
from circulant_lab.aut import (
    SymmetryProfile,
    automorphism_group,
    is_arc_transitive,
    symmetry_profile,
    tutte_type,
)
from circulant_lab.cayley import (
    CayleyLabeling,
    automorphism_from_group_automorphism,
    cayley_graph,
    left_translation,
)
from circulant_lab.graphio import (
    Graph,
    from_edges,
    girth,
    is_connected,
    is_cubic,
    parse_edgelist,
    parse_graph6,
    serialize,
)
from circulant_lab.kcirc import (
    BoundFinding,
    SpectrumReport,
    certify_k_circulant,
    check_order_bound,
    edge_reversing_involution_check,
    k_spectrum,
)
from circulant_lab.papergroups import (
    EvenElement,
    EvenGroup,
    EvenParams,
    OddElement,
    OddGroup,
    even_group,
    find_alpha,
    odd_group,
)
from circulant_lab.perm import (
    CycleStructure,
    PermGroup,
    Permutation,
    compose,
    cycle_structure,
    from_cycle_string,
    identity,
    inverse,
    is_semiregular,
    power,
    to_cycle_string,
)
from circulant_lab.quotient import (
    LemmaVerdict,
    QuotientResult,
    induced_action,
    induced_semiregular_harness,
    quotient_graph,
)

__version__ = "0.1.0"
