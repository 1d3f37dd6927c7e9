"""Combinatorial configurations of points and k-planes.

A configuration of order k pairs points 1..n with k-planes (uniform point
sets) so that any k+1 points lie in at most one plane.  The package
validates these structures, builds them (stacks, products, duals, complete
families), canonicalizes and counts them up to isomorphism, and searches
for flat-faced embeddings in Euclidean 3-space.
"""

from .core import (
    AxiomViolationError,
    Configuration,
    ConfigurationError,
    CountingReport,
    IncidenceProfile,
    LeviGraph,
    ParseError,
    RegularityError,
    WithoutDualError,
    check_counting_identities,
    configuration_from_levi,
    is_connected,
    is_order_exact,
    levi_dot,
    levi_graph,
    parse_configuration,
    profile,
    serialize_configuration,
    validate,
)
from .constructions import (
    ConstructionRecipe,
    build_recipe,
    cartesian_product,
    complete_configuration,
    decompose_stack,
    dual,
    fano,
    four_line_geometry,
    general_stack,
    is_self_dual,
    polygon,
    simple_stack,
    stack_projection,
)
from .isomorphism import (
    CanonicalForm,
    Fingerprint,
    PermGroup,
    SearchBudgetError,
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_form_reference,
    cycle_notation,
    expand_group,
    group_fingerprint,
    match_named_group,
    named_group_table,
    relabel,
)
from .enumeration import (
    CatalogFormatError,
    CatalogRecord,
    EnumerationBudgetError,
    EnumerationSpec,
    brute_force_enumerate,
    enumerate_symmetric,
    read_catalog,
    write_catalog,
)
from .geometry import (
    Embedding,
    EmbeddingReport,
    Polytope,
    PolytopeDiagnostics,
    SimplicialRealization,
    SuperconfigurationReport,
    build_polytope,
    derive_lines,
    is_superconfiguration,
    parse_embedding,
    polytope_diagnostics,
    realize,
    serialize_embedding,
    simplicial_realization,
    verify_embedding,
)

__version__ = "0.1.0"
