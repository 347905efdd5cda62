"""Exact quiver mutation, g-dagger vector patterns, and a principal-coefficients oracle."""

from .gvectors import (
    GCluster,
    GVector,
    MutationPath,
    NodeState,
    g_dagger_cluster,
    g_dagger_vector,
    phi_minus,
    phi_path,
    phi_plus,
    phi_step,
    pos_neg_split,
    walk,
)
from .laurent import ExactDivisionError, LaurentPoly, exact_div, poly_text
from .oracle import (
    ExtendedSeed,
    Grading,
    InhomogeneousPolynomial,
    PrincipalOracle,
    cluster_variable,
    degree,
    g_oracle,
    seed_mutate,
)
from .quiver import (
    MalformedQuiver,
    Quiver,
    QuiverError,
    SkewMatrix,
    UnknownVertex,
    VertexSet,
    canonical_key,
    matrix_of,
    mutate,
    positive_part,
    quiver_dumps,
    quiver_loads,
    quiver_of,
)
from .verify import (
    check_injectivity,
    check_sign_coherent,
    check_unimodular,
    enumerate_graph,
    run_suites,
    transform_check,
)

__version__ = "0.1.0"
