"""Exact certificates of Waring identifiability for symmetric tensors.

Kruskal ranks, Hilbert functions and Cayley-Bacharach properties of finite
sets of rational points in projective space, combined into a certifier for
uniqueness of a given Waring decomposition.
"""

from .cayley_bacharach import CBReport, cb_check, cb_max_degree, gkr_audit
from .certify import Certificate, CubicContainment, certify, certify_weighted, cubic_containment
from .exact_linalg import Matrix, kernel_basis, rank, rank_by_minors, solve
from .hilbert import (
    HilbertProfile,
    grassmann_intersection_dim,
    hilbert_function,
    hilbert_profile,
    span_dim,
    span_intersection_dim,
)
from .kruskal import KruskalReport, PartitionCheck, kruskal_criterion, kruskal_rank
from .projective import (
    MonomialBasis,
    PointSet,
    ProjectivePoint,
    evaluation_matrix,
    monomial_basis,
    normalize,
    parse_point_set,
    veronese,
)
from .tensor import (
    SymmetricTensor,
    WeightedDecomposition,
    catalecticant_rank,
    is_minimal,
    membership,
    synthesize,
)

__version__ = "0.1.0"
