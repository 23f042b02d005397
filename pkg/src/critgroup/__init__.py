"""Critical groups of multidigraphs and their directed line graphs."""

from .abelian import (
    AbelianGroup,
    GroupElement,
    GroupHom,
    InductionError,
    Subgroup,
    cokernel,
    image,
    induced_hom,
    is_surjective,
    k_torsion,
    kernel,
    order,
    reduce,
    subgroups_equal,
)
from .critical import (
    HypothesisError,
    SizeError,
    StructuralMaps,
    TheoremReport,
    critical_group,
    enumerate_arborescences,
    kappa,
    laplacian_matrix,
    phi_matrix,
    rho_bar,
    structural_maps,
    verify_divisibility,
    verify_main_theorem,
)
from .digraph import (
    BasePoint,
    GenerationError,
    Multidigraph,
    check_hypotheses,
    in_degree,
    is_k_out_regular,
    line_graph,
    out_degree,
    random_k_out_regular,
    reachable_to,
)
from .exactint import (
    IntMatrix,
    SnfDecomposition,
    determinant,
    hermite_normal_form,
    lattice_contains,
    smith_normal_form,
)

__version__ = "0.1.0"
