"""Exact computations for Leibniz algebras equipped with derivations."""

from .errors import InputError
from .exactlin import Matrix, scalar, scalar_str, vector
from .leibniz import (
    LeibnizAlgebra,
    LeibDerPair,
    Representation,
    LeibDerRepresentation,
    check_leibniz,
    check_derivation,
    check_pair,
    check_representation,
    check_leibder_representation,
    inner_derivation,
    semidirect_product,
    lieization,
    Dialgebra,
    check_dialgebra,
    from_dialgebra,
    NLeibniz,
    check_n_leibniz,
    from_n_leibniz,
    free_truncated,
    free_universal_extend,
)
from .cohomology import (
    Cochain,
    LeibDerCochain,
    delta_L,
    delta_phi,
    partial,
    bullet,
    gbracket,
    tilde_bracket,
    structure_cochain,
    cohomology_dim,
    plain_cohomology_dim,
    cocycle_basis,
    solve_coboundary,
)
from .extensions import (
    CentralExtensionData,
    AbelianExtensionData,
    ExtensionDiagram,
    ExtensionClass,
    build_central_extension,
    check_central_extension,
    cocycle_from_section,
    is_isomorphic_extension,
    obstruction_class,
    extend_derivation_pair,
    build_abelian_extension,
    classify_abelian_extension,
    is_equivalent_abelian,
)
from .deformations import (
    Deformation,
    FormalIsomorphism,
    check_deformation,
    check_deformation_bracket,
    infinitesimal,
    apply_equivalence,
    trivialize_step,
    trivialize,
    obstruction,
    extend_deformation,
)
from .shleibniz import (
    BilinearMap,
    TrilinearMap,
    TwoTermShLeibniz,
    HomotopyDerivation,
    ShMorphism,
    CrossedModule,
    TwoVectorSpace,
    TwoVectorLeibniz,
    TwoVectorDerivation,
    check_sh,
    check_homotopy_derivation,
    check_sh_morphism,
    compose_morphisms,
    skeletal_to_triple,
    triple_to_skeletal,
    check_crossed,
    strict_to_crossed,
    crossed_to_strict,
    to_two_vector,
    from_two_vector,
)

__version__ = "0.1.0"
