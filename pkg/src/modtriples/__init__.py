"""Exact symbolic engine for modulus triples on the projective line over Q."""

from .errors import (
    CertificationError,
    DegenerateInput,
    NotAdmissible,
    NotDisjoint,
    NotEffective,
    NotExcellent,
    NotFiniteOverSource,
    NotInteriorPreserving,
    NotManClass,
    NotMinClass,
    ParseError,
    SymbolicError,
    TypeMismatch,
    UnsupportedComposition,
)
from .ratpoly import (
    FactoredPoly,
    Poly,
    Rat,
    factor,
    is_irreducible,
    poly_gcd,
    resultant,
    squarefree_decomposition,
)
from .divisors import (
    INFINITY,
    ClosedPoint,
    CurveSpace,
    Divisor,
    RationalMap,
    canonical_split,
    compose_maps,
    divisor_order,
    min_divisor,
    multiply_maps,
    point_image,
    principal_divisor,
    pullback_divisor,
    pushforward_divisor,
)
from .triples import (
    CheckedMap,
    ModulusPair,
    ModulusTriple,
    ProductData,
    TripleSum,
    classify,
    dual,
    fundamental_locus,
    interior,
    modulus_condition,
    modulus_condition_point,
    pullback_triple,
    separation,
    shift_morphism,
)
from .cycles import (
    Component,
    Cycle,
    compose,
    graph_cycle,
    is_admissible,
    morphism_flags,
    position_classify,
    reduce_cycle,
    transpose_cycle,
)
from .functors import (
    CompObject,
    IYObject,
    MlogObject,
    NePair,
    TransportCheck,
    compactification_stage,
    extend_correspondence,
    g_adjunction_member,
    g_shrink,
    is_comp_object,
    is_iy_morphism,
    is_mlog_morphism,
    iy_to_triple,
    lambda_adjunction_member,
    lambda_embed,
    mcor_embed,
    minimal_compactification_level,
    mlog_to_triple,
    ne_embed,
    ne_hom_member,
    omega_forget,
    p_left,
    phi_embed,
    phi_left_transport,
    phi_right_transport,
    q_right,
    separation_adjoint,
    triple_to_iy,
    triple_to_mlog,
    tsm_member,
)
from .formats import parse_input

__version__ = "0.1.0"
