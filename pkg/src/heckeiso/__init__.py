"""
Isomorphism decisions for simple supersingular pro-p Iwahori-Hecke modules of
GL-product groups, in the module category and in the Gorenstein homotopy
category, with a brute-force linear-algebra oracle over finite fields.
"""

from .ff import FFMatrix, FieldCtx, kernel, rank, rref, solve
from .gln import (
    SimpleSS,
    UnsupportedInstance,
    build_simple,
    enumerate_simples,
    ho_iso_witness,
    ho_isomorphic,
    mod_iso_witness,
    mod_isomorphic,
    restriction_decomposition,
)
from .haff import (
    AffChar,
    Stabilizer,
    TorusChar,
    aff_char,
    conj_char,
    has_finite_pd,
    ho_delta_hom,
    is_supersingular,
    res_face_projective,
    s_xi,
    stabilizer,
    torus_char,
)
from .oracle import (
    BruteFaceAlg,
    brute_mod_isomorphic,
    brute_module_model,
    brute_res_projective,
    brute_stable_hom,
    build_face_algebra,
    build_lifts,
)
from .weyl import (
    AffineDynkin,
    CoxeterGroup,
    Face,
    GroupSpec,
    build_spec,
    closure_leq,
    faces,
    node_name,
    parse_node,
)
from .zerohecke import (
    HModule,
    ZeroHeckeAlg,
    build_zero_hecke,
    character_module,
    hom_space,
    is_projective,
    stable_hom_dim,
    tensor_module,
)

__version__ = "0.1.0"

__all__ = [
    "AffChar",
    "AffineDynkin",
    "BruteFaceAlg",
    "CoxeterGroup",
    "FFMatrix",
    "Face",
    "FieldCtx",
    "GroupSpec",
    "HModule",
    "SimpleSS",
    "Stabilizer",
    "TorusChar",
    "UnsupportedInstance",
    "ZeroHeckeAlg",
    "aff_char",
    "build_face_algebra",
    "build_lifts",
    "build_simple",
    "build_spec",
    "build_zero_hecke",
    "brute_mod_isomorphic",
    "brute_module_model",
    "brute_res_projective",
    "brute_stable_hom",
    "character_module",
    "closure_leq",
    "conj_char",
    "enumerate_simples",
    "faces",
    "has_finite_pd",
    "ho_delta_hom",
    "ho_iso_witness",
    "ho_isomorphic",
    "hom_space",
    "is_projective",
    "is_supersingular",
    "kernel",
    "mod_iso_witness",
    "mod_isomorphic",
    "node_name",
    "parse_node",
    "rank",
    "res_face_projective",
    "restriction_decomposition",
    "rref",
    "s_xi",
    "solve",
    "stabilizer",
    "stable_hom_dim",
    "tensor_module",
    "torus_char",
]
