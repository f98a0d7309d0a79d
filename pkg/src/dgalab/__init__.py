"""dgalab: exact workbench for semifree noncommutative DGAs."""

from .algebra import (ANY_DEGREE, Generator, NcPoly, Signature,
                      homogeneous_degree, is_homogeneous, substitute)
from .certify import (AlgebraTrivialityCertificate, TrivialityCertificate,
                      certify_trivial_algebra, certify_trivial_group,
                      find_triviality_reps, lift_rep_to_degree_one,
                      triviality_iso, verify_algebra_certificate,
                      verify_group_certificate)
from .constructions import (algebra_to_dgas, canonical_augmentations,
                            group_relation_polys, group_to_dgas)
from .dga import LEIBNIZ_CONVENTION, Augmentation, SemifreeDGA
from .errors import DgaError
from .ideal import (CofactorRep, CofactorTriple, acyclicity_witness,
                    member_with_cofactors, verify_cofactors, words_up_to)
from .parsing import parse_presentation, poly_from_str
from .presentations import AlgebraPresentation, GroupPresentation
from .rings import Integers, IntegersMod, Rationals, Ring, ring_from_string
from .tame import (ElementaryAuto, StableTameCertificate, TameIso,
                   transport_dga, verify_dga_map, verify_stable_tame)

__version__ = "0.1.0"

__all__ = [
    "ANY_DEGREE", "Augmentation", "AlgebraPresentation",
    "AlgebraTrivialityCertificate", "CofactorRep", "CofactorTriple",
    "DgaError", "ElementaryAuto", "Generator", "GroupPresentation",
    "Integers", "IntegersMod", "LEIBNIZ_CONVENTION", "NcPoly", "Rationals",
    "Ring", "SemifreeDGA", "Signature", "StableTameCertificate", "TameIso",
    "TrivialityCertificate", "acyclicity_witness", "algebra_to_dgas",
    "canonical_augmentations", "certify_trivial_algebra",
    "certify_trivial_group", "find_triviality_reps", "group_relation_polys",
    "group_to_dgas", "homogeneous_degree", "is_homogeneous",
    "lift_rep_to_degree_one", "member_with_cofactors", "parse_presentation",
    "poly_from_str", "ring_from_string", "substitute", "transport_dga",
    "triviality_iso", "verify_algebra_certificate", "verify_cofactors",
    "verify_dga_map", "verify_group_certificate", "verify_stable_tame",
    "words_up_to",
]
