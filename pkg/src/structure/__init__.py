"""
Hopf/DGA layer: presentations, structure maps and the axiom checks
"""
from src.structure.action_check import ActionCheck, verify_action_differentiable
from src.structure.actions import LeftAction, MatchedPair, RightAction
from src.structure.base_check import BaseCheck, VerificationContext
from src.structure.coaction_check import (
    CoactionCheck,
    coaction_from_matrix,
    differentiable_extension,
    verify_coaction_differentiable,
)
from src.structure.crossed_module import CrossedModuleCheck, verify_crossed_module
from src.structure.dga_check import DGACheck, verify_dga
from src.structure.forms import maurer_cartan, verify_inner, verify_left_invariance
from src.structure.hopf_check import HopfCheck, normal_words, tensor_of_maps, verify_hopf
from src.structure.maps import MapSpec, extend_map, identity_map, verify_well_defined
from src.structure.morphism import MorphismCheck, verify_morphism
from src.structure.presentation import (
    DGAPresentation,
    HopfDGA,
    koszul_reversal_sign,
    opposite,
    opposite_element,
    opposite_tensor,
)

__all__ = [
    "ActionCheck",
    "BaseCheck",
    "CoactionCheck",
    "CrossedModuleCheck",
    "DGACheck",
    "DGAPresentation",
    "HopfCheck",
    "HopfDGA",
    "LeftAction",
    "MapSpec",
    "MatchedPair",
    "MorphismCheck",
    "RightAction",
    "VerificationContext",
    "coaction_from_matrix",
    "differentiable_extension",
    "extend_map",
    "identity_map",
    "koszul_reversal_sign",
    "maurer_cartan",
    "normal_words",
    "opposite",
    "opposite_element",
    "opposite_tensor",
    "tensor_of_maps",
    "verify_action_differentiable",
    "verify_coaction_differentiable",
    "verify_crossed_module",
    "verify_dga",
    "verify_hopf",
    "verify_inner",
    "verify_left_invariance",
    "verify_morphism",
    "verify_well_defined",
]
