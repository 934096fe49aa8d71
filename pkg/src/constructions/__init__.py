"""
Cross-product builders: each takes factor presentations and structure maps,
emits the combined HopfDGA and certifies it
"""
from src.constructions.bicrossproduct import BicrossBuilder, BicrossCoaction, bicrossproduct
from src.constructions.bosonisation import BosonisationBuilder, bosonisation
from src.constructions.braiding import (
    BraidedTensorSquare,
    braided_coproduct_map,
    braiding_table,
    crossed_braiding,
)
from src.constructions.codouble import CodoubleBuilder, double_cross_coproduct
from src.constructions.common import CrossProductBuilder, certify, merge_alphabets
from src.constructions.double_cross import DoubleCrossBuilder, double_cross_product
from src.constructions.double_r import DoubleRBuilder, canonical_r_action, double_R
from src.constructions.generalized_double import (
    GeneralizedDoubleBuilder,
    canonical_double_action,
    generalized_double,
    opposite_with_inverse_antipode,
)
from src.constructions.super_tensor import SuperTensorBuilder, super_tensor_dga
from src.constructions.transmutation import (
    BraidedProduct,
    TransmutedAlgebra,
    transmute,
    transmuted_relations,
)

__all__ = [
    "BicrossBuilder",
    "BicrossCoaction",
    "BosonisationBuilder",
    "BraidedProduct",
    "BraidedTensorSquare",
    "CodoubleBuilder",
    "CrossProductBuilder",
    "DoubleCrossBuilder",
    "DoubleRBuilder",
    "GeneralizedDoubleBuilder",
    "SuperTensorBuilder",
    "TransmutedAlgebra",
    "bicrossproduct",
    "bosonisation",
    "braided_coproduct_map",
    "braiding_table",
    "canonical_double_action",
    "canonical_r_action",
    "certify",
    "crossed_braiding",
    "double_R",
    "double_cross_coproduct",
    "double_cross_product",
    "generalized_double",
    "merge_alphabets",
    "opposite_with_inverse_antipode",
    "super_tensor_dga",
    "transmute",
    "transmuted_relations",
]
