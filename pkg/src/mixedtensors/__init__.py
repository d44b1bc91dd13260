"""Diagrammatic combinatorics of mixed tensors of Gl(m|n)."""

from .combinatorics import (
    Bipartition,
    Partition,
    RingElement,
    conjugate,
    covariant_dim,
    covariant_weight,
    lr_coeff,
    parse_bipartition,
    parse_partition,
)
from .deligne import (
    ModuleSum,
    character_mixed,
    decompose_T,
    dim_mixed,
    ds_image,
    gamma_coeff,
    lift,
    lift_inverse,
    special_product,
    superdim,
    tensor_decompose,
)
from .diagrams import (
    Label,
    WeightDiagram,
    berezin_shift,
    bipartition_of_diagram,
    bruhat_leq,
    caps_of,
    cups_of,
    diagram_of_bipartition,
    diagram_of_weight,
    invariants_of,
    is_kostant,
    oriented_subset,
    weight_of_diagram,
)
from .errors import (
    DifferentBlock,
    MalformedDiagram,
    MixedTensorError,
    NotCross,
    NotDominant,
    NotHook,
    NotInImage,
    NotKostant,
    NotMaximalAtypical,
    NotPositive,
    NotRecognizable,
    NotTypical,
    ParseError,
    TooAtypical,
    UnsupportedRank,
)
from .structure import build_matching, comp_factors, k0_recognize, projective_factors, typical_times_S
from .theta import (
    Classification,
    Kind,
    Mode,
    a_weight,
    classify,
    dual_irreducible,
    involution_I,
    kostant_normalize,
    socle_embedding,
    theta,
    theta_inverse,
)
from .weights import HighestWeight, berezin, bracket_weight, parse_weight, symmetric_power, trivial_weight

__all__ = [
    "a_weight",
    "berezin",
    "berezin_shift",
    "Bipartition",
    "bipartition_of_diagram",
    "bracket_weight",
    "bruhat_leq",
    "build_matching",
    "caps_of",
    "character_mixed",
    "Classification",
    "classify",
    "comp_factors",
    "conjugate",
    "covariant_dim",
    "covariant_weight",
    "cups_of",
    "decompose_T",
    "diagram_of_bipartition",
    "diagram_of_weight",
    "DifferentBlock",
    "dim_mixed",
    "ds_image",
    "dual_irreducible",
    "gamma_coeff",
    "HighestWeight",
    "invariants_of",
    "involution_I",
    "is_kostant",
    "k0_recognize",
    "Kind",
    "kostant_normalize",
    "Label",
    "lift",
    "lift_inverse",
    "lr_coeff",
    "MalformedDiagram",
    "MixedTensorError",
    "Mode",
    "ModuleSum",
    "NotCross",
    "NotDominant",
    "NotHook",
    "NotInImage",
    "NotKostant",
    "NotMaximalAtypical",
    "NotPositive",
    "NotRecognizable",
    "NotTypical",
    "oriented_subset",
    "parse_bipartition",
    "parse_partition",
    "parse_weight",
    "ParseError",
    "Partition",
    "projective_factors",
    "RingElement",
    "socle_embedding",
    "special_product",
    "superdim",
    "symmetric_power",
    "tensor_decompose",
    "theta",
    "theta_inverse",
    "TooAtypical",
    "trivial_weight",
    "typical_times_S",
    "UnsupportedRank",
    "weight_of_diagram",
    "WeightDiagram",
]
