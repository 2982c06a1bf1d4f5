from .base import BaseResult, PairResult, base_size, has_base_le2, is_base
from .classify import (
    BASE_LE2,
    EXCEPTIONAL,
    SPLIT_PX,
    UNEXPLAINED,
    ClassificationReport,
    Verdict,
    classify,
    is_split_px,
)
from .colourings import (
    Colouring,
    ExcludedGroup,
    asymmetric_3colourings,
    asymmetric_set,
    colour_stabiliser,
    colour_transporter,
)
from .distinguishing import NOT_APPLICABLE, distinguishing_cost, distinguishing_number
from .reports import StabiliserReport, abelian_pair, aut_bound_holds, stabiliser_structure_report
from .star import StarWitness, double_cosets_distinct, star_check

__all__ = [
    "BASE_LE2",
    "EXCEPTIONAL",
    "NOT_APPLICABLE",
    "SPLIT_PX",
    "UNEXPLAINED",
    "BaseResult",
    "ClassificationReport",
    "Colouring",
    "ExcludedGroup",
    "PairResult",
    "StabiliserReport",
    "StarWitness",
    "Verdict",
    "abelian_pair",
    "asymmetric_3colourings",
    "asymmetric_set",
    "aut_bound_holds",
    "base_size",
    "classify",
    "colour_stabiliser",
    "colour_transporter",
    "distinguishing_cost",
    "distinguishing_number",
    "double_cosets_distinct",
    "has_base_le2",
    "is_base",
    "is_split_px",
    "stabiliser_structure_report",
    "star_check",
]
