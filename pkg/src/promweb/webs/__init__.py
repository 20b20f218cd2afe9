"""Planar webs: representation, growth, structural queries and matchings."""
from .growth import GrowthStall, enumerate_webs, grow
from .matching import Matching, matching_of_word, rotate_matching, word_of_matching
from .planar import MINUS, PLUS, PlanarWeb, ValidationReport, validate
from .structure import (
    CROSSING_WEIGHTS,
    Crossing,
    CutError,
    CutPath,
    FaceClassification,
    boundary_path,
    classify_regions,
    cut,
    initial_cuts,
    neighbor_pairs,
    path_weights,
    random_dual_path,
)

__all__ = [
    "CROSSING_WEIGHTS", "Crossing", "CutError", "CutPath", "FaceClassification", "GrowthStall",
    "MINUS", "Matching", "PLUS", "PlanarWeb", "ValidationReport", "boundary_path",
    "classify_regions", "cut", "enumerate_webs", "grow", "initial_cuts", "matching_of_word",
    "neighbor_pairs", "path_weights", "random_dual_path", "rotate_matching", "validate",
    "word_of_matching",
]
