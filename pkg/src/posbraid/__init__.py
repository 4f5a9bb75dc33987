"""Path matrices, augmentations and normal rulings of Legendrian positive braid closures."""

from .augment import count_augmentations, enumerate_augmentations, is_augmentation, lu_test
from .braid import BraidWord, Permutation, diagram_stats, parse_braid_word
from .crossings import CrossingSet
from .dga import differential
from .pathmatrix import inverse_path_matrix, path_matrix
from .ruling import count_via_rulings, is_ruling, ruling_polynomial
from .simruling import construct_simultaneous, verify_simultaneous

__version__ = "0.1.0"

__all__ = [
    "BraidWord", "CrossingSet", "Permutation",
    "construct_simultaneous", "count_augmentations", "count_via_rulings", "diagram_stats",
    "differential", "enumerate_augmentations", "inverse_path_matrix", "is_augmentation",
    "is_ruling", "lu_test", "parse_braid_word", "path_matrix", "ruling_polynomial",
    "verify_simultaneous",
]
