"""Schubert structure constants of (co)minuscule flag varieties via jeu de taquin on root posets."""
from .poset import BoxPoset, build_box_poset, parse_space
from .roots import build_root_system
from .schubert import CoeffTable, box_power, chevalley_product, full_table, lrc, lrc_naive, product_expand
from .shapes import Shape, SkewShape, all_shapes, dual, parse_shape, print_shape, rotate_shape, shortroots
from .tableaux import (
    StandardTableau,
    count_syt,
    enumerate_syt,
    infusion,
    jdt_slide,
    rectify,
    rev_slide,
    revinfusion,
    revrectify,
)

__version__ = "0.1.0"
