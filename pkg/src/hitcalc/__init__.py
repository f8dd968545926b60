"""Minimal generators of F_2[x_1, ..., x_n] as a module over the mod-2
Steenrod algebra, via binary blocks, splicing and semistandard tableaux."""

from .blocks import (
    Block,
    OmegaVector,
    alpha_count,
    cmp_left,
    cmp_right,
    cp,
    cp_inverse,
    descending_omegas,
    ferrers_block,
    is_semistandard,
    mu,
    row_regular_partition,
)
from .cohit import (
    CapExceeded,
    HitSpace,
    are_equivalent,
    cohit_basis,
    cohit_dim,
    hit_space,
    is_hit,
    omega_quotient_dim,
    spectrum,
)
from .gf2 import BACKEND, F2Matrix
from .poly import Monomial, Polynomial, parse_poly, render
from .splice import BlockSum, k_splice, straighten
from .steenrod import chi_sq, sq, total_sq, verify_relation
from .tableaux import Partition, Tableau, enumerate_ssyt, hook_count, hook_length, semistandard_blocks

__version__ = "0.1.0"
