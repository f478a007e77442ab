"""Exact computations with integral-form Jack symmetric functions.

The package covers partition combinatorics, Jack ``J`` functions over Q(alpha),
their Littlewood-Richardson and Stanley structure coefficients, lattice
rational functions ``T_Gamma(u)`` and upper/lower hook assignment formulas.
"""

from .alpha import ALPHA, AlphaPoly, AlphaRat, Factored, bracket, factor_linear
from .errors import JackError
from .hooks import (
    HookAssignment,
    StanleyProduct,
    balanced_assignment_search,
    evaluate_assignment,
    pieri_assignment,
    rect_union_assignment,
    rectangular_assignment,
    union_factored_form,
)
from .lattice import (
    LatticeRational,
    expansion_relative_to,
    flip_rule_check,
    mirror_rule_check,
    mumu_quadrants,
    order_formula,
    residue_at,
    t_box,
    t_box_factor,
    t_gamma,
    t_partition,
    t_star,
    union_factorization_check,
    value_at,
    verify_sum_product,
)
from .lr import LrTable, hat_g, jack_lr, kostka, multiply, schur_lr, stanley_coeff, varpi
from .partitions import Box, Partition, parse_partition
from .symfunc import SymFunc, convert, hall_inner, jack_J, jack_norm

__version__ = "0.1.0"
