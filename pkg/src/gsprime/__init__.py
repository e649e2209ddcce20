"""Finite graded rings and modules, and exhaustive decisions about graded s-prime submodules."""

__version__ = "0.1.0"

from .algebra import (
    FiniteGroup,
    FiniteRing,
    GradedRing,
    Grading,
    cyclic_group,
    graded_ring,
    is_crossed_product,
    is_graded_field,
    is_graded_ideal,
    poly_quotient_ring,
    product_group,
    zn_ring,
)
from .errors import *  # noqa: F401,F403
from .modules import (
    GradedModule,
    Submodule,
    colon_ideal,
    colon_submodule,
    direct_sum,
    enumerate_graded_submodules,
    generated_submodule,
    graded_ideals,
    is_multiplication_module,
    zn_module,
)
from .sprime import (
    colon_family,
    find_sprime_witness,
    is_graded_prime,
    is_graded_s_prime,
    is_graded_S_prime,
    is_mcs,
    is_s_prime_via_ideal_pairs,
    sprime_witnesses,
    verify_module_theorems,
)

__all__ = [name for name in dir() if not name.startswith("_")]
