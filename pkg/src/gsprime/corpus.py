"""Named small graded rings and modules used throughout tests and the CLI."""

from __future__ import annotations

from .algebra import (
    GradedRing,
    cyclic_group,
    graded_ring,
    poly_grading_components,
    poly_quotient_ring,
    zn_ring,
)
from .constructions import group_ring, idealization, product_graded
from .modules import GradedModule, zn_module


def zn(n: int, group=None) -> GradedRing:
    """Z_n, trivially graded (by the trivial group unless ``group`` is given)."""
    return graded_ring(zn_ring(n), group, None, name=f"Z{n}")


def graded_field_f3() -> GradedRing:
    """Z_3[u]/(u^2 - 1) with C_2-grading F_0 = Z_3, F_1 = Z_3 u."""
    C2 = cyclic_group(2)
    ring = poly_quotient_ring(3, [-1, 0, 1], var="u")
    return graded_ring(ring, C2, poly_grading_components(3, 2, C2, 1), name="F3")


def dual_numbers_z2(graded: bool = False) -> GradedRing:
    """Z_2[X]/(X^2); optionally C_2-graded by T_0 = {0,1}, T_1 = {0,x}."""
    ring = poly_quotient_ring(2, [0, 0, 1], var="x")
    if not graded:
        return graded_ring(ring, None, None, name="Z2[x]/(x^2)")
    C2 = cyclic_group(2)
    return graded_ring(ring, C2, poly_grading_components(2, 2, C2, 1), name="Z2[x]/(x^2) graded")


def group_ring_zn_c2(n: int) -> GradedRing:
    R = group_ring(zn_ring(n), cyclic_group(2))
    R.name = f"Z{n}[C2]"
    return R


def z2_over_z4() -> GradedModule:
    return zn_module(zn(4), 2)


def z2_x_z4() -> GradedRing:
    return product_graded(zn(2), zn(4))


def idealization_zn(n: int, k: int) -> GradedRing:
    """Z_n (+) Z_k with Z_k acting through Z_n."""
    R = zn(n)
    return idealization(R, zn_module(R, k))


def corpus_rings() -> dict[str, GradedRing]:
    return {
        "Z4": zn(4),
        "Z6": zn(6),
        "Z8": zn(8),
        "Z2xZ4": z2_x_z4(),
        "Z2[C2]": group_ring_zn_c2(2),
        "Z3[C2]": group_ring_zn_c2(3),
        "Z4[C2]": group_ring_zn_c2(4),
        "F3": graded_field_f3(),
        "Z2(+)Z2": idealization_zn(2, 2),
        "Z4(+)Z2": idealization_zn(4, 2),
        "Z2[x]/(x^2)": dual_numbers_z2(),
    }


def corpus_modules() -> dict[str, GradedModule]:
    """Every corpus ring over itself plus Z_2 over Z_4."""
    out = {name: R.regular_module for name, R in corpus_rings().items()}
    out["Z2 over Z4"] = z2_over_z4()
    return out
