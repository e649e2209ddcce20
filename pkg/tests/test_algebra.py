import pytest
from hypothesis import given, strategies as st

from gsprime import (
    FiniteRing,
    Grading,
    GradedRing,
    ValidationError,
    cyclic_group,
    graded_ring,
    is_crossed_product,
    is_graded_field,
    is_graded_ideal,
    product_group,
    zn_ring,
)
from gsprime.algebra import (
    FiniteGroup,
    is_strongly_graded,
    poly_quotient_ring,
    ring_violations,
    validate_graded_ring,
)
from gsprime.corpus import dual_numbers_z2, graded_field_f3, group_ring_zn_c2, zn
from gsprime.errors import StructureError


def labels(R, xs):
    return sorted(R.label(x) for x in xs)


def test_cyclic_group_labels_and_inverse():
    C4 = cyclic_group(4)
    assert C4.labels == ("e", "g", "g^2", "g^3")
    assert C4.inverse == (0, 3, 2, 1)
    assert C4.is_abelian


def test_group_table_rejected_when_not_latin():
    with pytest.raises(ValidationError):
        FiniteGroup([[0, 1], [1, 1]])


def test_product_group_order():
    G = product_group(cyclic_group(2), cyclic_group(2))
    assert G.order == 4 and all(G.mul(x, x) == G.identity for x in range(4))


def test_trivial_grading_valid():
    assert validate_graded_ring(zn_ring(4), Grading.trivial(cyclic_group(2), 4)) == []


def test_overlapping_components_give_direct_sum_witness():
    bad = Grading(cyclic_group(2), [{0, 1, 2, 3}, {0, 2}])
    report = validate_graded_ring(zn_ring(4), bad)
    assert [v.axiom for v in report] == ["direct sum: non-unique decomposition"]
    assert report[0].witness[0] == 2
    with pytest.raises(ValidationError):
        GradedRing(zn_ring(4), bad)


def test_f3_table_ring_valid():
    F = graded_field_f3()
    assert F.order == 9
    assert labels(F, F.components[0]) == ["0", "1", "2"]
    assert labels(F, F.components[1]) == ["0", "2u", "u"]


def test_ring_violations_catch_broken_distributivity():
    R = zn_ring(3)
    mul = [list(r) for r in R.mul]
    mul[2][2] = 2
    broken = FiniteRing(R.add, mul)
    assert ring_violations(broken)


def test_out_of_range_ids():
    with pytest.raises(StructureError):
        FiniteRing([[0, 5], [1, 0]], [[0, 0], [0, 1]])


def test_decompose_examples():
    assert zn(4).decompose(3) == {0: 3}
    F = graded_field_f3()
    d = F.decompose(F.element("1+u"))
    assert {F.group.label(g): F.label(x) for g, x in d.items()} == {"e": "1", "g": "u"}
    assert set(F.decompose(F.zero).values()) == {F.zero}


def test_h_star_examples():
    assert labels(zn(4), zn(4).h_star) == ["1", "2", "3"]
    F = graded_field_f3()
    assert labels(F, F.h_star) == ["1", "2", "2u", "u"]
    R = group_ring_zn_c2(2)
    assert labels(R, R.h_star) == ["1", "g"]


def test_homogeneous_units_examples():
    assert labels(zn(4), zn(4).homogeneous_units) == ["1", "3"]
    R = group_ring_zn_c2(2)
    assert labels(R, R.homogeneous_units) == ["1", "g"]
    F = graded_field_f3()
    assert labels(F, F.homogeneous_units) == ["1", "2", "2u", "u"]


def test_is_graded_ideal_examples():
    R = group_ring_zn_c2(2)
    chk = is_graded_ideal(R, R.elements(["0", "1+g"]))
    assert not chk
    x, g, xg = chk.witness
    assert R.label(x) == "1+g" and R.label(xg) in ("1", "g")
    assert is_graded_ideal(zn(4), {0, 2})
    assert is_graded_ideal(graded_field_f3(), {0})


def test_graded_field_examples():
    F = graded_field_f3()
    assert is_graded_field(F)
    one_plus, one_minus = F.element("1+u"), F.element("1+2u")
    assert F.mul(one_plus, one_minus) == F.zero  # the carrier ring has zero divisors
    assert not is_graded_field(zn(4))
    assert is_graded_field(zn(2))


def test_crossed_and_strong_gradings():
    assert is_crossed_product(group_ring_zn_c2(2))
    assert is_strongly_graded(group_ring_zn_c2(2))
    D = dual_numbers_z2(graded=True)
    assert not is_crossed_product(D)
    assert not is_strongly_graded(D)
    trivial_c2 = graded_ring(zn_ring(4), cyclic_group(2))
    assert is_crossed_product(zn(4)) and is_crossed_product(trivial_c2)
    assert not is_strongly_graded(trivial_c2)


def test_poly_quotient_labels():
    R = poly_quotient_ring(2, [0, 0, 1])
    assert R.labels == ("0", "1", "x", "1+x")


@given(st.integers(2, 30))
def test_zn_is_a_ring(n):
    assert ring_violations(zn_ring(n)) == []


@given(st.sampled_from(["F3", "Z4[C2]", "Z3[C2]"]), st.data())
def test_decomposition_sums_back(name, data):
    R = {"F3": graded_field_f3, "Z4[C2]": lambda: group_ring_zn_c2(4), "Z3[C2]": lambda: group_ring_zn_c2(3)}[name]()
    x = data.draw(st.integers(0, R.order - 1))
    parts = R.decompose(x)
    acc = R.zero
    for g, xg in parts.items():
        assert xg in R.components[g]
        acc = R.add(acc, xg)
    assert acc == x


@given(st.integers(2, 12), st.integers(0, 11), st.integers(0, 11))
def test_zn_table_perturbation_is_detected(n, a, b):
    a, b = a % n, b % n
    R = zn_ring(n)
    add = [list(r) for r in R.add]
    add[a][b] = (add[a][b] + 1) % n
    assert ring_violations(FiniteRing(add, R.mul))
