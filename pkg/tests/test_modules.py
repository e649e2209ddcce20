import pytest
from hypothesis import given, strategies as st

from gsprime import PreconditionError, ValidationError, cyclic_group
from gsprime.algebra import graded_ring, zn_ring
from gsprime.corpus import graded_field_f3, group_ring_zn_c2, zn
from gsprime.modules import (
    GradedModule,
    annihilator,
    colon_ideal,
    colon_submodule,
    direct_sum,
    enumerate_graded_submodules,
    hz_set,
    is_graded_simple,
    is_graded_submodule,
    is_multiplication_module,
    submodule_product,
    zn_module,
)


def ls(X, xs):
    return sorted(X.label(x) for x in xs)


@pytest.fixture
def Z4():
    return zn(4).regular_module


def test_module_validation_examples(Z4):
    assert Z4.order == 4
    Z2 = zn_module(zn(4), 2)
    assert Z2.act(3, 1) == 1
    R = graded_ring(zn_ring(4), cyclic_group(2))
    with pytest.raises(ValidationError, match="direct sum"):
        GradedModule(R, R.ring.add, R.ring.mul, [range(4), range(4)])


def test_action_axiom_failure_has_witness():
    R = zn(4)
    bad = [[(r * m) % 3 for m in range(3)] for r in range(4)]  # 4 does not act as zero on Z3
    with pytest.raises(ValidationError) as exc:
        GradedModule(R, [[(a + b) % 3 for b in range(3)] for a in range(3)], bad, [range(3)])
    assert exc.value.violations[0].witness


def test_is_graded_submodule_examples(Z4):
    assert is_graded_submodule(Z4.sub({0, 2}))
    assert is_graded_submodule(Z4.zero_submodule)
    F = graded_field_f3().regular_module
    ideal = F.sub(F.elements(["0", "1+u", "2+2u"]))
    chk = is_graded_submodule(ideal)
    assert not chk and chk.reason == "homogeneous component escapes"


def test_colon_ideal_examples(Z4):
    assert colon_ideal(Z4.sub({0, 2})) == {0, 2}
    assert colon_ideal(Z4.whole) == set(range(4))
    Z2 = zn_module(zn(4), 2)
    assert colon_ideal(Z2.zero_submodule) == {0, 2}


def test_annihilator_examples(Z4):
    assert annihilator(Z4.zero_submodule) == set(range(4))
    assert annihilator(Z4.whole) == {0}
    assert annihilator(Z4.sub({0, 2})) == {0, 2}


def test_colon_submodule_examples(Z4):
    N = Z4.zero_submodule
    assert colon_submodule(N, 2).elements == {0, 2}
    assert colon_submodule(N, 1) == N
    assert colon_submodule(N, 0).elements == set(range(4))


def test_hz_examples(Z4):
    assert hz_set(Z4) == {0, 2}
    assert hz_set(zn(2).regular_module) == {0}
    assert hz_set(group_ring_zn_c2(2).regular_module) == {0}


def test_multiplication_module_examples(Z4):
    assert is_multiplication_module(Z4)
    Z2 = zn(2)
    V = direct_sum(Z2.regular_module, Z2.regular_module)
    chk = is_multiplication_module(V)
    assert not chk
    assert ls(V, chk.witness.elements) in (["(0,0)", "(1,0)"], ["(0,0)", "(0,1)"])
    assert colon_ideal(chk.witness) == {0}
    assert is_multiplication_module(zn_module(zn(4), 2))


def test_graded_simple_examples(Z4):
    assert is_graded_simple(zn(2).regular_module)
    assert not is_graded_simple(Z4)
    assert is_graded_simple(group_ring_zn_c2(2).regular_module)


def test_submodule_product_examples(Z4):
    N = Z4.sub({0, 2})
    assert submodule_product(N, N).elements == {0}
    assert submodule_product(Z4.zero_submodule, N).elements == {0}
    assert submodule_product(Z4.whole, N).elements == {0, 2}
    Z2 = zn(2).regular_module
    V = direct_sum(Z2, Z2)
    with pytest.raises(PreconditionError):
        submodule_product(V.zero_submodule, V.whole)


def test_enumeration_examples(Z4):
    assert [sorted(N.elements) for N in enumerate_graded_submodules(Z4)] == [[0], [0, 2], [0, 1, 2, 3]]
    assert len(enumerate_graded_submodules(zn(2).regular_module)) == 2
    R = group_ring_zn_c2(2)
    assert [len(N) for N in enumerate_graded_submodules(R.regular_module)] == [1, 4]


def test_enumeration_matches_brute_force(corpus, brute):
    for name, M in corpus.items():
        mine = sorted(tuple(sorted(N.labels())) for N in enumerate_graded_submodules(M))
        ref = sorted(tuple(brute[name].mlabels(N)) for N in brute[name].graded_submodules())
        assert mine == ref, name


@given(st.integers(2, 24))
def test_zn_submodules_are_divisor_subgroups(n):
    M = zn(n).regular_module
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    expected = {frozenset(range(0, n, d)) for d in divisors}
    found = [N.elements for N in enumerate_graded_submodules(M)]
    assert len(found) == len(expected) and set(found) == expected


@given(st.integers(2, 16), st.data())
def test_colon_laws_on_zn(n, data):
    M = zn(n).regular_module
    subs = enumerate_graded_submodules(M)
    N = data.draw(st.sampled_from(subs))
    r = data.draw(st.integers(0, n - 1))
    C = colon_submodule(N, r)
    assert N <= C
    assert all((r * m) % n in N for m in C.elements)
    col = colon_ideal(N)
    assert col == {x for x in range(n) if all((x * m) % n in N for m in range(n))}
