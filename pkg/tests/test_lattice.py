from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from gsprime import PreconditionError, StructureError
from gsprime.fixtures import example_2_3, example_2_4, example_7, smallest_coprime_prime
from gsprime.lattice import (
    IntLatticeModule,
    bounded_sprime_falsify,
    hnf,
    hnf_with_transform,
    homogeneous_vectors,
    lattice_colon_family,
    lattice_colon_ideal,
    lattice_colon_submodule,
    lattice_membership,
    submodule,
    verify_nonprime_witness,
)


def test_hnf_examples():
    assert hnf([[1, 0], [0, 1]]) == [[1, 0], [0, 1]]
    assert hnf([[2, 0], [4, 0]]) == [[2, 0]]
    assert hnf([[2, 1], [0, 3]]) == [[2, 1], [0, 3]]
    assert hnf([[0, 0]]) == []


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=1, max_size=4)
)


@given(matrices)
def test_hnf_shape_and_transform(A):
    H, U = hnf_with_transform(A)
    n = len(A[0])
    assert [[sum(U[i][k] * A[k][j] for k in range(len(A))) for j in range(n)] for i in range(len(A))] == H
    pivots = []
    for row in H:
        if any(row):
            p = next(j for j, a in enumerate(row) if a)
            assert row[p] > 0
            pivots.append(p)
    assert pivots == sorted(set(pivots))
    for i, p in enumerate(pivots):
        for k in range(i):
            assert 0 <= H[k][p] < H[i][p]


@given(matrices)
def test_hnf_preserves_row_space(A):
    n = len(A[0])
    M = IntLatticeModule(n, (), (0,) * n, 1)
    N = submodule(M, A)
    H = hnf(A)
    assert all(lattice_membership(N, row) for row in H)
    K = submodule(M, H or [[0] * n])
    assert all(lattice_membership(K, row) for row in A)


def test_membership_examples():
    N = example_7()
    assert lattice_membership(N, (6, 0, 0, 0))
    assert not lattice_membership(N, (3, 0, 0, 0))
    assert not lattice_membership(N, (0, 0, 2, 0))
    with pytest.raises(StructureError):
        lattice_membership(N, (1, 2))


@pytest.mark.parametrize("fixture", [example_2_3, example_7])
def test_membership_agrees_with_closure(fixture):
    N = fixture()
    M = N.parent
    box = 4
    closure = oracles.lattice_closure(N.generators, M.relations(), box, M.dim)
    ranges = [range(-box, box + 1)] * M.dim
    import itertools

    for v in itertools.product(*ranges):
        assert lattice_membership(N, v) == (tuple(v) in closure), v


def test_colon_ideal_examples():
    assert lattice_colon_ideal(example_7()) == 0
    assert lattice_colon_ideal(example_2_3()) == 0
    N = example_7()
    assert lattice_colon_ideal(N, N.generators) == 1
    M = IntLatticeModule(0, (2,), (0,), 2)
    assert lattice_colon_ideal(submodule(M, [])) == 2


def test_nonprime_witness_examples():
    assert verify_nonprime_witness(example_2_3(), 2, (0, 0, 1, 0))
    assert verify_nonprime_witness(example_7(), 2, (3, 0, 0, 0))
    N = example_2_4()
    assert verify_nonprime_witness(N, 3, (Fraction(1, 3), 0, 0, 0), s=2)
    assert not verify_nonprime_witness(N, 2, (Fraction(1, 2), 0, 0, 0), s=2)


def test_falsify_examples():
    assert bounded_sprime_falsify(example_2_3(), 2, 25).counterexample is None
    res = bounded_sprime_falsify(example_7(), 1, 5)
    r, m = res.counterexample
    assert verify_nonprime_witness(example_7(), r, m)
    assert (r, m) == (2, (1, 0, 0, 0))
    for f in (example_2_3, example_7, example_2_4):
        assert bounded_sprime_falsify(f(), 1, 0).counterexample is None


def test_falsify_label():
    res = bounded_sprime_falsify(example_7(), 2, 3)
    assert res.label == "no counterexample up to bound 3"


def test_colon_family_examples():
    N = example_7()
    fam = lattice_colon_family(N, range(1, 5))
    forms = {t: C.reduced_form for t, C in fam.entries}
    assert forms[1] == [[2, 0, 0, 0]] and forms[3] == [[2, 0, 0, 0]]
    assert forms[2] == [[1, 0, 0, 0]]
    assert fam.witness == 2 and len(fam.distinct_maximal) == 1
    assert bounded_sprime_falsify(N, 2, 10).counterexample is None
    M = N.parent
    with pytest.raises(PreconditionError):
        lattice_colon_family(submodule(M, M.generators()), [1])


def test_searched_vectors_are_homogeneous():
    for f in (example_2_3, example_7):
        M = f().parent
        for v in homogeneous_vectors(M, 2):
            assert M.is_homogeneous(v)


@given(st.integers(1, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_witness_implies_bounded_counterexample(r, a, b):
    N = example_7()
    m = (a, 0, b, 0)
    if verify_nonprime_witness(N, r, m):
        B = max(abs(r), abs(a), abs(b))
        assert bounded_sprime_falsify(N, 1, B).counterexample is not None


@given(st.integers(1, 30))
def test_coprime_prime(s):
    p = smallest_coprime_prime(s)
    assert s % p and all(p % q for q in range(2, p))


@given(st.integers(1, 6))
def test_colon_submodule_definition(t):
    N = example_7()
    C = lattice_colon_submodule(N, t)
    import itertools

    for v in itertools.product(range(-3, 4), repeat=4):
        assert lattice_membership(C, v) == lattice_membership(N, tuple(t * a for a in v))
