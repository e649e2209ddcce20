import pytest

from gsprime import HypothesisError
from gsprime.algebra import is_crossed_product, is_graded_ideal, trivial_group, zn_ring
from gsprime.constructions import (
    GradedHom,
    canonical_projection,
    crossed_product_equiv,
    group_ring,
    hom_transfer,
    idealization,
    idealization_sprime_equiv,
    localize,
    localization_prime_transfer,
    product_factors,
    product_graded,
    product_graded_check,
    product_sprime_decision,
    quotient_graded,
    quotient_module,
    quotient_sprime_transfer,
    restrict_sprime,
    saturation,
)
from gsprime.corpus import group_ring_zn_c2, zn
from gsprime.modules import direct_sum, enumerate_graded_submodules, zn_module
from gsprime.sprime import sprime_witnesses


def ls(X, xs):
    return sorted(X.label(x) for x in xs)


@pytest.fixture
def Z4():
    return zn(4).regular_module


def test_quotient_examples(Z4):
    Q = quotient_graded(zn(4), {0, 2})
    assert Q.order == 2 and Q.mul(Q.one, Q.one) == Q.one and Q.add(Q.one, Q.one) == Q.zero
    assert quotient_module(Z4, Z4.whole).order == 1
    same = quotient_module(Z4, Z4.zero_submodule)
    assert same.order == 4 and same.add_table == Z4.add_table


def test_quotient_transfer_examples(Z4):
    N = Z4.sub({0, 2})
    t = quotient_sprime_transfer(N, Z4.zero_submodule, 1)
    assert t.verdict and t.details["N/L_s_prime"]
    t = quotient_sprime_transfer(N, N, 1)
    assert t.verdict and t.details["quotient_order"] == 2
    assert not quotient_sprime_transfer(N, Z4.zero_submodule, 2)


def test_restrict_examples(Z4):
    N = Z4.sub({0, 2})
    with pytest.raises(HypothesisError):
        restrict_sprime(N, N, 1)
    Z2 = zn(2).regular_module
    V = direct_sum(Z2, Z2)
    K = V.sub(V.elements(["(0,0)", "(1,0)"]))
    L = V.sub(V.elements(["(0,0)", "(1,1)"]))
    assert restrict_sprime(K, L, 1)
    assert restrict_sprime(N, Z4.whole, 1)


def test_hom_transfer_examples(Z4):
    ident = GradedHom(Z4, Z4, list(range(4)))
    P, rep = hom_transfer(ident, Z4.sub({0, 2}), 1, "preimage")
    assert P.elements == {0, 2} and rep
    Q, proj = canonical_projection(Z4, Z4.sub({0, 2}))
    img, rep = hom_transfer(proj, Z4.sub({0, 2}), 1, "image")
    assert img.elements == {Q.zero} and rep
    R2 = zn(2)
    Z2 = R2.regular_module
    V = direct_sum(Z2, Z2)
    incl = GradedHom(Z2, V, [V.element("(0,0)"), V.element("(1,0)")])
    K = V.sub(V.elements(["(0,0)", "(0,1)"]))
    P, rep = hom_transfer(incl, K, 1, "preimage")
    assert P.elements == {0} and rep


def test_product_examples():
    P = product_graded(zn(2), zn(4))
    assert P.order == 8
    M = P.regular_module
    L = M.sub(P.elements(["(0,0)", "(0,1)", "(0,2)", "(0,3)"]))
    assert is_graded_ideal(P, L.elements) and product_graded_check(L)
    odd = M.sub(P.elements(["(0,0)", "(1,2)"]))
    assert product_factors(odd) is None
    assert not product_graded_check(odd)


def test_product_decision_examples():
    from gsprime.constructions import product_modules

    R2, R4 = zn(2), zn(4)
    M = product_modules(R2.regular_module, R4.regular_module)
    P = M.ring
    L = M.sub(M.elements(["(0,0)", "(0,1)", "(0,2)", "(0,3)"]))
    assert product_sprime_decision(L, P.element("(1,0)"))
    zero = M.zero_submodule
    assert product_sprime_decision(zero, P.element("(0,2)"))
    assert not product_sprime_decision(zero, P.element("(1,1)"))


def test_idealization_examples():
    R2 = zn(2)
    X = idealization(R2, R2.regular_module)
    assert X.order == 4
    e = X.element("(0,1)")
    assert X.mul(e, e) == X.zero
    R4 = zn(4)
    assert idealization(R4, zn_module(R4, 2)).order == 8
    zero_mod = zn_module(R4, 1)
    assert idealization(R4, zero_mod).ring.mul == R4.ring.mul


def test_idealization_equiv_examples():
    R2 = zn(2)
    X = idealization(R2, R2.regular_module)
    t = idealization_sprime_equiv(X, {0}, 1)
    assert t.verdict and t.details["(3)"] and all(t.details["(2)"].values())
    R4 = zn(4)
    X = idealization(R4, zn_module(R4, 2))
    assert idealization_sprime_equiv(X, {0}, 2).verdict
    t = idealization_sprime_equiv(X, {0}, 1)
    assert not t.verdict and not t.details["(3)"] and not any(t.details["(2)"].values())


def test_localization_examples():
    L = localize(zn(4), {1})
    assert L.ring.order == 4
    L6 = localize(zn(6), {1, 3})
    assert L6.ring.order == 2
    assert L6.canonical(3) == L6.ring.one
    assert localize(zn(4), {1, 3}).ring.order == 4


def test_localization_order_matches_pair_count_oracle():
    import oracles

    for n, S in [(6, {1, 3}), (4, {1, 3}), (8, {1, 3, 5, 7}), (12, {1, 5}), (12, {1, 3, 9})]:
        assert localize(zn(n), S).ring.order == oracles.localization_order(n, S)


def test_saturation_examples():
    assert saturation(zn(6), {1, 3}) == {1, 3, 5}
    assert saturation(zn(4), {1}) == {1, 3}
    for S in [{1}, {1, 3}, {1, 5}]:
        assert S <= saturation(zn(6), S)


def test_localization_transfer_examples():
    M = zn(6).regular_module
    with pytest.raises(HypothesisError):
        localization_prime_transfer(M.sub({0, 3}), {1, 3}, 1)
    t = localization_prime_transfer(M.sub({0, 2, 4}), {1, 3}, 1)
    assert t.verdict and t.details["b_localized_prime"] and t.details["c_colon_condition"]
    Z4 = zn(4).regular_module
    for N in enumerate_graded_submodules(Z4):
        if N.is_proper:
            t = localization_prime_transfer(N, {1}, 1)
            assert t.details["c_colon_condition"]


def test_group_ring_examples():
    assert group_ring_zn_c2(2).order == 4 and is_crossed_product(group_ring_zn_c2(2))
    assert group_ring_zn_c2(3).order == 9 and is_crossed_product(group_ring_zn_c2(3))
    T = group_ring(zn_ring(5), trivial_group())
    assert T.ring.mul == zn_ring(5).mul


def test_crossed_product_examples():
    R = group_ring_zn_c2(2)
    t = crossed_product_equiv(R, {0})
    assert t.verdict and t.details["s"] == "1" and t.details["t"] == "1" and t.details["I_e"] == ["0"]
    R = group_ring_zn_c2(4)
    I = R.elements(["0", "2", "2g", "2+2g"])
    t = crossed_product_equiv(R, I)
    assert t.verdict and t.details["I_e"] == ["0", "2"]
    assert crossed_product_equiv(group_ring_zn_c2(3), {0}).verdict


def test_every_proper_graded_ideal_of_group_rings_has_witnesses():
    for n in (2, 3, 4):
        M = group_ring_zn_c2(n).regular_module
        for N in enumerate_graded_submodules(M):
            if N.is_proper:
                assert sprime_witnesses(N)
