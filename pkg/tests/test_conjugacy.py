import pytest

from leibniz_levi import linalg as la
from leibniz_levi.conjugacy import (Verdict, adjoin_copy_of_levi, centralizer, classify, criterion,
                                    delta_theta, E_subspace, exp_D, exp_R, find_inner_conjugator,
                                    is_derivation, nonconjugacy_obstruction, s_theta)
from leibniz_levi.core import (AlgebraTable, LinearMap, Subspace, bracket, quotient_algebra,
                               right_mult, verify_leibniz)
from leibniz_levi.errors import HypothesisFailed, NoConjugator, PreconditionFailed
from leibniz_levi.fixtures import sl2
from leibniz_levi.radicals import squares_ideal

from helpers import quaternion_hemi, reorder, span


def theta_39(A):
    S = span(A, "e1", "e2", "e3")
    I = span(A, "x7", "x8", "x9")
    return LinearMap.from_images(S, I, [A.e("x8"), A.e("x7"), A.e("x9")])


def tau_y1(A, scale=1):
    S = span(A, "e", "f", "h")
    return right_mult(A, A.e("y1")).restrict(S).corestrict(squares_ideal(A)).scaled(scale)


# -- E and the criterion ----------------------------------------------------

def test_E_subspace(ex39, l201, levis):
    lv = levis["L201"]
    assert E_subspace(l201, lv.S, lv.N, lv.I) == span(l201, "x0", "x1", "x2", "y1")
    lv = levis["example_3_9"]
    E = E_subspace(ex39, lv.S, lv.N, lv.I)
    assert E == lv.I
    # y4, y5 are moved out of I by S
    assert not E.contains(ex39.e("y4"))


def test_criterion(ex39, l201, levis):
    lv = levis["L201"]
    E = E_subspace(l201, lv.S, lv.N, lv.I)
    res = criterion(l201, lv.S, E, lv.I)
    assert res.holds and res.SE == lv.I
    lv = levis["example_3_9"]
    res = criterion(ex39, lv.S, E_subspace(ex39, lv.S, lv.N, lv.I), lv.I)
    assert not res.holds and res.SE.is_zero()
    # J = 0 holds trivially whatever E is
    assert criterion(ex39, lv.S, Subspace.zero(9), Subspace.zero(9)).holds


# -- S_theta and delta_theta ------------------------------------------------

def test_s_theta_examples(ex39, l201):
    S = span(l201, "e", "f", "h")
    zero = LinearMap.zero(S, squares_ideal(l201))
    assert s_theta(l201, S, zero) == S
    S1 = s_theta(l201, S, tau_y1(l201))
    v = l201.vector
    assert S1 == Subspace.span(8, [v({"e": 1, "x0": 2}), v({"f": 1, "x2": 1}), v({"h": 1, "x1": 2})])
    St = s_theta(ex39, span(ex39, "e1", "e2", "e3"), theta_39(ex39))
    assert St.contains(ex39.vector({"e1": 1, "x8": 1}))


def test_s_theta_rejects_non_hom(ex39):
    S = span(ex39, "e1", "e2", "e3")
    bad = LinearMap.from_images(S, span(ex39, "x7", "x8", "x9"),
                                [ex39.e("x7"), ex39.e("x8"), ex39.e("x9")])
    with pytest.raises(PreconditionFailed):
        s_theta(ex39, S, bad)


def test_delta_theta(fixtures, ex39, levis):
    A = fixtures["hemi_sl2_adjoint"]
    lv = levis["hemi_sl2_adjoint"]
    theta = LinearMap.from_images(lv.S, lv.I, [A.e("vh"), A.e("ve"), A.e("vf")])
    D = delta_theta(A, lv.S, theta, lv.R, lv.I)
    assert is_derivation(A, D) and D.compose(D).is_zero()
    phi = exp_D(A, lv.S, la.zero_vec(6), theta, lv.R, lv.I)
    assert phi.map == LinearMap.identity(6) + D
    assert phi.apply(lv.S) == s_theta(A, lv.S, theta)
    zero = delta_theta(A, lv.S, LinearMap.zero(lv.S, lv.I), lv.R, lv.I)
    assert zero.is_zero()
    lv = levis["example_3_9"]
    with pytest.raises(PreconditionFailed):
        delta_theta(ex39, lv.S, theta_39(ex39), lv.R, lv.I)


def test_exp_D_reduces_to_exp_R(l201):
    S = span(l201, "e", "f", "h")
    a = l201.vector({"y1": 1, "x2": 3})
    assert exp_D(l201, S, a).map == exp_R(l201, a).map
    assert exp_D(l201, S, la.zero_vec(8)).map == LinearMap.identity(8)


def test_automorphism_blocks(l201, levis):
    lv = levis["L201"]
    phi = exp_R(l201, l201.e("y1"))
    b = phi.blocks(lv.S, lv.R)
    assert b["SS"] == LinearMap.identity(8).restrict(lv.S).corestrict(lv.S)
    assert b["SR"](l201.e("e")) == l201.vector({"x0": 2})
    assert len(phi.then(phi).generator_log) == 2


# -- conjugators ------------------------------------------------------------

def test_conjugator_l201(l201, levis):
    lv = levis["L201"]
    E = E_subspace(l201, lv.S, lv.N, lv.I)
    y1 = l201.e("y1")
    for k in (1, 3):
        c = find_inner_conjugator(l201, lv.S, tau_y1(l201, k), E)
        # b = k y1 up to the part of E that S annihilates
        diff = la.sub(c.b, la.scale(k, y1))
        assert all(not any(bracket(l201, s, diff)) for s in lv.S.basis)
    zero = find_inner_conjugator(l201, lv.S, LinearMap.zero(lv.S, lv.I), E)
    assert not any(zero.b)


def test_conjugator_unavailable(ex39, levis):
    lv = levis["example_3_9"]
    E = E_subspace(ex39, lv.S, lv.N, lv.I)
    with pytest.raises(NoConjugator):
        find_inner_conjugator(ex39, lv.S, theta_39(ex39), E)


# -- non-conjugacy ----------------------------------------------------------

def test_obstruction_example_3_9(ex39, levis):
    lv = levis["example_3_9"]
    ob = nonconjugacy_obstruction(ex39, lv.S, theta_39(ex39), lv.R, lv.N, lv.I)
    assert ob is not None
    assert ob.value_S != ob.value_S_theta
    # y6 commutes with S but nothing outside N commutes with S_theta
    assert ob.p == ex39.e("y6")
    St = s_theta(ex39, lv.S, theta_39(ex39))
    assert centralizer(ex39, lv.R, St, "right") <= lv.N


def test_no_obstruction_when_conjugate(l201, levis):
    lv = levis["L201"]
    assert nonconjugacy_obstruction(l201, lv.S, tau_y1(l201), lv.R, lv.N, lv.I) is None


# -- classifier -------------------------------------------------------------

@pytest.mark.parametrize("name,verdict", [
    ("example_3_9", Verdict.EXISTS_NON_CONJUGATE_PAIR),
    ("L201", Verdict.INNER_CONJUGATE),
    ("hemi_sl2_adjoint", Verdict.CONJUGATE_NON_INNER),
    ("hemi_sl2_double", Verdict.CONJUGATE_NON_INNER),
])
def test_classify_fixtures(fixtures, name, verdict):
    c = classify(fixtures[name])
    assert c.verdict is verdict
    for key in ("J = 0", "[J,R] = 0", "[S,R] = 0", "[S,E] = J"):
        assert key in c.predicates


def test_classify_witnesses(fixtures):
    c = classify(fixtures["example_3_9"])
    assert c.obstruction is not None and c.theta is not None
    assert c.predicates["[S,E] = J"] is False and c.predicates["[J,R] = 0"] is False
    c = classify(fixtures["L201"])
    phi = exp_R(fixtures["L201"], c.conjugator.b)
    assert phi.apply(c.levi.S) == s_theta(fixtures["L201"], c.levi.S, c.theta)
    c = classify(fixtures["hemi_sl2_adjoint"])
    assert c.automorphism.apply(c.levi.S) == s_theta(fixtures["hemi_sl2_adjoint"], c.levi.S, c.theta)


def test_classify_semisimple_and_zero_hom():
    assert classify(sl2()).verdict is Verdict.INNER_CONJUGATE
    # quaternion module: no Hom from S, so J = 0
    c = classify(quaternion_hemi())
    assert c.verdict is Verdict.INNER_CONJUGATE
    assert c.predicates["J = 0"]


def test_classify_deterministic(fixtures):
    A = fixtures["example_3_9"]
    assert classify(A).evidence == classify(A).evidence


# -- adjoining a copy of S ---------------------------------------------------

@pytest.fixture(scope="module")
def lie_part(ex39):
    return quotient_algebra(ex39, squares_ideal(ex39)).algebra


def test_build_reproduces_example(ex39, lie_part):
    G = lie_part
    L = adjoin_copy_of_levi(G, span(G, "e1", "e2", "e3"), span(G, "y4", "y5", "y6"), G.e("y6"),
                     names=["x8", "x7", "x9"], name="rebuilt")
    assert verify_leibniz(L) == []
    assert L.constants == reorder(ex39, L.basis_names).constants


def test_build_rejects_p_not_centralised(lie_part):
    G = lie_part
    # swap roles: p = y4 lies in [M, M] and does not commute with S
    with pytest.raises(HypothesisFailed, match="M != N"):
        adjoin_copy_of_levi(G, span(G, "e1", "e2", "e3"), span(G, "y4", "y5", "y6"), G.e("y4"))
    with pytest.raises(HypothesisFailed, match=r"\[S, p\]"):
        adjoin_copy_of_levi(G, span(G, "e1", "e2", "e3"), span(G, "y4", "y5", "y6"),
                     G.vector({"y6": 1, "y4": 1}))


def test_build_rejects_non_lie():
    A = AlgebraTable.from_named(("a", "b"), {("a", "a"): {"b": 1}})
    with pytest.raises(HypothesisFailed):
        adjoin_copy_of_levi(A, span(A, "a"), span(A, "b"), A.e("b"))


def test_build_degenerate_case():
    """sl2 + <p> with p central: N = 0, hypotheses hold vacuously."""
    S0 = sl2()
    G = AlgebraTable.from_products(list(S0.basis_names) + ["p"], {
        (i, j): list(S0.product(i, j)) + [0] for i in range(3) for j in range(3)})
    L = adjoin_copy_of_levi(G, span(G, "h", "e", "f"), span(G, "p"), G.e("p"))
    assert verify_leibniz(L) == []
    assert L.dim == 7
    assert squares_ideal(L).dim == 3
    assert classify(L).verdict is Verdict.EXISTS_NON_CONJUGATE_PAIR
