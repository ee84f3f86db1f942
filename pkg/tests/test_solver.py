import json

import pytest
from hypothesis import given, settings, strategies as st

from hookspecht.arith import Field, Q
from hookspecht.combinatorics import Partition, QuiverParams, identity, initial_tableau, left_mult_s, partitions
from hookspecht.hook import HookShape, HookVector, hook_module
from hookspecht.presentation import garnir_nodes
from hookspecht.solver import (
    FormWitness,
    HomCertificate,
    bruteforce_hom,
    char0_family,
    classify_hom,
    conjugate_pair,
    garnir_action,
    garnir_coefficient,
    garnir_operator_actions,
    garnir_psi_action,
    hom_graded_dimension,
    leg_nodes,
    match_forms,
    mu_forms_check,
    solve_J123,
    standard_module_prediction,
    target_tableau,
    trivial_module_prediction,
)

Q3 = QuiverParams(3)
P = Partition


def test_target_tableau_examples():
    lam = HookShape(4, 1)
    t = target_tableau(P((2, 2)), lam)
    assert t.tableau == ((1, 2, 4), (3,))
    assert t.word == left_mult_s(3, identity(4))
    assert target_tableau(P((2, 1, 1)), lam).tableau == ((1, 2, 4), (3,))
    t = target_tableau(P((3, 1)), lam)
    assert t.tableau == initial_tableau(P((3, 1))) and t.word == identity(4)
    with pytest.raises(ValueError):
        target_tableau(P((4,)), lam)


def test_solve_J123_examples():
    v = solve_J123(P((3, 1)), HookShape(4, 1), Q, Q3)
    assert v == HookVector.basis_vector(hook_module(HookShape(4, 1), Q3), Q, identity(4))
    v = solve_J123(P((2, 1)), HookShape(3, 0), Q, Q3)
    assert not v.is_zero() and v.weight() == (0, 1, 2)
    assert solve_J123(P((1, 1, 1)), HookShape(3, 0), Q, Q3).is_zero()
    assert solve_J123(P((2, 1)), HookShape(4, 0), Q, Q3).is_zero()


@pytest.mark.parametrize(
    "mu,d,k,field,dim",
    [
        ((3, 1), 4, 1, Q, 1),
        ((2, 1), 3, 0, Field(3), 1),
        ((2, 1), 3, 0, Q, 1),
        ((2, 1, 1), 4, 1, Q, 0),
        ((6, 6), 12, 1, Field(2), 1),
        ((6, 6), 12, 1, Field(3), 0),
        ((6, 6), 12, 1, Q, 0),
    ],
)
def test_bruteforce_examples(mu, d, k, field, dim):
    cert = bruteforce_hom(P(mu), HookShape(d, k), field, Q3)
    assert cert.dimension == dim and cert.method == "bruteforce"
    if dim:
        assert cert.image == HookVector.basis_vector(cert.image.module, field, target_tableau(P(mu), HookShape(d, k)).word)


def test_classify_examples():
    cert = classify_hom(P((2, 1)), HookShape(3, 0), Field(5), Q3)
    assert cert.dimension == 1 and cert.witness == FormWitness("iii", 2, (1, 1), 1)
    assert cert.witness.gc == 0
    cert = classify_hom(P((6, 3)), HookShape(9, 1), Q, Q3)
    assert cert.witness == FormWitness("i", 2, (2, 1), 0)
    cert = classify_hom(P((4, 1)), HookShape(5, 1), Q, Q3)
    assert cert.dimension == 1 and cert.witness.case == "i"
    assert classify_hom(P((1, 1, 1)), HookShape(3, 0), Field(3), Q3).dimension == 0


def test_mu_forms_check_examples():
    chk = mu_forms_check(P((2, 1)), HookShape(3, 0), Q3)
    assert chk.direct and chk.agree and chk.matches[0].case == "iii"
    chk = mu_forms_check(P((2, 1, 1)), HookShape(4, 1), Q3)
    assert not chk.direct and chk.agree
    chk = mu_forms_check(P((3, 1)), HookShape(4, 1), Q3)
    assert chk.matches[0].case == "i"
    with pytest.raises(ValueError):
        mu_forms_check(P((4,)), HookShape(4, 1), Q3)


@pytest.mark.parametrize("e", [3, 4, 5])
def test_form_matching_and_congruence(e):
    q = QuiverParams(e)
    seen_ii = 0
    for d in range(1, 11):
        for k in range(d):
            shape = HookShape(d, k)
            for mu in partitions(d):
                if len(mu) < k + 1:
                    continue
                chk = mu_forms_check(mu, shape, q)
                assert chk.agree, (mu, k, e)
                div = [w for w in match_forms(mu, k, e) if w.case == "ii"]
                cong = [w for w in match_forms(mu, k, e, "congruence") if w.case == "ii"]
                assert div == cong
                seen_ii += len(div)
    assert seen_ii > 0


def test_leg_nodes_follow_the_first_column():
    for d in range(2, 9):
        for k in range(d):
            shape = HookShape(d, k)
            for mu in partitions(d):
                cert = bruteforce_hom(mu, shape, Field(2), Q3)
                if cert.dimension:
                    legs = leg_nodes(mu, target_tableau(mu, shape).word, shape)
                    assert sorted(legs) == [(x, 1) for x in range(2, k + 2)]


def test_garnir_examples():
    mu, shape = P((6, 3)), HookShape(9, 1)
    assert garnir_psi_action(mu, shape, (1, 3), Q, Q3).is_zero()
    assert garnir_psi_action(mu, shape, (1, 1), Q, Q3).is_zero()

    mu, shape = P((6, 6)), HookShape(12, 1)
    assert garnir_coefficient(mu, shape, (1, 3), Q3) == 2
    psi = garnir_psi_action(mu, shape, (1, 3), Q, Q3)
    assert not psi.is_zero()
    assert garnir_action(mu, shape, (1, 3), Field(2), Q3).is_zero()
    assert garnir_action(mu, shape, (1, 3), Field(3), Q3) == garnir_psi_action(mu, shape, (1, 3), Field(3), Q3).scale(2)

    # x > k with y divisible by e: psi^{T^A} acts as the identity
    mu, shape = P((5, 5)), HookShape(10, 0)
    base = HookVector.basis_vector(hook_module(shape, Q3), Q, target_tableau(mu, shape).word)
    assert garnir_psi_action(mu, shape, (1, 3), Q, Q3) == base
    assert garnir_coefficient(mu, shape, (1, 3), Q3) == 2
    assert garnir_action(mu, shape, (1, 3), Q, Q3) == base.scale(2)

    with pytest.raises(ValueError):
        garnir_psi_action(P((6, 6)), HookShape(12, 1), (2, 1), Q, Q3)
    with pytest.raises(ValueError):
        garnir_psi_action(P((2, 2)), HookShape(4, 1), (1, 1), Q, Q3)


@pytest.mark.parametrize("e", [3, 4])
def test_garnir_closed_form_matches_operators(e):
    q = QuiverParams(e)
    for d in range(2, 9):
        for k in range(d):
            shape = HookShape(d, k)
            for mu in partitions(d):
                if len(mu) < k + 1 or not match_forms(mu, k, e):
                    continue
                for A in garnir_nodes(mu):
                    psi, g = garnir_operator_actions(mu, shape, A, Q, q)
                    assert psi == garnir_psi_action(mu, shape, A, Q, q)
                    assert g == garnir_action(mu, shape, A, Q, q)


def test_graded_dimension_examples():
    for mu, d, k, p, r in [((2, 1), 3, 0, 3, 1), ((3,), 3, 0, 3, 0), ((4, 1, 1), 6, 1, 3, 1), ((5, 1), 6, 1, 3, 0)]:
        shape = HookShape(d, k)
        cert = classify_hom(P(mu), shape, Field(p), QuiverParams(p))
        assert hom_graded_dimension(cert, P(mu), shape, QuiverParams(p)) == r
    zero = classify_hom(P((1, 1, 1)), HookShape(3, 0), Field(3), Q3)
    with pytest.raises(ValueError):
        hom_graded_dimension(zero, P((1, 1, 1)), HookShape(3, 0), Q3)


def test_closed_form_predictions():
    assert trivial_module_prediction(P((2, 1)), 3) == 1
    assert trivial_module_prediction(P((1, 1, 1)), 3) is None
    assert standard_module_prediction(P((4, 1, 1)), 3) == 1
    assert standard_module_prediction(P((5, 1)), 3) == 0
    for bad in (2, 4, 1):
        with pytest.raises(ValueError):
            trivial_module_prediction(P((2, 1)), bad)
        with pytest.raises(ValueError):
            standard_module_prediction(P((2, 1)), bad)


def test_char0_family_small():
    assert P((3,)) in char0_family(3, 0, 3)
    assert P((2, 1)) in char0_family(3, 0, 3)
    assert P((1, 1, 1)) not in char0_family(3, 0, 3)


def test_conjugate_pair_examples():
    lam = HookShape(6, 2).partition
    assert conjugate_pair(P((2, 1)), lam) == (P((3, 1, 1, 1)), P((2, 1)))
    assert conjugate_pair(P((3, 1)), P((3, 1)))[1] == P((2, 1, 1))


@settings(max_examples=40)
@given(st.integers(1, 8), st.data(), st.sampled_from([3, 4, 5]), st.sampled_from([0, 2, 3, 5]))
def test_certificate_json_roundtrip(d, data, e, p):
    k = data.draw(st.integers(0, d - 1))
    mu = data.draw(st.sampled_from(partitions(d)))
    q, F, shape = QuiverParams(e), Field(p), HookShape(d, k)
    for cert in (bruteforce_hom(mu, shape, F, q), classify_hom(mu, shape, F, q)):
        blob = json.dumps(cert.to_json(), sort_keys=True)
        back = HomCertificate.from_json(json.loads(blob))
        assert back == cert
        assert json.dumps(back.to_json(), sort_keys=True) == blob
