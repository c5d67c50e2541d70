import pytest
from conftest import perm
from hypothesis import given, settings
from strategies import SMALL_LABELS, as_set, group, group_and_elements, oracle_group, tup

import oracles
from engelkit import (E_n, E_stable, chain_orders, conjugate, engel_chain, engel_profile, fitting,
                      is_engel_element, is_normal, normal_closure, quotient, subgroup)
from engelkit.subgroups import commutator_subgroup, image_in_quotient


def test_pinned_s3(S3):
    E, n = E_stable(perm("(1 2)", 3), S3)
    assert E == subgroup(S3, [perm("(1 2 3)", 3)]) and n == 1
    E, n = E_stable(perm("(1 2 3)", 3), S3)
    assert E.is_trivial() and n <= 2
    assert engel_profile(S3).m == 3


def test_pinned_s4(S4):
    E, _ = E_stable(perm("(1 2 3)", 4), S4)
    assert E == fitting(S4) and E.order == 4


def test_chain_orders(S3):
    assert chain_orders(perm("(1 2)", 3), S3) == [3, 3]
    assert chain_orders(perm("(1 2 3)", 3), S3) == [3, 1]
    assert chain_orders(perm("()", 3), S3) == [1]


def test_engel_chain_trace(S3):
    g = perm("(1 2)", 3)
    res = engel_chain(perm("(1 2 3)", 3), g, S3)
    assert not res.terminates
    assert res.trace[0] == perm("(1 2 3)", 3)
    ok = engel_chain(perm("(1 2)", 3), perm("(1 2 3)", 3), S3)
    assert ok.terminates and ok.trace[-1].is_identity()


def test_element_outside_group(S3):
    C3 = subgroup(S3, [perm("(1 2 3)", 3)])
    with pytest.raises(ValueError):
        E_stable(perm("(1 2)", 3), C3)


def test_e_n_rejects_zero(S3):
    with pytest.raises(ValueError):
        E_n(perm("(1 2)", 3), 0, S3)


@pytest.mark.parametrize("label", SMALL_LABELS)
def test_profile_against_oracle(label):
    G = group(label)
    elems, d = oracle_group(G)
    prof = engel_profile(G)
    for r in prof.records:
        g = tup(r.g)
        assert as_set(r.E_subgroup) == oracles.E_stable(g, elems, d)
        assert r.is_engel == oracles.engel_by_definition(g, elems)
    assert prof.m == oracles.m_of(elems, d)


def test_profile_jobs_agree():
    G = group("Frob7:3")
    one, many = engel_profile(G), engel_profile(G, jobs=3)
    assert [(r.g, r.E_order, r.n_stab, r.is_engel) for r in one.records] == \
           [(r.g, r.E_order, r.n_stab, r.is_engel) for r in many.records]


@settings(max_examples=60, deadline=None)
@given(group_and_elements(1))
def test_chain_laws(case):
    G, (i,) = case
    g = G.elements[i]
    E, n_stab = E_stable(g, G)
    prev = G.whole
    for n in range(1, n_stab + 4):
        En = E_n(g, n, G)
        assert En <= prev
        assert all(conjugate(x, g) in En for x in En.gens)
        prev = En
    assert prev == E
    E1 = E_n(g, 1, G)
    assert E1 == commutator_subgroup(G.whole, subgroup(G, [g]))
    assert is_normal(G, E1)
    assert (E.order == 1) == is_engel_element(g, G)


@settings(max_examples=40, deadline=None)
@given(group_and_elements(2))
def test_quotient_compatibility(case):
    G, (i, j) = case
    g = G.elements[i]
    N = normal_closure(G, subgroup(G, [G.elements[j]]))
    Q = quotient(G, N)
    gq = Q.project(g)
    for n in (1, 2, 3):
        assert image_in_quotient(Q, E_n(g, n, G)) == E_n(gq, n, Q.action)


@settings(max_examples=40, deadline=None)
@given(group_and_elements(2))
def test_subgroup_e_inside_group_e(case):
    G, (i, j) = case
    g = G.elements[i]
    H = subgroup(G, [g, G.elements[j]])
    EH, _ = E_stable(g, H)
    EG, _ = E_stable(g, G)
    assert EH <= EG
