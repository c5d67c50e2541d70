import pytest
from conftest import perm
from hypothesis import given, strategies as st
from strategies import perms, same_degree

import oracles
from engelkit import (CapExceeded, DegreeMismatch, GroupHandle, Permutation, commutator, compose,
                      conjugate, enumerate_elements, identity, inverse, left_normed)
from engelkit.perm import CycleSyntaxError, parse_cycles


def tup(p):
    return tuple(i - 1 for i in p.images)


class TestExamples:
    def test_compose_applies_left_first(self):
        p, q = perm("(1 2)", 3), perm("(1 3)", 3)
        # 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        assert compose(p, q).images == [2, 3, 1]
        assert str(compose(p, q)) == "(1 2 3)"

    def test_inverse(self):
        assert inverse(perm("(1 2 3)", 3)) == perm("(1 3 2)", 3)

    def test_conjugate(self):
        # a^b = b^-1 a b relabels a by b
        assert conjugate(perm("(1 2)", 3), perm("(2 3)", 3)) == perm("(1 3)", 3)

    def test_commutator_in_s3(self):
        c = commutator(perm("(1 2)", 3), perm("(1 2 3)", 3))
        # 1 -> 2 -> 1 -> 2 -> 3
        assert c == perm("(1 3 2)", 3)
        assert c.order() == 3

    def test_left_normed(self):
        a, g = perm("(1 2)", 3), perm("(1 2 3)", 3)
        assert left_normed(a, g, g) == commutator(commutator(a, g), g)
        assert left_normed(a) == a

    def test_identity_prints(self):
        assert str(identity(4)) == "()"
        assert identity(4).is_identity()

    def test_cycles_and_order(self):
        p = perm("(1 2)(3 4 5)", 6)
        assert p.cycles() == [(1, 2), (3, 4, 5)]
        assert p.order() == 6

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            compose(identity(3), identity(4))


class TestParser:
    @pytest.mark.parametrize("text", ["()", "id", "", "  "])
    def test_identity_spellings(self, text):
        assert parse_cycles(text, 3) == []

    def test_several_cycles(self):
        assert parse_cycles("(1 2) (3 4 5)", 5) == [(1, 2), (3, 4, 5)]

    @pytest.mark.parametrize("text,pos", [("(1 2", 4), ("(1 1)", 3), ("(1 x)", 3), ("(1 9)", 3)])
    def test_errors_carry_position(self, text, pos):
        with pytest.raises(CycleSyntaxError) as e:
            parse_cycles(text, 5)
        assert e.value.pos == pos

    @given(perms(6))
    def test_str_round_trip(self, p):
        assert Permutation.parse(str(p), 6) == p


class TestAlgebraicLaws:
    @given(same_degree(3))
    def test_associative(self, pqr):
        p, q, r = pqr
        assert (p * q) * r == p * (q * r)

    @given(same_degree(2))
    def test_matches_pointwise_oracle(self, pq):
        p, q = pq
        assert tup(p * q) == oracles.mul(tup(p), tup(q))
        assert tup(commutator(p, q)) == oracles.comm(tup(p), tup(q))
        assert tup(conjugate(p, q)) == oracles.conj(tup(p), tup(q))

    @given(same_degree(3))
    def test_conjugation_is_an_automorphism(self, abc):
        a, b, c = abc
        assert conjugate(a * b, c) == conjugate(a, c) * conjugate(b, c)
        assert conjugate(conjugate(a, b), c) == conjugate(a, b * c)

    @given(same_degree(2))
    def test_commutator_identities(self, ab):
        a, b = ab
        assert commutator(a, b).inverse() == commutator(b, a)
        assert a * commutator(a, b) == conjugate(a, b)

    @given(perms(7), st.integers(-10, 10))
    def test_power_and_order(self, p, k):
        assert (p ** p.order()).is_identity()
        assert p ** k * p ** -k == identity(7)


class TestEnumeration:
    def test_s4_order(self):
        els = enumerate_elements([perm("(1 2)", 4), perm("(1 2 3 4)", 4)])
        assert len(els) == 24
        assert els[0].is_identity()

    def test_cap(self):
        with pytest.raises(CapExceeded) as e:
            enumerate_elements([perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)], max_order=50)
        assert e.value.cap == 50

    @given(same_degree(2, max_degree=5))
    def test_handle_agrees_with_oracle(self, gens):
        G = GroupHandle(list(gens))
        ref = oracles.closure([tup(g) for g in gens], gens[0].degree)
        assert {tup(x) for x in G.elements} == set(ref)
        for i in range(0, G.order, max(1, G.order // 7)):
            for j in range(0, G.order, max(1, G.order // 5)):
                assert G.elements[G.mul[i, j]] == G.elements[i] * G.elements[j]
            assert G.elements[G.inv[i]] == G.elements[i].inverse()
            assert G.index(G.elements[i]) == i
