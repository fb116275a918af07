from math import lcm

import pytest

from cycindex import (Cyclotomic, compose, derived_subgroup,
                      direct_product_embed, enumerate_linear_characters,
                      kernel, named_group, perm_from_cycles, product_character,
                      sign_character, unit_character, wreath_character,
                      wreath_embed)


def character_count_oracle(G):
    """|G / [G,G]| computed via the commutator subgroup."""
    return G.order // derived_subgroup(G).order


class TestEnumeration:
    def test_s3_has_unit_and_sign(self, S3):
        chars = enumerate_linear_characters(S3)
        assert len(chars) == character_count_oracle(S3) == 2
        assert chars[0].is_unit()
        assert chars[1] == sign_character(S3)

    def test_c4_has_four_characters_over_q_zeta4(self, C4):
        chars = enumerate_linear_characters(C4)
        assert len(chars) == 4
        assert chars[0].is_unit()
        assert all(chi.order_m == 4 for chi in chars)
        g = perm_from_cycles("(1 2 3 4)", 4)
        assert sorted(chi.exponent(g) for chi in chars) == [0, 1, 2, 3]

    def test_a4_has_three_characters_over_q_zeta3(self, A4):
        chars = enumerate_linear_characters(A4)
        assert len(chars) == character_count_oracle(A4) == 3
        assert all(chi.order_m == 3 for chi in chars)

    @pytest.mark.parametrize("kind,d", [
        ("symmetric", 4), ("alternating", 4), ("cyclic", 6),
        ("dihedral", 4), ("dihedral", 5),
    ])
    def test_count_matches_abelianization(self, kind, d):
        G = named_group(kind, d)
        assert len(enumerate_linear_characters(G)) == character_count_oracle(G)

    def test_tables_are_pairwise_distinct(self, V4):
        chars = enumerate_linear_characters(V4)
        tables = [chi.exponents for chi in chars]
        assert len(set(tables)) == len(tables) == 4

    def test_exhaustive_homomorphism_check(self):
        # every pair (g, h) for all enumerated characters, |G| <= 200
        for kind, d in [("symmetric", 3), ("cyclic", 4), ("dihedral", 4),
                        ("alternating", 4), ("symmetric", 4)]:
            G = named_group(kind, d)
            assert G.order <= 200
            for chi in enumerate_linear_characters(G):
                for g in G:
                    for h in G:
                        assert chi.value(compose(g, h)) == chi.value(g) * chi.value(h)

    def test_character_sum_orthogonality(self):
        # sum over the group is |G| for the unit character and 0 otherwise
        for kind, d in [("symmetric", 3), ("cyclic", 4), ("cyclic", 6),
                        ("alternating", 4), ("dihedral", 4)]:
            G = named_group(kind, d)
            for chi in enumerate_linear_characters(G):
                total = Cyclotomic.zero()
                for g in G:
                    total = total + chi.value(g)
                expected = G.order if chi.is_unit() else 0
                assert total == Cyclotomic.from_rational(expected)

    def test_values_are_mth_roots(self, C4):
        for chi in enumerate_linear_characters(C4):
            for g in C4:
                v = chi.value(g)
                assert chi.order_m % v.multiplicative_order() == 0


class TestSign:
    def test_values(self, S3):
        eps = sign_character(S3)
        assert eps.value(perm_from_cycles("(1 2)", 3)) == -1
        assert eps.value(S3.identity) == 1
        assert eps.value(perm_from_cycles("(1 2 3)", 3)) == 1

    def test_restriction_to_alternating_is_trivial(self, A4):
        assert sign_character(A4).is_unit()


class TestKernel:
    def test_kernel_of_sign_is_alternating(self, S3, A3):
        assert set(kernel(sign_character(S3)).elements) == set(A3.elements)

    def test_kernel_of_unit_is_whole_group(self, S4):
        assert kernel(unit_character(S4)) == S4

    def test_faithful_character_has_trivial_kernel(self, C4):
        chars = enumerate_linear_characters(C4)
        faithful = [c for c in chars if c.image_order() == 4]
        assert len(faithful) == 2
        for chi in faithful:
            assert kernel(chi).order == 1

    def test_kernel_index_equals_image_order(self):
        G = named_group("dihedral", 6)
        for chi in enumerate_linear_characters(G):
            H = kernel(chi)
            assert G.order == H.order * chi.image_order()
            hset = set(H.elements)
            for g in G:  # normality
                assert {compose(compose(g, h), g.inverse()) for h in hset} == hset


class TestProductCharacter:
    def test_values_on_s2_x_s2(self):
        s2 = named_group("symmetric", 2)
        eps, one = sign_character(s2), unit_character(s2)
        P = direct_product_embed(s2, s2)
        both = product_character(eps, eps, P)
        assert both.value(P.identity) == 1
        assert both.value(perm_from_cycles("(1 2)(3 4)", 4)) == 1
        left_only = product_character(eps, one, P)
        assert left_only.value(perm_from_cycles("(1 2)", 4)) == -1

    def test_order_is_lcm(self):
        c4, c3 = named_group("cyclic", 4), named_group("cyclic", 3)
        chi = enumerate_linear_characters(c4)[1]
        theta = enumerate_linear_characters(c3)[1]
        lam = product_character(chi, theta)
        assert lam.order_m == lcm(4, 3)


class TestWreathCharacter:
    def test_values_on_wreath_s2_s2(self):
        s2 = named_group("symmetric", 2)
        W = wreath_embed(s2, s2)
        eps, one = sign_character(s2), unit_character(s2)
        block1 = perm_from_cycles("(1 2)", 4)
        swap = perm_from_cycles("(1 3)(2 4)", 4)
        mu = wreath_character(eps, one, W)
        assert mu.value(W.identity) == 1
        assert mu.value(block1) == -1
        mu2 = wreath_character(one, eps, W)
        assert mu2.value(swap) == -1
        assert mu2.value(block1) == 1
