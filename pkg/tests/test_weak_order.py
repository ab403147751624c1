from itertools import combinations

import pytest
from hypothesis import given

from diii_clans import (
    ClanError,
    apply_reflection,
    clan_length,
    enumerate_diii,
    maximal_clan,
    parse_diii,
    rank_poly_recurrence,
    rank_polynomial,
    weak_order_poset,
)

from conftest import diii_clans


def braid_and_commuting_pairs(n):
    """Edges of the type-D diagram (consecutive indices plus (n-2, n)) and
    the remaining commuting generator pairs."""
    braid = [(i, i + 1) for i in range(1, n - 1)]
    if n >= 3:
        braid.append((n - 2, n))
    commuting = [p for p in combinations(range(1, n + 1), 2) if p not in braid]
    return braid, commuting


class TestLength:
    def test_reference_length_computation(self):
        stats = clan_length(parse_diii("++1212--"))
        assert stats.length == 1
        assert stats.z == 1
        assert stats.spreads == {1: 2, 2: 2}
        assert stats.weaves == {1: 0, 2: 1}

    def test_matchless_is_zero(self):
        assert clan_length(parse_diii("+--+-++-")).length == 0

    def test_apex_reaches_dimension_bound(self):
        assert clan_length(parse_diii("12343412")).length == 6

    def test_requires_diii(self):
        with pytest.raises(ClanError):
            clan_length(parse_diii("++--").flip())

    @given(diii_clans())
    def test_bounds(self, clan):
        length = clan_length(clan).length
        assert 0 <= length <= clan.n * (clan.n - 1) // 2


class TestReflectionAction:
    def test_reference_action_all_generators(self):
        clan = parse_diii("+-1122+-")
        assert apply_reflection(1, clan).text() == "11223344"
        assert apply_reflection(2, clan).text() == "+1-12+2-"
        assert apply_reflection(3, clan) == clan
        assert apply_reflection(4, clan) == clan

    def test_collapse_at_the_fork_generator(self):
        assert apply_reflection(4, parse_diii("++--++--")).text() == "++1212--"
        assert apply_reflection(3, parse_diii("+++---")).text() == "+1212-"

    def test_actions_from_matchless_clans(self):
        assert apply_reflection(2, parse_diii("++--++--")).text() == "+11-+22-"
        assert apply_reflection(4, parse_diii("++++----")).text() == "++1212--"

    def test_sign_swap_candidate_rejected_by_length_not_validity(self):
        # trading the opposite signs at positions (1,2) gives a valid DIII
        # clan of the same length, so only the collapse survives the filter
        clan = parse_diii("+-1122+-")
        swapped = parse_diii("-+1122-+")
        assert clan_length(swapped).length == clan_length(clan).length
        assert apply_reflection(1, clan).text() == "11223344"

    def test_n1_has_no_moves(self):
        clan = parse_diii("+-")
        assert apply_reflection(1, clan) == clan

    def test_index_range_checked(self):
        with pytest.raises(ClanError):
            apply_reflection(5, parse_diii("+-1122+-"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_idempotence_and_grading(self, n):
        for clan in enumerate_diii(n):
            base = clan_length(clan).length
            for i in range(1, n + 1):
                image = apply_reflection(i, clan)
                assert apply_reflection(i, image) == image
                if image != clan:
                    assert clan_length(image).length == base + 1

    @pytest.mark.parametrize("n", range(2, 6))
    def test_braid_relations(self, n):
        braid, commuting = braid_and_commuting_pairs(n)
        for clan in enumerate_diii(n):
            for i, j in braid:
                lhs = apply_reflection(i, apply_reflection(j, apply_reflection(i, clan)))
                rhs = apply_reflection(j, apply_reflection(i, apply_reflection(j, clan)))
                assert lhs == rhs
            for i, j in commuting:
                assert apply_reflection(i, apply_reflection(j, clan)) == apply_reflection(
                    j, apply_reflection(i, clan)
                )


class TestPoset:
    def test_n2_shape(self):
        poset = weak_order_poset(2)
        assert len(poset.covers) == 2
        assert {c.text() for c in poset.minimal_elements()} == {"++--", "--++"}
        assert [c.text() for c in poset.maximal_elements()] == ["1212"]

    def test_n3_rank_sizes(self):
        assert weak_order_poset(3).rank_sizes() == [4, 3, 2, 1]

    def test_n4_rank_sizes_pinned(self):
        assert weak_order_poset(4).rank_sizes() == [8, 8, 7, 7, 4, 3, 1]

    @pytest.mark.parametrize("n", range(1, 6))
    def test_extremes(self, n):
        poset = weak_order_poset(n)
        assert poset.maximal_elements() == [maximal_clan(n)]
        minimal = poset.minimal_elements()
        assert len(minimal) == 2 ** (n - 1)
        assert all(c.is_matchless() for c in minimal)

    def test_covers_are_graded(self):
        poset = weak_order_poset(4)
        lengths = poset.lengths()
        for lower, upper, _ in poset.covers:
            assert lengths[upper] == lengths[lower] + 1

    def test_dot_output_mentions_every_node(self):
        poset = weak_order_poset(2)
        dot = poset.to_dot()
        assert dot.startswith("digraph")
        for clan in poset.nodes:
            assert clan.text() in dot

    def test_json_round_trippable(self):
        data = weak_order_poset(2).to_json_dict()
        assert data["n"] == 2
        assert len(data["nodes"]) == 3
        assert all({"lower", "upper", "reflection"} <= set(e) for e in data["covers"])


class TestRankPolynomial:
    def test_seeds(self):
        assert rank_poly_recurrence(1).coeffs == (1,)
        assert rank_poly_recurrence(2).coeffs == (2, 1)
        assert str(rank_poly_recurrence(2)) == "t+2"

    def test_one_recurrence_step(self):
        assert str(rank_poly_recurrence(3)) == "t^3+2t^2+3t+4"

    def test_pinned_a4(self):
        assert str(rank_poly_recurrence(4)) == "t^6+3t^5+4t^4+7t^3+7t^2+8t+8"

    @pytest.mark.parametrize("n", range(1, 7))
    def test_recurrence_matches_poset(self, n):
        assert rank_poly_recurrence(n).coeffs == rank_polynomial(weak_order_poset(n)).coeffs

    @pytest.mark.parametrize("n", range(1, 9))
    def test_degree_and_total(self, n):
        poly = rank_poly_recurrence(n)
        assert poly.degree == n * (n - 1) // 2
        assert poly.total() == sum(poly.coeffs)


class TestMaximalClan:
    def test_small_cases(self):
        assert maximal_clan(1).text() == "+-"
        assert maximal_clan(2).text() == "1212"
        assert maximal_clan(3).text() == "12+-12"
        assert maximal_clan(4).text() == "12343412"

    @pytest.mark.parametrize("n", range(1, 8))
    def test_unique_longest_by_exhaustion(self, n):
        top = n * (n - 1) // 2
        longest = [c for c in enumerate_diii(n) if clan_length(c).length == top]
        assert longest == [maximal_clan(n)]
