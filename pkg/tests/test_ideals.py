import itertools
import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from compedge.graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    enumerate_labeled_graphs,
    matching_graph,
    path_graph,
    with_isolated,
)
from compedge.ideals import (
    BigDegreeCase,
    MonomialIdeal,
    classify_big_degree,
    colon,
    colon_ideal,
    complementary_edge_ideal,
    edge_ideal,
    graded_component,
    ideal,
    intersect,
    localize,
    membership_box,
    minimal_primes_squarefree,
    multiply,
    parse_ideal,
    power,
    prime_power,
    symbolic_power,
    unit_ideal,
    zero_ideal,
)
from compedge.monomials import Monomial, divisors, one, parse_monomial


def I_(text, ambient):
    return parse_ideal(text, ambient)


def paw():
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


small_ideals = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.tuples(*([st.integers(0, 3)] * n)).map(Monomial),
        min_size=1,
        max_size=6,
    ).map(lambda gens: ideal(gens, n))
)


class TestMinimalize:
    def test_drops_multiples(self):
        assert I_("(x1, x1*x2)", 2) == I_("(x1)", 2)

    def test_keeps_antichain(self):
        assert I_("(x1*x2, x2*x3, x1*x2*x3)", 3) == I_("(x1*x2, x2*x3)", 3)

    def test_one_wins(self):
        assert I_("(1, x1)", 2) == unit_ideal(2)

    def test_canonical_order(self):
        I = ideal([parse_monomial(s, 3) for s in ["x1*x2", "x3", "x2^2"]], 3)
        assert [str(g) for g in I.generators] == ["x3", "x2^2", "x1*x2"]

    @given(small_ideals)
    def test_generators_form_antichain(self, I):
        for g, h in itertools.permutations(I.generators, 2):
            assert not g.divides(h)


class TestMembership:
    def test_examples(self):
        I = I_("(x1*x2, x3*x4)", 4)
        assert parse_monomial("x1*x2*x3", 4) in I
        assert parse_monomial("x1*x3", 4) not in I
        assert one(4) not in zero_ideal(4)

    def test_unit_contains_everything(self):
        assert one(2) in unit_ideal(2)

    def test_membership_box_agrees_with_divides(self):
        I = I_("(x1^2, x2*x3)", 3)
        bound = parse_monomial("x1^2*x2*x3^2", 3)
        box = membership_box(I, bound)
        for u in divisors(bound):
            assert box[u.exponents] == (u in I)


class TestProductPower:
    def test_binomial_square(self):
        assert power(I_("(x1, x2)", 2), 2) == I_("(x1^2, x1*x2, x2^2)", 2)

    def test_matching_square(self):
        I = I_("(x1*x2, x3*x4)", 4)
        assert power(I, 2) == I_("(x1^2*x2^2, x1*x2*x3*x4, x3^2*x4^2)", 4)

    def test_unit_is_identity(self):
        I = I_("(x1*x2, x3)", 3)
        assert multiply(I, unit_ideal(3)) == I
        assert power(I, 0) == unit_ideal(3)
        assert power(I, 1) == I

    @given(small_ideals, st.integers(1, 2), st.integers(1, 2))
    def test_power_additivity(self, I, a, b):
        assert multiply(power(I, a), power(I, b)) == power(I, a + b)


class TestIntersect:
    def test_principal(self):
        assert intersect(I_("(x1)", 2), I_("(x2)", 2)) == I_("(x1*x2)", 2)

    def test_two_primes(self):
        got = intersect(I_("(x1, x2)", 3), I_("(x2, x3)", 3))
        assert got == I_("(x2, x1*x3)", 3)

    def test_containment(self):
        assert intersect(I_("(x1^2)", 1), I_("(x1)", 1)) == I_("(x1^2)", 1)

    @given(small_ideals, small_ideals)
    def test_intersection_contained_in_both(self, I, J):
        if I.ambient != J.ambient:
            return
        meet = intersect(I, J)
        assert I.contains_ideal(meet) and J.contains_ideal(meet)


class TestColon:
    def test_gcd_formula(self):
        assert colon(I_("(x1*x2, x3*x4)", 4), parse_monomial("x1", 4)) == I_(
            "(x2, x3*x4)", 4
        )

    def test_power_colon(self):
        assert colon(I_("(x1^2, x1*x2, x2^2)", 2), parse_monomial("x1", 2)) == I_(
            "(x1, x2)", 2
        )

    def test_self_colon_is_unit(self):
        I = I_("(x1*x2)", 2)
        assert colon(I, parse_monomial("x1*x2", 2)) == unit_ideal(2)
        assert colon_ideal(I, I) == unit_ideal(2)

    @given(small_ideals, st.tuples(*([st.integers(0, 2)] * 3)))
    def test_colon_contains_ideal(self, I, exps):
        if I.ambient != 3:
            return
        u = Monomial(exps)
        Q = colon(I, u)
        assert Q.contains_ideal(I)
        # (I : u) * (u) is inside I
        for q in Q.generators:
            assert q * u in I


class TestLocalization:
    def test_unit_when_generator_dies(self):
        I = complementary_edge_ideal(path_graph(3))  # (x3, x1)
        assert localize(I, [0, 1]) == unit_ideal(2)

    def test_coordinate_projection(self):
        assert localize(I_("(x1*x2, x3*x4)", 4), [0, 2]) == I_("(x1, x2)", 2)

    def test_paw_example(self):
        # substitute x2, x3 -> 1 in I_c(paw) and minimalize
        I = complementary_edge_ideal(paw())
        assert localize(I, [0, 3]) == I_("(x1, x2)", 2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            localize(I_("(x1)", 2), [])

    def test_commutes_with_powers_on_census(self, edged_census):
        rng = random.Random(0)
        graphs = edged_census[4] + rng.sample(edged_census[5], 40)
        for g in graphs:
            I = complementary_edge_ideal(g)
            F = rng.sample(range(g.n), rng.randint(1, g.n))
            k = rng.randint(1, 3)
            assert localize(power(I, k), F) == power(localize(I, F), k)


class TestGraphIdealDictionary:
    def test_complementary_examples(self):
        assert complementary_edge_ideal(path_graph(3)) == I_("(x3, x1)", 3)
        assert complementary_edge_ideal(cycle_graph(4)) == I_(
            "(x3*x4, x2*x3, x1*x4, x1*x2)", 4
        )
        assert complementary_edge_ideal(matching_graph(2)) == I_("(x3*x4, x1*x2)", 4)

    def test_degenerate_graphs(self):
        assert complementary_edge_ideal(with_isolated(matching_graph(1), 0)).is_unit
        assert complementary_edge_ideal(Graph(3, frozenset())).is_zero

    def test_edge_ideal_examples(self):
        assert edge_ideal(path_graph(3)) == I_("(x1*x2, x2*x3)", 3)
        assert edge_ideal(complete_graph(3)) == I_("(x1*x2, x1*x3, x2*x3)", 3)
        assert edge_ideal(Graph(2, frozenset())).is_zero


class TestClassification:
    def test_case_complementary(self):
        cls = classify_big_degree(I_("(x3*x4, x1*x2)", 4))
        assert cls.case is BigDegreeCase.COMPLEMENTARY_EDGE
        assert cls.graph == matching_graph(2)

    def test_case_mixed(self):
        cls = classify_big_degree(I_("(x1*x2, x1*x3*x4)", 4))
        assert cls.case is BigDegreeCase.MIXED
        assert cls.graph == Graph.from_edges(4, [(2, 3)])
        assert cls.degree_n1_vars == {1}

    def test_case_veronese(self):
        cls = classify_big_degree(
            I_("(x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4)", 4)
        )
        assert cls.case is BigDegreeCase.MATROIDAL_VERONESE
        assert cls.veronese_degree == 3

    def test_not_applicable(self):
        cls = classify_big_degree(I_("(x1)", 4))
        assert cls.case is BigDegreeCase.NOT_APPLICABLE

    def test_rejects_non_squarefree(self):
        with pytest.raises(ValueError):
            classify_big_degree(I_("(x1^2)", 2))

    def test_recovers_census_graphs(self, edged_census):
        rng = random.Random(1)
        graphs = (
            edged_census[3] + edged_census[4] + rng.sample(edged_census[5], 100)
        )
        for g in graphs:
            cls = classify_big_degree(complementary_edge_ideal(g))
            assert cls.case is BigDegreeCase.COMPLEMENTARY_EDGE
            assert cls.graph == g


class TestGradedComponent:
    def test_mixed_component(self):
        assert graded_component(I_("(x1*x2, x1*x3*x4)", 4), 2) == I_("(x1*x2)", 4)

    def test_prime_component(self):
        I = I_("(x1, x3)", 3)
        assert graded_component(I, 1) == I

    def test_below_indeg_is_zero(self):
        assert graded_component(I_("(x1)", 2), 0).is_zero

    def test_component_generates_degree_j_part(self):
        I = I_("(x1*x2, x1*x3*x4)", 4)
        C = graded_component(I, 3)
        assert all(g.degree == 3 for g in C.generators)
        for u in divisors(parse_monomial("x1^3*x2^3*x3^3*x4^3", 4)):
            if u.degree == 3:
                assert (u in C) == (u in I)


class TestMu:
    def test_examples(self):
        I = I_("(x1*x2, x1*x3*x4)", 4)
        assert I.mu(2) == 1 and I.mu(3) == 1 and I.mu(4) == 0
        assert complementary_edge_ideal(cycle_graph(4)).mu(2) == 4
        assert zero_ideal(3).mu(2) == 0


class TestMinimalPrimes:
    def test_matching(self):
        got = minimal_primes_squarefree(I_("(x1*x2, x3*x4)", 4))
        assert got == {
            frozenset(s) for s in [{0, 2}, {0, 3}, {1, 2}, {1, 3}]
        }

    def test_prime_input(self):
        assert minimal_primes_squarefree(I_("(x1, x3)", 3)) == {frozenset({0, 2})}

    def test_triangle_clutter(self):
        got = minimal_primes_squarefree(I_("(x1*x2, x1*x3, x2*x3)", 3))
        assert got == {frozenset(s) for s in [{0, 1}, {0, 2}, {1, 2}]}

    def test_rejects_non_squarefree_and_trivial(self):
        with pytest.raises(ValueError):
            minimal_primes_squarefree(I_("(x1^2)", 1))
        with pytest.raises(ValueError):
            minimal_primes_squarefree(zero_ideal(2))


class TestSymbolicPower:
    def test_prime_ideal_symbolic_is_ordinary(self):
        I = I_("(x1, x3)", 3)
        assert symbolic_power(I, 2) == power(I, 2)

    def test_matching_second_power(self):
        I = complementary_edge_ideal(matching_graph(2))
        assert symbolic_power(I, 2) == power(I, 2)

    def test_paw_strict_containment(self):
        I = complementary_edge_ideal(paw())
        sym = symbolic_power(I, 2)
        ordinary = power(I, 2)
        assert sym != ordinary
        assert sym.contains_ideal(ordinary)

    def test_always_contains_ordinary_power(self, edged_census):
        rng = random.Random(2)
        for g in edged_census[4] + rng.sample(edged_census[5], 30):
            I = complementary_edge_ideal(g)
            for k in (2, 3):
                assert symbolic_power(I, k).contains_ideal(power(I, k))

    def test_prime_power_generators(self):
        P2 = prime_power({0, 2}, 2, 3)
        assert P2 == I_("(x1^2, x1*x3, x3^2)", 3)


class TestSerialization:
    def test_json_round_trip(self):
        I = complementary_edge_ideal(paw())
        data = json.loads(json.dumps(I.to_json_dict()))
        assert MonomialIdeal.from_json_dict(data) == I

    def test_str_forms(self):
        assert str(zero_ideal(2)) == "(0)"
        assert str(unit_ideal(2)) == "(1)"
        assert str(I_("(x2, x1^2)", 2)) == "(x2, x1^2)"

    @given(small_ideals)
    def test_parse_round_trip(self, I):
        assert parse_ideal(str(I), I.ambient) == I
