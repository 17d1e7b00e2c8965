from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_intersection_sequences, game_grid_bounds, set_systems
from kelley import (
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    VertexFunctional,
    intersection_number,
    intersection_number_ideal,
    intersection_number_order,
    intersection_number_pi,
    sequence_average,
)
from kelley.errors import EmptyFamily, EmptySequence, GroundSetMismatch, ImproperIdeal
from kelley.intersection import check_report

G2 = GroundSet.of_size(2)
G3 = GroundSet.of_size(3)
TRIANGLE = SetSystem.from_labels(G3, [["1", "2"], ["2", "3"], ["1", "3"]])


class TestSequenceAverage:
    def test_two_sets(self):
        s = sequence_average(G3, [0b011, 0b110])
        assert s.values == (Fraction(1, 2), 1, Fraction(1, 2))

    def test_single_set_is_indicator(self):
        assert sequence_average(G3, [0b101]).values == (1, 0, 1)

    def test_triangle(self):
        assert sequence_average(G3, list(TRIANGLE.family)).values == (Fraction(2, 3),) * 3

    def test_empty(self):
        with pytest.raises(EmptySequence):
            sequence_average(G3, [])

    def test_order_irrelevant(self):
        assert sequence_average(G3, [1, 3, 6]) == sequence_average(G3, [6, 1, 3])


class TestPlain:
    def test_disjoint_singletons(self):
        s = SetSystem(G3, [1, 2, 4])
        assert intersection_number(s).value == Fraction(1, 3)

    def test_triangle(self):
        # oracle: sequences of length 3 reach 2/3, none shorter does better
        assert brute_intersection_sequences(G3, TRIANGLE.family, 3) == Fraction(2, 3)
        assert brute_intersection_sequences(G3, TRIANGLE.family, 2) == 1
        r = intersection_number(TRIANGLE)
        assert r.value == Fraction(2, 3)
        assert r.optimal_measure == Measure.uniform(G3)
        assert r.witness_sequence == {0: 1, 1: 1, 2: 1}

    def test_single_set(self):
        assert intersection_number(SetSystem(G3, [0b010])).value == 1

    def test_empty_family(self):
        with pytest.raises(EmptyFamily):
            intersection_number(SetSystem(G3, []))

    def test_report_certificates(self):
        assert check_report(intersection_number(TRIANGLE))


@settings(max_examples=120, deadline=None)
@given(set_systems())
def test_certificates_hold(system):
    r = intersection_number(system)
    assert check_report(r)
    assert r.optimal_measure.is_probability()
    assert Fraction(1, len(system.family)) <= r.value <= 1


@settings(max_examples=60, deadline=None)
@given(set_systems(max_atoms=3, max_sets=3))
def test_matches_ordered_sequence_brute_force(system):
    r = intersection_number(system)
    assert brute_intersection_sequences(system.ground, system.family, r.witness_length) == r.value


@settings(max_examples=80, deadline=None)
@given(set_systems(), st.lists(st.integers(1, 15), max_size=3))
def test_monotone_in_family(system, extra):
    g = system.ground
    bigger = SetSystem(g, list(system.family) + [e & g.full for e in extra if e & g.full])
    assert intersection_number(bigger).value <= intersection_number(system).value


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_k_disjoint_sets(k):
    g = GroundSet.of_size(k + 1)
    # disjoint blocks, last atom joins the first block
    blocks = [1 << i for i in range(k)]
    blocks[0] |= 1 << k
    assert intersection_number(SetSystem(g, blocks)).value == Fraction(1, k)
    # adding more sets never raises the value above 1/k
    more = SetSystem(g, blocks + [g.full, 0b11])
    assert intersection_number(more).value <= Fraction(1, k)


class TestPi:
    def test_two_point_masses(self):
        pi = VertexFunctional.point_masses(G2)
        M = [[1, 0], [0, 1]]
        assert game_grid_bounds(M, 10) == (Fraction(1, 2), Fraction(1, 2))
        r = intersection_number_pi(pi, SetSystem(G2, [0b01, 0b10]))
        assert r.value == Fraction(1, 2)
        assert check_report(r, pi)

    def test_linear_functional_gives_min(self):
        m = Measure(G3, ["1/6", "1/3", "1/2"])
        pi = VertexFunctional(G3, [m])
        family = SetSystem(G3, [0b011, 0b110, 0b100])
        assert intersection_number_pi(pi, family).value == min(m(b) for b in family.family)

    def test_single_column(self):
        pi = VertexFunctional.point_masses(G2)
        assert intersection_number_pi(pi, SetSystem(G2, [0b10])).value == 1

    def test_ground_mismatch(self):
        with pytest.raises(GroundSetMismatch):
            intersection_number_pi(VertexFunctional.point_masses(G2), TRIANGLE)

    @settings(max_examples=80, deadline=None)
    @given(set_systems())
    def test_point_mass_functional_is_plain(self, system):
        pi = VertexFunctional.point_masses(system.ground)
        assert intersection_number_pi(pi, system).value == intersection_number(system).value

    @settings(max_examples=60, deadline=None)
    @given(set_systems(max_atoms=3), st.data())
    def test_pi_certificates(self, system, data):
        g = system.ground
        k = data.draw(st.integers(1, 3))
        vertices = []
        for _ in range(k):
            w = data.draw(st.lists(st.integers(0, 4), min_size=len(g), max_size=len(g)))
            vertices.append(Measure(g, w))
        pi = VertexFunctional(g, vertices)
        r = intersection_number_pi(pi, system)
        assert check_report(r, pi)
        # the optimal measure is π-dominated on every set
        for a in g.subsets():
            assert r.optimal_measure(a) <= pi.of_set(a)


class TestIdealVariants:
    def test_restriction_to_disjoint_pair(self):
        ideal = Ideal(G3, 0b100)
        family = SetSystem(G3, [0b101, 0b110])
        assert intersection_number_ideal(ideal, family).value == Fraction(1, 2)
        assert intersection_number_order(ideal, family).value == Fraction(1, 2)

    def test_trivial_ideal(self):
        ideal = Ideal.trivial(G3)
        assert intersection_number_ideal(ideal, TRIANGLE).value == Fraction(2, 3)
        assert intersection_number_order(ideal, TRIANGLE).value == Fraction(2, 3)

    def test_vanishing_member(self):
        ideal = Ideal(G3, 0b100)
        family = SetSystem(G3, [0b100])
        assert intersection_number_ideal(ideal, family).value == 0
        assert intersection_number_order(ideal, family).value == 0

    def test_order_surviving_point(self):
        ideal = Ideal(G2, 0b10)
        assert intersection_number_order(ideal, SetSystem(G2, [0b11])).value == 1
        assert intersection_number_order(ideal, SetSystem(G2, [0b01, 0b10])).value == 0

    def test_improper(self):
        with pytest.raises(ImproperIdeal):
            intersection_number_ideal(Ideal(G2, 0b11), SetSystem(G2, [1]))
        with pytest.raises(ImproperIdeal):
            intersection_number_order(Ideal(G2, 0b11), SetSystem(G2, [1]))

    def test_optimal_measure_lives_off_generator(self):
        ideal = Ideal(G3, 0b100)
        r = intersection_number_ideal(ideal, SetSystem(G3, [0b101, 0b110]))
        assert r.optimal_measure(0b100) == 0
        assert r.optimal_measure.is_probability()

    def test_order_by_value_grid(self):
        # inf over representatives g = f on N*ᶜ, g free on N*, of sup g:
        # enumerate g on a value grid for the witness f and compare
        ideal = Ideal(G3, 0b100)
        family = SetSystem(G3, [0b101, 0b110])
        r = intersection_number_order(ideal, family)
        f = sequence_average(G3, r.witness_sets())
        grid = [Fraction(k, 4) for k in range(-8, 9)]
        best = min(max(f[0], f[1], v) for v in grid)
        assert best == r.value


@settings(max_examples=100, deadline=None)
@given(set_systems(), st.integers(0, 15))
def test_order_equals_ideal(system, gen):
    g = system.ground
    gen &= g.full
    if gen == g.full:
        gen = 0
    ideal = Ideal(g, gen)
    assert (
        intersection_number_order(ideal, system).value
        == intersection_number_ideal(ideal, system).value
    )
