import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import random_measure
from kelley import (
    GroundSet,
    Ideal,
    Measure,
    MeasureFamily,
    SimpleFunction,
    check_norming,
    common_null_ideal,
    halmos_savage_subset,
    mstar_vertices,
    null_ideal,
    weakly_dominating_measure,
)
from kelley.errors import ImproperIdeal

G2 = GroundSet.of_size(2)
G3 = GroundSet.of_size(3)


def point(g, i):
    return Measure.point_mass(g, i)


class TestFamily:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            MeasureFamily(G2, [])

    def test_rejects_non_probability(self):
        with pytest.raises(ValueError):
            MeasureFamily(G2, [Measure(G2, [1, 1])])


class TestDomination:
    def test_two_point_masses(self):
        fam = MeasureFamily(G3, [point(G3, 0), point(G3, 1)])
        assert common_null_ideal(fam).generator == 0b100
        cert = weakly_dominating_measure(fam)
        assert cert.measure.masses == (Fraction(1, 2), Fraction(1, 2), 0)
        assert cert.weakly_dominates and cert.null_generator == 0b100

    def test_mstar_of_point_mass_is_itself(self):
        fam = MeasureFamily(G3, [point(G3, 2)])
        assert mstar_vertices(fam) == [point(G3, 2)]

    def test_mstar_of_uniform(self):
        fam = MeasureFamily(G2, [Measure.uniform(G2)])
        assert mstar_vertices(fam) == [point(G2, 0), point(G2, 1), Measure.uniform(G2)]

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random_families(self, seed):
        rng = random.Random(seed)
        g = GroundSet.of_size(rng.randint(1, 5))
        fam = MeasureFamily(g, [random_measure(rng, g) for _ in range(rng.randint(1, 6))])
        cert = weakly_dominating_measure(fam)
        assert cert.weakly_dominates
        # brute force: a set is commonly null iff every member gives it zero
        for a in g.subsets(nonempty=False):
            common = all(m(a) == 0 for m in fam.members)
            assert common == (cert.measure(a) == 0) == (a in common_null_ideal(fam))
        assert sum(cert.mstar_coefficients.values()) == 1


class TestHalmosSavage:
    def test_redundant_member_dropped(self):
        fam = MeasureFamily(G3, [point(G3, 0), Measure(G3, ["1/2", "1/2", 0]), point(G3, 1)])
        assert halmos_savage_subset(fam) == [1]

    def test_ties_by_index(self):
        fam = MeasureFamily(G2, [point(G2, 0), point(G2, 1)])
        assert halmos_savage_subset(fam) == [0, 1]

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 10**6))
    def test_random(self, seed):
        rng = random.Random(seed)
        g = GroundSet.of_size(rng.randint(1, 6))
        fam = MeasureFamily(g, [random_measure(rng, g, zero_chance=0.6) for _ in range(rng.randint(1, 10))])
        idx = halmos_savage_subset(fam)
        sub = MeasureFamily(g, [fam.members[i] for i in idx])
        assert common_null_ideal(sub) == common_null_ideal(fam)
        assert len(idx) <= len(g) and len(set(idx)) == len(idx)


def _max_over_probabilities(f, generator):
    # oracle: the best probability off the generator is a point mass
    return max(v for i, v in enumerate(f.values) if not (generator >> i) & 1)


def _min_over_members(f, generator, full):
    members = [n for n in range(full + 1) if n & ~generator == 0]
    return min(max(v for i, v in enumerate(f.values) if not (n >> i) & 1) for n in members)


class TestNorming:
    def test_example(self):
        f = SimpleFunction(G3, [1, 5, -2])
        check = check_norming(Ideal(G3, 0b010), f)
        assert check.verdict and check.lhs == 1 == check.rhs

    def test_improper(self):
        with pytest.raises(ImproperIdeal):
            check_norming(Ideal(G2, 0b11), SimpleFunction(G2, [0, 0]))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.integers(0, 2**n - 2),
            st.lists(st.fractions(-5, 5, max_denominator=7), min_size=n, max_size=n),
        )
    ))
    def test_against_oracles(self, case):
        gen, values = case
        g = GroundSet.of_size(len(values))
        f = SimpleFunction(g, values)
        check = check_norming(Ideal(g, gen), f)
        assert check.verdict
        assert check.lhs == _max_over_probabilities(f, gen) == _min_over_members(f, gen, g.full)


def test_null_ideal_of_dominating_measure_is_intersection():
    g = GroundSet.of_size(4)
    members = [Measure(g, [1, 0, 0, 0]), Measure(g, [0, 1, 1, 0]).normalized()]
    fam = MeasureFamily(g, members)
    cert = weakly_dominating_measure(fam)
    inter = set(null_ideal(members[0]).members()) & set(null_ideal(members[1]).members())
    assert set(null_ideal(cert.measure).members()) == inter
    for a, b in combinations(sorted(inter), 2):
        assert a | b in inter
