from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import brute_atoms, measures
from kelley import (
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    SimpleFunction,
    VertexFunctional,
    atoms_from_generators,
    format_rational,
    ideal_validate,
    null_ideal,
    restrict_measure,
    to_rational,
)
from kelley.errors import (
    EmptySetInFamily,
    NotAnIdeal,
    NotDownClosed,
    NotPrincipalComplete,
    NotProper,
    NotUnionClosed,
    ZeroConditioningSet,
)

G2 = GroundSet.of_size(2)
G3 = GroundSet.of_size(3)
G4 = GroundSet.of_size(4)


class TestRational:
    @pytest.mark.parametrize(
        "text, expected",
        [("3", Fraction(3)), ("3/1", Fraction(3)), ("2/4", Fraction(1, 2)), ("-1/3", Fraction(-1, 3))],
    )
    def test_parse(self, text, expected):
        assert to_rational(text) == expected

    @pytest.mark.parametrize("bad", ["1/0", "1.5", "abc", "", "1/-2"])
    def test_parse_rejects(self, bad):
        with pytest.raises(ValueError):
            to_rational(bad)

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            to_rational(0.5)
        with pytest.raises(TypeError):
            to_rational(True)

    @given(st.fractions())
    def test_format_roundtrip(self, q):
        assert to_rational(format_rational(q)) == q
        assert format_rational(q) == format_rational(to_rational(format_rational(q)))

    def test_canonical_text(self):
        assert format_rational(Fraction(6, 4)) == "3/2"
        assert format_rational(Fraction(3, 1)) == "3"


class TestGroundSet:
    def test_masks(self):
        g = GroundSet(["a", "b", "c"])
        assert g.mask(["a", "c"]) == 0b101
        assert g.labels_of(0b110) == ["b", "c"]
        assert g.full == 0b111

    def test_duplicate_labels(self):
        with pytest.raises(ValueError):
            GroundSet(["a", "a"])

    def test_empty(self):
        with pytest.raises(ValueError):
            GroundSet([])

    def test_bits_beyond_n(self):
        with pytest.raises(ValueError):
            G2.check_subset(0b100)


class TestSetSystem:
    def test_dedup_keeps_first(self):
        s = SetSystem(G3, [0b011, 0b110, 0b011])
        assert s.family == (0b011, 0b110)

    def test_empty_member(self):
        with pytest.raises(EmptySetInFamily):
            SetSystem(G3, [0b1, 0])


class TestAtoms:
    def test_two_generators_split_everything(self):
        part = atoms_from_generators(G4, [G4.mask("12"), G4.mask("23")])
        assert sorted(part.blocks) == [0b0001, 0b0010, 0b0100, 0b1000]

    def test_single_split(self):
        part = atoms_from_generators(G4, [G4.mask("12")])
        assert sorted(part.blocks) == [0b0011, 0b1100]
        assert part.ground.labels == ("1+2", "3+4")

    def test_no_generators(self):
        part = atoms_from_generators(G2, [])
        assert part.blocks == (0b11,)
        assert part.atom_of == (0, 0)

    @given(st.integers(1, 6).flatmap(
        lambda n: st.tuples(st.just(n), st.lists(st.integers(0, 2**n - 1), max_size=4))
    ))
    def test_partition_matches_brute_force(self, case):
        n, gens = case
        base = GroundSet.of_size(n)
        part = atoms_from_generators(base, gens)
        assert sorted(part.blocks) == brute_atoms(n, gens)
        union = 0
        for block in part.blocks:
            assert union & block == 0
            union |= block
        assert union == base.full
        for gen in gens:
            assert part.from_atoms(part.to_atoms(gen)) == gen

    def test_to_atoms_rejects_split(self):
        part = atoms_from_generators(G4, [G4.mask("12")])
        with pytest.raises(ValueError):
            part.to_atoms(G4.mask("1"))


class TestMeasure:
    def test_negative_mass(self):
        with pytest.raises(ValueError):
            Measure(G2, [1, -1])

    @given(measures(G4, probability=False), st.integers(0, 15), st.integers(0, 15))
    def test_finite_additivity(self, m, a, b):
        b &= ~a
        assert m(a | b) == m(a) + m(b)

    def test_restrict_uniform(self):
        m = Measure.uniform(G4)
        assert restrict_measure(m, G4.mask("12")).masses == (Fraction(1, 2), Fraction(1, 2), 0, 0)

    def test_restrict_point_mass(self):
        d1 = Measure.point_mass(G2, 0)
        assert restrict_measure(d1, 0b01) == d1

    def test_restrict_to_atom(self):
        m = Measure(G2, ["1/4", "3/4"])
        assert restrict_measure(m, 0b10) == Measure.point_mass(G2, 1)

    def test_restrict_null_set(self):
        with pytest.raises(ZeroConditioningSet):
            restrict_measure(Measure.point_mass(G2, 0), 0b10)

    @given(measures(G4, probability=False))
    def test_restrict_to_whole_is_normalization(self, m):
        assert restrict_measure(m, G4.full) == m.normalized()

    @given(measures(G4), st.integers(1, 15), st.integers(0, 15))
    def test_restriction_formula(self, m, a, b):
        if m(a) > 0:
            ma = restrict_measure(m, a)
            assert ma(b) == m(a & b) / m(a)
            assert ma.is_probability()
            assert ma.support & ~a == 0


class TestNullIdeal:
    def test_point_mass(self):
        assert null_ideal(Measure.point_mass(G2, 0)).generator == 0b10

    def test_strictly_positive(self):
        assert null_ideal(Measure.uniform(G3)).generator == 0

    def test_partial(self):
        assert null_ideal(Measure(G3, ["1/2", "1/2", 0])).generator == 0b100

    def test_zero_measure_is_improper(self):
        assert not null_ideal(Measure(G2, [0, 0])).proper

    @given(measures(G4))
    def test_expanded_members_validate(self, m):
        ideal = null_ideal(m)
        assert ideal_validate(G4, ideal.members()) == ideal
        for a in G4.subsets(nonempty=False):
            assert (a in ideal) == (m(a) == 0)


class TestIdealValidate:
    def test_powerset_of_generator(self):
        ideal = ideal_validate(G3, [0, 0b001, 0b010, 0b011])
        assert ideal.generator == 0b011 and ideal.proper

    def test_union_missing(self):
        with pytest.raises(NotUnionClosed) as exc:
            ideal_validate(G2, [0, 0b01, 0b10])
        assert set(exc.value.witness) == {0b01, 0b10}

    def test_contains_whole_set(self):
        with pytest.raises(NotProper) as exc:
            ideal_validate(G2, [0, 0b01, 0b10, 0b11])
        assert exc.value.witness == (0b11,)

    def test_not_down_closed(self):
        with pytest.raises(NotDownClosed) as exc:
            ideal_validate(G3, [0, 0b011])
        a, b = exc.value.witness
        assert a == 0b011 and b & ~a == 0 and b in (0b001, 0b010)

    def test_empty_collection(self):
        with pytest.raises(NotPrincipalComplete) as exc:
            ideal_validate(G3, [])
        assert exc.value.witness == (0,)

    def test_missing_empty_set(self):
        with pytest.raises(NotAnIdeal):
            ideal_validate(G3, [0b001])


class TestIdealAndFunctional:
    def test_ideal_membership(self):
        ideal = Ideal(G3, 0b011)
        assert 0b001 in ideal and 0b100 not in ideal
        assert ideal.members() == [0, 1, 2, 3]
        assert not Ideal(G3, 0b111).proper

    def test_functional_is_max_of_vertices(self):
        pi = VertexFunctional(G2, [Measure(G2, [2, 0]), Measure(G2, [0, 1])])
        assert pi([1, 1]) == 2
        assert pi([-1, 3]) == 3
        assert pi.of_set(0b10) == 1

    def test_functional_null_ideal(self):
        pi = VertexFunctional(G3, [Measure.point_mass(G3, 0), Measure.point_mass(G3, 1)])
        assert pi.null_ideal().generator == 0b100

    @given(st.lists(st.integers(-4, 4), min_size=2, max_size=2),
           st.lists(st.integers(-4, 4), min_size=2, max_size=2),
           st.integers(0, 4))
    def test_functional_sublinear_monotone(self, f, g, c):
        pi = VertexFunctional(G2, [Measure(G2, [2, 0]), Measure(G2, [1, 1]), Measure(G2, [0, "1/2"])])
        fs, gs = SimpleFunction(G2, f), SimpleFunction(G2, g)
        assert pi(fs + gs) <= pi(fs) + pi(gs)
        assert pi(fs * c) == c * pi(fs)
        if all(a >= b for a, b in zip(f, g)):
            assert pi(fs) >= pi(gs)


class TestSimpleFunction:
    def test_arithmetic(self):
        f = SimpleFunction(G3, [1, -2, "1/2"])
        assert (f + 1).values == (2, -1, Fraction(3, 2))
        assert (2 * f).values == (2, -4, 1)
        assert f.minimum(0).values == (0, -2, 0)
        assert f.below(SimpleFunction.constant(G3, 0)) == 0b010
        assert f.sup() == 1 and f.sup(0b110) == Fraction(1, 2)

    def test_from_dict_defaults_to_zero(self):
        f = SimpleFunction.from_dict(G3, {"2": "5/2"})
        assert f.values == (0, Fraction(5, 2), 0)
