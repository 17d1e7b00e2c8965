"""Finite ground sets, subsets, measures, ideals and vertex functionals.

Every algebra handled by the library is the power set of a finite list of
atoms, and a subset is an ``int`` bitmask over those atoms (bit ``i`` set
means atom ``i`` belongs to the set).  Scalars are :class:`fractions.Fraction`
throughout; nothing is ever rounded.

>>> g = GroundSet(["1", "2", "3"])
>>> m = Measure.uniform(g)
>>> m(g.mask(["1", "2"]))
Fraction(2, 3)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    EmptySetInFamily,
    GroundSetMismatch,
    NotDownClosed,
    NotPrincipalComplete,
    NotProper,
    NotUnionClosed,
    ZeroConditioningSet,
)

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_rational(value) -> Fraction:
    """Coerce ``int``, ``Fraction`` or a ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact computations.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ValueError(f"not a rational: {value!r}")
        num, den = match.group(1), match.group(2)
        if den is not None and int(den) == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den is not None else 1)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` text; integers print without a denominator."""
    return str(Fraction(value))


def common_denominator(values: Iterable[Fraction]) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class GroundSet:
    """An ordered, finite list of distinct atom labels."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable):
        labels = tuple(str(label) for label in labels)
        if not labels:
            raise ValueError("a ground set needs at least one atom")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate atom labels in {labels!r}")
        self.labels = labels
        self._index = {label: i for i, label in enumerate(labels)}

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Atoms labelled ``"1" .. "n"``."""
        return cls(str(i) for i in range(1, n + 1))

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)!r})"

    @property
    def full(self) -> int:
        return (1 << len(self.labels)) - 1

    def index(self, label) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown atom label {label!r}") from None

    def mask(self, labels: Iterable) -> int:
        out = 0
        for label in labels:
            out |= 1 << self.index(label)
        return out

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in bits(mask)]

    def check_subset(self, mask: int) -> int:
        if mask < 0 or mask & ~self.full:
            raise ValueError(f"bitmask {mask:#b} has bits outside {self!r}")
        return mask

    def subsets(self, *, nonempty: bool = True) -> range:
        """Every subset as a bitmask, in increasing numeric order."""
        return range(1 if nonempty else 0, self.full + 1)

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of(mask)) + "}"


def _same_ground(a: GroundSet, b: GroundSet):
    if a != b:
        raise GroundSetMismatch(f"{a!r} != {b!r}")


@dataclass(frozen=True)
class SetSystem:
    """A ground set together with a family of nonempty subsets.

    Duplicate members are dropped (first occurrence wins), since they change
    neither intersection numbers nor coverage.  The family may be empty; the
    intersection-number routines reject that case themselves.
    """

    ground: GroundSet
    family: tuple[int, ...]

    def __init__(self, ground: GroundSet, family: Iterable[int]):
        seen = {}
        for mask in family:
            ground.check_subset(mask)
            if mask == 0:
                raise EmptySetInFamily("the empty set cannot belong to a family")
            seen.setdefault(mask, None)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "family", tuple(seen))

    @classmethod
    def from_labels(cls, ground: GroundSet, sets: Iterable[Iterable]) -> "SetSystem":
        return cls(ground, [ground.mask(s) for s in sets])

    def __len__(self):
        return len(self.family)

    def __iter__(self):
        return iter(self.family)

    def __repr__(self):
        sets = ", ".join(self.ground.format_set(b) for b in self.family)
        return f"SetSystem([{sets}])"


@dataclass(frozen=True)
class SimpleFunction:
    """A rational-valued function on the atoms of a ground set."""

    ground: GroundSet
    values: tuple[Fraction, ...]

    def __init__(self, ground: GroundSet, values: Iterable):
        values = tuple(to_rational(v) for v in values)
        if len(values) != len(ground):
            raise ValueError(
                f"expected {len(ground)} values, got {len(values)}"
            )
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "values", values)

    @classmethod
    def _make(cls, ground, values):
        # trusted fast path: values already a tuple of Fractions of the right length
        obj = object.__new__(cls)
        object.__setattr__(obj, "ground", ground)
        object.__setattr__(obj, "values", values)
        return obj

    @classmethod
    def from_dict(cls, ground: GroundSet, mapping: Mapping) -> "SimpleFunction":
        values = [Fraction(0)] * len(ground)
        for label, v in mapping.items():
            values[ground.index(label)] = to_rational(v)
        return cls(ground, values)

    @classmethod
    def indicator(cls, ground: GroundSet, mask: int) -> "SimpleFunction":
        return cls(ground, [(mask >> i) & 1 for i in range(len(ground))])

    @classmethod
    def constant(cls, ground: GroundSet, c) -> "SimpleFunction":
        return cls(ground, [c] * len(ground))

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __add__(self, other):
        if isinstance(other, SimpleFunction):
            if other.ground is not self.ground:
                _same_ground(self.ground, other.ground)
            return SimpleFunction._make(
                self.ground, tuple(a + b for a, b in zip(self.values, other.values))
            )
        c = to_rational(other)
        return SimpleFunction._make(self.ground, tuple(a + c for a in self.values))

    __radd__ = __add__

    def __neg__(self):
        return SimpleFunction._make(self.ground, tuple(-a for a in self.values))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SimpleFunction):
            if other.ground is not self.ground:
                _same_ground(self.ground, other.ground)
            return SimpleFunction._make(
                self.ground, tuple(a * b for a, b in zip(self.values, other.values))
            )
        c = to_rational(other)
        return SimpleFunction._make(self.ground, tuple(a * c for a in self.values))

    __rmul__ = __mul__

    def minimum(self, c) -> "SimpleFunction":
        """Pointwise ``f ∧ c``."""
        c = to_rational(c)
        return SimpleFunction._make(self.ground, tuple(min(a, c) for a in self.values))

    def sup(self, mask: int | None = None) -> Fraction:
        """Maximum over the atoms in ``mask`` (all atoms by default)."""
        if mask is None:
            return max(self.values)
        return max(self.values[i] for i in bits(mask))

    def below(self, other: "SimpleFunction") -> int:
        """Bitmask of ``{ω : self(ω) < other(ω)}``."""
        if other.ground is not self.ground:
            _same_ground(self.ground, other.ground)
        return sum(1 << i for i, (a, b) in enumerate(zip(self.values, other.values)) if a < b)


@dataclass(frozen=True)
class Measure:
    """Nonnegative point masses on atoms; a finitely additive set function."""

    ground: GroundSet
    masses: tuple[Fraction, ...]

    def __init__(self, ground: GroundSet, masses: Iterable):
        masses = tuple(to_rational(v) for v in masses)
        if len(masses) != len(ground):
            raise ValueError(f"expected {len(ground)} masses, got {len(masses)}")
        if any(v < 0 for v in masses):
            raise ValueError(f"negative mass in {masses}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "masses", masses)

    @classmethod
    def from_dict(cls, ground: GroundSet, mapping: Mapping) -> "Measure":
        masses = [Fraction(0)] * len(ground)
        for label, v in mapping.items():
            masses[ground.index(label)] = to_rational(v)
        return cls(ground, masses)

    @classmethod
    def point_mass(cls, ground: GroundSet, i: int, weight=1) -> "Measure":
        masses = [0] * len(ground)
        masses[i] = weight
        return cls(ground, masses)

    @classmethod
    def uniform(cls, ground: GroundSet, mask: int | None = None) -> "Measure":
        """Uniform probability on ``mask`` (the whole ground set by default)."""
        mask = ground.full if mask is None else ground.check_subset(mask)
        if mask == 0:
            raise ZeroConditioningSet("uniform measure on the empty set")
        share = Fraction(1, popcount(mask))
        return cls(ground, [share if (mask >> i) & 1 else 0 for i in range(len(ground))])

    def __call__(self, mask: int) -> Fraction:
        return sum((self.masses[i] for i in bits(mask)), Fraction(0))

    def integrate(self, f: SimpleFunction | Sequence) -> Fraction:
        values = f.values if isinstance(f, SimpleFunction) else f
        return sum((m * v for m, v in zip(self.masses, values) if m), Fraction(0))

    @property
    def total(self) -> Fraction:
        return sum(self.masses, Fraction(0))

    @property
    def support(self) -> int:
        out = 0
        for i, v in enumerate(self.masses):
            if v:
                out |= 1 << i
        return out

    def is_probability(self) -> bool:
        return self.total == 1

    def is_strictly_positive(self) -> bool:
        return all(self.masses)

    def scaled(self, c) -> "Measure":
        c = to_rational(c)
        return Measure(self.ground, [v * c for v in self.masses])

    def normalized(self) -> "Measure":
        total = self.total
        if total == 0:
            raise ZeroConditioningSet("cannot normalize the zero measure")
        return self.scaled(1 / total)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.ground.labels, self.masses))

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in self.as_dict().items())
        return f"Measure({{{body}}})"


def mixture(measures: Sequence[Measure], weights: Sequence) -> Measure:
    """The measure ``Σ weights[i] · measures[i]``."""
    if not measures:
        raise ValueError("empty mixture")
    ground = measures[0].ground
    masses = [Fraction(0)] * len(ground)
    for m, w in zip(measures, weights, strict=True):
        _same_ground(ground, m.ground)
        w = to_rational(w)
        for i, v in enumerate(m.masses):
            masses[i] += w * v
    return Measure(ground, masses)


@dataclass(frozen=True)
class Ideal:
    """A principal ideal of subsets: ``A ∈ 𝓝`` iff ``A ⊆ generator``."""

    ground: GroundSet
    generator: int

    def __post_init__(self):
        self.ground.check_subset(self.generator)

    @classmethod
    def trivial(cls, ground: GroundSet) -> "Ideal":
        """The ideal ``{∅}``."""
        return cls(ground, 0)

    def __contains__(self, mask: int) -> bool:
        return mask & ~self.generator == 0

    @property
    def proper(self) -> bool:
        return self.generator != self.ground.full

    @property
    def complement(self) -> int:
        return self.ground.full & ~self.generator

    def members(self) -> list[int]:
        return sorted(submasks(self.generator))

    def __repr__(self):
        return f"Ideal(generator={self.ground.format_set(self.generator)})"


@dataclass(frozen=True)
class VertexFunctional:
    """The monotone sublinear functional ``π(f) = max_i m_i(f)``."""

    ground: GroundSet
    vertices: tuple[Measure, ...]

    def __init__(self, ground: GroundSet, vertices: Iterable[Measure]):
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError("a vertex functional needs at least one vertex")
        for m in vertices:
            _same_ground(ground, m.ground)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "vertices", vertices)

    @classmethod
    def point_masses(cls, ground: GroundSet) -> "VertexFunctional":
        """``π(f) = max f``, the functional behind the plain intersection number."""
        return cls(ground, [Measure.point_mass(ground, i) for i in range(len(ground))])

    def __call__(self, f: SimpleFunction | Sequence) -> Fraction:
        return max(m.integrate(f) for m in self.vertices)

    def of_set(self, mask: int) -> Fraction:
        """``π(1_A)``."""
        return max(m(mask) for m in self.vertices)

    def null_ideal(self) -> Ideal:
        """``Neg(π)``: the sets every vertex gives zero mass."""
        support = 0
        for m in self.vertices:
            support |= m.support
        return Ideal(self.ground, self.ground.full & ~support)


def restrict_measure(m: Measure, mask: int) -> Measure:
    """Conditional probability ``m_A(B) = m(A ∩ B) / m(A)``."""
    m.ground.check_subset(mask)
    mass = m(mask)
    if mass == 0:
        raise ZeroConditioningSet(
            f"m({m.ground.format_set(mask)}) = 0, cannot condition on it"
        )
    return Measure(
        m.ground,
        [v / mass if (mask >> i) & 1 else 0 for i, v in enumerate(m.masses)],
    )


def null_ideal(m: Measure) -> Ideal:
    """``Neg(m)``, stored by its largest member: the zero-mass atoms."""
    return Ideal(m.ground, m.ground.full & ~m.support)


def ideal_validate(ground: GroundSet, explicit: Iterable[int]) -> Ideal:
    """Check that ``explicit`` is a proper ideal of subsets and return it.

    The collection must contain ∅, be closed under subsets and unions and
    exclude the whole ground set.  Raises a :class:`~kelley.errors.NotAnIdeal`
    subclass carrying a witness on failure.
    """
    members = {ground.check_subset(a) for a in explicit}
    for a in sorted(members):
        for b in submasks(a):
            if b not in members:
                raise NotDownClosed(
                    f"{ground.format_set(b)} ⊆ {ground.format_set(a)} is missing",
                    (a, b),
                )
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            if a | b not in members:
                raise NotUnionClosed(
                    f"{ground.format_set(a)} ∪ {ground.format_set(b)} is missing",
                    (a, b),
                )
    if ground.full in members:
        raise NotProper("the collection contains the whole ground set", (ground.full,))
    generator = 0
    for a in members:
        generator |= a
    for a in submasks(generator):
        if a not in members:
            raise NotPrincipalComplete(
                f"{ground.format_set(a)} lies below the union but is missing", (a,)
            )
    return Ideal(ground, generator)


@dataclass(frozen=True)
class AtomPartition:
    """Atoms of the algebra generated by some subsets of a base set.

    ``blocks[k]`` is the bitmask (over the base) of atom ``k`` and
    ``atom_of[i]`` is the atom holding base point ``i``.
    """

    base: GroundSet
    ground: GroundSet
    blocks: tuple[int, ...]
    atom_of: tuple[int, ...]

    def to_atoms(self, mask: int) -> int:
        """Translate a base subset that is a union of blocks into an atom mask."""
        out = 0
        for k, block in enumerate(self.blocks):
            if mask & block:
                if mask & block != block:
                    raise ValueError(
                        f"{self.base.format_set(mask)} splits atom "
                        f"{self.base.format_set(block)}"
                    )
                out |= 1 << k
        return out

    def from_atoms(self, mask: int) -> int:
        out = 0
        for k in bits(mask):
            out |= self.blocks[k]
        return out


def atoms_from_generators(base: GroundSet, generators: Iterable[int]) -> AtomPartition:
    """Coarsest partition of ``base`` that every generator is a union of."""
    generators = [base.check_subset(g) for g in generators]
    blocks: dict[tuple, int] = {}
    for i in range(len(base)):
        signature = tuple((g >> i) & 1 for g in generators)
        blocks[signature] = blocks.get(signature, 0) | (1 << i)
    # dicts keep insertion order, which is ordered by each block's first point
    block_list = tuple(blocks.values())
    atom_of = [0] * len(base)
    for k, block in enumerate(block_list):
        for i in bits(block):
            atom_of[i] = k
    labels = ["+".join(base.labels_of(block)) for block in block_list]
    return AtomPartition(base, GroundSet(labels), block_list, tuple(atom_of))
