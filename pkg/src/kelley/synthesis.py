"""Decompositions into families of positive intersection number.

A measure yields threshold families ``{A : m(A) > ε}`` with intersection
number at least ε; conversely, a covering by families with positive
intersection numbers yields a strictly positive measure by mixing the
families' optimal measures.  The same two directions hold relative to a
sublinear functional π (with ``Neg(π)`` in place of ``{∅}``) and relative to
a proper ideal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .core import (
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    SimpleFunction,
    VertexFunctional,
    _same_ground,
    mixture,
    to_rational,
)
from .errors import (
    BadThreshold,
    BudgetTooLarge,
    DegenerateFunctional,
    ImproperIdeal,
    InvalidDecomposition,
    NormalizationImpossible,
)
from .intersection import (
    intersection_number,
    intersection_number_ideal,
    intersection_number_pi,
)
from .oracle import DEFAULT_CAP, multiset_count

PLAIN, PI, IDEAL = "plain", "pi", "ideal"
MODES = (PLAIN, PI, IDEAL)


def threshold_family(m: Measure, epsilon) -> SetSystem:
    """All nonempty ``A`` with ``m(A) > ε`` (strict), in bitmask order.

    The result may be empty, e.g. when ``ε >= total(m)``.
    """
    epsilon = to_rational(epsilon)
    if epsilon <= 0:
        raise BadThreshold(f"threshold must be positive, got {epsilon}")
    return SetSystem(m.ground, [a for a in m.ground.subsets() if m(a) > epsilon])


def threshold_family_pi(functional: VertexFunctional, epsilon) -> SetSystem:
    """All nonempty ``A`` with ``π(1_A) > ε``."""
    epsilon = to_rational(epsilon)
    if epsilon <= 0:
        raise BadThreshold(f"threshold must be positive, got {epsilon}")
    ground = functional.ground
    return SetSystem(ground, [a for a in ground.subsets() if functional.of_set(a) > epsilon])


@dataclass(frozen=True)
class Decomposition:
    """Families ``𝓑_1, 𝓑_2, …`` plus a null part given as an ideal.

    The default null part is the trivial ideal ``{∅}``.
    """

    ground: GroundSet
    families: tuple[SetSystem, ...]
    ideal: Ideal | None = None

    def __post_init__(self):
        object.__setattr__(self, "families", tuple(self.families))
        for fam in self.families:
            _same_ground(self.ground, fam.ground)
        if self.ideal is None:
            object.__setattr__(self, "ideal", Ideal.trivial(self.ground))
        _same_ground(self.ground, self.ideal.ground)


def threshold_decomposition(m: Measure) -> Decomposition:
    """Threshold families of ``m`` at ``ε = 1/2, 1/4, …``.

    Stops at the first ε below the smallest positive atom mass, so every
    set of positive measure lands in some family.  The null part is
    ``Neg(m)``.
    """
    positive = [v for v in m.masses if v > 0]
    if not positive:
        raise BadThreshold("the zero measure has no threshold families")
    smallest = min(positive)
    families = []
    eps = Fraction(1, 2) * m.total
    while True:
        fam = threshold_family(m, eps)
        if fam.family:
            families.append(fam)
        if eps < smallest:
            break
        eps /= 2
    null = Ideal(m.ground, m.ground.full & ~m.support)
    return Decomposition(m.ground, families, null)


@dataclass(frozen=True)
class DecompositionVerdict:
    verdict: bool
    mode: str
    values: tuple[Fraction, ...]
    uncovered: tuple[int, ...] = field(default=())
    null_part: Ideal | None = None


def _null_part(D: Decomposition, mode: str, functional: VertexFunctional | None) -> Ideal:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == PLAIN:
        return Ideal.trivial(D.ground)
    if mode == PI:
        if functional is None:
            raise ValueError("pi mode needs a functional")
        _same_ground(D.ground, functional.ground)
        return functional.null_ideal()
    if not D.ideal.proper:
        raise ImproperIdeal("the ideal part contains the whole ground set")
    return D.ideal


def _family_report(fam: SetSystem, mode, functional, null: Ideal):
    if mode == PLAIN:
        return intersection_number(fam)
    if mode == PI:
        return intersection_number_pi(functional, fam)
    return intersection_number_ideal(null, fam)


def verify_decomposition(
    D: Decomposition, mode: str = PLAIN, functional: VertexFunctional | None = None
) -> DecompositionVerdict:
    """Check coverage of every nonempty set and positivity of each family's number.

    In ``"plain"`` mode the null part is ``{∅}`` whatever ``D.ideal`` holds;
    in ``"pi"`` mode it is ``Neg(π)``; in ``"ideal"`` mode it is ``D.ideal``.
    An empty family counts as a failure with value 0.
    """
    null = _null_part(D, mode, functional)
    covered = set()
    for fam in D.families:
        covered.update(fam.family)
    uncovered = tuple(
        a for a in D.ground.subsets() if a not in covered and a not in null
    )
    values = []
    for fam in D.families:
        if not fam.family:
            values.append(Fraction(0))
            continue
        values.append(_family_report(fam, mode, functional, null).value)
    ok = bool(D.families) and not uncovered and all(v > 0 for v in values)
    return DecompositionVerdict(ok, mode, tuple(values), uncovered, null)


def mixture_weights(n: int) -> list[Fraction]:
    """``2^-k`` for ``k = 1..n``, rescaled to sum to one."""
    raw = [Fraction(1, 2**k) for k in range(1, n + 1)]
    total = sum(raw)
    return [w / total for w in raw]


def synthesize_strictly_positive(
    D: Decomposition, mode: str = PLAIN, functional: VertexFunctional | None = None
) -> Measure:
    """Mix the families' optimal measures with weights ``∝ 2^-n``.

    Each family's optimal measure gives all of its sets at least the family's
    intersection number, so the mixture charges every covered set.  In plain
    and ideal modes the result is a probability.  In ``"pi"`` mode it is a
    π-dominated mixture of vertices, which is a probability only when the
    vertices are.
    """
    verdict = verify_decomposition(D, mode, functional)
    if not verdict.verdict:
        raise InvalidDecomposition(
            f"decomposition fails: values={list(map(str, verdict.values))}, "
            f"uncovered={[D.ground.format_set(a) for a in verdict.uncovered]}"
        )
    null = verdict.null_part
    measures = [_family_report(fam, mode, functional, null).optimal_measure for fam in D.families]
    return mixture(measures, mixture_weights(len(measures)))


class NormalizedFunctional:
    """``π̂(f) = inf_a π(a + f) - a`` for a vertex functional π.

    ``__call__`` evaluates the one-dimensional infimum exactly by checking
    every crossing point of the lines ``a ↦ m_i(f) + a (total_i - 1)`` and
    the flat ends.  ``vertices`` holds the dual description: the
    probabilities in the convex hull of π's vertices, so that
    ``π̂(f) = max_j p_j(f)``.
    """

    def __init__(self, functional: VertexFunctional):
        totals = [m.total for m in functional.vertices]
        if not (max(totals) >= 1 >= min(totals)):
            raise NormalizationImpossible(
                f"need max total >= 1 >= min total, got totals {list(map(str, totals))}"
            )
        self.functional = functional
        self.ground = functional.ground
        self.slopes = [t - 1 for t in totals]
        self.vertices = self._probability_vertices(functional.vertices, totals)

    @staticmethod
    def _probability_vertices(vertices, totals):
        out = []
        for m, t in zip(vertices, totals):
            if t == 1:
                out.append(m)
        for (m1, t1), (m2, t2) in combinations(zip(vertices, totals), 2):
            if (t1 - 1) * (t2 - 1) < 0:
                lam = (1 - t2) / (t1 - t2)
                out.append(mixture([m1, m2], [lam, 1 - lam]))
        unique = []
        for m in out:
            if m not in unique:
                unique.append(m)
        return tuple(unique)

    def as_vertex_functional(self) -> VertexFunctional:
        return VertexFunctional(self.ground, self.vertices)

    def __call__(self, f: SimpleFunction | Sequence) -> Fraction:
        intercepts = [m.integrate(f) for m in self.functional.vertices]
        slopes = self.slopes
        lines = list(zip(slopes, intercepts))

        def envelope(a):
            return max(c + a * d for d, c in lines)

        candidates = []
        for (d1, c1), (d2, c2) in combinations(lines, 2):
            if d1 != d2:
                candidates.append(envelope((c2 - c1) / (d1 - d2)))
        flat = [c for d, c in lines if d == 0]
        # the envelope is eventually constant on a side where the steepest
        # slope is zero; on that side it equals the best flat line
        if flat and (max(slopes) == 0 or min(slopes) == 0):
            candidates.append(max(flat))
        return min(candidates)


def normalize_functional(functional: VertexFunctional) -> NormalizedFunctional:
    """Build ``π̂``; raises :class:`NormalizationImpossible` unless ``π(1) >= 1 >= -π(-1)``."""
    return NormalizedFunctional(functional)


@dataclass(frozen=True)
class ModulusBounds:
    """Certified bounds on the nonlinearity modulus of a vertex functional.

    ``lower`` comes from a finite search and is only a lower bound; ``witness``
    lists the indicator sets achieving it.
    """

    lower: Fraction
    upper: Fraction
    witness: tuple[int, ...] = ()
    searched: int = 0


def _ratio(functional, ground, sets):
    n = len(sets)
    avg = [Fraction(0)] * len(ground)
    for a in sets:
        for i in range(len(ground)):
            if (a >> i) & 1:
                avg[i] += Fraction(1, n)
    whole = functional(avg)
    if whole <= 0:
        return None
    parts = sum((functional.of_set(a) for a in sets), Fraction(0)) / n
    return (parts - whole) / whole


def nonlinearity_modulus_bounds(
    functional: VertexFunctional, search_len: int, *, cap: int = DEFAULT_CAP
) -> ModulusBounds:
    """Lower bound by searching uniform averages of up to ``search_len``
    nonempty indicators; upper bound ``#vertices - 1``.
    """
    if all(m.total == 0 for m in functional.vertices):
        raise DegenerateFunctional("every vertex is the zero measure")
    if search_len < 1:
        raise ValueError("search_len must be at least 1")
    ground = functional.ground
    subsets = list(ground.subsets())
    if multiset_count(len(subsets), search_len) > cap:
        raise BudgetTooLarge("modulus search exceeds the enumeration cap")
    best, witness, searched = Fraction(0), (), 0
    for length in range(1, search_len + 1):
        for sets in combinations_with_replacement(subsets, length):
            searched += 1
            r = _ratio(functional, ground, sets)
            if r is not None and r > best:
                best, witness = r, sets
    upper = Fraction(len(functional.vertices) - 1)
    return ModulusBounds(best, upper, tuple(witness), searched)
