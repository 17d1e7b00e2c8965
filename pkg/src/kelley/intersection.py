"""Intersection numbers of finite set systems.

Each variant is the value of a zero-sum game whose columns are the family's
sets.  The column player's optimal mixture ``p`` gives the averaged indicator
``Σ p_B 1_B``; clearing denominators turns ``p`` into a finite sequence β with
``s(β) = Σ p_B 1_B``.  The row player's optimal mixture is a measure that
gives every set of the family at least the value.

Variants:

* :func:`intersection_number` -- rows are atoms, payoff ``1_B(ω)``.
* :func:`intersection_number_pi` -- rows are the vertices ``m_i`` of a
  :class:`~kelley.core.VertexFunctional`, payoff ``m_i(B)``.
* :func:`intersection_number_ideal` -- rows are the atoms outside the ideal's
  generator, payoff ``1_{B ∖ N*}(ω)``.
* :func:`intersection_number_order` -- rows are all atoms, payoff the masked
  representative ``1_B(ω) · 1[ω ∉ N*]`` of the a.s.-equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    GroundSet,
    Ideal,
    Measure,
    SetSystem,
    SimpleFunction,
    VertexFunctional,
    _same_ground,
    bits,
    common_denominator,
    mixture,
)
from .errors import EmptyFamily, EmptySequence, ImproperIdeal
from .lp import solve_matrix_game


@dataclass(frozen=True)
class IntersectionReport:
    """Value and both optimal witnesses of an intersection-number game.

    ``witness_sequence`` maps a family index to its multiplicity in β.
    """

    system: SetSystem
    value: Fraction
    optimal_measure: Measure
    optimal_weights: tuple[Fraction, ...]
    witness_sequence: dict[int, int]

    @property
    def witness_length(self) -> int:
        return sum(self.witness_sequence.values())

    def witness_sets(self) -> list[int]:
        """β written out as a list of bitmasks, family order, repeats adjacent."""
        return [
            self.system.family[i]
            for i, k in sorted(self.witness_sequence.items())
            for _ in range(k)
        ]


def sequence_average(ground: GroundSet, beta: Sequence[int]) -> SimpleFunction:
    """``s(β)(ω) = (1/|β|) Σ_{B∈β} 1_B(ω)``."""
    if not beta:
        raise EmptySequence("s(β) needs a nonempty sequence")
    counts = [0] * len(ground)
    for mask in beta:
        ground.check_subset(mask)
        for i in bits(mask):
            counts[i] += 1
    n = len(beta)
    return SimpleFunction(ground, [Fraction(k, n) for k in counts])


def witness_from_strategy(weights: Sequence) -> dict[int, int]:
    """Integer multiplicities ``weight × lcm(denominators)``, zero weights dropped."""
    weights = [Fraction(w) for w in weights]
    if any(w < 0 for w in weights) or sum(weights) != 1:
        raise ValueError(f"not a probability vector: {weights}")
    scale = common_denominator(weights)
    return {i: int(w * scale) for i, w in enumerate(weights) if w}


def _require_family(system: SetSystem):
    if not system.family:
        raise EmptyFamily("intersection numbers need a nonempty family")


def _report(system, value, measure, weights) -> IntersectionReport:
    return IntersectionReport(
        system=system,
        value=value,
        optimal_measure=measure,
        optimal_weights=tuple(weights),
        witness_sequence=witness_from_strategy(weights),
    )


def _incidence(system: SetSystem, rows: Sequence[int]):
    return [[Fraction((b >> i) & 1) for b in system.family] for i in rows]


def _measure_on_rows(ground: GroundSet, rows: Sequence[int], q) -> Measure:
    masses = [Fraction(0)] * len(ground)
    for i, w in zip(rows, q):
        masses[i] = w
    return Measure(ground, masses)


def intersection_number(system: SetSystem) -> IntersectionReport:
    """``I(𝓑) = inf_β sup_ω s(β)(ω)``, solved exactly as a matrix game.

    >>> g = GroundSet.of_size(3)
    >>> triangle = SetSystem.from_labels(g, [["1", "2"], ["2", "3"], ["1", "3"]])
    >>> intersection_number(triangle).value
    Fraction(2, 3)
    """
    _require_family(system)
    rows = range(len(system.ground))
    game = solve_matrix_game(_incidence(system, rows))
    measure = _measure_on_rows(system.ground, rows, game.row_strategy)
    return _report(system, game.value, measure, game.col_strategy)


def intersection_number_pi(functional: VertexFunctional, system: SetSystem) -> IntersectionReport:
    """``I_π(𝓑) = inf_β π(s(β))`` for ``π = max_i m_i``.

    The optimal measure is the mixture of vertices chosen by the row player;
    it is π-dominated and need not be a probability.
    """
    _require_family(system)
    _same_ground(functional.ground, system.ground)
    M = [[m(b) for b in system.family] for m in functional.vertices]
    game = solve_matrix_game(M)
    measure = mixture(functional.vertices, game.row_strategy)
    return _report(system, game.value, measure, game.col_strategy)


def _check_ideal(ideal: Ideal, system: SetSystem):
    _require_family(system)
    _same_ground(ideal.ground, system.ground)
    if not ideal.proper:
        raise ImproperIdeal("the ideal contains the whole ground set")


def intersection_number_ideal(ideal: Ideal, system: SetSystem) -> IntersectionReport:
    """``I_𝓝(𝓑) = inf_β inf_{N∈𝓝} sup_{ω∉N} s(β)(ω)``.

    The inner infimum is attained at the generator, so this is the plain
    intersection number of the family cut down to the generator's
    complement.  Members lying inside the generator vanish there and force
    the value to 0.
    """
    _check_ideal(ideal, system)
    rows = list(bits(ideal.complement))
    game = solve_matrix_game(_incidence(system, rows))
    measure = _measure_on_rows(system.ground, rows, game.row_strategy)
    return _report(system, game.value, measure, game.col_strategy)


def intersection_number_order(ideal: Ideal, system: SetSystem) -> IntersectionReport:
    """``I_*(𝓑) = inf_β inf_{g ~ s(β)} sup g`` for the a.s. order of an ideal.

    Two functions are equivalent when they agree off the generator.  For
    nonnegative ``f`` the class infimum of ``sup g`` is reached by the masked
    representative ``g = f · 1_{N*ᶜ}``, so every atom stays a row of the game
    and the rows inside the generator become zero.
    """
    _check_ideal(ideal, system)
    rows = range(len(system.ground))
    M = [
        [Fraction(0) if (ideal.generator >> i) & 1 else x for x in row]
        for i, row in zip(rows, _incidence(system, rows))
    ]
    game = solve_matrix_game(M)
    measure = _measure_on_rows(system.ground, rows, game.row_strategy)
    return _report(system, game.value, measure, game.col_strategy)


def check_report(report: IntersectionReport, functional: VertexFunctional | None = None) -> bool:
    """Re-derive both certificates of a report from scratch.

    ``inf_B optimal_measure(B)`` must equal the value, and so must ``sup s(β)``
    (or ``π(s(β))`` when a functional is given).  Only meaningful for the
    plain and π variants; the ideal variants measure sup off the generator.
    """
    system = report.system
    lower = min(report.optimal_measure(b) for b in system.family)
    s = sequence_average(system.ground, report.witness_sets())
    upper = functional(s) if functional is not None else s.sup()
    return lower == report.value == upper and all(k > 0 for k in report.witness_sequence.values())
