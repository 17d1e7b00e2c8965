"""Weak domination of finite families of probabilities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import (
    GroundSet,
    Ideal,
    Measure,
    SimpleFunction,
    _same_ground,
    bits,
    mixture,
    null_ideal,
    popcount,
    restrict_measure,
    submasks,
)
from .errors import ImproperIdeal
from .lp import simplex_solve


@dataclass(frozen=True)
class MeasureFamily:
    ground: GroundSet
    members: tuple[Measure, ...]

    def __init__(self, ground: GroundSet, members: Sequence[Measure]):
        members = tuple(members)
        if not members:
            raise ValueError("a measure family needs at least one member")
        for m in members:
            _same_ground(ground, m.ground)
            if not m.is_probability():
                raise ValueError(f"{m!r} is not a probability")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)


def common_null_ideal(family: MeasureFamily) -> Ideal:
    """Sets null under every member; generated by the atoms no member charges."""
    support = 0
    for m in family.members:
        support |= m.support
    return Ideal(family.ground, family.ground.full & ~support)


def mstar_vertices(family: MeasureFamily) -> list[Measure]:
    """Every conditional ``m_A`` with ``m`` a member and ``m(A) > 0``, deduplicated.

    Members are visited in order and sets ``A`` in increasing bitmask order.
    """
    out, seen = [], set()
    for m in family.members:
        for a in family.ground.subsets():
            if m(a) > 0:
                cond = restrict_measure(m, a)
                if cond.masses not in seen:
                    seen.add(cond.masses)
                    out.append(cond)
    return out


@dataclass(frozen=True)
class DominationCertificate:
    measure: Measure
    null_generator: int
    weakly_dominates: bool
    mstar_coefficients: dict[int, Fraction]


def weakly_dominating_measure(family: MeasureFamily) -> DominationCertificate:
    """The uniform average of the members, with its certificates.

    ``mstar_coefficients`` maps indices of :func:`mstar_vertices` to convex
    weights reproducing the average: each member equals its own conditional
    on the whole ground set.
    """
    k = len(family)
    avg = mixture(family.members, [Fraction(1, k)] * k)
    vertices = mstar_vertices(family)
    coefficients: dict[int, Fraction] = {}
    for m in family.members:
        j = next(i for i, v in enumerate(vertices) if v.masses == m.masses)
        coefficients[j] = coefficients.get(j, Fraction(0)) + Fraction(1, k)
    assert mixture([vertices[j] for j in coefficients], coefficients.values()) == avg
    ok = null_ideal(avg) == common_null_ideal(family)
    return DominationCertificate(avg, null_ideal(avg).generator, ok, coefficients)


def halmos_savage_subset(family: MeasureFamily) -> list[int]:
    """Greedy indices of a subfamily with the same common null sets.

    Each round picks the member charging the most atoms not yet charged,
    breaking ties by lowest index, and stops once nothing new is charged.
    """
    target = 0
    for m in family.members:
        target |= m.support
    chosen, covered = [], 0
    while covered != target:
        gains = [popcount(m.support & ~covered) for m in family.members]
        best = max(range(len(gains)), key=lambda i: (gains[i], -i))
        chosen.append(best)
        covered |= family.members[best].support
    return chosen


@dataclass(frozen=True)
class NormingCheck:
    verdict: bool
    lhs: Fraction
    rhs: Fraction


def check_norming(ideal: Ideal, f: SimpleFunction) -> NormingCheck:
    """Compare ``max {m(f) : m probability, m(N*) = 0}`` with ``π_𝓝(f)``.

    The left side is solved as a linear program over point masses; the
    right side ``inf_{N∈𝓝} sup_{ω∉N} f(ω)`` enumerates every member of the
    ideal.
    """
    _same_ground(ideal.ground, f.ground)
    if not ideal.proper:
        raise ImproperIdeal("norming needs a proper ideal")
    n = len(f.ground)
    A_eq = [[1] * n]
    b_eq = [1]
    for i in bits(ideal.generator):
        A_eq.append([1 if j == i else 0 for j in range(n)])
        b_eq.append(0)
    lp = simplex_solve(list(f.values), A_eq=A_eq, b_eq=b_eq).raise_for_status()
    full = f.ground.full
    rhs = min(f.sup(full & ~N) for N in submasks(ideal.generator))
    return NormingCheck(lp.objective == rhs, lp.objective, rhs)
