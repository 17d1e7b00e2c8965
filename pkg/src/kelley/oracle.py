"""Brute-force checks for the LP-based intersection numbers.

Nothing here calls the simplex solver except :func:`verify_minimax`, which
compares the two routes.  The enumeration is deliberately naive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import SetSystem, bits
from .errors import BudgetTooLarge, EmptyFamily
from .intersection import intersection_number, sequence_average, witness_from_strategy

DEFAULT_CAP = 10**6

CERTIFIED = "certified"
UPPER_BOUND_ONLY = "upper_bound_only"

__all__ = [
    "BruteForceResult",
    "bruteforce_intersection",
    "multiset_count",
    "verify_minimax",
    "witness_from_strategy",
]


@dataclass(frozen=True)
class BruteForceResult:
    best_value: Fraction
    best_sequence: dict[int, int]
    searched_max_length: int
    exactness: str
    visited: int


def multiset_count(k: int, max_len: int) -> int:
    """Number of nonempty multisets of size ``<= max_len`` from ``k`` items."""
    return comb(k + max_len, max_len) - 1


def bruteforce_intersection(
    system: SetSystem,
    max_len: int,
    *,
    lp_value: Fraction | None = None,
    cap: int = DEFAULT_CAP,
) -> BruteForceResult:
    """Minimize ``sup_ω s(β)(ω)`` over every multiset β with ``1 <= |β| <= max_len``.

    ``exactness`` is ``"certified"`` only when an ``lp_value`` is supplied and
    the search reached it.  Ties keep the first multiset found, which is the
    shortest one in lexicographic order of family indices.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    k = len(system.family)
    if k == 0:
        raise EmptyFamily("nothing to enumerate")
    total = multiset_count(k, max_len)
    if total > cap:
        raise BudgetTooLarge(f"{total} multisets exceed the cap of {cap}")

    members = [list(bits(b)) for b in system.family]
    counts = [0] * len(system.ground)
    chosen = [0] * k
    # best as (numerator, denominator) to avoid building Fractions per node
    best = [None, None, None]
    visited = 0

    def visit(start, length):
        nonlocal visited
        for i in range(start, k):
            for a in members[i]:
                counts[a] += 1
            chosen[i] += 1
            visited += 1
            top = max(counts)
            num, den = best[0], best[1]
            if num is None or top * den < num * (length + 1):
                best[0], best[1] = top, length + 1
                best[2] = {j: c for j, c in enumerate(chosen) if c}
            if length + 1 < max_len:
                visit(i, length + 1)
            chosen[i] -= 1
            for a in members[i]:
                counts[a] -= 1

    visit(0, 0)
    value = Fraction(best[0], best[1])
    exact = CERTIFIED if lp_value is not None and value == lp_value else UPPER_BOUND_ONLY
    return BruteForceResult(value, best[2], max_len, exact, visited)


def verify_minimax(
    system: SetSystem, *, max_len: int | None = None, cap: int = DEFAULT_CAP
) -> dict:
    """Certify the minimax identity on one instance.

    Checks that the LP value equals ``sup s(β)`` for the witness β built from
    the optimal weights, that the optimal measure gives every set at least the
    value, and that brute force up to ``|β|`` finds nothing smaller.  A
    smaller ``max_len`` bounds the search; the verdict is then false unless
    a short enough optimal sequence exists.
    """
    report = intersection_number(system)
    beta = report.witness_sets()
    sup = sequence_average(system.ground, beta).sup()
    lower = min(report.optimal_measure(b) for b in system.family)
    search = len(beta) if max_len is None else max_len
    brute = bruteforce_intersection(system, search, lp_value=report.value, cap=cap)
    verdict = sup == report.value == lower == brute.best_value
    return {
        "verdict": verdict,
        "value": report.value,
        "witness_sup": sup,
        "measure_min": lower,
        "bruteforce_value": brute.best_value,
        "witness_length": len(beta),
        "report": report,
        "bruteforce": brute,
    }
