"""Random instance generators and brute-force oracles shared by the tests.

The oracles here never call into ``kelley.lp`` or ``kelley.intersection``.
"""

from fractions import Fraction
from itertools import combinations, product

from hypothesis import strategies as st

from kelley import GroundSet, Measure, SetSystem, VertexFunctional


def random_system(rng, max_atoms=5, max_sets=7, min_atoms=1):
    n = rng.randint(min_atoms, max_atoms)
    g = GroundSet.of_size(n)
    k = rng.randint(1, max_sets)
    return SetSystem(g, [rng.randint(1, g.full) for _ in range(k)])


def random_measure(rng, ground, *, zero_chance=0.3, max_weight=9, total=None):
    """Random nonnegative measure with positive total; a probability by default."""
    weights = [0 if rng.random() < zero_chance else rng.randint(1, max_weight) for _ in ground]
    if not any(weights):
        weights[rng.randrange(len(weights))] = rng.randint(1, max_weight)
    m = Measure(ground, weights).normalized()
    if total is not None:
        m = m.scaled(total)
    return m


def random_strictly_positive(rng, ground, max_weight=9):
    return random_measure(rng, ground, zero_chance=0, max_weight=max_weight)


def random_functional(rng, ground, k, *, max_total=Fraction(2)):
    vertices = []
    for _ in range(k):
        total = Fraction(rng.randint(1, 8), 4)
        vertices.append(random_measure(rng, ground, total=min(total, max_total)))
    return VertexFunctional(ground, vertices)


# --- oracles ---------------------------------------------------------------


def game_grid_bounds(M, den):
    """Sandwich the game value by searching strategies on the grid ``k/den``.

    Returns ``(lower, upper)`` with ``lower <= value <= upper``: ``upper`` is
    the best column-player guarantee on the grid, ``lower`` the best row-player
    guarantee.
    """
    rows, cols = len(M), len(M[0])

    def simplex_grid(d):
        for combo in product(range(den + 1), repeat=d):
            if sum(combo) == den:
                yield [Fraction(c, den) for c in combo]

    upper = min(
        max(sum(M[r][c] * p[c] for c in range(cols)) for r in range(rows))
        for p in simplex_grid(cols)
    )
    lower = max(
        min(sum(q[r] * M[r][c] for r in range(rows)) for c in range(cols))
        for q in simplex_grid(rows)
    )
    return lower, upper


def brute_intersection_sequences(ground, family, length):
    """Minimum of ``max_ω s(β)(ω)`` over ordered sequences of exactly ``length``."""
    best = None
    for beta in product(family, repeat=length):
        top = max(sum((b >> i) & 1 for b in beta) for i in range(len(ground)))
        val = Fraction(top, length)
        if best is None or val < best:
            best = val
    return best


def is_proper_ideal(members, full):
    members = set(members)
    if 0 not in members or full in members:
        return False
    for a in members:
        for b in range(full + 1):
            if b & ~a == 0 and b not in members:
                return False
    return all(a | b in members for a, b in combinations(members, 2))


def brute_atoms(n, generators):
    """Blocks of the generated algebra: points equivalent iff no generator separates them."""
    blocks = []
    for i in range(n):
        for block in blocks:
            j = block[0]
            if all(((g >> i) & 1) == ((g >> j) & 1) for g in generators):
                block.append(i)
                break
        else:
            blocks.append([i])
    return sorted(sum(1 << i for i in block) for block in blocks)


# --- hypothesis strategies -------------------------------------------------


@st.composite
def set_systems(draw, max_atoms=4, max_sets=5):
    n = draw(st.integers(1, max_atoms))
    g = GroundSet.of_size(n)
    family = draw(st.lists(st.integers(1, g.full), min_size=1, max_size=max_sets))
    return SetSystem(g, family)


@st.composite
def measures(draw, ground, probability=True):
    weights = draw(st.lists(st.integers(0, 6), min_size=len(ground), max_size=len(ground)))
    if not any(weights):
        weights[draw(st.integers(0, len(ground) - 1))] = 1
    m = Measure(ground, weights)
    return m.normalized() if probability else m


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=6)
