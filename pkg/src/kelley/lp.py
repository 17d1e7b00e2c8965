"""Exact rational simplex and zero-sum matrix games.

The solver is a dense two-phase tableau simplex over ``Fraction`` with
Bland's rule, which guarantees termination on degenerate problems.  Problems
here have at most a few dozen rows and columns, so density costs nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import to_rational
from .errors import Infeasible, Unbounded

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`simplex_solve`.

    For ``status == "optimal"`` the primal point ``x``, the objective value
    and the dual multipliers of the ``<=`` rows (``duals_ub``, nonnegative for
    a maximization) and of the ``==`` rows (``duals_eq``, free) are exact.
    ``basis`` lists the basic column of each tableau row.
    """

    status: str
    x: tuple[Fraction, ...] = ()
    objective: Fraction | None = None
    duals_ub: tuple[Fraction, ...] = ()
    duals_eq: tuple[Fraction, ...] = ()
    basis: tuple[int, ...] = ()
    pivots: int = 0

    def raise_for_status(self):
        if self.status == INFEASIBLE:
            raise Infeasible("the constraints admit no nonnegative solution")
        if self.status == UNBOUNDED:
            raise Unbounded("the objective is unbounded on the feasible set")
        return self


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.pivots = 0

    def pivot(self, r, c):
        row = self.rows[r]
        p = row[c]
        if p != 1:
            inv = 1 / p
            row[:] = [v * inv for v in row]
            self.rhs[r] *= inv
        for k, other in enumerate(self.rows):
            if k == r:
                continue
            f = other[c]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
                self.rhs[k] -= f * self.rhs[r]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost):
        """``c_j - c_B B^{-1} A_j`` for every column, plus ``c_B B^{-1} b``."""
        red = list(cost)
        value = Fraction(0)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                red = [a - cb * v for a, v in zip(red, row)]
                value += cb * self.rhs[r]
        return red, value

    def maximize(self, cost, allowed):
        """Bland's rule primal simplex; returns False when unbounded."""
        red, _ = self.reduced_costs(cost)
        while True:
            entering = next(
                (j for j in range(len(red)) if allowed[j] and red[j] > 0), None
            )
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[r] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            r = best[1]
            self.pivot(r, entering)
            f = red[entering]
            red = [a - f * v for a, v in zip(red, self.rows[r])]


def simplex_solve(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximize ``c·x`` subject to ``A_ub x <= b_ub``, ``A_eq x == b_eq``, ``x >= 0``.

    All data are converted to exact rationals.  Returns an :class:`LPResult`
    whose status is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``; call
    :meth:`LPResult.raise_for_status` to turn the latter two into exceptions.

    >>> simplex_solve([1, 1], A_ub=[[1, 1]], b_ub=[1]).objective
    Fraction(1, 1)
    """
    c = [to_rational(v) for v in c]
    n = len(c)
    constraints = []
    for row, b in zip(A_ub, b_ub, strict=True):
        constraints.append(([to_rational(v) for v in row], to_rational(b), "ub"))
    for row, b in zip(A_eq, b_eq, strict=True):
        constraints.append(([to_rational(v) for v in row], to_rational(b), "eq"))
    for row, _, _ in constraints:
        if len(row) != n:
            raise ValueError(f"constraint row has {len(row)} entries, expected {n}")

    m = len(constraints)
    n_slack = sum(1 for _, _, kind in constraints if kind == "ub")
    needs_art = [kind == "eq" or b < 0 for _, b, kind in constraints]
    n_art = sum(needs_art)
    width = n + n_slack + n_art
    slack_col, art_col = n, n + n_slack

    rows, rhs, basis, signs, unit_col = [], [], [], [], []
    for (coeffs, b, kind), art in zip(constraints, needs_art):
        row = coeffs + [Fraction(0)] * (width - n)
        if kind == "ub":
            row[slack_col] = Fraction(1)
            own_slack = slack_col
            slack_col += 1
        sign = -1 if b < 0 else 1
        if sign < 0:
            row = [-v for v in row]
            b = -b
        if art:
            row[art_col] = Fraction(1)
            basis.append(art_col)
            unit_col.append(art_col)
            art_col += 1
        else:
            basis.append(own_slack)
            unit_col.append(own_slack)
        rows.append(row)
        rhs.append(b)
        signs.append(sign)

    tab = _Tableau(rows, rhs, basis)
    first_art = n + n_slack
    is_art = [j >= first_art for j in range(width)]

    if n_art:
        phase1 = [Fraction(-1) if is_art[j] else Fraction(0) for j in range(width)]
        tab.maximize(phase1, [True] * width)
        _, value = tab.reduced_costs(phase1)
        if value < 0:
            return LPResult(INFEASIBLE, pivots=tab.pivots)
        # drive zero-level artificials out of the basis where possible
        for r in range(m):
            if is_art[tab.basis[r]]:
                col = next(
                    (j for j in range(first_art) if tab.rows[r][j] != 0), None
                )
                if col is not None:
                    tab.pivot(r, col)

    cost = c + [Fraction(0)] * (width - n)
    allowed = [not a for a in is_art]
    if not tab.maximize(cost, allowed):
        return LPResult(UNBOUNDED, pivots=tab.pivots)

    x = [Fraction(0)] * n
    for r, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.rhs[r]
    red, value = tab.reduced_costs(cost)
    duals = [-red[unit_col[r]] * signs[r] for r in range(m)]
    return LPResult(
        OPTIMAL,
        x=tuple(x),
        objective=value,
        duals_ub=tuple(duals[:n_slack]) if n_slack else (),
        duals_eq=tuple(duals[n_slack:]),
        basis=tuple(tab.basis),
        pivots=tab.pivots,
    )


@dataclass(frozen=True)
class GameSolution:
    """Exact solution of a zero-sum game.

    The column player picks ``col_strategy`` to minimize and the row player
    picks ``row_strategy`` to maximize the payoff ``M[r][c]``::

        max_r (M p)_r == value == min_c (q M)_c
    """

    value: Fraction
    row_strategy: tuple[Fraction, ...]
    col_strategy: tuple[Fraction, ...]


def game_lp(M: Sequence[Sequence]):
    """LP data for the column player's problem.

    Variables are ``p_1 .. p_C, v+, v-``; the LP maximizes ``-(v+ - v-)``
    subject to ``Σ_c M[r][c] p_c <= v+ - v-`` for each row and ``Σ p = 1``.
    Returns keyword arguments for :func:`simplex_solve`.
    """
    cols = len(M[0])
    c = [0] * cols + [-1, 1]
    A_ub = [list(row) + [-1, 1] for row in M]
    b_ub = [0] * len(M)
    A_eq = [[1] * cols + [0, 0]]
    return dict(c=c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1])


def payoff_vectors(M, p, q):
    """``(M p)_r`` for each row and ``(q M)_c`` for each column."""
    row_payoffs = [sum((a * b for a, b in zip(row, p)), Fraction(0)) for row in M]
    col_payoffs = [
        sum((q[r] * M[r][c] for r in range(len(M))), Fraction(0))
        for c in range(len(M[0]))
    ]
    return row_payoffs, col_payoffs


def solve_matrix_game(M: Sequence[Sequence]) -> GameSolution:
    """Value and optimal mixed strategies of the game with payoff ``M``.

    The row strategy is read off the dual of the column player's LP.  Both
    strategies are checked exactly before returning: an
    :class:`AssertionError` here would mean a solver bug, not bad input.
    """
    M = [[to_rational(v) for v in row] for row in M]
    if not M or not M[0]:
        raise ValueError("the game matrix must have at least one row and column")
    if any(len(row) != len(M[0]) for row in M):
        raise ValueError("the game matrix must be rectangular")

    result = simplex_solve(**game_lp(M)).raise_for_status()
    cols = len(M[0])
    p = result.x[:cols]
    q = result.duals_ub
    value = -result.objective

    row_payoffs, col_payoffs = payoff_vectors(M, p, q)
    assert all(v >= 0 for v in p) and sum(p) == 1, p
    assert all(v >= 0 for v in q) and sum(q) == 1, q
    assert max(row_payoffs) == value == min(col_payoffs), (value, row_payoffs, col_payoffs)
    return GameSolution(value, tuple(q), tuple(p))
