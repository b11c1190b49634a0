"""Exact linear programming over rationals.

Two-phase primal simplex on a dense tableau of Fractions. Pivoting uses
Bland's rule (smallest eligible index for both the entering column and the
leaving row), which cannot cycle, so every call terminates with a
deterministic optimal basic solution, or reports infeasible / unbounded as
distinct outcomes.

Variables are free by default and internally split into positive parts;
pass `nonneg` to treat chosen variables as sign-constrained, which keeps
the tableau smaller.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import ONE, ZERO, Vector, dot, frac

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_MAX_PIVOTS = 100_000


@dataclass(frozen=True, slots=True)
class LpResult:
    """Outcome of solve_lp.

    For status "optimal", `solution` is the optimum point in the caller's
    variable order and satisfies every constraint exactly; `value` is the
    exact objective value. Otherwise both are None.
    """

    status: str
    value: Fraction | None
    solution: Vector | None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL


class SimplexStall(RuntimeError):
    """Raised if the pivot budget is exhausted; not expected with Bland's rule."""


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    if piv != 1:
        inv = ONE / piv
        tableau[row] = [x * inv for x in tableau[row]]
    prow = tableau[row]
    for i, trow in enumerate(tableau):
        if i == row:
            continue
        factor = trow[col]
        if factor:
            tableau[i] = [x - factor * y for x, y in zip(trow, prow)]
    basis[row] = col


def _run_simplex(
    tableau: list[list[Fraction]], basis: list[int], banned: frozenset[int]
) -> str:
    """Minimize the cost row in place. The last tableau row is the cost row
    with reduced costs already consistent with the basis; the last column is
    the right-hand side."""
    ncols = len(tableau[0]) - 1
    pivots = 0
    while True:
        cost = tableau[-1]
        entering = -1
        for j in range(ncols):
            if j not in banned and cost[j] < 0:
                entering = j
                break
        if entering < 0:
            return OPTIMAL
        leaving = -1
        best_ratio: Fraction | None = None
        for i in range(len(tableau) - 1):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            return UNBOUNDED
        _pivot(tableau, basis, leaving, entering)
        pivots += 1
        if pivots > _MAX_PIVOTS:
            raise SimplexStall(f"no convergence after {pivots} pivots")


def solve_lp(
    objective: Sequence,
    *,
    leq: Sequence[Sequence] = (),
    leq_rhs: Sequence = (),
    eq: Sequence[Sequence] = (),
    eq_rhs: Sequence = (),
    sense: str = "max",
    nonneg: Sequence[bool] | None = None,
) -> LpResult:
    """Solve  max/min  objective . x  subject to  leq x <= leq_rhs,  eq x = eq_rhs.

    All data is converted to Fraction; the result is exact. Infeasibility and
    unboundedness come back as statuses, never as numeric sentinels.
    """
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")
    c = [frac(v) for v in objective]
    n = len(c)
    if len(leq) != len(leq_rhs) or len(eq) != len(eq_rhs):
        raise ValueError("constraint and right-hand-side counts differ")
    rows_in: list[tuple[list[Fraction], Fraction, bool]] = []
    for row, b in zip(leq, leq_rhs):
        if len(row) != n:
            raise ValueError("constraint width differs from objective length")
        rows_in.append(([frac(v) for v in row], frac(b), True))
    for row, b in zip(eq, eq_rhs):
        if len(row) != n:
            raise ValueError("constraint width differs from objective length")
        rows_in.append(([frac(v) for v in row], frac(b), False))
    free = [not nonneg[j] for j in range(n)] if nonneg else [True] * n

    # Column layout: for each variable a positive column, plus a negated copy
    # when the variable is free; then one slack per inequality; then one
    # artificial per row that needs one.
    col_of_var: list[tuple[int, int]] = []  # (positive column, negative column or -1)
    split: list[tuple[int, Fraction]] = []  # column -> (variable, sign)
    for j in range(n):
        pos = len(split)
        split.append((j, ONE))
        neg = -1
        if free[j]:
            neg = len(split)
            split.append((j, -ONE))
        col_of_var.append((pos, neg))
    nsplit = len(split)
    m = len(rows_in)
    nslack = sum(1 for _, _, is_leq in rows_in if is_leq)
    ncols = nsplit + nslack

    body: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_col_of_row: list[int] = []
    si = 0
    for row, b, is_leq in rows_in:
        expanded = [ZERO] * ncols
        for col, (j, sign) in enumerate(split):
            v = row[j]
            if v:
                expanded[col] = v * sign
        scol = -1
        if is_leq:
            scol = nsplit + si
            expanded[scol] = ONE
            si += 1
        if b < 0:
            expanded = [-x for x in expanded]
            b = -b
        body.append(expanded)
        rhs.append(b)
        slack_col_of_row.append(scol)

    # Phase 1 basis: a slack column when it survived with coefficient +1,
    # otherwise a fresh artificial column.
    basis: list[int] = []
    art_cols: list[int] = []
    for i in range(m):
        scol = slack_col_of_row[i]
        if scol >= 0 and body[i][scol] == 1:
            basis.append(scol)
        else:
            col = ncols + len(art_cols)
            art_cols.append(col)
            basis.append(col)
    total_cols = ncols + len(art_cols)
    tableau: list[list[Fraction]] = []
    for i in range(m):
        trow = body[i] + [ZERO] * len(art_cols) + [rhs[i]]
        if basis[i] >= ncols:
            trow[basis[i]] = ONE
        tableau.append(trow)

    if art_cols:
        cost = [ZERO] * (total_cols + 1)
        for col in art_cols:
            cost[col] = ONE
        tableau.append(cost)
        for i in range(m):
            if basis[i] in art_cols:
                tableau[-1] = [x - y for x, y in zip(tableau[-1], tableau[i])]
        status = _run_simplex(tableau, basis, frozenset())
        if status != OPTIMAL:
            raise SimplexStall("phase 1 cannot be unbounded")
        if -tableau[-1][-1] != 0:
            return LpResult(INFEASIBLE, None, None)
        tableau.pop()
        # Drive leftover artificials out of the basis; drop redundant rows.
        banned = frozenset(art_cols)
        drop: list[int] = []
        for i in range(m):
            if basis[i] in banned:
                pivot_col = -1
                for j in range(ncols):
                    if tableau[i][j] != 0:
                        pivot_col = j
                        break
                if pivot_col < 0:
                    drop.append(i)
                else:
                    _pivot(tableau, basis, i, pivot_col)
        for i in reversed(drop):
            tableau.pop(i)
            basis.pop(i)
    else:
        banned = frozenset()

    minimize = sense == "min"
    cost = [ZERO] * (total_cols + 1)
    for col, (j, sign) in enumerate(split):
        cj = c[j] * sign
        cost[col] = cj if minimize else -cj
    tableau.append(cost)
    for i in range(len(basis)):
        factor = tableau[-1][basis[i]]
        if factor:
            tableau[-1] = [x - factor * y for x, y in zip(tableau[-1], tableau[i])]
    status = _run_simplex(tableau, basis, banned)
    if status == UNBOUNDED:
        return LpResult(UNBOUNDED, None, None)

    values = [ZERO] * total_cols
    for i, col in enumerate(basis):
        values[col] = tableau[i][-1]
    x = [ZERO] * n
    for j, (pos, neg) in enumerate(col_of_var):
        x[j] = values[pos] - (values[neg] if neg >= 0 else ZERO)
    solution = tuple(x)
    return LpResult(OPTIMAL, dot(c, solution), solution)


def lp_feasible(
    leq: Sequence[Sequence] = (),
    leq_rhs: Sequence = (),
    eq: Sequence[Sequence] = (),
    eq_rhs: Sequence = (),
    nonneg: Sequence[bool] | None = None,
    nvars: int | None = None,
) -> LpResult:
    """Feasibility check: solve with a zero objective."""
    if nvars is None:
        if len(leq):
            nvars = len(leq[0])
        elif len(eq):
            nvars = len(eq[0])
        else:
            raise ValueError("cannot infer variable count from empty constraint sets")
    return solve_lp(
        [ZERO] * nvars,
        leq=leq,
        leq_rhs=leq_rhs,
        eq=eq,
        eq_rhs=eq_rhs,
        sense="min",
        nonneg=nonneg,
    )
