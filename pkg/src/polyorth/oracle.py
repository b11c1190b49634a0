"""Sampling oracles: independent, one-sided checks of the exact pipeline.

Everything here evaluates candidate points exactly but searches by seeded
sampling or local descent, so results are certified bounds in one
direction only: a grid scan can refute orthogonality but never prove it,
and the descent estimate is always an upper bound on the true distance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vector, as_vector, dot, solve_linear_system
from .lp import solve_lp
from .operators import Operator, operator_norm, rank_one, zero_operator
from .spaces import NormedSpace, Subspace, norm

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True, slots=True)
class SampleConfig:
    """Reproducible sampling parameters. The same config on the same inputs
    always produces the same samples and the same estimates."""

    seed: int = 0
    count: int = 16
    lambda_range: Fraction | None = None
    grid_steps: int = 4097

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("count must be at least 1")
        if self.grid_steps < 2:
            raise ValueError("grid_steps must be at least 2")
        if self.lambda_range is not None and self.lambda_range <= 0:
            raise ValueError("lambda_range must be positive")


def sample_sphere(space: NormedSpace, cfg: SampleConfig) -> tuple[Vector, ...]:
    """Seeded random unit vectors: small random rational directions divided
    by their exact norm, so every sample has norm exactly one."""
    rng = random.Random(cfg.seed)
    out: list[Vector] = []
    while len(out) < cfg.count:
        direction = tuple(
            Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(space.dim)
        )
        value = norm(space, direction)
        if value == 0:
            continue
        out.append(tuple(c / value for c in direction))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class LambdaScanResult:
    holds_on_grid: bool
    min_value: Fraction
    argmin_lambda: Fraction


def _lambda_grid(bound: Fraction, steps: int) -> list[Fraction]:
    """Symmetric grid over [-bound, bound]: the steps+1 uniform points plus
    zero. Doubling steps refines the grid to a superset, so the scanned
    minimum can only go down under refinement."""
    points = [-bound + Fraction(2 * i, steps) * bound for i in range(steps + 1)]
    out: list[Fraction] = []
    inserted = False
    for p in points:
        if not inserted and p >= 0:
            if p != 0:
                out.append(_ZERO)
            inserted = True
        out.append(p)
    return out


def bj_lambda_scan(space: NormedSpace, x, y, cfg: SampleConfig) -> LambdaScanResult:
    """Grid refutation test for orthogonality of x to y: scan |x + t y| over
    a symmetric grid of exact rationals. A grid point below |x| disproves
    orthogonality outright; a clean scan is evidence only."""
    xv = as_vector(x)
    yv = as_vector(y)
    base = norm(space, xv)
    if base == 0:
        raise ValueError("orthogonality scan is undefined at the zero vector")
    bound = cfg.lambda_range
    if bound is None:
        ny = norm(space, yv)
        bound = 4 * base / max(ny, _ONE)
    # precompute f.x and f.y per facet; each grid value is max |fx + t fy|
    pairs = [(dot(f, xv), dot(f, yv)) for f in space.ball.facets]
    best: Fraction | None = None
    best_t = _ZERO
    for t in _lambda_grid(bound, cfg.grid_steps):
        value = max(abs(fx + t * fy) for fx, fy in pairs)
        if best is None or value < best:
            best = value
            best_t = t
    return LambdaScanResult(best >= base, best, best_t)


def estimate_operator_distance(T: Operator, Z: Subspace, cfg: SampleConfig) -> Fraction:
    """Upper bound on the distance from T to the maps into Z, by random
    restarts plus exact coordinate descent on the coefficient matrix.

    Every candidate is evaluated through the exact operator norm, so the
    returned value is always a true upper bound; with enough restarts it
    reaches the exact distance on well-conditioned instances. When T itself
    maps into Z the interpolation candidate gives zero immediately."""
    if Z.ambient != T.codomain:
        raise ValueError("Z must be a subspace of the codomain of T")
    X, Y = T.domain, T.codomain
    k, dx = Z.dim, X.dim
    if k == 0:
        return operator_norm(T)

    def build(coeffs: list[list[Fraction]]) -> Operator:
        s = zero_operator(X, Y)
        for j, col in enumerate(Z.basis):
            s = s + rank_one(X, coeffs[j], col, Y)
        return s

    def value(coeffs: list[list[Fraction]]) -> Fraction:
        return operator_norm(T - build(coeffs))

    best = operator_norm(T)  # the zero candidate
    # interpolation candidate: when every column of T lies in the span of the
    # basis columns, the exact column-wise solve reproduces T and gives zero
    interp = [[_ZERO] * dx for _ in range(k)]
    col_rows = tuple(tuple(Z.basis[j][i] for j in range(k)) for i in range(Y.dim))
    consistent = True
    for l in range(dx):
        col_rhs = tuple(T.matrix[i][l] for i in range(Y.dim))
        sol = solve_linear_system(col_rows, col_rhs)
        if sol is None:
            consistent = False
            break
        for j in range(k):
            interp[j][l] = sol[j]
    if consistent:
        best = min(best, value(interp))

    rng = random.Random(cfg.seed)
    for restart in range(cfg.count):
        if restart == 0:
            coeffs = [[_ZERO] * dx for _ in range(k)]
        else:
            coeffs = [
                [Fraction(rng.randint(-3, 3)) for _ in range(dx)] for _ in range(k)
            ]
        for _ in range(2):  # descent passes
            for j in range(k):
                for l in range(dx):
                    coeffs[j][l] = _best_coordinate(T, Z, coeffs, j, l)
        best = min(best, value(coeffs))
    return best


def _best_coordinate(
    T: Operator, Z: Subspace, coeffs: list[list[Fraction]], j: int, l: int
) -> Fraction:
    """Exact one-dimensional minimization over a single coefficient: the
    objective is a max of finitely many affine functions of the entry, so a
    two-variable LP finds the exact minimizer."""
    X, Y = T.domain, T.codomain
    saved = coeffs[j][l]
    coeffs[j][l] = _ZERO
    rows = []
    rhs = []
    bcol = Z.basis[j]
    for f in Y.ball.facets:
        fb = dot(f, bcol)
        for v in X.ball.vertices:
            # residual at zeroed entry, linear part from the entry
            rv = dot(f, T.apply(v)) - sum(
                (
                    dot(f, Z.basis[jj]) * sum(
                        (coeffs[jj][ll] * v[ll] for ll in range(X.dim)), _ZERO
                    )
                    for jj in range(Z.dim)
                ),
                _ZERO,
            )
            slope = -fb * v[l]
            for sigma in (_ONE, -_ONE):
                rows.append([sigma * slope, -_ONE])
                rhs.append(-sigma * rv)
    coeffs[j][l] = saved
    res = solve_lp([_ZERO, _ONE], leq=rows, leq_rhs=rhs, sense="min")
    if not res.is_optimal:
        raise RuntimeError(f"coordinate probe LP {res.status}")
    return res.solution[0]
