"""Operator-to-subspace distances, the local/global comparison, and
instance-level verification of the supporting structure results.

The central quantity is the distance from an operator T to the set of
operators mapping into a fixed subspace Z of the codomain. It always
dominates the best pointwise quantity, the sup over unit vectors x of the
distance from Tx to Z; the verifiers below certify, instance by instance
and in exact arithmetic, the structural conditions under which the two are
equal and an extreme attaining witness exists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import (
    Matrix,
    Vector,
    as_vector,
    basis_vector,
    canonical_sign,
    dot,
    is_zero_vector,
    rank,
    vec_sub,
)
from .lp import solve_lp
from .polytope import InvalidPolytope, SymmetricPolytope, enumerate_vertices
from .proximity import (
    annihilator,
    bj_orthogonal_subspace,
    distance_to_subspace,
)
from .operators import (
    Operator,
    norm_attainment_extremes,
    operator_norm,
    operator_smoothness_order,
    operator_subspace_basis,
    orthogonality_witness,
    rank_one,
    zero_operator,
)
from .spaces import (
    NormedSpace,
    Subspace,
    dual_space,
    has_l1_property,
    is_l1_predual,
    norm,
    space_l1,
    support_set,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


VERIFIED = "verified"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"
DEGENERATE = "degenerate"
VIOLATION = "VIOLATION"

THEOREM_KINDS = ("thgen", "l1prop", "linind")
VERIFIER_KINDS = THEOREM_KINDS + ("prop1", "generic")


@dataclass(frozen=True, slots=True)
class Instance:
    """One verification problem: operator T from X into Y, target subspace Z."""

    X: NormedSpace
    Y: NormedSpace
    Z: Subspace
    T: Operator
    m_summand_split: int | None = None
    seed: int | None = field(default=None, compare=False)
    kind: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.Z.ambient != self.Y:
            raise ValueError("Z must be a subspace of Y")
        if self.T.domain != self.X or self.T.codomain != self.Y:
            raise ValueError("T must map X into Y")
        if self.m_summand_split is not None and not (
            1 <= self.m_summand_split < self.Y.dim
        ):
            raise ValueError("summand split must leave both blocks nonempty")


@dataclass(frozen=True, slots=True)
class OperatorApproxResult:
    """Distance from an operator to the maps into a subspace, with the
    minimizer: best_approx = sum of basis columns times coefficient rows."""

    distance: Fraction
    coefficients: Matrix  # one row per subspace basis column
    best_approx: Operator


@dataclass(frozen=True, slots=True)
class LocalSup:
    """Pointwise quantity: the largest distance from an image of a ball
    vertex to the subspace, with every vertex's distance tabulated."""

    value: Fraction
    argmax_vertices: Matrix
    per_vertex_distances: tuple[tuple[Vector, Fraction], ...]


@dataclass(frozen=True, slots=True)
class MinimaxReport:
    op_norm: Fraction
    d_global: Fraction
    d_local: Fraction
    gap: Fraction
    argmax_vertices: Matrix
    is_T_orthogonal: bool
    per_vertex_distances: tuple[tuple[Vector, Fraction], ...]
    best_approx: Operator


@dataclass(frozen=True, slots=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    status: str
    hypothesis_checks: tuple[Check, ...]
    conclusion_checks: tuple[Check, ...]
    witnesses: dict
    metrics: dict


def _finish(theorem: str, hyp: tuple[Check, ...], concl: tuple[Check, ...],
            witnesses: dict, metrics: dict, degenerate: bool = False) -> VerificationReport:
    if degenerate:
        status = DEGENERATE
    elif not all(c.passed for c in hyp):
        status = HYPOTHESIS_NOT_MET
    elif all(c.passed for c in concl):
        status = VERIFIED
    else:
        status = VIOLATION
    return VerificationReport(theorem, status, hyp, concl, witnesses, metrics)


def distance_operator_subspace(T: Operator, Z: Subspace) -> OperatorApproxResult:
    """Exact distance from T to {S : S maps into Z}, by the LP

      minimize t  subject to  |f . ((T - S) v)| <= t

    over codomain facets f and domain ball vertices v, with S parametrized
    by a coefficient matrix against the basis of Z.

    The row system is large (facets x vertices x signs), so constraints are
    generated on demand: solve over an active subset, look for an exactly
    violated row, add the worst one, repeat. The final solution satisfies
    every row, so the value is the exact optimum of the full program."""
    if Z.ambient != T.codomain:
        raise ValueError("Z must be a subspace of the codomain of T")
    X, Y = T.domain, T.codomain
    k = Z.dim
    dx = X.dim
    if k == 0:
        # only S = 0 is available
        return OperatorApproxResult(operator_norm(T), (), zero_operator(X, Y))
    nvars = k * dx + 1  # coefficients then t
    facets = Y.ball.facets
    vertices = X.ball.vertices
    fb_rows = [tuple(dot(f, col) for col in Z.basis) for f in facets]
    images = [T.apply(v) for v in vertices]

    def make_row(fi: int, vi: int, sigma: Fraction):
        fb = fb_rows[fi]
        v = vertices[vi]
        row = [_ZERO] * nvars
        for j in range(k):
            if fb[j]:
                for l in range(dx):
                    if v[l]:
                        row[j * dx + l] = -sigma * fb[j] * v[l]
        row[-1] = -_ONE
        return row, -sigma * dot(facets[fi], images[vi])

    # seed with the facet certifying each image norm
    active: list[tuple[int, int, Fraction]] = []
    seen = set()
    for vi in range(len(vertices)):
        tv = images[vi]
        best_fi, best_sigma, best_val = 0, _ONE, None
        for fi, f in enumerate(facets):
            val = dot(f, tv)
            if best_val is None or abs(val) > best_val:
                best_val = abs(val)
                best_fi = fi
                best_sigma = _ONE if val >= 0 else -_ONE
        key = (best_fi, vi, best_sigma)
        if key not in seen:
            seen.add(key)
            active.append(key)

    objective = [_ZERO] * (nvars - 1) + [_ONE]
    nonneg = (False,) * (nvars - 1) + (True,)  # the distance t is nonnegative
    while True:
        rows = []
        rhs = []
        for key in active:
            row, b = make_row(*key)
            rows.append(row)
            rhs.append(b)
        res = solve_lp(objective, leq=rows, leq_rhs=rhs, sense="min", nonneg=nonneg)
        if not res.is_optimal:
            raise RuntimeError(f"operator distance LP unexpectedly {res.status}")
        tval = res.solution[-1]
        coeffs = tuple(
            tuple(res.solution[j * dx + l] for l in range(dx)) for j in range(k)
        )
        best = zero_operator(X, Y)
        for j, col in enumerate(Z.basis):
            best = best + rank_one(X, coeffs[j], col, Y)
        diff = T - best
        worst = None
        worst_excess = _ZERO
        for vi, v in enumerate(vertices):
            mv = diff.apply(v)
            for fi, f in enumerate(facets):
                val = dot(f, mv)
                excess = abs(val) - tval
                if excess > worst_excess:
                    worst_excess = excess
                    worst = (fi, vi, _ONE if val > 0 else -_ONE)
        if worst is None:
            return OperatorApproxResult(res.value, coeffs, best)
        seen.add(worst)
        active.append(worst)


def local_sup(T: Operator, Z: Subspace) -> LocalSup:
    """sup over the unit sphere of the distance from Tx to Z. The distance
    function is convex, so the sup over the polytope sphere is attained at a
    ball vertex and only vertex representatives need checking."""
    if Z.ambient != T.codomain:
        raise ValueError("Z must be a subspace of the codomain of T")
    table = []
    for v in T.domain.ball.vertices:
        r = distance_to_subspace(
            T.codomain, T.apply(v), Z, face_dim=False, canonical_witness=False
        )
        table.append((v, r.distance))
    value = max(d for _, d in table)
    argmax = tuple(v for v, d in table if d == value)
    return LocalSup(value, argmax, tuple(table))


def minimax_report(inst: Instance) -> MinimaxReport:
    """Compare the operator-level and pointwise distances on one instance.

    The gap is nonnegative for every instance; a negative value cannot occur
    for correct exact arithmetic and is raised as an internal error."""
    opn = operator_norm(inst.T)
    approx = distance_operator_subspace(inst.T, inst.Z)
    loc = local_sup(inst.T, inst.Z)
    gap = approx.distance - loc.value
    if gap < 0:
        raise RuntimeError(
            f"negative minimax gap {gap}: exactness bug in the LP layer"
        )
    return MinimaxReport(
        op_norm=opn,
        d_global=approx.distance,
        d_local=loc.value,
        gap=gap,
        argmax_vertices=loc.argmax_vertices,
        is_T_orthogonal=(approx.distance == opn),
        per_vertex_distances=loc.per_vertex_distances,
        best_approx=approx.best_approx,
    )


@dataclass(frozen=True, slots=True)
class MSummand:
    """A codomain split Y = Z (+)_inf W together with the norm-one projection."""

    space: NormedSpace
    summand: Subspace
    projection: Matrix
    split_dim: int


def make_m_summand(z_space: NormedSpace, w_space: NormedSpace,
                   label: str | None = None) -> MSummand:
    """Combine two spaces under the sup-norm so the first becomes a summand
    whose complement carries the rest of the geometry. The dual unit ball
    decomposes accordingly: its vertices are exactly the embedded dual
    vertices of the two factors, which is verified constructively."""
    dz, dw = z_space.dim, w_space.dim
    dim = dz + dw
    ball = SymmetricPolytope.product(z_space.ball, w_space.ball)
    name = label or f"[{z_space.label} (+)inf {w_space.label}]"
    Y = NormedSpace(dim, ball, label=name)
    Z = Subspace(Y, tuple(basis_vector(dim, i) for i in range(dz)))
    projection = tuple(
        tuple(_ONE if (i == j and i < dz) else _ZERO for j in range(dim))
        for i in range(dim)
    )
    zero_w = (_ZERO,) * dw
    zero_z = (_ZERO,) * dz
    embedded = {f + zero_w for f in z_space.ball.facets} | {
        zero_z + f for f in w_space.ball.facets
    }
    if set(ball.facets) != embedded:
        raise RuntimeError("summand dual decomposition failed to hold")
    proj_op = Operator(projection, Y, Y)
    if operator_norm(proj_op) != 1:
        raise RuntimeError("summand projection is not norm one")
    return MSummand(Y, Z, projection, dz)


def summand_factor_spaces(inst: Instance) -> tuple[NormedSpace, NormedSpace] | None:
    """Recover the two factor spaces from a certified split, or None when the
    certificate is absent or does not reproduce the codomain ball exactly."""
    k = inst.m_summand_split
    if k is None:
        return None
    Y = inst.Y
    expected_basis = tuple(basis_vector(Y.dim, i) for i in range(k))
    if inst.Z.basis != expected_basis:
        return None
    first: list[Vector] = []
    second: list[Vector] = []
    for f in Y.ball.facets:
        head_zero = is_zero_vector(f[:k])
        tail_zero = is_zero_vector(f[k:])
        if tail_zero and not head_zero:
            first.append(f[:k])
        elif head_zero and not tail_zero:
            second.append(f[k:])
        else:
            return None
    v_first = sorted({canonical_sign(v[:k]) for v in Y.ball.vertices})
    v_second = sorted({canonical_sign(v[k:]) for v in Y.ball.vertices})
    try:
        z_ball = SymmetricPolytope(k, tuple(sorted(first)), tuple(v_first))
        w_ball = SymmetricPolytope(Y.dim - k, tuple(sorted(second)), tuple(v_second))
    except InvalidPolytope:
        return None
    if SymmetricPolytope.product(z_ball, w_ball) != Y.ball:
        return None
    return NormedSpace(k, z_ball, label="Zfactor"), NormedSpace(
        Y.dim - k, w_ball, label="Wfactor"
    )


def _attaining_orthogonal_vertex(
    inst: Instance, opn: Fraction
) -> tuple[str, Vector, Vector] | None:
    """Search for a norm-attaining point whose image is orthogonal to Z.

    First pass: ball vertex representatives that attain the norm, each
    decided by the convex-combination feasibility LP. Second pass, complete
    for the whole attaining set: vertices q of the dual ball sliced by the
    annihilator of Z; such a q certifies an attaining direction through the
    adjoint, and a maximizing ball vertex then works. A second-pass hit
    after a first-pass miss would mean the two LP routes disagree, which is
    an internal error, so the second pass only confirms exhaustiveness.
    Returns (route, x0, certifying functional) or None."""
    T, Y, Z = inst.T, inst.Y, inst.Z
    for v in norm_attainment_extremes(T):
        ok, functional = bj_orthogonal_subspace(Y, T.apply(v), Z)
        if ok:
            return ("attaining-vertex", v, functional)
    ann = annihilator(Y, Z)
    if ann.dim == 0:
        return None
    section_rows = []
    for w in Y.ball.vertices:  # dual ball facet normals, restricted to the section
        row = tuple(dot(w, col) for col in ann.basis)
        if not is_zero_vector(row):  # vertices inside span Z impose nothing here
            section_rows.append(row)
    for u in enumerate_vertices(section_rows, ann.dim):
        y_star = tuple(
            sum((uj * col[i] for uj, col in zip(u, ann.basis)), _ZERO)
            for i in range(Y.dim)
        )
        for v in T.domain.ball.vertices:
            val = dot(y_star, T.apply(v))
            if abs(val) == opn:
                raise RuntimeError(
                    "annihilator-section search found a witness the vertex "
                    "scan missed: orthogonality routes disagree"
                )
    return None


def _james_equivalence_check(inst: Instance, rep: MinimaxReport) -> Check:
    basis = operator_subspace_basis(inst.X, inst.Z)
    witness = orthogonality_witness(inst.T, basis)
    feasible = witness is not None
    return Check(
        "james_equivalence",
        feasible == rep.is_T_orthogonal,
        f"certificate feasible: {feasible}, distance equals norm: {rep.is_T_orthogonal}",
    )


def verify_generic(inst: Instance) -> VerificationReport:
    """Baseline verification on any instance: the operator-level distance
    dominates the pointwise sup, and the orthogonality certificate agrees
    with the distance criterion."""
    rep = minimax_report(inst)
    concl = [
        Check("gap_nonneg", rep.gap >= 0, f"gap = {rep.gap}"),
    ]
    if not inst.T.is_zero:
        concl.append(_james_equivalence_check(inst, rep))
    return _finish(
        "generic",
        (),
        tuple(concl),
        {"argmax_vertices": rep.argmax_vertices},
        _metrics(rep),
    )


def _metrics(rep: MinimaxReport) -> dict:
    return {
        "op_norm": rep.op_norm,
        "d_global": rep.d_global,
        "d_local": rep.d_local,
        "gap": rep.gap,
    }


def verify_theorem(inst: Instance, which: str) -> VerificationReport:
    """Instance-level check of one of the three structural results:

    thgen: the target is a summand of the codomain whose inherited geometry
    has a parallelotope dual, certified by the instance split; l1prop: the
    domain ball has the independent-extreme-points property; linind: the
    norm-attaining ball vertices of T are linearly independent.

    In each case, when T is orthogonal to the maps into Z, the operator
    distance must equal the pointwise sup and some attaining extreme point
    must have its image orthogonal to Z."""
    if which == "generic":
        return verify_generic(inst)
    if which == "prop1":
        return verify_prop1(inst)
    if which not in THEOREM_KINDS:
        raise ValueError(f"unknown verifier kind {which!r}")
    if inst.T.is_zero:
        return _finish(which, (), (), {}, {}, degenerate=True)

    rep = minimax_report(inst)
    hyp: list[Check] = []
    if which == "thgen":
        factors = summand_factor_spaces(inst)
        hyp.append(
            Check(
                "summand_certificate",
                factors is not None,
                "codomain ball splits as a sup-norm product matching Z"
                if factors is not None
                else "certificate missing or does not reproduce the ball",
            )
        )
        if factors is not None:
            z_factor = factors[0]
            hyp.append(
                Check(
                    "summand_l1_predual",
                    is_l1_predual(z_factor),
                    f"inherited dual ball has {len(z_factor.ball.facets)} "
                    f"vertex pairs in dimension {z_factor.dim}",
                )
            )
        order = operator_smoothness_order(inst.T)
        hyp.append(
            Check(
                "finite_smoothness_order",
                order >= 1,
                f"operator smoothness order {order}",
            )
        )
    elif which == "l1prop":
        hyp.append(
            Check(
                "domain_l1_property",
                has_l1_property(inst.X),
                f"{len(inst.X.ball.vertices)} vertex pairs, "
                f"rank {rank(inst.X.ball.vertices)}",
            )
        )
    else:  # linind
        attaining = norm_attainment_extremes(inst.T)
        hyp.append(
            Check(
                "independent_attainment",
                rank(attaining) == len(attaining),
                f"{len(attaining)} attaining vertex pairs, rank {rank(attaining)}",
            )
        )
    hyp.append(
        Check(
            "T_orthogonal",
            rep.is_T_orthogonal,
            f"d_global = {rep.d_global}, op_norm = {rep.op_norm}",
        )
    )

    concl: list[Check] = [Check("zero_gap", rep.gap == 0, f"gap = {rep.gap}")]
    witnesses: dict = {}
    found = _attaining_orthogonal_vertex(inst, rep.op_norm)
    if found is not None:
        route, x0, functional = found
        witnesses["x0"] = x0
        witnesses["certifying_functional"] = functional
        witnesses["search_route"] = route
        concl.append(
            Check(
                "attaining_orthogonal_witness",
                True,
                f"x0 = {_fmt_vec(x0)} via {route}",
            )
        )
        concl.append(
            Check(
                "witness_implies_orthogonal",
                rep.is_T_orthogonal,
                "an attaining orthogonal image forces distance = norm",
            )
        )
        if which == "linind":
            dist_at = distance_to_subspace(
                inst.Y, inst.T.apply(x0), inst.Z,
                face_dim=False, canonical_witness=False,
            ).distance
            concl.append(
                Check(
                    "distance_at_witness",
                    dist_at == rep.d_global,
                    f"d(Tx0, Z) = {dist_at}",
                )
            )
    else:
        concl.append(
            Check(
                "attaining_orthogonal_witness",
                False,
                "no attaining vertex has image orthogonal to Z",
            )
        )
    if which == "linind":
        double_ann = annihilator(dual_space(inst.Y), annihilator(inst.Y, inst.Z))
        same_span = (
            double_ann.dim == inst.Z.dim
            and rank(tuple(inst.Z.basis) + tuple(double_ann.basis)) == inst.Z.dim
        )
        concl.append(
            Check(
                "biorthogonal_span",
                same_span,
                "annihilator of the annihilator spans Z exactly",
            )
        )
    concl.append(_james_equivalence_check(inst, rep))
    return _finish(which, tuple(hyp), tuple(concl), witnesses, _metrics(rep))


def verify_prop1(inst: Instance) -> VerificationReport:
    """Smooth-difference case: when some best approximation S leaves T - S
    smooth (a single extreme norming pair), the operator distance, the
    pointwise sup, the distance at the unique attaining vertex, and the
    value of the unique annihilating functional at the image all coincide."""
    rep = minimax_report(inst)
    diff = inst.T - rep.best_approx
    if diff.is_zero:
        return _finish("prop1", (), (), {}, _metrics(rep), degenerate=True)
    order = operator_smoothness_order(diff)
    hyp = (
        Check(
            "difference_smooth",
            order == 1,
            f"smoothness order of T - best_S is {order}",
        ),
    )
    attaining = norm_attainment_extremes(diff)
    x0 = attaining[0]
    concl: list[Check] = [
        Check(
            "unique_attaining_pair",
            len(attaining) == 1,
            f"attaining vertex pairs: {len(attaining)}",
        ),
        Check("zero_gap", rep.gap == 0, f"gap = {rep.gap}"),
    ]
    dist_at = distance_to_subspace(
        inst.Y, inst.T.apply(x0), inst.Z, face_dim=False, canonical_witness=False
    ).distance
    concl.append(
        Check(
            "distance_at_witness",
            dist_at == rep.d_global,
            f"d(Tx0, Z) = {dist_at}",
        )
    )
    ss = support_set(inst.Y, diff.apply(x0))
    concl.append(
        Check(
            "unique_support_functional",
            len(ss.extreme_functionals) == 1,
            f"extreme norming functionals at the image: {len(ss.extreme_functionals)}",
        )
    )
    y0 = ss.extreme_functionals[0]
    annihilates = all(dot(y0, z) == 0 for z in inst.Z.basis)
    concl.append(
        Check(
            "functional_annihilates_target",
            annihilates,
            f"y0* = {_fmt_vec(y0)}",
        )
    )
    concl.append(
        Check(
            "functional_is_extreme_dual",
            canonical_sign(y0) in inst.Y.ball.facets,
            "y0* is a dual ball vertex",
        )
    )
    concl.append(
        Check(
            "functional_value",
            dot(y0, inst.T.apply(x0)) == rep.d_global,
            f"y0*(T x0) = {dot(y0, inst.T.apply(x0))}",
        )
    )
    pair_sup = _extremal_pair_sup(inst)
    concl.append(
        Check(
            "extremal_pair_sup",
            pair_sup == rep.d_global,
            f"max over extreme pairs with annihilating functional: {pair_sup}",
        )
    )
    concl.append(_james_equivalence_check(inst, rep))
    witnesses = {"x0": x0, "y0_star": y0}
    return _finish("prop1", hyp, tuple(concl), witnesses, _metrics(rep))


def _extremal_pair_sup(inst: Instance) -> Fraction | None:
    """max y*(T x) over ball vertices x and dual ball vertices y* lying in
    the annihilator of Z, both signs; None when no dual vertex annihilates."""
    best: Fraction | None = None
    for y_star in inst.Y.ball.facets:
        if any(dot(y_star, z) != 0 for z in inst.Z.basis):
            continue
        for v in inst.X.ball.vertices:
            val = abs(dot(y_star, inst.T.apply(v)))
            if best is None or val > best:
                best = val
    return best


@dataclass(frozen=True, slots=True)
class TransferResult:
    """Best approximation of a point transported from the operator level."""

    nearest_point: Vector
    attaining_vertex: Vector
    point_distance: Fraction
    operator_distance: Fraction
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def proximinal_transfer(Y: NormedSpace, Z: Subspace, y, domain_dim: int = 2) -> TransferResult:
    """Produce a nearest point to y in Z out of a best operator approximation.

    Lift y to the rank-one operator x -> (sum of coordinates of x) y on the
    sum-norm domain, take a best approximation S among maps into Z, locate a
    norm-attaining vertex x0 of the difference whose image is orthogonal to
    Z, and scale S x0 back. The outcome is checked exactly against the
    direct distance from y to Z."""
    yv = as_vector(y)
    if Z.ambient != Y:
        raise ValueError("Z must be a subspace of Y")
    if len(yv) != Y.dim:
        raise ValueError("point length differs from the dimension of Y")
    if Z.contains(yv):
        raise ValueError("the point already lies in the target subspace")
    X = space_l1(domain_dim)
    x_star = (_ONE,) * domain_dim  # a dual ball vertex of the sum-norm space
    T = rank_one(X, x_star, yv, Y)
    approx = distance_operator_subspace(T, Z)
    diff = T - approx.best_approx
    if diff.is_zero:
        raise RuntimeError("difference operator vanished although y is outside Z")
    x0 = None
    functional = None
    for v in norm_attainment_extremes(diff):
        ok, func = bj_orthogonal_subspace(Y, diff.apply(v), Z)
        if ok:
            x0, functional = v, func
            break
    if x0 is None:
        raise RuntimeError(
            "no attaining vertex with orthogonal image: the independence "
            "route guarantees one, so this is an internal error"
        )
    scale = dot(x_star, x0)
    z0 = tuple(v / scale for v in approx.best_approx.apply(x0))
    direct = distance_to_subspace(Y, yv, Z, face_dim=False)
    reached = norm(Y, vec_sub(yv, z0))
    checks = (
        Check(
            "transfer_attains_distance",
            reached == direct.distance,
            f"|y - z0| = {reached}, d(y, Z) = {direct.distance}",
        ),
        Check("nearest_point_in_target", Z.contains(z0), f"z0 = {_fmt_vec(z0)}"),
        Check(
            "unit_scaling",
            abs(scale) == 1,
            f"functional value at the attaining vertex: {scale}",
        ),
    )
    return TransferResult(z0, x0, direct.distance, approx.distance, checks)
