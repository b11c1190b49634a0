"""Command line surface.

Arguments that carry structured data accept inline JSON, `@path` to read a
file, or the shorthand `l1:N` / `linf:N` for the two named space families.
Exit codes: 0 on success, 1 when a verification suite finds a VIOLATION,
2 on invalid input or I/O failure.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .generate import KINDS, GenerationExhausted, generate_instance
from .minimax import (
    Check,
    VerificationReport,
    distance_operator_subspace,
    minimax_report,
    proximinal_transfer,
    verify_generic,
    verify_prop1,
    verify_theorem,
)
from .operators import (
    norm_attainment_extremes,
    operator_norm,
    operator_subspace_basis,
    orthogonality_witness,
)
from .polytope import InvalidPolytope
from .proximity import bj_orthogonal_subspace, bj_orthogonal_vec, distance_to_subspace
from .serialization import (
    DENOMINATOR_CAP,
    DIM_CAP,
    FormatError,
    dumps,
    instance_to_obj,
    matrix_to_obj,
    minimax_report_to_obj,
    operator_to_obj,
    parse_instance,
    parse_operator,
    parse_rational,
    parse_space,
    parse_subspace,
    parse_vector,
    rational_to_str,
    space_to_obj,
    transfer_result_to_obj,
    vector_to_obj,
    verification_report_to_obj,
)
from .spaces import (
    has_l1_property,
    is_l1_predual,
    norm,
    smoothness_order,
    support_set,
)

_VERIFIERS = ("generic", "thgen", "l1prop", "linind", "prop1")


def _load_json_arg(text: str):
    """Inline JSON, or @path to a JSON file, or a bare shorthand string."""
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            return json.load(fh)
    stripped = text.strip()
    if stripped and stripped[0] in "[{\"":
        return json.loads(stripped)
    return text  # shorthand such as l1:2, handled by parse_space


def _space_arg(text: str):
    return parse_space(_load_json_arg(text))


def _vector_arg(text: str):
    obj = _load_json_arg(text)
    if isinstance(obj, str):
        raise FormatError(f"expected a vector, got {obj!r}")
    return parse_vector(obj)


def _emit(args, obj: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        payload = dumps(obj)
    else:
        payload = "\n".join(text_lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _check_lines(checks) -> list[str]:
    out = []
    for c in checks:
        mark = "pass" if c.passed else "FAIL"
        detail = f"  ({c.detail})" if c.detail else ""
        out.append(f"  [{mark}] {c.name}{detail}")
    return out


# ---------------------------------------------------------------- commands


def _cmd_space_info(args) -> int:
    space = _space_arg(args.space)
    dual_vertices = space.ball.facets  # dual ball vertices are the facet reps
    obj = {
        "dim": space.dim,
        "label": space.label,
        "facet_pairs": len(space.ball.facets),
        "vertex_pairs": len(space.ball.vertices),
        "has_l1_property": has_l1_property(space),
        "is_l1_predual": is_l1_predual(space),
        "space": space_to_obj(space),
    }
    lines = [
        f"space {space.label}: dimension {space.dim}",
        f"facet pairs: {len(space.ball.facets)}",
        f"vertex pairs: {len(space.ball.vertices)}",
        f"sum-norm vertex property: {obj['has_l1_property']}",
        f"dual has the sum-norm vertex property: {obj['is_l1_predual']}",
        f"vertices: {matrix_to_obj(space.ball.vertices)}",
        f"facets: {matrix_to_obj(dual_vertices)}",
    ]
    if args.figure:
        from .report import draw_ball_figure

        draw_ball_figure(space, args.figure)
        lines.append(f"figure written to {args.figure}")
    _emit(args, obj, lines)
    return 0


def _cmd_norm(args) -> int:
    space = _space_arg(args.space)
    x = _vector_arg(args.vector)
    value = norm(space, x)
    _emit(args, {"norm": rational_to_str(value)}, [f"norm = {value}"])
    return 0


def _cmd_support_set(args) -> int:
    space = _space_arg(args.space)
    x = _vector_arg(args.vector)
    ss = support_set(space, x)
    obj = {
        "extreme_functionals": matrix_to_obj(ss.extreme_functionals),
        "span_dim": ss.span_dim,
        "smoothness_order": smoothness_order(space, x),
    }
    lines = [
        f"extreme support functionals: {obj['extreme_functionals']}",
        f"span dimension (smoothness order): {ss.span_dim}",
    ]
    _emit(args, obj, lines)
    return 0


def _cmd_bj(args) -> int:
    space = _space_arg(args.space)
    x = _vector_arg(args.x)
    if args.target is not None:
        sub = parse_subspace(_load_json_arg(args.target), space)
        ok, func = bj_orthogonal_subspace(space, x, sub)
        obj = {
            "orthogonal": ok,
            "witness_functional": vector_to_obj(func) if func is not None else None,
        }
        lines = [f"orthogonal to the subspace: {ok}"]
        if func is not None:
            lines.append(f"witness functional: {obj['witness_functional']}")
    elif args.y is not None:
        y = _vector_arg(args.y)
        ok = bj_orthogonal_vec(space, x, y)
        obj = {"orthogonal": ok}
        lines = [f"orthogonal: {ok}"]
    else:
        raise FormatError("bj needs either a second vector or --target")
    _emit(args, obj, lines)
    return 0


def _cmd_dist(args) -> int:
    space = _space_arg(args.space)
    x = _vector_arg(args.x)
    sub = parse_subspace(_load_json_arg(args.target), space)
    res = distance_to_subspace(space, x, sub)
    obj = {
        "distance": rational_to_str(res.distance),
        "coefficients": vector_to_obj(res.coefficients),
        "witness": vector_to_obj(res.witness),
        "optimal_face_dim": res.optimal_face_dim,
    }
    lines = [
        f"distance = {res.distance}",
        f"best approximation = {obj['witness']} (coefficients {obj['coefficients']})",
        f"optimal face dimension = {res.optimal_face_dim}",
    ]
    _emit(args, obj, lines)
    return 0


def _cmd_op_norm(args) -> int:
    domain = _space_arg(args.domain)
    codomain = _space_arg(args.codomain)
    raw = _load_json_arg(args.matrix)
    if not isinstance(raw, dict):
        raw = {"matrix": raw}
    op = parse_operator(raw, domain, codomain)
    value = operator_norm(op)
    attain = norm_attainment_extremes(op) if not op.is_zero else ()
    obj = {
        "op_norm": rational_to_str(value),
        "attaining_vertices": matrix_to_obj(attain),
    }
    lines = [
        f"operator norm = {value}",
        f"attaining ball vertices: {obj['attaining_vertices']}",
    ]
    _emit(args, obj, lines)
    return 0


def _cmd_op_dist(args) -> int:
    inst = parse_instance(_load_json_arg(args.instance))
    res = distance_operator_subspace(inst.T, inst.Z)
    obj = {
        "distance": rational_to_str(res.distance),
        "coefficients": matrix_to_obj(res.coefficients),
        "best_approx": operator_to_obj(res.best_approx),
    }
    lines = [
        f"distance from T to the maps into Z = {res.distance}",
        f"best approximation matrix: {obj['best_approx']['matrix']}",
    ]
    _emit(args, obj, lines)
    return 0


def _cmd_minimax(args) -> int:
    inst = parse_instance(_load_json_arg(args.instance))
    rep = minimax_report(inst)
    obj = minimax_report_to_obj(rep)
    lines = [
        f"operator norm = {rep.op_norm}",
        f"distance to the operator subspace = {rep.d_global}",
        f"largest pointwise distance = {rep.d_local}",
        f"gap = {rep.gap}",
        f"argmax vertices: {obj['argmax_vertices']}",
        f"operator orthogonal to the subspace: {rep.is_T_orthogonal}",
    ]
    if args.figure:
        from .report import draw_minimax_figure

        draw_minimax_figure(rep, args.figure)
        lines.append(f"figure written to {args.figure}")
    _emit(args, obj, lines)
    return 0


def _cmd_witness(args) -> int:
    inst = parse_instance(_load_json_arg(args.instance))
    basis = operator_subspace_basis(inst.X, inst.Z)
    decomp = orthogonality_witness(inst.T, basis)
    if decomp is None:
        obj = {"orthogonal": False, "decomposition": None}
        lines = ["not orthogonal: no convex witness decomposition exists"]
    else:
        obj = {
            "orthogonal": True,
            "decomposition": [
                {
                    "weight": rational_to_str(w),
                    "vertex": vector_to_obj(p.x),
                    "functional": vector_to_obj(p.y_star),
                }
                for w, p in zip(decomp.weights, decomp.pairs)
            ],
        }
        lines = ["orthogonal: convex witness decomposition found"]
        for entry in obj["decomposition"]:
            lines.append(
                f"  weight {entry['weight']}: vertex {entry['vertex']}, "
                f"functional {entry['functional']}"
            )
    _emit(args, obj, lines)
    return 0


def _cmd_transfer(args) -> int:
    Y = _space_arg(args.space)
    Z = parse_subspace(_load_json_arg(args.target), Y)
    y = _vector_arg(args.point)
    res = proximinal_transfer(Y, Z, y, domain_dim=args.domain_dim)
    obj = transfer_result_to_obj(res)
    lines = [
        f"nearest point = {obj['nearest_point']}",
        f"distance = {res.point_distance}",
        f"all checks passed: {res.ok}",
    ] + _check_lines(res.checks)
    _emit(args, obj, lines)
    return 0


def _cmd_gen(args) -> int:
    try:
        inst = generate_instance(args.kind, args.seed, max_dim=args.max_dim,
                                 budget=args.budget)
    except GenerationExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    obj = instance_to_obj(inst)
    lines = [dumps(obj)]  # instances are machine data even in text mode
    _emit(args, obj, lines)
    return 0


# ---------------------------------------------------------------- verify


def _run_one(which: str, seed: int, max_dim: int) -> str:
    """One suite trial: generate, verify, serialize. Runs in worker processes."""
    try:
        inst = generate_instance(which, seed, max_dim=max_dim)
    except GenerationExhausted as exc:
        report = VerificationReport(
            theorem=which,
            status="degenerate",
            hypothesis_checks=(Check("generation", False, str(exc)),),
            conclusion_checks=(),
            witnesses={},
            metrics={},
        )
        obj = verification_report_to_obj(report)
        obj["seed"] = seed
        return dumps(obj)
    if which == "generic":
        report = verify_generic(inst)
    elif which == "prop1":
        report = verify_prop1(inst)
    else:
        report = verify_theorem(inst, which)
    obj = verification_report_to_obj(report)
    obj["seed"] = seed
    return dumps(obj)


def _cmd_verify(args) -> int:
    if args.trials < 1:
        print("error: --trials must be at least 1", file=sys.stderr)
        return 2
    start = time.monotonic()
    seeds = list(range(args.seed, args.seed + args.trials))
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(
                pool.map(_run_one, [args.which] * len(seeds), seeds,
                         [args.max_dim] * len(seeds), chunksize=4)
            )
    else:
        lines = [_run_one(args.which, s, args.max_dim) for s in seeds]
    counts = {"verified": 0, "hypothesis_not_met": 0, "degenerate": 0, "VIOLATION": 0}
    gaps: list[Fraction] = []
    statuses: list[str] = []
    for line in lines:
        obj = json.loads(line)
        statuses.append(obj["status"])
        counts[obj["status"]] += 1
        gap = obj.get("metrics", {}).get("gap")
        if gap is not None:
            gaps.append(parse_rational(gap, cap=None))
    wall = time.monotonic() - start
    manifest = {
        "command": "verify",
        "which": args.which,
        "seed": args.seed,
        "trials": args.trials,
        "max_dim": args.max_dim,
        "dim_cap": DIM_CAP,
        "denominator_cap": DENOMINATOR_CAP,
        "output": args.output or "-",
        "tool_version": __version__,
        "wall_time_seconds": round(wall, 3),
    }
    stream = dumps(manifest) + "\n" + "\n".join(lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(stream)
    else:
        sys.stdout.write(stream)
    if args.figures:
        from .report import draw_suite_figure

        base = args.output if args.output else f"verify-{args.which}-{args.seed}"
        fig_path = base + ".png"
        draw_suite_figure(statuses, gaps, fig_path)
        print(f"figure written to {fig_path}", file=sys.stderr)
    summary = ", ".join(f"{k}={v}" for k, v in counts.items())
    print(f"summary: {summary}", file=sys.stderr)
    return 1 if counts["VIOLATION"] else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyorth",
        description="Exact geometry of polyhedral normed spaces: norms, "
        "orthogonality, best approximations, operator distances, and "
        "batch verification of the minimax distance identity.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--output", help="write the result to this file")

    p = sub.add_parser("space-info", help="describe a space and its unit ball")
    p.add_argument("space", help="space JSON, @file, or l1:N / linf:N")
    p.add_argument("--figure", help="render the ball and its dual to this file (2-D)")
    common(p)
    p.set_defaults(fn=_cmd_space_info)

    p = sub.add_parser("norm", help="evaluate the norm of a vector")
    p.add_argument("space")
    p.add_argument("vector")
    common(p)
    p.set_defaults(fn=_cmd_norm)

    p = sub.add_parser("support-set", help="extreme norming functionals at a point")
    p.add_argument("space")
    p.add_argument("vector")
    common(p)
    p.set_defaults(fn=_cmd_support_set)

    p = sub.add_parser("bj", help="Birkhoff-James orthogonality test")
    p.add_argument("space")
    p.add_argument("x")
    p.add_argument("y", nargs="?", help="second vector (omit when using --target)")
    p.add_argument("--target", help="subspace JSON for orthogonality to a subspace")
    common(p)
    p.set_defaults(fn=_cmd_bj)

    p = sub.add_parser("dist", help="distance and best approximation in a subspace")
    p.add_argument("space")
    p.add_argument("x")
    p.add_argument("--target", required=True, help="subspace JSON")
    common(p)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("op-norm", help="exact operator norm")
    p.add_argument("domain")
    p.add_argument("codomain")
    p.add_argument("matrix", help="matrix JSON (rows) or operator object")
    common(p)
    p.set_defaults(fn=_cmd_op_norm)

    p = sub.add_parser("op-dist", help="distance from T to the maps into Z")
    p.add_argument("instance", help="instance JSON or @file")
    common(p)
    p.set_defaults(fn=_cmd_op_dist)

    p = sub.add_parser("minimax", help="full minimax report for an instance")
    p.add_argument("instance")
    p.add_argument("--figure", help="render per-vertex distance bars to this file")
    common(p)
    p.set_defaults(fn=_cmd_minimax)

    p = sub.add_parser("witness", help="convex orthogonality witness decomposition")
    p.add_argument("instance")
    common(p)
    p.set_defaults(fn=_cmd_witness)

    p = sub.add_parser("transfer", help="nearest point via the operator construction")
    p.add_argument("space", help="ambient space Y")
    p.add_argument("target", help="subspace Z JSON")
    p.add_argument("point", help="the point to approximate")
    p.add_argument("--domain-dim", type=int, default=2)
    common(p)
    p.set_defaults(fn=_cmd_transfer)

    p = sub.add_parser("gen", help="deterministically generate an instance")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--budget", type=int, default=64)
    common(p)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="batch verification suite")
    p.add_argument("which", choices=_VERIFIERS)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", help="write the JSON-lines stream to this file")
    p.add_argument("--figures", action="store_true",
                   help="render a summary figure next to the output")
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_dim", None) is not None and args.command in ("gen", "verify"):
        if not 1 <= args.max_dim <= DIM_CAP:
            print(f"error: --max-dim must be in [1, {DIM_CAP}]", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except (FormatError, InvalidPolytope, ValueError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
