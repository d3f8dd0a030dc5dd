"""Command-line entry point: ``uavroute {plan,curves,gen,oracle}``.

Exit codes: 0 success / feasible plan, 1 usage or I/O error, 2 planning
failure (infeasible best path, or no oracle path).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path as FsPath

from . import constants as C
from .cost import CostWeights
from .errors import GenerationFailed, GoalBlocked, NoPath, ScenarioSyntaxError, StartBlocked, ValidationError
from .oracle import GridSpec, grid_shortest_path
from .path_model import EncodingSpec
from .pso import PsoConfig, optimize
from .reporting import render_svg, write_convergence_csv
from .scenario import ComplexityClass, generate_scenario, parse_scenario, serialize_scenario

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _u64(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed out of range: {text}")
    return v


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg_float(text):
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative number, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="uavroute", description="Threat-aware UAV route planning.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def source(sp, generate_help="generate a scenario of class low|medium|high"):
        sp.add_argument("--scenario", help="scenario file")
        sp.add_argument("--generate", help=generate_help)
        sp.add_argument("--seed", type=_u64, default=0)

    def swarm(sp):
        sp.add_argument("--iters", type=_positive_int, default=C.ITERATIONS)
        sp.add_argument("--swarm", type=int, default=C.SWARM_SIZE)
        sp.add_argument("--waypoints", type=_positive_int, default=C.N_WAYPOINTS)
        sp.add_argument("--w-threat", type=_nonneg_float, default=C.W_THREAT)
        sp.add_argument("--w-bounds", type=_nonneg_float, default=C.W_BOUNDS)
        sp.add_argument("--workers", type=int, default=1, help="threads for cost evaluation")

    plan = sub.add_parser("plan", help="optimize one scenario")
    source(plan)
    swarm(plan)
    plan.add_argument("--oracle", action="store_true", help="also run the grid planner")
    plan.add_argument("--resolution", type=float, default=C.ORACLE_RESOLUTION)
    plan.add_argument("--out", default="uavroute-out")

    curves = sub.add_parser("curves", help="convergence curves over classes and seeds")
    curves.add_argument("--generate", default="low,medium,high", help="comma-separated classes")
    curves.add_argument("--seed", type=_u64, default=0)
    curves.add_argument("--reps", type=_positive_int, default=1)
    swarm(curves)
    curves.add_argument("--out", default="uavroute-out")

    gen = sub.add_parser("gen", help="write a generated scenario file")
    gen.add_argument("--generate", required=True)
    gen.add_argument("--seed", type=_u64, default=0)
    gen.add_argument("--out", help="directory; prints to stdout when omitted")

    orc = sub.add_parser("oracle", help="run the grid planner alone")
    source(orc)
    orc.add_argument("--resolution", type=float, default=C.ORACLE_RESOLUTION)
    orc.add_argument("--out", help="directory for oracle.txt")
    return p


def _load_scenario(args):
    if (args.scenario is None) == (args.generate is None):
        raise UsageError("give exactly one of --scenario or --generate")
    if args.scenario is not None:
        try:
            text = FsPath(args.scenario).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read scenario {args.scenario}: {exc.strerror or exc}") from None
        try:
            return parse_scenario(text)
        except (ScenarioSyntaxError, ValidationError) as exc:
            raise UsageError(f"{args.scenario}: {exc}") from None
    return generate_scenario(_complexity(args.generate), args.seed)


def _complexity(text):
    try:
        return ComplexityClass.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _configs(args, scenario, seed):
    try:
        config = PsoConfig(swarm_size=args.swarm, iterations=args.iters, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    spec = EncodingSpec(args.waypoints, scenario.bounds)
    weights = CostWeights(w_threat=args.w_threat, w_bounds=args.w_bounds)
    return spec, config, weights


def _outdir(path):
    out = FsPath(path)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create output directory {out}: {exc.strerror or exc}") from None
    return out


def _report_text(scenario, report, spec, weights, source):
    b = report.best_breakdown
    cfg = report.config
    lines = [
        f"scenario: {scenario.name}",
        f"source: {source}",
        f"best_length: {b.length:.6g}",
        f"best_total: {b.total:.6g}",
        f"threat_violation: {b.threat_violation:.6g}",
        f"bounds_violation: {b.bounds_violation:.6g}",
        f"feasible: {'yes' if report.feasible else 'no'}",
        f"seed: {cfg.seed}",
        f"iterations: {cfg.iterations}",
        f"swarm_size: {cfg.swarm_size}",
        f"inertia_w: {cfg.inertia_w}",
        f"cognitive_c1: {cfg.cognitive_c1}",
        f"social_c2: {cfg.social_c2}",
        f"v_max_fraction: {cfg.v_max_fraction}",
        f"waypoints: {spec.n_waypoints}",
        f"w_threat: {weights.w_threat}",
        f"w_bounds: {weights.w_bounds}",
        f"samples_per_segment: {weights.samples}",
    ]
    return "\n".join(lines) + "\n"


def cmd_plan(args) -> int:
    scenario = _load_scenario(args)
    spec, config, weights = _configs(args, scenario, args.seed)
    if args.oracle and not args.resolution > 0:
        raise UsageError(f"resolution must be > 0, got {args.resolution}")
    out = _outdir(args.out)
    report = optimize(scenario, spec, config, weights, workers=args.workers)
    source = args.scenario if args.scenario else f"generate {args.generate} seed {args.seed}"
    (out / "path.svg").write_text(render_svg(scenario, report.best_path), encoding="utf-8", newline="\n")
    (out / "convergence.csv").write_text(write_convergence_csv(report.history), encoding="utf-8", newline="\n")
    (out / "report.txt").write_text(_report_text(scenario, report, spec, weights, source), encoding="utf-8", newline="\n")
    if args.oracle:
        try:
            _, length = grid_shortest_path(scenario, GridSpec(args.resolution))
            text = (
                f"resolution: {args.resolution:.6g}\n"
                f"oracle_length: {length:.6g}\n"
                f"pso_length: {report.best_breakdown.length:.6g}\n"
                f"pso_oracle_ratio: {report.best_breakdown.length / length:.6g}\n"
            )
        except (NoPath, StartBlocked, GoalBlocked) as exc:
            text = f"resolution: {args.resolution:.6g}\noracle_length: none\nreason: {exc}\n"
        (out / "oracle.txt").write_text(text, encoding="utf-8", newline="\n")
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_curves(args) -> int:
    classes = [_complexity(c) for c in args.generate.split(",") if c.strip()]
    if not classes:
        raise UsageError("no complexity classes given")
    out = _outdir(args.out)
    rows = ["class,seed,iteration,best_total,best_length"]
    all_feasible = True
    for cls in classes:
        for seed in range(args.seed, args.seed + args.reps):
            scenario = generate_scenario(cls, seed)
            spec, config, weights = _configs(args, scenario, seed)
            report = optimize(scenario, spec, config, weights, workers=args.workers)
            all_feasible &= report.feasible
            for it, total, length in report.history:
                rows.append(f"{cls.value},{seed},{it},{total:.6g},{length:.6g}")
            (out / f"path_{cls.value}_{seed}.svg").write_text(
                render_svg(scenario, report.best_path), encoding="utf-8", newline="\n"
            )
    (out / "curves.csv").write_text("\n".join(rows) + "\n", encoding="utf-8", newline="\n")
    return EXIT_OK if all_feasible else EXIT_INFEASIBLE


def cmd_gen(args) -> int:
    cls = _complexity(args.generate)
    text = serialize_scenario(generate_scenario(cls, args.seed))
    if args.out is None:
        sys.stdout.write(text)
    else:
        target = _outdir(args.out) / f"scenario_{cls.value}_{args.seed}.txt"
        target.write_text(text, encoding="utf-8", newline="\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    scenario = _load_scenario(args)
    try:
        spec = GridSpec(args.resolution)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    try:
        _, length = grid_shortest_path(scenario, spec)
    except (NoPath, StartBlocked, GoalBlocked) as exc:
        print(f"oracle: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    text = f"resolution: {args.resolution:.6g}\noracle_length: {length:.6g}\n"
    if args.out:
        (_outdir(args.out) / "oracle.txt").write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(text)
    return EXIT_OK


COMMANDS = {"plan": cmd_plan, "curves": cmd_curves, "gen": cmd_gen, "oracle": cmd_oracle}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"uavroute: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except GenerationFailed as exc:
        print(f"uavroute: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"uavroute: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
