"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 on internal failure.
"""
from __future__ import annotations

import argparse
import sys
from decimal import Decimal, InvalidOperation
from pathlib import Path

from . import files
from .config import AngleMode, ParliamentConfig, SamplingPolicy
from .errors import ValidationError
from .figures import FIGURES
from .freewill import AngleMeasure
from .game import GameParams, estimate_params, game_report
from .parliament import circuit_verify, exact_margin_distribution, monte_carlo


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def parse_grid(text: str) -> list[Decimal]:
    """``start:stop:step`` (inclusive) or a comma list, parsed as decimals."""
    try:
        if ":" in text:
            start, stop, step = (Decimal(part) for part in text.split(":"))
            if step <= 0:
                raise ValidationError(f"grid step must be positive: {text!r}")
            count = int((stop - start) / step)
            grid = [start + k * step for k in range(count + 1)]
        else:
            grid = [Decimal(part) for part in text.split(",")]
    except (InvalidOperation, ValueError):
        raise ValidationError(f"cannot parse radius grid {text!r}") from None
    if not grid or any(not 0 <= r <= 1 for r in grid):
        raise ValidationError(f"radius grid {text!r} must be non-empty within [0, 1]")
    return grid


def _add_config_args(p: argparse.ArgumentParser, scenario=True):
    p.add_argument("--na", type=int, help="seats of party A (for the bill)")
    p.add_argument("--nb", type=int, help="seats of party B (against)")
    p.add_argument("--ni", type=int, default=None, help="independent seats")
    p.add_argument("--ra", type=float, default=None, help="free will radius of party A")
    p.add_argument("--rb", type=float, default=None, help="free will radius of party B")
    p.add_argument("--r", type=float, default=None, help="common radius for both parties")
    p.add_argument("--measure", choices=[m.value for m in AngleMeasure], default=None)
    if scenario:
        p.add_argument("--scenario", type=Path, help="JSON scenario file")


def _add_sampling_args(p: argparse.ArgumentParser, shots: int):
    p.add_argument("--shots", type=int, default=None, help=f"default {shots}")
    p.add_argument("--seed", type=int, default=None, help=f"default ${files.SEED_ENV} or 0")
    p.add_argument("--threads", type=int, default=1)


def _add_output_args(p: argparse.ArgumentParser):
    p.add_argument("--out", type=Path, help="write JSON here instead of stdout")
    p.add_argument("--csv", type=Path, help="also write a CSV table here")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qparliament", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("exact", help="exact margin distribution")
    _add_config_args(p)
    _add_output_args(p)

    p = sub.add_parser("simulate", help="Monte Carlo margin histogram")
    _add_config_args(p)
    p.add_argument("--angle-mode", choices=[m.value for m in AngleMode], default=None)
    _add_sampling_args(p, files.DEFAULT_SHOTS)
    _add_output_args(p)

    p = sub.add_parser("circuit-verify", help="statevector circuit against the product law")
    _add_config_args(p)
    _add_sampling_args(p, files.DEFAULT_SHOTS)
    _add_output_args(p)

    p = sub.add_parser("sweep", help="pass probability over a radius grid")
    _add_config_args(p, scenario=False)
    p.add_argument("--r-grid", required=True, help="start:stop:step or comma list")
    p.add_argument("--vary", choices=["both", "a", "b"], default="both")
    _add_output_args(p)

    p = sub.add_parser("game", help="payoff matrix and equilibria of the stage game")
    p.add_argument("--p", type=float, help="pass probability under equal strategies")
    p.add_argument("--epsilon", type=float, help="success increment of autocracy")
    p.add_argument("--reward", type=float, required=True)
    p.add_argument("--cost", type=float, required=True)
    p.add_argument("--estimate", action="store_true",
                   help="derive p and epsilon from the parliament given by the config flags")
    _add_config_args(p, scenario=False)
    p.add_argument("--out", type=Path)

    p = sub.add_parser("reproduce", help="histogram for a measurement-outcome figure")
    p.add_argument("figure", help=f"one of {', '.join(FIGURES)} or 'all'")
    p.add_argument("--engine", choices=["exact", "mc"], default="mc")
    p.add_argument("--measure", choices=[m.value for m in AngleMeasure], default=None)
    _add_sampling_args(p, files.DEFAULT_SHOTS)
    p.add_argument("--out-dir", type=Path, help="write <figure>.json (and .csv) here")
    return parser


def _scenario_from_args(args, default_shots=files.DEFAULT_SHOTS) -> files.Scenario:
    flags = {k: getattr(args, k, None) for k in ("na", "nb", "ni", "ra", "rb", "r")}
    scenario_path = getattr(args, "scenario", None)
    if scenario_path is not None:
        if any(v is not None for v in flags.values()):
            raise ValidationError("--scenario cannot be combined with seat or radius flags")
        scenario = files.load_scenario(scenario_path)
        config, policy, shots = scenario.config, scenario.policy, scenario.shots
    else:
        if args.na is None or args.nb is None:
            raise ValidationError("--na and --nb are required (or use --scenario)")
        if args.r is not None and (args.ra is not None or args.rb is not None):
            raise ValidationError("--r is exclusive with --ra/--rb")
        r_a = args.r if args.r is not None else (args.ra or 0.0)
        r_b = args.r if args.r is not None else (args.rb or 0.0)
        config = ParliamentConfig(args.na, args.nb, args.ni or 0, r_a, r_b)
        policy = SamplingPolicy(seed=files.default_seed())
        shots = default_shots
    overrides = {}
    if getattr(args, "measure", None):
        overrides["measure"] = AngleMeasure(args.measure)
    if getattr(args, "angle_mode", None):
        overrides["angle_mode"] = AngleMode(args.angle_mode)
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if overrides:
        policy = SamplingPolicy(**{**policy.__dict__, **overrides})
    if getattr(args, "shots", None) is not None:
        shots = args.shots
    if shots < 1:
        raise ValidationError("--shots must be >= 1")
    return files.Scenario(config, policy, shots)


def _emit(payload: dict, args, stdout):
    text = files.dumps(payload)
    if getattr(args, "out", None):
        args.out.write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def _write_csv(path, text):
    if path:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_exact(args, stdout):
    sc = _scenario_from_args(args)
    payload = files.exact_result(exact_margin_distribution(sc.config, sc.policy.measure))
    payload["scenario"] = files.scenario_dict(sc)
    _emit(payload, args, stdout)
    _write_csv(args.csv, files.result_csv(payload))


def _cmd_simulate(args, stdout):
    sc = _scenario_from_args(args)
    payload = files.sampled_result(monte_carlo(sc.config, sc.policy, sc.shots, threads=args.threads))
    payload["scenario"] = files.scenario_dict(sc)
    _emit(payload, args, stdout)
    _write_csv(args.csv, files.result_csv(payload))


def _cmd_circuit_verify(args, stdout):
    sc = _scenario_from_args(args)
    report = circuit_verify(sc.config, sc.policy, sc.shots)
    payload = files.sampled_result(report.result())
    payload.update(
        scenario=files.scenario_dict(sc),
        exact_pmf={str(m): p for m, p in report.exact.pmf.items()},
        tv_distance=report.tv_distance,
        threshold=report.threshold,
        passed=report.passed,
        amplitude_error=report.amplitude_error,
        n_qubits=report.n_qubits,
        angles=[list(a) for a in report.angles],
    )
    _emit(payload, args, stdout)
    _write_csv(args.csv, files.result_csv(payload))


def _cmd_sweep(args, stdout):
    if args.na is None or args.nb is None:
        raise ValidationError("--na and --nb are required")
    measure = AngleMeasure(args.measure) if args.measure else AngleMeasure.THETA_UNIFORM
    base = ParliamentConfig(args.na, args.nb, args.ni or 0, args.ra or 0.0, args.rb or 0.0)
    series = []
    for r in parse_grid(args.r_grid):
        if args.vary == "both":
            config = base.replace(r_a=float(r), r_b=float(r))
        elif args.vary == "a":
            config = base.replace(r_a=float(r))
        else:
            config = base.replace(r_b=float(r))
        series.append({"r": str(r), "p": exact_margin_distribution(config, measure).p_pass()})
    payload = {"n_a": base.n_a, "n_b": base.n_b, "n_i": base.n_i, "vary": args.vary,
               "measure": measure.value, "series": series}
    _emit(payload, args, stdout)
    _write_csv(args.csv, "r,p\n" + "".join(f"{row['r']},{row['p']!r}\n" for row in series))


def _cmd_game(args, stdout):
    estimate = None
    if args.estimate:
        if args.p is not None or args.epsilon is not None:
            raise ValidationError("--estimate is exclusive with --p/--epsilon")
        sc = _scenario_from_args(args)
        estimate = estimate_params(sc.config, sc.policy.measure)
        p, eps = estimate.p, estimate.epsilon
    else:
        if args.p is None or args.epsilon is None:
            raise ValidationError("--p and --epsilon are required without --estimate")
        p, eps = args.p, args.epsilon
    payload = game_report(GameParams(p, eps, args.reward, args.cost))
    if estimate is not None:
        payload["estimate"] = {
            "epsilon_alice": estimate.epsilon_alice,
            "epsilon_bob": estimate.epsilon_bob,
            "degenerate": estimate.degenerate,
        }
    _emit(payload, args, stdout)


def _cmd_reproduce(args, stdout):
    names = list(FIGURES) if args.figure == "all" else [args.figure]
    unknown = [n for n in names if n not in FIGURES]
    if unknown:
        raise ValidationError(f"unknown figure {unknown[0]!r}; choose from {', '.join(FIGURES)}")
    measure = AngleMeasure(args.measure) if args.measure else AngleMeasure.THETA_UNIFORM
    seed = args.seed if args.seed is not None else files.default_seed()
    shots = args.shots if args.shots is not None else files.DEFAULT_SHOTS
    if len(names) > 1 and not args.out_dir:
        raise ValidationError("reproducing several figures needs --out-dir")
    for name in names:
        config = FIGURES[name]
        if args.engine == "exact":
            payload = files.exact_result(exact_margin_distribution(config, measure))
        else:
            policy = SamplingPolicy(measure=measure, seed=seed)
            payload = files.sampled_result(monte_carlo(config, policy, shots, threads=args.threads))
        payload["figure"] = name
        payload["config"] = {"n_a": config.n_a, "n_b": config.n_b, "n_i": config.n_i,
                             "r_a": config.r_a, "r_b": config.r_b}
        if args.out_dir:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            (args.out_dir / f"{name}.json").write_text(files.dumps(payload), encoding="utf-8")
            (args.out_dir / f"{name}.csv").write_text(files.result_csv(payload), encoding="utf-8")
        else:
            stdout.write(files.dumps(payload))


COMMANDS = {
    "exact": _cmd_exact,
    "simulate": _cmd_simulate,
    "circuit-verify": _cmd_circuit_verify,
    "sweep": _cmd_sweep,
    "game": _cmd_game,
    "reproduce": _cmd_reproduce,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        COMMANDS[args.command](args, stdout)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
