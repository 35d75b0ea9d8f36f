"""bloch-lab command line.

    bloch-lab constants
    bloch-lab seminorm --map log_fixture
    bloch-lab verify --kind theorem1 --trials 1000 --seed 7
    bloch-lab sharpness --kind theorem1 --trials 10000
    bloch-lab witness

Exit codes: 0 on success, 1 on usage or runtime errors, 2 when a
certification campaign records a violation.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import settings
from .bounds import constant_set
from .codex import EstimateCodex, MapCodex
from .exceptions import BlochLabError
from .seminorms import (
    SupConfig,
    bloch_type_seminorm,
    dilatation_sup,
    harmonic_bloch_norm,
    harmonic_bloch_seminorm,
    quasiregularity_constant,
)
from .verify import (
    CampaignKind,
    CampaignReport,
    non_lipschitz_witness,
    run_campaign,
    sharpness_search,
)

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("constants", "seminorm", "verify", "sharpness", "witness")
CSV_SUBCOMMANDS = ("verify", "sharpness")
WITNESS_POINTS = (0.9, 0.99, 0.999)
EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    seed: int = settings.DEFAULT_SEED
    trials: int = 1000
    kind: str = CampaignKind.THEOREM1.value
    map_source: str = "log_fixture"
    k: float | None = None
    output_path: Path | None = None
    format: str = "json"
    threads: int = 0
    grid_radial: int = settings.N_RADIAL
    grid_angular: int = settings.N_ANGULAR
    timing: bool = False
    bound_scale: float = 1.0

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.trials < 1:
            raise UsageError(
                f"--trials must be at least 1, got {self.trials}"
            )
        if self.format == "csv" and self.subcommand not in CSV_SUBCOMMANDS:
            raise UsageError(
                f"--format csv is not available for {self.subcommand}"
            )
        if self.threads < 0:
            raise UsageError("--threads must be non-negative")
        if self.k is not None and not 0.0 < self.k < 1.0:
            raise UsageError(f"--k must lie in (0, 1), got {self.k}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        threads = args.threads
        if threads is None:
            threads = settings.env_threads()
        return cls(
            subcommand=args.subcommand,
            seed=args.seed,
            trials=args.trials,
            kind=args.kind,
            map_source=args.map,
            k=args.k,
            output_path=args.output,
            format=args.format,
            threads=threads,
            grid_radial=args.grid_radial,
            grid_angular=args.grid_angular,
            timing=args.timing,
            bound_scale=args.bound_scale,
        )

    def sup_config(self) -> SupConfig:
        return SupConfig(
            n_radial=self.grid_radial, n_angular=self.grid_angular
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bloch-lab",
        description=(
            "Bloch seminorms of harmonic maps and numerical certification "
            "of their Lipschitz estimates in the pseudo-hyperbolic metric."
        ),
    )
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument(
        "--kind",
        choices=[kind.value for kind in CampaignKind],
        default=CampaignKind.THEOREM1.value,
        help="Estimate to certify (verify, sharpness)",
    )
    parser.add_argument(
        "--map",
        default="log_fixture",
        help="JSON file with the map, or 'log_fixture' (seminorm)",
    )
    parser.add_argument(
        "--k",
        type=float,
        default=None,
        help="Dilatation bound of quasiregular trials",
    )
    parser.add_argument("--output", type=Path, default=None)
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="Worker processes, 0 for auto (default: $BLOCH_LAB_THREADS or 0)",
    )
    parser.add_argument("--grid-radial", type=int, default=settings.N_RADIAL)
    parser.add_argument(
        "--grid-angular", type=int, default=settings.N_ANGULAR
    )
    parser.add_argument(
        "--timing",
        action="store_true",
        help="Include runtime_ms in campaign reports",
    )
    parser.add_argument("--verbose", "-v", action="count", default=0)
    # scales every certified constant; used to check the exit-code contract
    parser.add_argument(
        "--bound-scale", type=float, default=1.0, help=argparse.SUPPRESS
    )
    return parser


def _configure_logging(verbosity: int) -> None:
    level = settings.env_log_level()
    if verbosity == 1:
        level = "INFO"
    elif verbosity > 1:
        level = "DEBUG"
    logging.basicConfig(
        stream=sys.stderr,
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _constants(config: CliConfig) -> tuple[str, int]:
    return json.dumps(constant_set().to_dict(), indent=2), EXIT_OK


def _seminorm(config: CliConfig) -> tuple[str, int]:
    f = MapCodex.load(config.map_source)
    cfg = config.sup_config()
    estimate = harmonic_bloch_seminorm(f, cfg)
    payload = EstimateCodex.estimate2json(estimate)
    payload["map"] = MapCodex.map2json(f)
    payload["harmonic_bloch_norm"] = harmonic_bloch_norm(f, cfg)
    payload["bloch_type"] = EstimateCodex.estimate2json(
        bloch_type_seminorm(f, cfg)
    )
    try:
        payload["dilatation_sup"] = dilatation_sup(f, r_max=cfg.r_max)
        payload["quasiregularity_constant"] = quasiregularity_constant(
            f, cfg
        )
    except BlochLabError as error:
        # analytic maps and maps with critical points have no finite K
        logger.info("map is not quasiregular on the grid: %s", error)
        payload["quasiregularity_constant"] = None
    return json.dumps(payload, indent=2), EXIT_OK


def _report_output(
    report: CampaignReport, config: CliConfig
) -> tuple[str, int]:
    if config.format == "csv":
        text = report.to_csv()
    else:
        text = report.to_json(include_runtime=config.timing)
    if not report.records:
        print(
            f"bloch-lab: error: all {len(report.errors)} trials failed",
            file=sys.stderr,
        )
        return text, EXIT_ERROR
    return text, EXIT_VIOLATION if report.violations else EXIT_OK


def _verify(config: CliConfig) -> tuple[str, int]:
    report = run_campaign(
        config.kind,
        seed=config.seed,
        n_trials=config.trials,
        cfg=config.sup_config(),
        threads=config.threads,
        k=config.k,
        bound_scale=config.bound_scale,
    )
    return _report_output(report, config)


def _sharpness(config: CliConfig) -> tuple[str, int]:
    if config.kind not in ("theorem1", "theorem2", "theorem_a"):
        raise UsageError("sharpness supports theorem1, theorem2, theorem_a")
    report = sharpness_search(
        "theorem2" if config.kind == "theorem2" else "theorem1",
        seed=config.seed,
        budget=max(config.trials, 100),
        analytic=config.kind == "theorem_a",
    )
    # an empirical maximum above the constant would refute the estimate
    return _report_output(report, config)


def _witness(config: CliConfig) -> tuple[str, int]:
    rows = []
    for x in WITNESS_POINTS:
        t = (1.0 - x) / 100.0
        quotient, reference = non_lipschitz_witness(x, t)
        rows.append(
            {"x": x, "t": t, "quotient": quotient, "reference": reference}
        )
    return json.dumps(rows, indent=2), EXIT_OK


HANDLERS = {
    "constants": _constants,
    "seminorm": _seminorm,
    "verify": _verify,
    "sharpness": _sharpness,
    "witness": _witness,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code == 0 else EXIT_ERROR
    _configure_logging(args.verbose)
    try:
        config = CliConfig.from_args(args)
        text, code = HANDLERS[config.subcommand](config)
    except (UsageError, ValueError) as error:
        print(f"bloch-lab: error: {error}", file=sys.stderr)
        return EXIT_ERROR
    text = text.rstrip("\n") + "\n"
    if config.output_path is None:
        sys.stdout.write(text)
        return code
    try:
        config.output_path.write_text(text, encoding="utf-8")
    except OSError as error:
        print(f"bloch-lab: error: {error}", file=sys.stderr)
        return EXIT_ERROR
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
