import sys

import yaml

from app.core.config import settings
from app.density.experiment import density_experiment, write_csv
from app.logger.logger import setup_logger
from app.schemas.density import DensityConfig

logger = setup_logger(__name__)

_FLAGS = ["n", "kind", "trials", "epsilon", "seed", "kmax", "denominator_cap", "workers"]


def register(subparsers) -> None:
    parser = subparsers.add_parser("density", help="seeded density experiment")
    actions = parser.add_subparsers(dest="action", required=True)
    run = actions.add_parser("run", help="write one CSV row per trial")
    run.add_argument("--config", default=None, help="YAML or JSON file with the flags below")
    run.add_argument("--n", type=int)
    run.add_argument("--kind", choices=["hilbert", "hilb", "kummer"])
    run.add_argument("--trials", type=int)
    run.add_argument("--epsilon", type=float)
    run.add_argument("--seed", type=int, help=f"defaults to LATDENSE_SEED ({settings.LATDENSE_SEED})")
    run.add_argument("--kmax", type=int)
    run.add_argument(
        "--denominator-cap", dest="denominator_cap", type=int, help="largest denominator when rounding sampled planes"
    )
    run.add_argument("--workers", type=int)
    run.add_argument("--out", default=None, help="CSV file; stdout when omitted")
    run.add_argument("--no-timing", dest="timing", action="store_false", help="write millis as 0")
    run.set_defaults(handler=density_run, timing=True)


def load_config(args) -> DensityConfig:
    """Config file values overridden by explicit flags."""
    values = {}
    if args.config:
        with open(args.config, encoding="utf-8") as f:
            values = yaml.safe_load(f) or {}
        if not isinstance(values, dict):
            raise ValueError(f"config {args.config} is not a mapping")
    for flag in _FLAGS:
        value = getattr(args, flag, None)
        if value is not None:
            values[flag] = value
    if not args.timing:
        values["timing"] = False
    values.setdefault("workers", settings.DENSITY_WORKERS)
    return DensityConfig.model_validate(values)


def density_run(args) -> None:
    config = load_config(args)
    rows = density_experiment(
        config.n,
        config.kind,
        config.trials,
        config.epsilon,
        seed=config.seed,
        kmax=config.kmax,
        denominator_cap=config.denominator_cap,
        workers=config.workers,
        timing=config.timing,
    )
    failed = sum(1 for row in rows if row.error)
    logger.info(f"Эксперимент завершён: {len(rows)} испытаний, с ошибками {failed}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as f:
            write_csv(rows, f)
    else:
        write_csv(rows, sys.stdout)
