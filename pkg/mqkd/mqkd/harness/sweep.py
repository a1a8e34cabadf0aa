"""
Attack campaigns over a grid of strategies.

A grid file is YAML::

    n_rounds: 10000
    strategies:
      - null
      - intercept_resend:X:AliceToBob
    collective:
      - base: pass_through
        overrides:
          a2: [0.0, 0.1, 0.2]

Every entry of ``strategies`` is one point; every ``collective`` block
expands to the product of its override lists.
"""
import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import yaml

from mqkd.adversary.collective import CollectiveAttack
from mqkd.adversary.params import format_complex, parse_complex
from mqkd.adversary.analysis import no_detection_residual
from mqkd.adversary.report import as_hook, attack_report
from mqkd.constants import Defaults
from mqkd.harness.config import ConfigError
from mqkd.utils.logging import logger
from mqkd.utils.misc import product_dict

ROW_COLUMNS = [
    'point', 'strategy', 'overrides', 'residual',
    'exact_detection', 'exact_mismatch', 'leakage_bits',
    'empirical_detection', 'empirical_mismatch', 'error',
]


@dataclass(frozen=True)
class SweepPoint:
    strategy: Optional[str] = None
    base: Optional[str] = None
    overrides: Dict[str, Any] = field(default_factory=dict)

    def label(self) -> str:
        if self.base is None:
            return str(self.strategy)
        return f'collective:{self.base}'

    def overrides_text(self) -> str:
        return ' '.join(f'{name}={format_complex(parse_complex(value))}' for name, value in self.overrides.items())

    def build(self):
        if self.base is None:
            return as_hook(self.strategy)
        params = CollectiveAttack.from_descriptor_args(self.base.split(':')).params
        if self.overrides:
            params = params.with_overrides(**{name: parse_complex(value) for name, value in self.overrides.items()})
        return CollectiveAttack(params)


def load_grid(path: str) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        grid = yaml.safe_load(f)
    if not isinstance(grid, dict):
        raise ConfigError(f"{path}: a sweep grid must be a mapping")
    return grid


def expand_grid(grid: Dict[str, Any]) -> List[SweepPoint]:
    unknown = set(grid) - {'n_rounds', 'strategies', 'collective'}
    if unknown:
        raise ConfigError(f"Unknown sweep grid keys {sorted(unknown)}")
    points = [SweepPoint(strategy='null' if s is None else str(s)) for s in grid.get('strategies') or []]
    for block in grid.get('collective') or []:
        if not isinstance(block, dict):
            raise ConfigError(f"collective grid entries must be mappings, got {block!r}")
        base = str(block.get('base', 'pass_through'))
        overrides = block.get('overrides') or {}
        axes = {name: values if isinstance(values, list) else [values] for name, values in overrides.items()}
        for instance in product_dict(**axes):
            points.append(SweepPoint(base=base, overrides=instance))
    if not points:
        raise ConfigError("The sweep grid is empty")
    return points


def evaluate_point(index: int, point: SweepPoint, n_rounds: int, seed: int) -> Dict[str, Any]:
    """One row of the sweep; failures are reported in the row's ``error`` column."""
    row = dict.fromkeys(ROW_COLUMNS)
    row.update(point=index, strategy=point.label(), overrides='', error='')
    try:
        row['overrides'] = point.overrides_text()
        hook = point.build()
        row['strategy'] = hook.descriptor()
        if isinstance(hook, CollectiveAttack):
            row['residual'] = no_detection_residual(hook.params)
        exact = hook.exact_statistics()
        empirical = attack_report(hook, n_rounds, seed)
        row.update(
            exact_detection=exact.detection_prob_case1,
            exact_mismatch=exact.disclosed_mismatch_prob,
            leakage_bits=exact.leakage_bits,
            empirical_detection=empirical.detection_prob_case1,
            empirical_mismatch=empirical.disclosed_mismatch_prob,
        )
    except (ValueError, OSError) as err:
        logger.warning(f"Sweep point {index} ({point.label()}) failed: {err}")
        row['error'] = f'{err.__class__.__name__}: {err}'
    return row


def _evaluate_args(args):
    return evaluate_point(*args)


def sweep_attacks(grid, seed: int = Defaults.SEED, n_rounds: Optional[int] = None, n_workers: int = 1):
    """Evaluate every grid point under the same seed; rows come back in grid order.

    Args:
        grid: a grid mapping or the path of a YAML grid file.
        seed: session seed shared by all points.
        n_rounds: rounds per point; defaults to the grid's ``n_rounds``.
        n_workers: evaluate points in this many spawned processes.
    """
    if isinstance(grid, str):
        grid = load_grid(grid)
    points = expand_grid(grid)
    n_rounds = n_rounds or int(grid.get('n_rounds', Defaults.ATTACK_ROUNDS))
    logger.info(f"Sweeping {len(points)} attack points, {n_rounds} rounds each (seed={seed})")
    jobs = [(index, point, n_rounds, seed) for index, point in enumerate(points)]
    if n_workers > 1:
        context = multiprocessing.get_context('spawn')
        with ProcessPoolExecutor(max_workers=n_workers, mp_context=context) as executor:
            return list(executor.map(_evaluate_args, jobs))
    return [_evaluate_args(job) for job in jobs]
