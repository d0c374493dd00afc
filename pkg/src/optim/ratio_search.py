"""Multi-start projected-gradient ascent of the DDVV ratio on the unit energy sphere."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from pydantic import Field, ValidationError

from src.basis.bases import class_basis
from src.ineq.functional import evaluate, evaluate_stack
from src.matcore.matrices import MatrixClass, MatrixTuple, project
from src.matcore.sampling import rng_stream, sample_tuple
from src.utils.config import SearchSettings
from src.utils.exceptions import ConfigError, DimensionError, NumericalDegeneracyError, ZeroEnergyError

logger = logging.getLogger(__name__)

FD_STEP = 1e-5
FD_REL_TOL = 1e-5
MIN_STEP = 1e-14
TRACE_COLUMNS = ['restart', 'iteration', 'ratio', 'step']


class SearchConfig(SearchSettings):
    """Search budgets plus the ``(class, m, n)`` being searched."""

    matrix_class: MatrixClass
    m: int = Field(ge=1)
    n: int = Field(ge=1)
    threads: int = Field(1, ge=1)

    @classmethod
    def build(cls, settings: Optional[SearchSettings] = None, **values: Any) -> 'SearchConfig':
        """Merge ``settings`` with explicit values; invalid input raises ``ConfigError``."""
        merged = settings.model_dump() if settings is not None else {}
        merged.update({k: v for k, v in values.items() if v is not None})
        try:
            return cls(**merged)
        except ValidationError as e:
            logger.error(f"Invalid search configuration: {str(e)}")
            raise ConfigError(str(e)) from e


def _ratio_and_gradient(mats: np.ndarray, matrix_class: MatrixClass) -> Tuple[float, np.ndarray]:
    energy = float(np.sum(np.abs(mats) ** 2))
    if energy == 0.0:
        raise ZeroEnergyError("the ratio has no gradient at the zero tuple")
    prod = np.einsum('rxy,syz->rsxz', mats, mats)
    comm = prod - np.swapaxes(prod, 0, 1)
    lhs = float(np.sum(np.abs(comm) ** 2))
    adj = np.conj(np.swapaxes(mats, -1, -2))
    # d lhs / d B_r = 4 sum_s [[B_r, B_s], B_s^*]
    d_lhs = 4.0 * (np.einsum('rsxy,syz->rxz', comm, adj) - np.einsum('sxy,rsyz->rxz', adj, comm))
    grad = d_lhs / energy ** 2 - 4.0 * lhs * mats / energy ** 3
    return lhs / energy ** 2, project(grad, matrix_class)


def ratio_gradient(tup: MatrixTuple) -> np.ndarray:
    """Class-projected gradient of the ratio, shape ``(m, n, n)``."""
    return _ratio_and_gradient(tup.matrices, tup.matrix_class)[1]


def finite_difference_gradient(tup: MatrixTuple, step: float = FD_STEP) -> np.ndarray:
    """Central differences of the ratio along every class-basis direction of every member."""
    basis = class_basis(tup.matrix_class, tup.n)
    mats = tup.matrices
    grad = np.zeros_like(mats)
    for r in range(tup.m):
        for e in basis.elements:
            plus = mats.copy()
            minus = mats.copy()
            plus[r] += step * e
            minus[r] -= step * e
            slope = (evaluate_stack(plus).ratio - evaluate_stack(minus).ratio) / (2.0 * step)
            grad[r] += slope * e
    return grad


@dataclass(frozen=True)
class GradientCheck:
    """Agreement between the analytic and finite-difference gradients."""

    analytic_norm: float
    finite_difference_norm: float
    relative_error: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        """Plain-dict form for reports."""
        return dict(self.__dict__)


def check_gradient(tup: MatrixTuple, step: float = FD_STEP, tol: float = FD_REL_TOL) -> GradientCheck:
    """Compare :func:`ratio_gradient` with central finite differences."""
    analytic = ratio_gradient(tup)
    numeric = finite_difference_gradient(tup, step)
    scale = max(float(np.linalg.norm(numeric)), float(np.linalg.norm(analytic)), 1e-300)
    error = float(np.linalg.norm(analytic - numeric)) / scale
    return GradientCheck(float(np.linalg.norm(analytic)), float(np.linalg.norm(numeric)), error, error <= tol)


@dataclass
class RestartResult:
    """Final state of one restart and its ratio trace."""

    index: int
    ratio: float
    iterations: int
    matrices: np.ndarray
    trace: List[Tuple[int, int, float, float]] = field(default_factory=list)


@dataclass
class SearchReport:
    """Outcome of :func:`maximize_ratio`; ``best_ratio`` is the maximum over restarts."""

    config: SearchConfig
    best_ratio: float
    best_tuple: MatrixTuple
    best_restart: int
    restart_ratios: List[float]
    iterations: List[int]
    gradient_check: Optional[GradientCheck]
    trace: List[Tuple[int, int, float, float]] = field(default_factory=list)

    def trace_frame(self) -> pd.DataFrame:
        """Trace rows as a DataFrame with columns ``restart, iteration, ratio, step``."""
        return pd.DataFrame(self.trace, columns=TRACE_COLUMNS)

    def summary(self) -> Dict[str, Any]:
        """Scalar results of the search, without the tuple."""
        return {
            'best_ratio': self.best_ratio,
            'best_restart': self.best_restart,
            'restart_ratios': self.restart_ratios,
            'iterations': self.iterations,
            'gradient_check': self.gradient_check.to_dict() if self.gradient_check else None,
        }


def _ascend(cfg: SearchConfig, index: int, start: np.ndarray) -> RestartResult:
    energy = float(np.sum(np.abs(start) ** 2))
    if cfg.m < 2 or energy == 0.0:
        return RestartResult(index, 0.0, 0, start)

    x = start / np.sqrt(energy)
    ratio, grad = _ratio_and_gradient(x, cfg.matrix_class)
    step = cfg.step_init
    trace = [(index, 0, ratio, step)]
    iterations = 0
    while iterations < cfg.max_iters and np.linalg.norm(grad) >= cfg.grad_tol:
        accepted = False
        while step >= MIN_STEP:
            y = project(x + step * grad, cfg.matrix_class)
            norm = np.sqrt(float(np.sum(np.abs(y) ** 2)))
            if norm > 0.0:
                y = y / norm
                candidate = evaluate_stack(y).ratio
                if candidate > ratio:
                    accepted = True
                    break
            step *= cfg.step_shrink
        if not accepted:
            break
        iterations += 1
        x = y
        ratio, grad = _ratio_and_gradient(x, cfg.matrix_class)
        trace.append((index, iterations, ratio, step))
        step = min(step / cfg.step_shrink, cfg.step_max)
    logger.debug(f"Restart {index}: ratio {ratio:.12f} after {iterations} iterations")
    return RestartResult(index, ratio, iterations, x, trace)


def _start(cfg: SearchConfig, index: int, starts: Sequence[MatrixTuple]) -> np.ndarray:
    if index < len(starts):
        tup = starts[index]
        if (tup.m, tup.n) != (cfg.m, cfg.n):
            raise DimensionError(f"start {index} has (m, n) = ({tup.m}, {tup.n}), expected ({cfg.m}, {cfg.n})")
        return tup.with_class(cfg.matrix_class).matrices
    return sample_tuple(cfg.matrix_class, cfg.m, cfg.n, rng_stream(cfg.seed, index)).matrices


def maximize_ratio(cfg: SearchConfig, starts: Optional[Sequence[MatrixTuple]] = None) -> SearchReport:
    """Estimate the sharp constant of ``(cfg.matrix_class, cfg.m, cfg.n)``.

    Every restart draws its start from its own stream, so the report depends
    only on ``cfg`` and ``starts``, not on ``cfg.threads``.

    Args:
        cfg: Search configuration
        starts: Optional explicit starts used for the leading restarts

    Returns:
        SearchReport with the best tuple normalized to unit energy
    """
    starts = list(starts or [])
    logger.info(f"Starting ratio search: {cfg.matrix_class.value} m={cfg.m} n={cfg.n}, "
                f"{cfg.restarts} restarts x {cfg.max_iters} iterations")

    check = None
    if cfg.m >= 2 and cfg.matrix_class.dimension(cfg.n) > 0:
        probe = sample_tuple(cfg.matrix_class, cfg.m, cfg.n, rng_stream(cfg.seed, cfg.restarts))
        if float(np.sum(np.abs(probe.matrices) ** 2)) > 0.0:
            check = check_gradient(probe)
            if not check.passed:
                logger.error(f"Analytic gradient disagrees with finite differences "
                             f"(relative error {check.relative_error:.3e})")
                raise NumericalDegeneracyError("ratio gradient failed the finite-difference check")

    restart_starts = [_start(cfg, r, starts) for r in range(cfg.restarts)]
    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        results = list(pool.map(lambda r: _ascend(cfg, r, restart_starts[r]), range(cfg.restarts)))

    best = max(results, key=lambda res: (res.ratio, -res.index))
    best_tuple = MatrixTuple(cfg.matrix_class, project(best.matrices, cfg.matrix_class))
    report = SearchReport(
        config=cfg,
        best_ratio=evaluate(best_tuple).ratio,
        best_tuple=best_tuple,
        best_restart=best.index,
        restart_ratios=[res.ratio for res in results],
        iterations=[res.iterations for res in results],
        gradient_check=check,
        trace=[row for res in results for row in res.trace],
    )
    logger.info(f"Finished ratio search: best ratio {report.best_ratio:.12f} (restart {best.index})")
    return report
