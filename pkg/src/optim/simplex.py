"""Maximization of the quadratic form ``f_Q`` over the probability simplex."""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.basis.bases import BasisRotation
from src.ineq.functional import QuadraticForm
from src.matcore.sampling import rng_stream
from src.utils.config import SimplexSettings
from src.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

SIMPLEX_TOL = 1e-12


def project_to_simplex(v: np.ndarray, total: float = 1.0) -> np.ndarray:
    """Euclidean projection onto ``{x >= 0, sum x = total}`` (sort-based)."""
    v = np.asarray(v, dtype=np.float64)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - total
    ks = np.arange(1, v.size + 1)
    rho = np.flatnonzero(u - css / ks > 0)[-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def project_to_interior(v: np.ndarray, epsilon: float) -> np.ndarray:
    """Projection onto ``{x >= epsilon, sum x = 1}``."""
    v = np.asarray(v, dtype=np.float64)
    if epsilon == 0.0:
        return project_to_simplex(v)
    remaining = 1.0 - v.size * epsilon
    if remaining < 0:
        raise ConfigError(f"epsilon={epsilon} leaves no room on a simplex of dimension {v.size}")
    return epsilon + project_to_simplex(v - epsilon, remaining)


def is_simplex_point(x: np.ndarray, epsilon: float = 0.0) -> bool:
    """Whether ``x`` lies in the simplex, shrunk to ``x >= epsilon`` when ``epsilon > 0``."""
    x = np.asarray(x, dtype=np.float64)
    return bool(np.all(x >= epsilon - SIMPLEX_TOL) and abs(np.sum(x) - 1.0) <= SIMPLEX_TOL)


@dataclass(frozen=True)
class SimplexMaximum:
    """Best local maximum found; a lower bound on the supremum."""

    value: float
    x: np.ndarray
    start: int
    starts: int


def maximize_fq(
    rotation: BasisRotation,
    n: int,
    settings: SimplexSettings,
    seed: int = 0,
    epsilon: Optional[float] = None,
) -> SimplexMaximum:
    """Projected-gradient ascent of ``f_Q`` from every vertex and from random interior points.

    The step ``1 / L`` (``L`` the gradient's Lipschitz constant) makes every
    iteration an ascent step.

    Args:
        rotation: Basis rotation ``Q`` with side ``n^2``
        n: Matrix side
        settings: Iteration and restart budgets
        seed: Root seed of the random starts
        epsilon: Lower bound on every coordinate; defaults to ``settings.epsilon``

    Returns:
        SimplexMaximum
    """
    form = QuadraticForm(rotation, n)
    size = form.size
    epsilon = settings.epsilon if epsilon is None else epsilon
    step = 1.0 / form.lipschitz

    starts = [np.eye(size)[k] for k in range(size)]
    starts += [rng_stream(seed, k).dirichlet(np.ones(size)) for k in range(settings.restarts)]

    best = None
    for index, x in enumerate(starts):
        x = project_to_interior(x, epsilon)
        for _ in range(settings.max_iters):
            x_next = project_to_interior(x + step * form.gradient(x), epsilon)
            moved = np.linalg.norm(x_next - x)
            x = x_next
            if moved <= settings.tol:
                break
        value = form.value(x)
        if best is None or value > best.value:
            best = SimplexMaximum(value, x, index, len(starts))
    logger.debug(f"f_Q maximum {best.value:.3e} over {len(starts)} starts (n={n}, epsilon={epsilon})")
    return best
