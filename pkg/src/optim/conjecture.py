"""Probe of the conjectured constant 4/3 for arbitrary complex and real matrices."""
import json
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

from src.ineq.extremal import extremal_tuple
from src.ineq.functional import FOUR_THIRDS
from src.matcore.matrices import MatrixClass
from src.optim.ratio_search import SearchConfig, SearchReport, maximize_ratio
from src.reporting.reporter import tuple_to_json
from src.utils.config import SearchSettings
from src.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

CONJECTURE_CLASSES = (MatrixClass.GENERAL_COMPLEX, MatrixClass.GENERAL_REAL)


@dataclass
class ConjectureProbe:
    """Search reports per class, flagged against ``4/3 + margin``."""

    m: int
    n: int
    margin: float
    reports: Dict[MatrixClass, SearchReport]

    def exceeds(self, matrix_class: MatrixClass) -> bool:
        """Whether the best ratio of ``matrix_class`` is above ``4/3 + margin``."""
        return self.reports[matrix_class].best_ratio > FOUR_THIRDS + self.margin

    @property
    def counterexample(self) -> bool:
        """True when any searched class exceeds the conjectured constant."""
        return any(self.exceeds(cls) for cls in self.reports)

    @property
    def best_ratio(self) -> float:
        """Best ratio over all searched classes."""
        return max(report.best_ratio for report in self.reports.values())


def explore_conjecture(
    m: int,
    n: int,
    settings: SearchSettings,
    margin: float = 1e-6,
    threads: int = 1,
    classes: Sequence[MatrixClass] = CONJECTURE_CLASSES,
    seed: Optional[int] = None,
) -> ConjectureProbe:
    """Search for tuples with ratio above 4/3 in the general classes.

    The first restart of each class starts at the embedded equality triple,
    so the best ratio is at least 4/3 up to rounding.

    Args:
        m: Tuple length, at least 3
        n: Matrix side, at least 2
        settings: Search budgets
        margin: Tolerance above 4/3 before a candidate is reported
        threads: Worker threads per search
        classes: Classes to search
        seed: Overrides ``settings.seed``

    Returns:
        ConjectureProbe
    """
    if m < 3 or n < 2:
        raise ConfigError(f"the conjecture probe needs m >= 3 and n >= 2, got m={m}, n={n}")
    reports = {}
    for cls in classes:
        cls = MatrixClass(cls)
        cfg = SearchConfig.build(settings, matrix_class=cls, m=m, n=n, threads=threads, seed=seed)
        report = maximize_ratio(cfg, starts=[extremal_tuple(cls, m, n)])
        reports[cls] = report
        if report.best_ratio > FOUR_THIRDS + margin:
            logger.warning(
                f"Counterexample candidate for {cls.value} m={m} n={n}: ratio {report.best_ratio!r}\n"
                f"{json.dumps(tuple_to_json(report.best_tuple), sort_keys=True)}"
            )
        else:
            logger.info(f"Conjecture holds numerically for {cls.value} m={m} n={n}: {report.best_ratio:.12f}")
    return ConjectureProbe(m, n, margin, reports)
