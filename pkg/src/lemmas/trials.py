"""Randomized falsification harness for the four spectral and basis lemmas."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, List, Optional

import numpy as np

from src.basis.bases import BasisRotation
from src.lemmas.basis_lemmas import (
    FOUR_THIRDS,
    commutator_row,
    lemma3_lhs,
    lemma3_maximizing_subset,
    lemma3_spectral_form,
    lemma4_lhs,
)
from src.lemmas.spectrum import LEMMA2_BOUND, SpectrumVector, check_lemma1, lemma2_lhs
from src.matcore.sampling import rng_stream, sample_orthogonal
from src.utils.config import LemmaSettings

AGREEMENT_TOL = 1e-9
LEMMA2_SLACK = 1e-12
BASIS_SLACK = 1e-9
CHUNK_SIZE = 1000

LEMMAS = ('lemma1', 'lemma2', 'lemma3', 'lemma4')


@dataclass
class LemmaTrialResult:
    """Outcome of the trials of one lemma at one ``n``.

    ``max_value`` is the largest left-hand side observed (1.0 per passing trial
    for the boolean first lemma); ``disagreements`` counts trials where a direct
    sum and its closed form differ by more than the agreement tolerance.
    """

    lemma: str
    n: int
    trials: int
    bound: float
    violations: int = 0
    disagreements: int = 0
    max_value: float = float('-inf')

    @property
    def slack(self) -> float:
        """Distance from the largest observed value to the bound."""
        return self.bound - self.max_value

    @property
    def passed(self) -> bool:
        """No violations and no disagreements between forms."""
        return self.violations == 0 and self.disagreements == 0

    def merge(self, other: 'LemmaTrialResult') -> None:
        """Fold the counts of another chunk into this result."""
        self.violations += other.violations
        self.disagreements += other.disagreements
        self.max_value = max(self.max_value, other.max_value)

    def to_dict(self) -> Dict[str, Any]:
        """Plain-dict form for reports."""
        out = asdict(self)
        out['slack'] = self.slack
        out['passed'] = self.passed
        return out


def _random_spectrum(n: int, rng: np.random.Generator) -> SpectrumVector:
    # Half the draws concentrate weight on the extremes, where large gaps occur
    values = rng.standard_normal(n)
    if n >= 2 and rng.random() < 0.5:
        values[0] += 2.0 * abs(rng.standard_normal())
        values[-1] -= 2.0 * abs(rng.standard_normal())
    return SpectrumVector.from_values(values)


class LemmaTrialRunner:
    """Runs seeded trials of each lemma; every trial owns its RNG stream."""

    def __init__(self, settings: LemmaSettings, seed: int, max_workers: int = 1):
        """Initialize the trial runner.

        Args:
            settings: Trial count and default ``n`` range
            seed: Root seed of all trial streams
            max_workers: Thread pool size for trial chunks
        """
        self.settings = settings
        self.seed = seed
        self.max_workers = max_workers
        self.logger = logging.getLogger(__name__)

    def _trial(self, lemma: str, n: int, t: int, result: LemmaTrialResult) -> None:
        rng = rng_stream(self.seed, n, LEMMAS.index(lemma), t)
        if lemma == 'lemma1':
            ok = check_lemma1(_random_spectrum(n, rng))
            result.max_value = max(result.max_value, 1.0 if ok else 0.0)
            result.violations += int(not ok)
            return
        if lemma == 'lemma2':
            value = lemma2_lhs(_random_spectrum(n, rng))
            result.max_value = max(result.max_value, value)
            result.violations += int(value > LEMMA2_BOUND + LEMMA2_SLACK)
            return

        rotation = BasisRotation(sample_orthogonal(n * n, rng))
        alpha = int(rng.integers(1, n * n + 1))
        if lemma == 'lemma3':
            # the maximizing subset plus a random one exercise the general statement
            random_subset = np.flatnonzero(rng.random(n * n) < 0.5) + 1
            for subset in (lemma3_maximizing_subset(rotation, alpha, n), random_subset):
                direct = lemma3_lhs(rotation, alpha, subset, n)
                spectral = lemma3_spectral_form(rotation, alpha, subset, n)
                result.disagreements += int(abs(direct - spectral) > AGREEMENT_TOL)
                result.max_value = max(result.max_value, direct)
                result.violations += int(direct > FOUR_THIRDS + BASIS_SLACK)
            return

        value = lemma4_lhs(rotation, alpha, n, row=commutator_row(rotation, alpha, n))
        result.disagreements += int(value.deviation > AGREEMENT_TOL)
        result.max_value = max(result.max_value, value.direct)
        result.violations += int(value.direct > 2.0 * n + BASIS_SLACK)

    def _chunk(self, lemma: str, n: int, start: int, stop: int, bound: float) -> LemmaTrialResult:
        result = LemmaTrialResult(lemma, n, stop - start, bound)
        for t in range(start, stop):
            self._trial(lemma, n, t, result)
        return result

    def run_lemma(self, lemma: str, n: int, trials: Optional[int] = None) -> LemmaTrialResult:
        """Run ``trials`` seeded trials of ``lemma`` at size ``n``."""
        trials = self.settings.trials if trials is None else trials
        bound = {'lemma1': 1.0, 'lemma2': LEMMA2_BOUND, 'lemma3': FOUR_THIRDS, 'lemma4': 2.0 * n}[lemma]
        chunks = [(s, min(s + CHUNK_SIZE, trials)) for s in range(0, trials, CHUNK_SIZE)]
        total = LemmaTrialResult(lemma, n, trials, bound)
        with ThreadPoolExecutor(max_workers=self.max_workers) as pool:
            for part in pool.map(lambda c: self._chunk(lemma, n, c[0], c[1], bound), chunks):
                total.merge(part)
        if total.passed:
            self.logger.debug(f"{lemma} n={n}: {trials} trials, max {total.max_value:.6g}")
        else:
            self.logger.error(f"{lemma} n={n}: {total.violations} violations, "
                              f"{total.disagreements} disagreements in {trials} trials")
        return total

    def run(self, n_values: Optional[Iterable[int]] = None, trials: Optional[int] = None) -> List[LemmaTrialResult]:
        """Run every lemma for each ``n``.

        Args:
            n_values: Sizes to test; defaults to the configured range
            trials: Trials per lemma and size; defaults to the configured count

        Returns:
            One result per (lemma, n)
        """
        if n_values is None:
            low, high = self.settings.n_range
            n_values = range(low, high + 1)
        try:
            self.logger.info(f"Starting lemma trials (seed {self.seed})")
            results = [self.run_lemma(lemma, n, trials) for n in n_values for lemma in LEMMAS]
            self.logger.info(f"Finished lemma trials: {sum(r.passed for r in results)}/{len(results)} passed")
            return results
        except Exception as e:
            self.logger.error(f"Error running lemma trials: {str(e)}")
            raise
