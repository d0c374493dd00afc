"""Command implementations behind the ``src.main`` subcommands.

Each ``cmd_*`` function runs one suite or search and returns a :class:`Report`;
printing, writing and exit codes are left to the entry point.
"""
import logging
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from src.basis.bases import BasisSet, hermitian_basis
from src.basis.commutator_table import commutator_norm_table, direct_gram_row_sums, gram_row_sum, pair_comm_norm_sq
from src.basis.index import index_pair
from src.exterior.compound import phi
from src.exterior.gram import verify_transform_chain
from src.ineq.constants import Status, known_constant
from src.ineq.diagnostics import equality_diagnostics
from src.ineq.extremal import extremal_tuple
from src.ineq.functional import evaluate
from src.lemmas.spectrum import is_lemma2_equality, lemma2_equality_witness, lemma2_lhs
from src.lemmas.trials import LemmaTrialRunner
from src.matcore.matrices import MatrixClass
from src.matcore.sampling import rng_stream, sample_tuple
from src.optim.conjecture import explore_conjecture
from src.optim.ratio_search import SearchConfig, maximize_ratio
from src.reporting.reporter import Report, ReportGenerator, RunManifest, tuple_to_json
from src.utils.config import ToolkitSettings
from src.utils.exceptions import ConfigError

logger = logging.getLogger(__name__)

MAX_IDENTITY_N = 5
MAX_CHAIN_N = 4
MAX_CHAIN_M = 4
MAX_PHI_SIDE = 6
PAIR_TABLE_TOL = 1e-12
ROW_SUM_TOL = 1e-10
ORTHONORMAL_TOL = 1e-12
PHI_REL_TOL = 1e-10
CHAIN_REL_TOL = 1e-8
GRAM_EIGENVALUE_TOL = 1e-10
EXTREMAL_REL_TOL = 1e-12

BasisFactory = Callable[[int], BasisSet]


def _manifest(command: str, settings: ToolkitSettings, **args: Any) -> RunManifest:
    return RunManifest(command=command, config={'args': args, 'settings': settings.model_dump()})


def _check_range(n_range: Tuple[int, int], limit: int) -> Tuple[int, int]:
    low, high = n_range
    if low < 1 or high < low or high > limit:
        raise ConfigError(f"n range must satisfy 1 <= low <= high <= {limit}, got {n_range}")
    return low, high


class _Tally:
    """Pass/fail counts of one identity with its first failure."""

    def __init__(self, tol: float):
        self.tol = tol
        self.checks = 0
        self.failures = 0
        self.max_deviation = 0.0
        self.first_failure: Optional[Dict[str, Any]] = None

    def record(self, deviation: float, **where: Any) -> None:
        """Count one check; remember where the first failure happened."""
        self.checks += 1
        self.max_deviation = max(self.max_deviation, deviation)
        if deviation > self.tol:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = dict(where, deviation=deviation)

    def to_dict(self) -> Dict[str, Any]:
        """Plain-dict form for reports."""
        return {
            'checks': self.checks,
            'failures': self.failures,
            'max_deviation': self.max_deviation,
            'tolerance': self.tol,
            'first_failure': self.first_failure,
        }


def _phi_checks(tally_mult: _Tally, tally_exact: _Tally, count: int, seed: int) -> None:
    for t in range(count):
        rng = rng_stream(seed, 0, t)
        p, q, r = (int(v) for v in rng.integers(1, MAX_PHI_SIDE + 1, size=3))
        a = rng.standard_normal((p, q))
        b = rng.standard_normal((q, r))
        lhs = phi(a @ b)
        rhs = phi(a) @ phi(b)
        scale = max(float(np.max(np.abs(lhs), initial=0.0)), 1.0)
        tally_mult.record(float(np.max(np.abs(lhs - rhs), initial=0.0)) / scale, trial=t, shape=[p, q, r])
        exact = np.array_equal(phi(a.T), phi(a).T)
        tally_exact.record(0.0 if exact else 1.0, trial=t, check='transpose')
    for side in range(1, MAX_PHI_SIDE + 1):
        exact = np.array_equal(phi(np.eye(side)), np.eye(side * (side - 1) // 2))
        tally_exact.record(0.0 if exact else 1.0, side=side, check='identity')


def cmd_verify_identities(
    settings: ToolkitSettings,
    seed: int,
    n_range: Optional[Tuple[int, int]] = None,
    basis_factory: BasisFactory = hermitian_basis,
) -> Report:
    """Check the commutator case table, the Gram row-sum identity, the compound map and the trace chain.

    Args:
        settings: Toolkit settings (random check counts)
        seed: Root seed of the randomized checks
        n_range: Inclusive range of ``n``; defaults to the configured range
        basis_factory: Builds the Hermitian basis for ``n``; replaced in tests to tamper with it

    Returns:
        Report with one tally per identity
    """
    low, high = _check_range(n_range or settings.identities.n_range, MAX_IDENTITY_N)
    logger.info(f"Verifying identities for n in [{low}, {high}]")

    orthonormal = _Tally(ORTHONORMAL_TOL)
    pair_table = _Tally(PAIR_TABLE_TOL)
    row_sums = _Tally(ROW_SUM_TOL)
    for n in range(low, high + 1):
        basis = basis_factory(n)
        size = len(basis)
        orthonormal.record(float(np.max(np.abs(basis.gram() - np.eye(size)), initial=0.0)), n=n)
        norms = commutator_norm_table(basis.elements)
        sums = direct_gram_row_sums(basis.elements)
        for a in range(1, size + 1):
            pa = index_pair(a, n)
            for b in range(1, size + 1):
                pb = index_pair(b, n)
                where = {'n': n, 'a': list(pa), 'b': list(pb)}
                pair_table.record(abs(pair_comm_norm_sq(pa, pb, n) - norms[a - 1, b - 1]), **where)
                row_sums.record(abs(gram_row_sum(pa, pb, n) - sums[a - 1, b - 1]), **where)
        logger.debug(f"n={n}: {size * size} index pairs checked")

    phi_mult = _Tally(PHI_REL_TOL)
    phi_exact = _Tally(0.0)
    _phi_checks(phi_mult, phi_exact, settings.identities.phi_pairs, seed)

    chain = _Tally(CHAIN_REL_TOL)
    chain_eigenvalues = _Tally(GRAM_EIGENVALUE_TOL)
    chain_sizes = [n for n in range(max(low, 1), min(high, MAX_CHAIN_N) + 1)]
    for t in range(settings.identities.chain_tuples if chain_sizes else 0):
        rng = rng_stream(seed, 1, t)
        n = chain_sizes[int(rng.integers(len(chain_sizes)))]
        m = int(rng.integers(1, MAX_CHAIN_M + 1))
        report = verify_transform_chain(sample_tuple(MatrixClass.HERMITIAN, m, n, rng))
        chain.record(report.max_deviation, trial=t, m=m, n=n)
        chain_eigenvalues.record(max(0.0, -report.min_eigenvalue), trial=t, m=m, n=n)

    results = {
        'n_range': [low, high],
        'basis_orthonormality': orthonormal.to_dict(),
        'commutator_case_table': pair_table.to_dict(),
        'gram_row_sum': row_sums.to_dict(),
        'phi_multiplicative': phi_mult.to_dict(),
        'phi_exact': phi_exact.to_dict(),
        'transform_chain': chain.to_dict(),
        'gram_eigenvalues': chain_eigenvalues.to_dict(),
    }
    tallies = (orthonormal, pair_table, row_sums, phi_mult, phi_exact, chain, chain_eigenvalues)
    status = 'pass' if all(t.failures == 0 for t in tallies) else 'fail'
    logger.info(f"Identity verification finished: {status}")
    return Report(manifest=_manifest('verify-identities', settings, seed=seed, n_range=[low, high]),
                  results=results, status=status)


def cmd_check_lemmas(
    settings: ToolkitSettings,
    seed: int,
    n_range: Optional[Tuple[int, int]] = None,
    trials: Optional[int] = None,
    threads: Optional[int] = None,
) -> Report:
    """Run the randomized lemma trials plus the exact equality witness of the second lemma."""
    trials = settings.lemmas.trials if trials is None else trials
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    low, high = n_range or settings.lemmas.n_range
    if low < 2 or high < low:
        raise ConfigError(f"lemma checks need 2 <= low <= high, got {(low, high)}")
    threads = threads or settings.processing.max_workers

    runner = LemmaTrialRunner(settings.lemmas, seed, max_workers=threads)
    results = runner.run(range(low, high + 1), trials)
    witnesses = {}
    for n in range(low, high + 1):
        witness = lemma2_equality_witness(n)
        witnesses[str(n)] = {'value': lemma2_lhs(witness), 'equality': is_lemma2_equality(witness)}

    status = 'pass' if all(r.passed for r in results) and all(w['equality'] for w in witnesses.values()) else 'fail'
    return Report(
        manifest=_manifest('check-lemmas', settings, seed=seed, n_range=[low, high], trials=trials),
        results={'trials': [r.to_dict() for r in results], 'lemma2_equality_witness': witnesses},
        status=status,
    )


def _constant_payload(matrix_class: MatrixClass, m: int, n: int) -> Optional[Dict[str, Any]]:
    row = known_constant(matrix_class, m, n)
    if row is None:
        return None
    return {
        'c': str(row.c),
        'value': float(row.c),
        'status': row.status.value,
        'm_condition': row.m_condition,
        'n_condition': row.n_condition,
        'source': row.source,
    }


def _status_against(best: float, constant: Optional[Dict[str, Any]], settings: ToolkitSettings) -> str:
    if constant is None:
        return 'pass'
    if constant['status'] == Status.PROVED.value:
        return 'fail' if best > constant['value'] + settings.tolerances.proved_margin else 'pass'
    return 'counterexample' if best > constant['value'] + settings.tolerances.conjecture_margin else 'pass'


def cmd_estimate(
    settings: ToolkitSettings,
    matrix_class: MatrixClass,
    m: int,
    n: int,
    seed: int,
    restarts: Optional[int] = None,
    iters: Optional[int] = None,
    tol: Optional[float] = None,
    threads: Optional[int] = None,
    trace_csv: Optional[str] = None,
) -> Report:
    """Estimate the sharp constant by search and compare it with the registry."""
    matrix_class = MatrixClass(matrix_class)
    cfg = SearchConfig.build(
        settings.search, matrix_class=matrix_class, m=m, n=n, seed=seed, restarts=restarts,
        max_iters=iters, grad_tol=tol, threads=threads or settings.processing.max_workers,
    )
    search = maximize_ratio(cfg)
    if trace_csv is not None:
        ReportGenerator(settings.model_dump()).write_trace(search.trace_frame(), trace_csv)

    constant = _constant_payload(matrix_class, m, n)
    results = dict(search.summary())
    results.update({
        'class': matrix_class.value,
        'm': m,
        'n': n,
        'known_constant': constant,
        'gap': None if constant is None else search.best_ratio - constant['value'],
        'best_tuple': tuple_to_json(search.best_tuple),
        'diagnostics': None,
    })
    if matrix_class in (MatrixClass.HERMITIAN, MatrixClass.SKEW_HERMITIAN) and m >= 2 and n >= 2:
        results['diagnostics'] = equality_diagnostics(search.best_tuple).to_dict()

    status = _status_against(search.best_ratio, constant, settings)
    return Report(manifest=_manifest('estimate', settings, search=cfg.model_dump()), results=results, status=status)


def cmd_extremal(
    settings: ToolkitSettings,
    matrix_class: MatrixClass,
    m: int,
    n: int,
    lam: float = 1.0,
    theta: float = 0.0,
) -> Report:
    """Build an equality tuple and report its evaluation and equality residual."""
    matrix_class = MatrixClass(matrix_class)
    tup = extremal_tuple(matrix_class, m, n, lam, theta)
    ev = evaluate(tup)
    constant = _constant_payload(matrix_class, m, n)
    c = constant['value'] if constant is not None else ev.ratio
    residual = c * ev.energy ** 2 - ev.lhs

    results = {
        'class': matrix_class.value,
        'm': m,
        'n': n,
        'lambda': lam,
        'theta': theta,
        'tuple': tuple_to_json(tup),
        'evaluation': {'lhs': ev.lhs, 'energy': ev.energy, 'ratio': ev.ratio},
        'known_constant': constant,
        'residual': residual,
        'diagnostics': None,
    }
    if matrix_class in (MatrixClass.HERMITIAN, MatrixClass.SKEW_HERMITIAN):
        results['diagnostics'] = equality_diagnostics(tup, c).to_dict()

    ok = abs(residual) <= EXTREMAL_REL_TOL * max(ev.energy ** 2, 1.0)
    return Report(
        manifest=_manifest('extremal', settings, matrix_class=matrix_class.value, m=m, n=n, lam=lam, theta=theta),
        results=results,
        status='pass' if ok else 'fail',
    )


def cmd_explore(
    settings: ToolkitSettings,
    m: int,
    n: int,
    seed: int,
    restarts: Optional[int] = None,
    iters: Optional[int] = None,
    threads: Optional[int] = None,
) -> Report:
    """Search the general complex and real classes for ratios above 4/3."""
    search = settings.search.model_copy(update={
        k: v for k, v in {'restarts': restarts, 'max_iters': iters, 'seed': seed}.items() if v is not None
    })
    probe = explore_conjecture(
        m, n, search, margin=settings.tolerances.conjecture_margin,
        threads=threads or settings.processing.max_workers,
    )
    results = {
        'm': m,
        'n': n,
        'margin': probe.margin,
        'best_ratio': probe.best_ratio,
        'classes': {
            cls.value: {
                'best_ratio': report.best_ratio,
                'exceeds': probe.exceeds(cls),
                'best_tuple': tuple_to_json(report.best_tuple),
            }
            for cls, report in probe.reports.items()
        },
    }
    return Report(
        manifest=_manifest('explore', settings, m=m, n=n, seed=seed, search=search.model_dump()),
        results=results,
        status='counterexample' if probe.counterexample else 'pass',
    )
