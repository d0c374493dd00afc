"""Reporting module: run manifests, JSON reports and CSV traces."""
import enum
import json
import logging
import os
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Dict, Literal, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src import __version__
from src.matcore.matrices import MatrixTuple
from src.utils.exceptions import ConfigError

Status = Literal['pass', 'fail', 'counterexample']


def matrix_to_json(mat: np.ndarray) -> list:
    """Row-major nested lists of ``[re, im]`` pairs."""
    mat = np.asarray(mat, dtype=np.complex128)
    return [[[float(z.real), float(z.imag)] for z in row] for row in mat]


def tuple_to_json(tup: MatrixTuple) -> Dict[str, Any]:
    """JSON form ``{class, m, n, matrices}`` of a tuple."""
    return {
        'class': tup.matrix_class.value,
        'm': tup.m,
        'n': tup.n,
        'matrices': [matrix_to_json(mat) for mat in tup.matrices],
    }


def to_jsonable(value: Any) -> Any:
    """Convert numpy scalars, arrays, fractions, enums and sets to JSON types."""
    if isinstance(value, dict):
        return {str(to_jsonable(k)): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, MatrixTuple):
        return tuple_to_json(value)
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, np.generic):
        return value.item()
    return value


class RunManifest(BaseModel):
    """Everything needed to reproduce a run."""

    model_config = ConfigDict(frozen=True)

    command: str
    config: Dict[str, Any]
    version: str = __version__
    timestamp: str = Field(default_factory=lambda: datetime.now(timezone.utc).isoformat())


class Report(BaseModel):
    """Report of one command run: manifest, payload and status."""

    manifest: RunManifest
    results: Dict[str, Any]
    status: Status

    def results_json(self) -> str:
        """Canonical serialization of the payload, independent of the timestamp."""
        return json.dumps(to_jsonable(self.results), sort_keys=True)


class ReportGenerator:
    """Handles report generation operations."""

    def __init__(self, config: Dict[str, Any]):
        """Initialize the report generator.

        Args:
            config: Configuration dictionary with a ``paths`` section
        """
        self.config = config
        self.logger = logging.getLogger(__name__)

    def _resolve(self, path: Optional[str], default_name: str) -> str:
        if path is not None:
            return path
        return os.path.join(self.config.get('paths', {}).get('reports', 'data/reports'), default_name)

    def write_report(self, report: Report, path: Optional[str] = None) -> str:
        """Write ``report`` as a JSON object ``{manifest, results, status}``.

        Args:
            report: Report to write
            path: Output file; defaults to ``<paths.reports>/<command>.json``

        Returns:
            Path to the generated report
        """
        path = self._resolve(path, f'{report.manifest.command}.json')
        payload = {
            'manifest': to_jsonable(report.manifest.model_dump()),
            'results': to_jsonable(report.results),
            'status': report.status,
        }
        try:
            self.logger.info(f"Writing {report.manifest.command} report to {path}")
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(path, 'w') as f:
                json.dump(payload, f, sort_keys=True, indent=2)
            return path
        except OSError as e:
            self.logger.error(f"Error writing report: {str(e)}")
            raise ConfigError(f"cannot write report to {path}: {e}") from e

    def write_trace(self, frame: pd.DataFrame, path: str) -> str:
        """Write a ratio-vs-iteration trace as CSV."""
        try:
            directory = os.path.dirname(path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            frame.to_csv(path, index=False)
            self.logger.info(f"Wrote {len(frame)} trace rows to {path}")
            return path
        except OSError as e:
            self.logger.error(f"Error writing trace: {str(e)}")
            raise ConfigError(f"cannot write trace to {path}: {e}") from e
