"""Tests for the report writer."""
import json
import os
from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from src.ineq.extremal import pauli_triple
from src.ineq.constants import Status
from src.matcore.matrices import MatrixClass, MatrixTuple
from src.reporting.reporter import Report, ReportGenerator, RunManifest, to_jsonable, tuple_to_json


@pytest.fixture
def report():
    results = {
        'ratio': np.float64(4 / 3),
        'eigenvalues': np.array([2.0, 2.0, 2.0, 0.0]),
        'c': Fraction(4, 3),
        'status': Status.PROVED,
        'tuple': MatrixTuple(MatrixClass.HERMITIAN, pauli_triple(1.0)),
    }
    return Report(manifest=RunManifest(command='extremal', config={'m': 3}), results=results, status='pass')


def test_json_conversion(report):
    """Numpy, fraction, enum and tuple values convert to JSON types."""
    converted = to_jsonable(report.results)
    assert converted['c'] == '4/3'
    assert converted['status'] == 'proved'
    assert converted['eigenvalues'] == [2.0, 2.0, 2.0, 0.0]
    assert converted['tuple']['class'] == 'hermitian'
    # sigma_y = [[0, -i], [i, 0]]
    assert converted['tuple']['matrices'][2][0][1] == [0.0, -1.0]
    json.dumps(converted)


def test_results_json_ignores_the_timestamp(report):
    """The canonical payload does not depend on the timestamp."""
    other = Report(manifest=RunManifest(command='extremal', config={'m': 3}, timestamp='then'),
                   results=report.results, status='pass')
    assert report.results_json() == other.results_json()


def test_write_report_default_location(report, tmp_path):
    """Write report default location."""
    generator = ReportGenerator({'paths': {'reports': str(tmp_path / 'reports')}})
    path = generator.write_report(report)
    assert path == os.path.join(str(tmp_path / 'reports'), 'extremal.json')
    with open(path) as f:
        payload = json.load(f)
    assert set(payload) == {'manifest', 'results', 'status'}
    assert payload['manifest']['command'] == 'extremal'
    assert payload['status'] == 'pass'
    assert payload['results']['tuple'] == tuple_to_json(report.results['tuple'])


def test_write_trace(tmp_path):
    """Test writing a ratio trace as CSV."""
    frame = pd.DataFrame([(0, 0, 0.5, 0.5), (0, 1, 0.75, 1.0)], columns=['restart', 'iteration', 'ratio', 'step'])
    path = ReportGenerator({}).write_trace(frame, str(tmp_path / 'trace' / 'run.csv'))
    assert pd.read_csv(path)['ratio'].tolist() == [0.5, 0.75]
