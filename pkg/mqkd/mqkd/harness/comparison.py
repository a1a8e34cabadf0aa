"""Side-by-side comparison with the other mediated three-party protocols."""
from fractions import Fraction
from typing import List, Optional

import pandas as pd

from mqkd.constants import Efficiency
from mqkd.harness.config import SessionConfig
from mqkd.harness.experiment import SessionReport, run_experiment
from mqkd.utils.logging import logger

COLUMNS = ['protocol', 'tp_capabilities', 'participant_capabilities', 'qubit_resource', 'qubit_efficiency', 'note']


def _fraction(value: Fraction) -> str:
    return f'{value.numerator}/{value.denominator}'


REFERENCE_ROWS = [
    {
        'protocol': 'Hwang et al.',
        'tp_capabilities': 'prepare Bell states; Bell measurement',
        'participant_capabilities': 'unitary operation; reflect',
        'qubit_resource': 'Bell states',
        'qubit_efficiency': _fraction(Efficiency.HWANG),
        'note': '',
    },
    {
        'protocol': 'Yang et al.',
        'tp_capabilities': 'prepare X-basis single photons; X-basis measurement',
        'participant_capabilities': 'prepare, measure, reflect | unitary operation; reflect',
        'qubit_resource': 'single photons',
        'qubit_efficiency': _fraction(Efficiency.YANG),
        'note': '',
    },
]


def proposed_row(measured_q: float) -> dict:
    deviation = abs(measured_q - float(Efficiency.PROPOSED))
    note = ''
    if deviation > Efficiency.DEVIATION_TOLERANCE:
        note = f'DEVIATES from {_fraction(Efficiency.PROPOSED)} by {deviation:.4f}'
        logger.warning(f"Measured qubit efficiency {measured_q:.4f} deviates from theory by {deviation:.4f}")
    return {
        'protocol': 'proposed',
        'tp_capabilities': 'prepare X-basis single photons; X-basis measurement',
        'participant_capabilities': 'unitary operation; reflect',
        'qubit_resource': 'single photons',
        'qubit_efficiency': f'{measured_q:.3f} (theory {_fraction(Efficiency.PROPOSED)})',
        'note': note,
    }


def comparison_frame(report: SessionReport) -> pd.DataFrame:
    rows: List[dict] = REFERENCE_ROWS + [proposed_row(report.qubit_efficiency)]
    return pd.DataFrame(rows, columns=COLUMNS)


def comparison_report(config: Optional[SessionConfig] = None, report: Optional[SessionReport] = None) -> str:
    """Reference rows plus the efficiency measured by a fresh honest run."""
    if report is None:
        report = run_experiment(config if config is not None else SessionConfig())
    return comparison_frame(report).to_string(index=False)
