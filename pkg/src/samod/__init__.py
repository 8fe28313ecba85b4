"""SAMOD scenario suites, test runs and reports."""

from .report import ReportRenderer, render_report
from .runner import SamodRunner, default_imports, run_iteration, run_regression, run_suite
from .suite import (
    CompetencyQuestion,
    Iteration,
    Manifest,
    ScenarioSuite,
    SuiteLoader,
    load_suite,
)

__all__ = [
    'CompetencyQuestion',
    'Iteration',
    'Manifest',
    'ReportRenderer',
    'SamodRunner',
    'ScenarioSuite',
    'SuiteLoader',
    'default_imports',
    'load_suite',
    'render_report',
    'run_iteration',
    'run_regression',
    'run_suite',
]
