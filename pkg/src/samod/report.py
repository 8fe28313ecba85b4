"""Rendering of SAMOD test reports."""

from typing import Dict
from jinja2 import Environment, FileSystemLoader, StrictUndefined
from ..models.enums import ReportFormat
from ..models.schemas import TestReport
from ..utils.helpers import resource_path
from ..utils.logger import get_logger

logger = get_logger(__name__)

TEMPLATE_NAME = "report.txt.j2"


def _status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def _cells(row: Dict[str, str]) -> str:
    return ", ".join(f"{name}={value}" for name, value in sorted(row.items()))


class ReportRenderer:
    """Renders a TestReport as plain text (jinja2) or JSON."""

    def __init__(self, report_format: ReportFormat = ReportFormat.TEXT):
        self.report_format = ReportFormat(report_format)
        self.env = Environment(
            loader=FileSystemLoader(str(resource_path("samod", "templates"))),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
            undefined=StrictUndefined,
            autoescape=False,
        )
        self.env.globals["status"] = _status
        self.env.filters["cells"] = _cells

    def render(self, report: TestReport) -> str:
        """
        Render a report.

        Args:
            report: Report to render

        Returns:
            Text ending in a newline; identical reports render identically
        """
        if self.report_format == ReportFormat.JSON:
            return report.model_dump_json(indent=2) + "\n"
        template = self.env.get_template(TEMPLATE_NAME)
        logger.debug(f"Rendering {report.module.value} report as text")
        return template.render(report=report)


def render_report(report: TestReport, report_format: ReportFormat = ReportFormat.TEXT) -> str:
    """
    Render a test report.

    Args:
        report: Report to render
        report_format: Plain text (default) or JSON

    Returns:
        Rendered report ending with a newline
    """
    return ReportRenderer(report_format).render(report)
