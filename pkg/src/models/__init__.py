"""Enumerations and records shared across the toolkit."""

from .enums import (
    ExitStatus,
    InferenceRule,
    MappingProperty,
    PitfallCode,
    ReportFormat,
    Severity,
    ViolationKind,
    ZamoModule,
)
from .schemas import (
    DataTestResult,
    Diagnostic,
    IterationReport,
    Mapping,
    ModelTestResult,
    ParseDiagnostic,
    Pitfall,
    QueryTestResult,
    TestReport,
    Violation,
)

__all__ = [
    "ExitStatus",
    "InferenceRule",
    "MappingProperty",
    "PitfallCode",
    "ReportFormat",
    "Severity",
    "ViolationKind",
    "ZamoModule",
    "DataTestResult",
    "Diagnostic",
    "IterationReport",
    "Mapping",
    "ModelTestResult",
    "ParseDiagnostic",
    "Pitfall",
    "QueryTestResult",
    "TestReport",
    "Violation",
]
