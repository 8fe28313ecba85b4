"""Pydantic records for diagnostics, findings, mappings and SAMOD reports."""

from typing import Dict, List, Optional
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator
from .enums import (
    MappingProperty,
    PITFALL_SEVERITY,
    PitfallCode,
    Severity,
    VIOLATION_SEVERITY,
    ViolationKind,
    ZamoModule,
)
from ..rdf.namespaces import EXTERNAL_PREFIXES, ZAMO_PREFIXES

# Rendered row of a result table: variable name -> compact term
Row = Dict[str, str]


class Diagnostic(BaseModel):
    """Non-positional message produced while loading or extracting data."""
    model_config = ConfigDict(frozen=True)

    severity: Severity = Severity.ERROR
    message: str

    @property
    def is_error(self) -> bool:
        return self.severity == Severity.ERROR

    def __str__(self) -> str:
        return f"[{self.severity.value.upper()}] {self.message}"


class ParseDiagnostic(Diagnostic):
    """Diagnostic pointing at a 1-based line and column of the source text."""
    line: int = Field(ge=1)
    column: int = Field(ge=1)

    def __str__(self) -> str:
        return f"[{self.severity.value.upper()}] {self.message} (line {self.line}, column {self.column})"


class Violation(BaseModel):
    """Instance-level or alignment-level finding."""
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    focus: str = Field(description="Offending term in N-Triples form")
    detail: str
    severity: Severity

    @model_validator(mode="before")
    @classmethod
    def default_severity(cls, data):
        """Fill severity from the kind when not given."""
        if isinstance(data, dict) and data.get("severity") is None and "kind" in data:
            data = {**data, "severity": VIOLATION_SEVERITY[ViolationKind(data["kind"])]}
        return data

    @property
    def is_error(self) -> bool:
        return self.severity == Severity.ERROR

    def __str__(self) -> str:
        return f"[{self.severity.value.upper()}] {self.kind.value}: {self.detail} ({self.focus})"


class Pitfall(BaseModel):
    """Modelling pitfall on a schema IRI."""
    model_config = ConfigDict(frozen=True)

    code: PitfallCode
    subject: str
    message: str
    severity: Severity

    @model_validator(mode="before")
    @classmethod
    def default_severity(cls, data):
        if isinstance(data, dict) and data.get("severity") is None and "code" in data:
            data = {**data, "severity": PITFALL_SEVERITY[PitfallCode(data["code"])]}
        return data

    @property
    def is_error(self) -> bool:
        return self.severity == Severity.ERROR

    @property
    def sort_key(self) -> tuple:
        return (self.code.value, self.subject)

    def __str__(self) -> str:
        return f"[{self.severity.value.upper()}] {self.code.value}: {self.message} (<{self.subject}>)"


class Mapping(BaseModel):
    """One SKOS alignment row between a ZAMO entity and an external IRI."""
    model_config = ConfigDict(frozen=True)

    zamo_entity: str
    mapping_property: MappingProperty
    target: str
    module: ZamoModule
    order: int = Field(ge=0, description="Position in the source fixture")
    note: Optional[str] = Field(default=None, description="Published spelling when canonicalised")
    concept_typed: bool = Field(default=True, description="Entity carries the skos:Concept typing")

    @field_validator('zamo_entity')
    @classmethod
    def in_zamo_namespace(cls, v):
        """ZAMO side must live under one of the module namespaces."""
        if not v.startswith(tuple(ZAMO_PREFIXES.values())):
            raise ValueError(f'{v} is not a ZAMO IRI')
        return v

    @field_validator('target')
    @classmethod
    def in_external_namespace(cls, v):
        """Target must live under a declared alignment prefix."""
        if not v.startswith(tuple(EXTERNAL_PREFIXES.values())):
            raise ValueError(f'{v} is not under a declared alignment prefix')
        return v

    @property
    def local_name(self) -> str:
        return self.zamo_entity[len(ZAMO_PREFIXES[_PREFIX_OF_MODULE[self.module]]):]

    @property
    def pair(self) -> tuple:
        return (self.zamo_entity, self.target)


_PREFIX_OF_MODULE = {
    ZamoModule.AGENTS: "zamoa",
    ZamoModule.EVENTS: "zamoe",
    ZamoModule.SOURCES: "zamos",
}


class ModelTestResult(BaseModel):
    """Model test: schema diagnostics and pitfalls of the modelet."""
    diagnostics: List[Diagnostic] = Field(default_factory=list)
    pitfalls: List[Pitfall] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return not any(d.is_error for d in self.diagnostics) and not any(p.is_error for p in self.pitfalls)


class DataTestResult(BaseModel):
    """Data test: violations found in the saturated dataset."""
    violations: List[Violation] = Field(default_factory=list)
    inferred: int = 0

    @computed_field
    @property
    def passed(self) -> bool:
        return not any(v.is_error for v in self.violations)


class QueryTestResult(BaseModel):
    """Query test of one competency question."""
    name: str
    question: str
    expected: List[Row] = Field(default_factory=list)
    actual: List[Row] = Field(default_factory=list)
    missing: List[Row] = Field(default_factory=list)
    unexpected: List[Row] = Field(default_factory=list)
    error: Optional[str] = None

    @computed_field
    @property
    def passed(self) -> bool:
        return self.error is None and not self.missing and not self.unexpected


class IterationReport(BaseModel):
    """Outcome of one SAMOD iteration."""
    model_config = ConfigDict(protected_namespaces=())

    iteration: int
    title: str
    mode: str = "standalone"
    model_test: ModelTestResult = Field(default_factory=ModelTestResult)
    data_test: DataTestResult = Field(default_factory=DataTestResult)
    query_tests: List[QueryTestResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return (
            self.model_test.passed
            and self.data_test.passed
            and all(q.passed for q in self.query_tests)
        )

    @property
    def cq_passed(self) -> int:
        return sum(1 for q in self.query_tests if q.passed)


class TestReport(BaseModel):
    """Aggregated SAMOD report for a suite run."""
    __test__ = False  # not a pytest class

    module: ZamoModule
    regression: bool = False
    up_to: Optional[int] = None
    iterations: List[IterationReport] = Field(default_factory=list)
    standalone: List[IterationReport] = Field(
        default_factory=list, description="Isolated re-runs of a regression bag"
    )

    @computed_field
    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.iterations) and all(it.passed for it in self.standalone)

    @computed_field
    @property
    def milestone(self) -> bool:
        return self.regression and bool(self.iterations) and self.passed

    @property
    def cq_total(self) -> int:
        return sum(len(it.query_tests) for it in self.iterations)

    @property
    def cq_passed(self) -> int:
        return sum(it.cq_passed for it in self.iterations)

    def get_summary(self) -> Dict[str, int]:
        """Counts of iterations and CQs by outcome."""
        return {
            'iterations': len(self.iterations),
            'iterations_passed': sum(1 for it in self.iterations if it.passed),
            'cq_total': self.cq_total,
            'cq_passed': self.cq_passed,
        }
