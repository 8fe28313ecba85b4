"""Enumerations and constants for the ZAMO toolkit."""

from enum import Enum, IntEnum
from typing import Final


class Severity(str, Enum):
    """Finding severity."""
    ERROR = "error"
    WARNING = "warning"


class ZamoModule(str, Enum):
    """The three ZAMO modules."""
    AGENTS = "agents"
    EVENTS = "events"
    SOURCES = "sources"


class MappingProperty(str, Enum):
    """SKOS mapping properties."""
    EXACT_MATCH = "exactMatch"
    CLOSE_MATCH = "closeMatch"
    BROAD_MATCH = "broadMatch"
    NARROW_MATCH = "narrowMatch"
    RELATED_MATCH = "relatedMatch"


class ViolationKind(str, Enum):
    """Instance and alignment violation kinds."""
    DISJOINTNESS_CLASH = "DisjointnessClash"
    LITERAL_AS_OBJECT = "LiteralAsObject"
    UNDECLARED_PROPERTY = "UndeclaredProperty"
    UNDECLARED_CLASS = "UndeclaredClass"
    DATATYPE_MISMATCH = "DatatypeMismatch"
    # alignment checks
    UNKNOWN_ENTITY = "UnknownEntity"
    MATCH_CLASH = "MatchClash"
    MISSING_CONCEPT_TYPING = "MissingConceptTyping"


class PitfallCode(str, Enum):
    """Modelling pitfalls reported by the scanner."""
    NO_DOMAIN = "NoDomain"
    NO_RANGE = "NoRange"
    NO_LABEL = "NoLabel"
    ORPHAN_CLASS = "OrphanClass"
    HIERARCHY_CYCLE = "HierarchyCycle"


class InferenceRule(str, Enum):
    """Forward-chaining rules."""
    TYPE_VIA_SUBCLASS = "TypeViaSubclass"
    PROPAGATE_SUBPROPERTY = "PropagateSubproperty"
    DOMAIN_TYPING = "DomainTyping"
    RANGE_TYPING = "RangeTyping"
    INVERSE_COMPLETION = "InverseCompletion"


class ReportFormat(str, Enum):
    """SAMOD report output formats."""
    TEXT = "text"
    JSON = "json"


class ExitStatus(IntEnum):
    """CLI exit codes."""
    SUCCESS = 0
    CHECKS_FAILED = 1
    USAGE_ERROR = 2


VIOLATION_SEVERITY: Final[dict[ViolationKind, Severity]] = {
    ViolationKind.DISJOINTNESS_CLASH: Severity.ERROR,
    ViolationKind.LITERAL_AS_OBJECT: Severity.ERROR,
    ViolationKind.DATATYPE_MISMATCH: Severity.ERROR,
    ViolationKind.UNDECLARED_PROPERTY: Severity.WARNING,
    ViolationKind.UNDECLARED_CLASS: Severity.WARNING,
    ViolationKind.UNKNOWN_ENTITY: Severity.ERROR,
    ViolationKind.MATCH_CLASH: Severity.ERROR,
    ViolationKind.MISSING_CONCEPT_TYPING: Severity.ERROR,
}

PITFALL_SEVERITY: Final[dict[PitfallCode, Severity]] = {
    PitfallCode.HIERARCHY_CYCLE: Severity.ERROR,
    PitfallCode.NO_DOMAIN: Severity.ERROR,
    PitfallCode.NO_RANGE: Severity.ERROR,
    PitfallCode.NO_LABEL: Severity.WARNING,
    PitfallCode.ORPHAN_CLASS: Severity.WARNING,
}

# Mapping properties that contradict an exactMatch on the same pair
EXACT_MATCH_CONFLICTS: Final[frozenset[MappingProperty]] = frozenset({
    MappingProperty.BROAD_MATCH,
    MappingProperty.NARROW_MATCH,
    MappingProperty.RELATED_MATCH,
})
