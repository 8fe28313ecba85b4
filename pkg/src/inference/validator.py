"""Instance-level checks of a (saturated) data graph against a schema."""

from collections import Counter
from itertools import combinations
from typing import Dict, List, Set
from ..models.enums import Severity, ViolationKind
from ..models.schemas import Violation
from ..ontology.schema import OntologySchema, is_datatype
from ..rdf.graph import Graph
from ..rdf.namespaces import RDFS, RDF_TYPE, is_core_iri
from ..rdf.terms import IRI, Literal, XSD_DECIMAL, XSD_INTEGER
from ..utils.logger import get_logger

logger = get_logger(__name__)

# A literal of the key datatype also satisfies ranges of the value datatypes
_DATATYPE_WIDENING = {
    XSD_INTEGER: {XSD_DECIMAL},
}


def literal_fits(literal: Literal, datatype: str) -> bool:
    if datatype == RDFS.Literal:
        return True
    return literal.datatype == datatype or datatype in _DATATYPE_WIDENING.get(literal.datatype, ())


class InstanceValidator:
    """
    Finds contradictions and undeclared vocabulary in instance data.

    Error-severity kinds:
    - DisjointnessClash: an individual typed with two disjoint classes
    - LiteralAsObject: an object property whose value is a literal
    - DatatypeMismatch: a data property value outside the declared datatype

    Warning-severity kinds:
    - UndeclaredProperty / UndeclaredClass: terms missing from the schema
      (rdf, rdfs, owl, xsd and skos terms are exempt)
    """

    def __init__(self, schema: OntologySchema):
        self.schema = schema

    def validate(self, data: Graph) -> List[Violation]:
        """
        Validate a graph.

        Args:
            data: Data graph, normally already saturated

        Returns:
            Violations sorted by (kind, focus, detail); empty means the data is consistent
        """
        violations: List[Violation] = []
        violations.extend(self._check_disjointness(data))
        violations.extend(self._check_property_values(data))
        violations.extend(self._check_undeclared(data))
        violations.sort(key=lambda v: (v.kind.value, v.focus, v.detail))
        if violations:
            logger.info(f"Instance validation found {len(violations)} violations")
        return violations

    def _check_disjointness(self, data: Graph) -> List[Violation]:
        if not self.schema.disjoint:
            return []
        found = []
        types_of: Dict[object, Set[str]] = {}
        for triple in data.match(None, IRI(RDF_TYPE), None):
            if isinstance(triple.object, IRI):
                types_of.setdefault(triple.subject, set()).add(triple.object.value)
        for subject, types in types_of.items():
            for a, b in combinations(sorted(types), 2):
                if self.schema.are_disjoint(a, b):
                    found.append(Violation(
                        kind=ViolationKind.DISJOINTNESS_CLASH,
                        focus=str(subject),
                        detail=f"typed with disjoint classes <{a}> and <{b}>",
                    ))
        return found

    def _check_property_values(self, data: Graph) -> List[Violation]:
        found = []
        for triple in data:
            predicate = triple.predicate.value
            value = triple.object
            if predicate in self.schema.object_properties and isinstance(value, Literal):
                found.append(Violation(
                    kind=ViolationKind.LITERAL_AS_OBJECT,
                    focus=str(triple.subject),
                    detail=f"object property <{predicate}> has literal value {value}",
                ))
            elif predicate in self.schema.data_properties:
                expected = self.schema.range.get(predicate)
                if not isinstance(value, Literal):
                    found.append(Violation(
                        kind=ViolationKind.DATATYPE_MISMATCH,
                        focus=str(triple.subject),
                        detail=f"data property <{predicate}> has non-literal value {value}",
                    ))
                elif expected and is_datatype(expected) and not literal_fits(value, expected):
                    found.append(Violation(
                        kind=ViolationKind.DATATYPE_MISMATCH,
                        focus=str(triple.subject),
                        detail=f"<{predicate}> expects <{expected}>, got {value}",
                    ))
        return found

    def _check_undeclared(self, data: Graph) -> List[Violation]:
        found = []
        undeclared_properties: Set[str] = set()
        undeclared_classes: Set[str] = set()
        for triple in data:
            predicate = triple.predicate.value
            if not is_core_iri(predicate) and predicate not in self.schema.properties:
                undeclared_properties.add(predicate)
            if predicate == RDF_TYPE and isinstance(triple.object, IRI):
                cls = triple.object.value
                if not is_core_iri(cls) and cls not in self.schema.classes:
                    undeclared_classes.add(cls)
        for predicate in sorted(undeclared_properties):
            found.append(Violation(
                kind=ViolationKind.UNDECLARED_PROPERTY,
                focus=str(IRI(predicate)),
                detail="property used in data but not declared",
            ))
        for cls in sorted(undeclared_classes):
            found.append(Violation(
                kind=ViolationKind.UNDECLARED_CLASS,
                focus=str(IRI(cls)),
                detail="class used in data but not declared",
            ))
        return found

    @staticmethod
    def get_summary(violations: List[Violation]) -> Dict[str, int]:
        """Counts of violations by severity and kind."""
        by_severity = Counter(v.severity.value for v in violations)
        summary = {
            'total': len(violations),
            'errors': by_severity.get(Severity.ERROR.value, 0),
            'warnings': by_severity.get(Severity.WARNING.value, 0),
        }
        for kind, count in sorted(Counter(v.kind.value for v in violations).items()):
            summary[kind] = count
        return summary


def validate_instances(data: Graph, schema: OntologySchema) -> List[Violation]:
    """All violations of ``data`` against ``schema``; see ``InstanceValidator``."""
    return InstanceValidator(schema).validate(data)


def has_errors(findings: List[Violation]) -> bool:
    """True if any finding has error severity."""
    return any(f.is_error for f in findings)

