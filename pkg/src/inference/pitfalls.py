"""Scanner for common ontology modelling pitfalls."""

from typing import Dict, List, Set
from ..models.enums import PitfallCode
from ..models.schemas import Pitfall
from ..ontology.schema import OntologySchema
from ..utils.logger import get_logger

logger = get_logger(__name__)


class PitfallScanner:
    """
    Checks the declarations of a schema for modelling pitfalls.

    Declaration pitfalls are reported for IRIs declared by the schema
    itself. Hierarchy cycles are reported for every member, declared or not.
    """

    def scan(self, schema: OntologySchema) -> List[Pitfall]:
        """
        Scan a schema.

        Args:
            schema: Extracted schema

        Returns:
            Pitfalls ordered by (code, subject)
        """
        pitfalls: List[Pitfall] = []
        pitfalls.extend(self._underspecified_properties(schema))
        pitfalls.extend(self._missing_labels(schema))
        pitfalls.extend(self._orphan_classes(schema))
        pitfalls.extend(self._cycles(schema))
        pitfalls.sort(key=lambda p: p.sort_key)
        logger.debug(f"Pitfall scan: {len(pitfalls)} findings")
        return pitfalls

    def _underspecified_properties(self, schema: OntologySchema) -> List[Pitfall]:
        found = []
        for prop in schema.properties:
            if prop not in schema.domain:
                found.append(Pitfall(code=PitfallCode.NO_DOMAIN, subject=prop, message="property has no domain"))
            if prop not in schema.range:
                found.append(Pitfall(code=PitfallCode.NO_RANGE, subject=prop, message="property has no range"))
        return found

    def _missing_labels(self, schema: OntologySchema) -> List[Pitfall]:
        return [
            Pitfall(code=PitfallCode.NO_LABEL, subject=iri, message="no rdfs:label")
            for iri in schema.classes | schema.properties
            if iri not in schema.labels
        ]

    def _orphan_classes(self, schema: OntologySchema) -> List[Pitfall]:
        connected: Set[str] = set()
        for edge in schema.sub_class_edges:
            connected.update(edge)
        for pair in schema.disjoint:
            connected.update(pair)
        connected.update(schema.domain.values())
        connected.update(schema.range.values())
        return [
            Pitfall(code=PitfallCode.ORPHAN_CLASS, subject=cls, message="class has no hierarchy edge and is never a domain or range")
            for cls in schema.classes - connected
        ]

    def _cycles(self, schema: OntologySchema) -> List[Pitfall]:
        return [
            Pitfall(code=PitfallCode.HIERARCHY_CYCLE, subject=iri, message="lies on a subclass or subproperty cycle")
            for iri in schema.hierarchy_cycles()
        ]

    @staticmethod
    def get_summary(pitfalls: List[Pitfall]) -> Dict[str, int]:
        """Number of pitfalls per code."""
        summary: Dict[str, int] = {}
        for pitfall in pitfalls:
            summary[pitfall.code.value] = summary.get(pitfall.code.value, 0) + 1
        return summary


def scan_pitfalls(schema: OntologySchema) -> List[Pitfall]:
    """Pitfalls of ``schema``; see ``PitfallScanner``."""
    return PitfallScanner().scan(schema)
