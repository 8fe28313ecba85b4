"""SKOS punning alignment: loading and validation of mapping rows."""

from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple
from pydantic import ValidationError
from ..exceptions import UnknownMappingProperty
from ..models.enums import EXACT_MATCH_CONFLICTS, MappingProperty, Severity, ViolationKind, ZamoModule
from ..models.schemas import Diagnostic, Mapping, Violation
from ..ontology.schema import OntologySchema
from ..rdf.graph import Graph
from ..rdf.namespaces import EXTERNAL_PREFIXES, RDF_TYPE, RDFS, SKOS, ZAMO_PREFIXES
from ..rdf.terms import IRI, Literal
from ..serialization.parser import parse_turtle_file
from ..serialization.prefixes import PrefixMap
from ..utils.helpers import resource_path
from ..utils.logger import get_logger

logger = get_logger(__name__)

CONCEPT = IRI(SKOS.Concept)
EDITORIAL_NOTE = SKOS.editorialNote
LEGACY_BROAD_MATCH = SKOS.broaderMatch

_MODULE_OF_NAMESPACE = {
    ZAMO_PREFIXES["zamoa"]: ZamoModule.AGENTS,
    ZAMO_PREFIXES["zamoe"]: ZamoModule.EVENTS,
    ZAMO_PREFIXES["zamos"]: ZamoModule.SOURCES,
}

# Documentation predicates allowed on mapped entities besides the mapping itself
_ANNOTATIONS = frozenset({
    RDF_TYPE, EDITORIAL_NOTE, SKOS.note, SKOS.prefLabel, SKOS.scopeNote, RDFS.label, RDFS.comment,
})


def module_of(iri: str) -> Optional[ZamoModule]:
    """ZAMO module whose namespace contains ``iri``, or None."""
    for namespace, module in _MODULE_OF_NAMESPACE.items():
        if iri.startswith(namespace):
            return module
    return None


def _mapping_property(predicate: str) -> Optional[MappingProperty]:
    if not predicate.startswith(str(SKOS)):
        return None
    try:
        return MappingProperty(predicate[len(str(SKOS)):])
    except ValueError:
        return None


class MappingLoader:
    """
    Extracts mapping rows from an alignment graph.

    Rows keep the graph's insertion order. A ``skos:broaderMatch`` row is
    canonicalised to ``skos:broadMatch`` with a warning; a ``broadMatch``
    row whose subject carries an editorial note naming ``skos:broaderMatch``
    and the same target records that published spelling in ``note``.
    """

    def __init__(self, prefixes: Optional[PrefixMap] = None):
        self.prefixes = prefixes or PrefixMap(EXTERNAL_PREFIXES)
        self.diagnostics: List[Diagnostic] = []

    def load(self, graph: Graph) -> List[Mapping]:
        """
        Load every mapping triple of a graph.

        Args:
            graph: Alignment graph

        Returns:
            Mappings in graph order

        Raises:
            UnknownMappingProperty: for a non-SKOS predicate on a ZAMO entity
        """
        self.diagnostics = []
        mappings: List[Mapping] = []
        concepts = {t.subject for t in graph.match(None, IRI(RDF_TYPE), CONCEPT)}
        notes = self._legacy_notes(graph)

        for triple in graph:
            if not isinstance(triple.subject, IRI):
                continue
            entity = triple.subject.value
            module = module_of(entity)
            predicate = triple.predicate.value
            if module is None or predicate in _ANNOTATIONS:
                continue

            note = None
            if predicate == LEGACY_BROAD_MATCH:
                prop = MappingProperty.BROAD_MATCH
                note = "skos:broaderMatch"
                self._report(Severity.WARNING, f"<{entity}> uses skos:broaderMatch; read as skos:broadMatch")
            else:
                prop = _mapping_property(predicate)
                if prop is None:
                    raise UnknownMappingProperty(f"<{predicate}> on <{entity}> is not a SKOS mapping property")
            if not isinstance(triple.object, IRI):
                self._report(Severity.ERROR, f"mapping of <{entity}> has non-IRI target {triple.object}")
                continue
            target = triple.object.value
            if prop == MappingProperty.BROAD_MATCH and (entity, target) in notes:
                note = "skos:broaderMatch"

            try:
                mappings.append(Mapping(
                    zamo_entity=entity,
                    mapping_property=prop,
                    target=target,
                    module=module,
                    order=len(mappings),
                    note=note,
                    concept_typed=triple.subject in concepts,
                ))
            except ValidationError as e:
                self._report(Severity.ERROR, f"invalid mapping <{entity}> -> <{target}>: {e.errors()[0]['msg']}")

        logger.info(f"Loaded {len(mappings)} mappings")
        return mappings

    def _legacy_notes(self, graph: Graph) -> Set[Tuple[str, str]]:
        found: Set[Tuple[str, str]] = set()
        for triple in graph.match(None, IRI(EDITORIAL_NOTE), None):
            if not isinstance(triple.object, Literal) or not isinstance(triple.subject, IRI):
                continue
            spelling, _, target = triple.object.lexical.partition(" ")
            if spelling != "skos:broaderMatch" or not target:
                continue
            try:
                found.add((triple.subject.value, self.prefixes.expand(target)))
            except KeyError:
                self._report(Severity.WARNING, f"editorial note on <{triple.subject.value}> uses unknown prefix: {target}")
        return found

    def _report(self, severity: Severity, message: str) -> None:
        log = logger.warning if severity == Severity.WARNING else logger.error
        log(message)
        self.diagnostics.append(Diagnostic(severity=severity, message=message))


class MappingValidator:
    """
    Consistency checks over mapping rows.

    - UnknownEntity: the ZAMO entity is not declared by the vocabulary
    - MatchClash: a pair mapped with exactMatch and also broad/narrow/relatedMatch
    - MissingConceptTyping: the entity is not typed ``skos:Concept``
    """

    def __init__(self, schema: OntologySchema):
        self.schema = schema

    def validate(self, mappings: List[Mapping]) -> List[Violation]:
        """
        Check mappings against the vocabulary and each other.

        Args:
            mappings: Mappings in document order

        Returns:
            List of violations, empty when the mappings are clean
        """
        violations: List[Violation] = []
        properties_of: Dict[Tuple[str, str], Set[MappingProperty]] = {}
        untyped: Dict[str, None] = {}

        for mapping in mappings:
            if not self.schema.declares(mapping.zamo_entity):
                violations.append(Violation(
                    kind=ViolationKind.UNKNOWN_ENTITY,
                    focus=str(IRI(mapping.zamo_entity)),
                    detail=f"mapped entity is not in the vocabulary (row {mapping.order + 1})",
                ))
            if not mapping.concept_typed:
                untyped.setdefault(mapping.zamo_entity, None)
            properties_of.setdefault(mapping.pair, set()).add(mapping.mapping_property)

        for (entity, target), props in properties_of.items():
            clashing = props & EXACT_MATCH_CONFLICTS
            if MappingProperty.EXACT_MATCH in props and clashing:
                names = ", ".join(sorted(p.value for p in clashing))
                violations.append(Violation(
                    kind=ViolationKind.MATCH_CLASH,
                    focus=str(IRI(entity)),
                    detail=f"exactMatch and {names} to <{target}>",
                ))

        for entity in untyped:
            violations.append(Violation(
                kind=ViolationKind.MISSING_CONCEPT_TYPING,
                focus=str(IRI(entity)),
                detail="mapped entity is not typed skos:Concept",
            ))

        if violations:
            logger.info(f"Alignment validation found {len(violations)} violations")
        return violations


def load_mappings(graph: Graph) -> Tuple[List[Mapping], List[Diagnostic]]:
    """Mappings of an alignment graph plus loader diagnostics."""
    loader = MappingLoader()
    mappings = loader.load(graph)
    return mappings, loader.diagnostics


def validate_mappings(mappings: List[Mapping], schema: OntologySchema) -> List[Violation]:
    """Alignment violations; see ``MappingValidator``."""
    return MappingValidator(schema).validate(mappings)


@lru_cache(maxsize=None)
def alignment_graph(module: ZamoModule) -> Graph:
    """Shipped punned alignment graph of a module."""
    module = ZamoModule(module)
    graph, _ = parse_turtle_file(resource_path("alignment", "data", f"{module.value}.ttl"))
    return graph.freeze()


def load_all_mappings() -> List[Mapping]:
    """Shipped mappings of the three modules, module by module in fixture order."""
    mappings: List[Mapping] = []
    for module in ZamoModule:
        loaded, _ = load_mappings(alignment_graph(module))
        mappings.extend(loaded)
    return mappings
