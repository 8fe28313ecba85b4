"""Typed schema view over an ontology graph."""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Set, Tuple
from ..exceptions import SchemaConflict
from ..models.enums import Severity
from ..models.schemas import Diagnostic
from ..rdf.graph import Graph
from ..rdf.namespaces import OWL, RDF, RDF_LANG_STRING, RDF_TYPE, RDFS, XSD
from ..rdf.terms import IRI, Literal
from ..utils.logger import get_logger

logger = get_logger(__name__)

CLASS_TYPES = frozenset({OWL.Class, RDFS.Class})
OBJECT_PROPERTY_TYPES = frozenset({OWL.ObjectProperty})
DATA_PROPERTY_TYPES = frozenset({OWL.DatatypeProperty})
GENERIC_PROPERTY_TYPES = frozenset({RDF.Property})
IGNORED_TYPES = frozenset({OWL.Ontology, OWL.AnnotationProperty, OWL.NamedIndividual})

TOP_CLASSES = frozenset({OWL.Thing, RDFS.Resource})

# Schema predicates read by the extractor
_STRUCTURAL = frozenset({
    RDF_TYPE, RDFS.subClassOf, RDFS.subPropertyOf, RDFS.domain, RDFS.range,
    OWL.inverseOf, OWL.disjointWith, RDFS.label,
})
_ANNOTATIONS = frozenset({
    RDFS.comment, RDFS.seeAlso, RDFS.isDefinedBy, OWL.versionInfo, OWL.imports,
})


def is_datatype(iri: str) -> bool:
    """True for XSD datatypes, rdfs:Literal and rdf:langString."""
    return iri.startswith(str(XSD)) or iri in (RDFS.Literal, RDF_LANG_STRING)


def namespace_of(iri: str) -> str:
    """Namespace part of an IRI: everything up to the last '#' or '/'."""
    cut = max(iri.rfind("#"), iri.rfind("/"))
    return iri[:cut + 1] if cut >= 0 else iri


@dataclass
class OntologySchema:
    """
    Class and property declarations with their axioms.

    All members are IRI strings. ``range`` may hold a class or a datatype IRI.
    ``inverse`` is symmetric: both directions of every owl:inverseOf are stored.
    """
    classes: Set[str] = field(default_factory=set)
    object_properties: Set[str] = field(default_factory=set)
    data_properties: Set[str] = field(default_factory=set)
    sub_class_edges: Set[Tuple[str, str]] = field(default_factory=set)
    sub_property_edges: Set[Tuple[str, str]] = field(default_factory=set)
    domain: Dict[str, str] = field(default_factory=dict)
    range: Dict[str, str] = field(default_factory=dict)
    inverse: Dict[str, str] = field(default_factory=dict)
    disjoint: Set[FrozenSet[str]] = field(default_factory=set)
    labels: Dict[str, str] = field(default_factory=dict)
    external: Set[str] = field(default_factory=set)
    _closure: Dict[Tuple[str, str], Set[str]] = field(default_factory=dict, init=False, repr=False, compare=False)
    _closure_edges: Dict[str, FrozenSet[Tuple[str, str]]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    @property
    def properties(self) -> Set[str]:
        """All declared object and datatype properties."""
        return self.object_properties | self.data_properties

    def declares(self, iri: str) -> bool:
        """
        Check whether the schema declares an IRI as a class or property.

        Args:
            iri: IRI string to look up

        Returns:
            True if it is a declared class, object property or datatype property
        """
        return iri in self.classes or iri in self.object_properties or iri in self.data_properties

    def is_empty(self) -> bool:
        return not (self.classes or self.properties or self.sub_class_edges or self.sub_property_edges)

    def _ancestors(self, kind: str, start: str) -> Set[str]:
        edges = self.sub_class_edges if kind == "class" else self.sub_property_edges
        if self._closure_edges.get(kind) != edges:
            # edges changed since the cached closures were computed
            self._closure = {key: value for key, value in self._closure.items() if key[0] != kind}
            self._closure_edges[kind] = frozenset(edges)
        key = (kind, start)
        if key not in self._closure:
            parents: Dict[str, List[str]] = defaultdict(list)
            for child, parent in edges:
                parents[child].append(parent)
            seen: Set[str] = set()
            stack = list(parents.get(start, ()))
            while stack:
                node = stack.pop()
                if node in seen:
                    continue
                seen.add(node)
                stack.extend(parents.get(node, ()))
            self._closure[key] = seen
        return self._closure[key]

    def superclasses(self, cls: str) -> Set[str]:
        """Strict ancestors through subclass edges (contains ``cls`` only on a cycle)."""
        return self._ancestors("class", cls)

    def superproperties(self, prop: str) -> Set[str]:
        """Strict ancestors through subproperty edges (contains ``prop`` only on a cycle)."""
        return self._ancestors("property", prop)

    def is_subclass_of(self, sub: str, sup: str) -> bool:
        """Reflexive-transitive subclass test."""
        return sub == sup or sup in self.superclasses(sub)

    def is_subproperty_of(self, sub: str, sup: str) -> bool:
        return sub == sup or sup in self.superproperties(sub)

    def hierarchy_cycles(self) -> List[str]:
        """IRIs lying on a subclass or subproperty cycle, sorted."""
        on_cycle = {c for edge in self.sub_class_edges for c in edge if c in self.superclasses(c)}
        on_cycle |= {p for edge in self.sub_property_edges for p in edge if p in self.superproperties(p)}
        return sorted(on_cycle)

    def are_disjoint(self, a: str, b: str) -> bool:
        """
        Check whether two classes are declared disjoint, in either order.

        Args:
            a: First class IRI
            b: Second class IRI

        Returns:
            True if an owl:disjointWith axiom links them
        """
        return frozenset((a, b)) in self.disjoint

    def label(self, iri: str) -> Optional[str]:
        """rdfs:label of an IRI, if the schema has one."""
        return self.labels.get(iri)


class SchemaExtractor:
    """
    Reads declarations and axioms from a graph into an ``OntologySchema``.

    Problems that leave the schema usable (conflicting domains, unknown
    schema vocabulary, references to undeclared IRIs) become warning
    diagnostics. A class/property double declaration raises.
    """

    def __init__(self):
        self.diagnostics: List[Diagnostic] = []

    def _warn(self, message: str) -> None:
        logger.debug(message)
        self.diagnostics.append(Diagnostic(severity=Severity.WARNING, message=message))

    def extract(self, graph: Graph) -> Tuple[OntologySchema, List[Diagnostic]]:
        """
        Extract the schema of a graph.

        Args:
            graph: Ontology graph (any mix of schema and instance triples)

        Returns:
            Tuple of (schema, diagnostics)

        Raises:
            SchemaConflict: if an IRI is declared both as a class and as a property
        """
        self.diagnostics = []
        schema = OntologySchema()
        generic_properties: Set[str] = set()

        for triple in graph.match(None, IRI(RDF_TYPE), None):
            if not isinstance(triple.subject, IRI) or not isinstance(triple.object, IRI):
                continue
            subject, kind = triple.subject.value, triple.object.value
            if kind in CLASS_TYPES:
                schema.classes.add(subject)
            elif kind in OBJECT_PROPERTY_TYPES:
                schema.object_properties.add(subject)
            elif kind in DATA_PROPERTY_TYPES:
                schema.data_properties.add(subject)
            elif kind in GENERIC_PROPERTY_TYPES:
                generic_properties.add(subject)
            elif kind.startswith((str(OWL), str(RDFS))) and kind not in IGNORED_TYPES:
                self._warn(f"unsupported schema type <{kind}> on <{subject}>")

        self._check_conflicts(schema, generic_properties)
        self._read_axioms(graph, schema)

        # rdf:Property without an OWL kind: data property iff its range is a datatype
        for prop in sorted(generic_properties - schema.properties):
            if is_datatype(schema.range.get(prop, "")):
                schema.data_properties.add(prop)
            else:
                schema.object_properties.add(prop)

        self._flag_external(schema)
        logger.debug(
            f"Extracted schema: {len(schema.classes)} classes, "
            f"{len(schema.object_properties)} object properties, "
            f"{len(schema.data_properties)} data properties"
        )
        return schema, list(self.diagnostics)

    def _check_conflicts(self, schema: OntologySchema, generic_properties: Set[str]) -> None:
        both = schema.classes & (schema.object_properties | schema.data_properties | generic_properties)
        if both:
            iri = min(both)
            raise SchemaConflict(f"<{iri}> is declared both as a class and as a property in {namespace_of(iri)}")
        for iri in sorted(schema.object_properties & schema.data_properties):
            self._warn(f"<{iri}> is declared both as object and data property")

    def _read_axioms(self, graph: Graph, schema: OntologySchema) -> None:
        for triple in graph:
            predicate = triple.predicate.value
            if predicate == RDF_TYPE or predicate in _ANNOTATIONS:
                continue
            if predicate not in _STRUCTURAL:
                if predicate.startswith((str(OWL), str(RDFS))):
                    self._warn(f"unsupported schema predicate <{predicate}>")
                continue
            if not isinstance(triple.subject, IRI):
                continue
            subject = triple.subject.value

            if predicate == RDFS.label:
                if isinstance(triple.object, Literal):
                    schema.labels.setdefault(subject, triple.object.lexical)
                continue
            if not isinstance(triple.object, IRI):
                self._warn(f"<{predicate}> on <{subject}> expects an IRI, got {triple.object}")
                continue
            target = triple.object.value

            if predicate == RDFS.subClassOf:
                schema.sub_class_edges.add((subject, target))
            elif predicate == RDFS.subPropertyOf:
                schema.sub_property_edges.add((subject, target))
            elif predicate in (RDFS.domain, RDFS.range):
                axis = schema.domain if predicate == RDFS.domain else schema.range
                current = axis.setdefault(subject, target)
                if current != target:
                    self._warn(f"<{subject}> has several {predicate.rsplit('#', 1)[-1]}s; keeping <{current}>")
            elif predicate == OWL.inverseOf:
                schema.inverse[subject] = target
                schema.inverse.setdefault(target, subject)
            elif predicate == OWL.disjointWith:
                schema.disjoint.add(frozenset((subject, target)))

    def _flag_external(self, schema: OntologySchema) -> None:
        referenced: Set[str] = set()
        for child, parent in schema.sub_class_edges:
            referenced.update((child, parent))
        for pair in schema.disjoint:
            referenced.update(pair)
        referenced.update(schema.domain.values())
        referenced.update(r for r in schema.range.values() if not is_datatype(r))
        for iri in sorted(referenced - schema.classes):
            schema.external.add(iri)
            if iri not in TOP_CLASSES:
                self._warn(f"class <{iri}> is referenced but not declared")

        referenced_properties: Set[str] = set()
        for child, parent in schema.sub_property_edges:
            referenced_properties.update((child, parent))
        referenced_properties.update(schema.inverse)
        for iri in sorted(referenced_properties - schema.properties):
            schema.external.add(iri)
            self._warn(f"property <{iri}> is referenced but not declared")


def extract_schema(graph: Graph) -> Tuple[OntologySchema, List[Diagnostic]]:
    """Extract an ``OntologySchema`` and its diagnostics from a graph."""
    return SchemaExtractor().extract(graph)


def is_subclass_of(schema: OntologySchema, sub: str, sup: str) -> bool:
    """
    Reflexive-transitive subclass test over a schema.

    Args:
        schema: Schema holding the subclass edges
        sub: Candidate subclass IRI
        sup: Candidate superclass IRI

    Returns:
        True if ``sub`` equals ``sup`` or reaches it through rdfs:subClassOf
    """
    return schema.is_subclass_of(sub, sup)
