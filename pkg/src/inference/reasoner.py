"""Forward-chaining saturation driven by an ontology schema."""

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional
from ..models.enums import InferenceRule
from ..ontology.schema import OntologySchema, is_datatype
from ..rdf.graph import Graph
from ..rdf.namespaces import RDF_TYPE
from ..rdf.terms import IRI, Literal, Triple
from ..utils.logger import get_logger

logger = get_logger(__name__)

TYPE = IRI(RDF_TYPE)


@dataclass(frozen=True)
class RuleSet:
    """Enabled inference rules."""
    rules: FrozenSet[InferenceRule] = frozenset(InferenceRule)

    @classmethod
    def all(cls) -> "RuleSet":
        """Every inference rule enabled."""
        return cls(frozenset(InferenceRule))

    @classmethod
    def none(cls) -> "RuleSet":
        """No rule enabled; saturation adds nothing."""
        return cls(frozenset())

    @classmethod
    def of(cls, rules: Iterable[InferenceRule]) -> "RuleSet":
        """
        Rule set from rule members or their string values.

        Args:
            rules: Rules to enable

        Raises:
            ValueError: If a value names no known rule
        """
        return cls(frozenset(InferenceRule(r) for r in rules))

    def __contains__(self, rule: object) -> bool:
        return rule in self.rules

    def __iter__(self) -> Iterator[InferenceRule]:
        return iter(sorted(self.rules, key=lambda r: r.value))

    def __len__(self) -> int:
        return len(self.rules)


class Reasoner:
    """
    Computes the least fixpoint of the enabled rules over a data graph.

    Rules:
    - TypeViaSubclass: (s type C), C subClassOf D => (s type D)
    - PropagateSubproperty: (s p o), p subPropertyOf q => (s q o)
    - DomainTyping: (s p o), p domain C => (s type C)
    - RangeTyping: (s p o), p range C, o not a literal, C not a datatype => (o type C)
    - InverseCompletion: (s p o), p inverseOf q, o not a literal => (o q s)

    Evaluation is semi-naive: each round only fires rules on the triples
    added by the previous one. ``rounds`` and ``added`` describe the last run.
    """

    def __init__(self, schema: OntologySchema, rules: Optional[RuleSet] = None):
        self.schema = schema
        self.rules = rules if rules is not None else RuleSet.all()
        self.rounds = 0
        self.added = 0

        self._class_parents: Dict[IRI, List[IRI]] = defaultdict(list)
        for child, parent in sorted(schema.sub_class_edges):
            self._class_parents[IRI(child)].append(IRI(parent))
        self._property_parents: Dict[IRI, List[IRI]] = defaultdict(list)
        for child, parent in sorted(schema.sub_property_edges):
            self._property_parents[IRI(child)].append(IRI(parent))
        self._domain = {IRI(p): IRI(c) for p, c in schema.domain.items()}
        self._range = {IRI(p): IRI(c) for p, c in schema.range.items() if not is_datatype(c)}
        self._inverse = {IRI(p): IRI(q) for p, q in schema.inverse.items()}

    def consequences(self, triple: Triple) -> Iterator[Triple]:
        """Triples derivable from one triple in a single rule application."""
        s, p, o = triple.subject, triple.predicate, triple.object

        if InferenceRule.TYPE_VIA_SUBCLASS in self.rules and p == TYPE and isinstance(o, IRI):
            for parent in self._class_parents.get(o, ()):
                yield Triple(s, TYPE, parent)

        if InferenceRule.PROPAGATE_SUBPROPERTY in self.rules:
            for parent in self._property_parents.get(p, ()):
                yield Triple(s, parent, o)

        if InferenceRule.DOMAIN_TYPING in self.rules and p in self._domain:
            yield Triple(s, TYPE, self._domain[p])

        if InferenceRule.RANGE_TYPING in self.rules and p in self._range and not isinstance(o, Literal):
            yield Triple(o, TYPE, self._range[p])

        if InferenceRule.INVERSE_COMPLETION in self.rules and p in self._inverse and not isinstance(o, Literal):
            yield Triple(o, self._inverse[p], s)

    def saturate(self, data: Graph) -> Graph:
        """
        Materialize every consequence of the enabled rules.

        Args:
            data: Input graph (left unchanged)

        Returns:
            New frozen graph containing the input and all inferred triples
        """
        if not data.frozen:
            logger.debug("Saturating an unfrozen graph; working on a copy")
        result = data.copy()
        delta: List[Triple] = list(result)
        self.rounds = 0
        self.added = 0

        while delta:
            self.rounds += 1
            fresh: List[Triple] = []
            for triple in delta:
                for inferred in self.consequences(triple):
                    if inferred not in result:
                        result.insert(inferred)
                        fresh.append(inferred)
            self.added += len(fresh)
            delta = fresh

        logger.debug(f"Saturation finished after {self.rounds} rounds, {self.added} triples inferred")
        return result.freeze()


def saturate(data: Graph, schema: OntologySchema, rules: Optional[RuleSet] = None) -> Graph:
    """Least fixpoint of ``rules`` over ``data``; see ``Reasoner``."""
    return Reasoner(schema, rules).saturate(data)
