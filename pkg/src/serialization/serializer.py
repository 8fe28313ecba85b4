"""Deterministic Turtle serializer."""

import re
from collections import defaultdict
from typing import Dict, List, Optional
from ..rdf.graph import Graph
from ..rdf.namespaces import RDF_LANG_STRING, RDF_TYPE
from ..rdf.terms import (
    BlankNode,
    IRI,
    Literal,
    Term,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_INTEGER,
    XSD_STRING,
)
from ..utils.logger import get_logger
from .lexer import escape_string
from .prefixes import PrefixMap

logger = get_logger(__name__)

_BARE_INTEGER = re.compile(r"^[+-]?\d+$")
_BARE_DECIMAL = re.compile(r"^[+-]?\d*\.\d+$")
_INDENT = "    "


class TurtleSerializer:
    """
    Writes a graph as Turtle.

    Output is a function of the triple set and the prefix map only:
    prefixes sorted by label, subjects sorted by rendered form, ``rdf:type``
    first (as ``a``), other predicates and objects sorted by rendered form.
    """

    def __init__(self, prefixes: Optional[PrefixMap] = None):
        self.prefixes = prefixes or PrefixMap()

    def render_term(self, term: Term, explicit: bool = False) -> str:
        """
        Render a term as Turtle.

        Args:
            term: IRI, blank node or literal
            explicit: Passed on to ``render_literal``

        Returns:
            Prefixed name where a prefix applies, else the full form
        """
        if isinstance(term, IRI):
            return self.render_iri(term.value)
        if isinstance(term, BlankNode):
            return str(term)
        return self.render_literal(term, explicit)

    def render_iri(self, value: str) -> str:
        """Prefixed name of an IRI, or ``<iri>`` when no prefix covers it."""
        return self.prefixes.shrink(value) or f"<{value}>"

    def render_literal(self, literal: Literal, explicit: bool = False) -> str:
        """
        Render a literal.

        Args:
            literal: Literal to render
            explicit: Always quote and append the datatype instead of using
                the shortest form that parses back to the same literal

        Returns:
            Turtle literal syntax
        """
        if literal.lang:
            return f"{escape_string(literal.lexical)}@{literal.lang}"
        if explicit:
            return f"{escape_string(literal.lexical)}^^{self.render_iri(literal.datatype)}"
        if literal.datatype == XSD_STRING:
            return escape_string(literal.lexical)
        if literal.datatype == XSD_INTEGER and _BARE_INTEGER.match(literal.lexical):
            return literal.lexical
        if literal.datatype == XSD_DECIMAL and _BARE_DECIMAL.match(literal.lexical):
            return literal.lexical
        if literal.datatype == XSD_BOOLEAN and literal.lexical in ("true", "false"):
            return literal.lexical
        if literal.datatype == RDF_LANG_STRING:
            return escape_string(literal.lexical)
        return f"{escape_string(literal.lexical)}^^{self.render_iri(literal.datatype)}"

    def serialize(self, graph: Graph) -> str:
        """
        Render a graph.

        Args:
            graph: Graph to write

        Returns:
            Turtle text ending with a newline (empty string for no prefixes and no triples)
        """
        lines: List[str] = [
            f"@prefix {label}: <{namespace}> ."
            for label, namespace in sorted(self.prefixes.items())
        ]

        by_subject: Dict[str, Dict[str, List[str]]] = defaultdict(lambda: defaultdict(list))
        for triple in graph:
            subject = self.render_term(triple.subject)
            predicate = "a" if triple.predicate.value == RDF_TYPE else self.render_term(triple.predicate)
            by_subject[subject][predicate].append(self.render_term(triple.object))

        for subject in sorted(by_subject):
            if lines:
                lines.append("")
            predicates = sorted(by_subject[subject], key=lambda p: (p != "a", p))
            clauses = [f"{p} {', '.join(sorted(by_subject[subject][p]))}" for p in predicates]
            lines.append(f"{subject} {clauses[0]}" + (" ;" if len(clauses) > 1 else " ."))
            for i, clause in enumerate(clauses[1:], start=2):
                lines.append(f"{_INDENT}{clause}" + (" ;" if i < len(clauses) else " ."))

        logger.debug(f"Serialized {len(graph)} triples under {len(by_subject)} subjects")
        return "\n".join(lines) + "\n" if lines else ""


def serialize_turtle(graph: Graph, prefixes: Optional[PrefixMap] = None) -> str:
    """Serialize a graph deterministically; see ``TurtleSerializer``."""
    return TurtleSerializer(prefixes).serialize(graph)
