"""RDF terms and triples."""

import re
from dataclasses import dataclass
from datetime import date
from decimal import Decimal
from typing import Optional, Union

from ..exceptions import IllFormedLiteral, LangWithoutLangString, UnsupportedDatatype
from .namespaces import RDF_LANG_STRING, XSD

_SCHEME = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_LANG = re.compile(r"^[A-Za-z]+(-[A-Za-z0-9]+)*$")

XSD_STRING = XSD.string
XSD_INTEGER = XSD.integer
XSD_DECIMAL = XSD.decimal
XSD_BOOLEAN = XSD.boolean
XSD_DATE = XSD.date
XSD_GYEAR = XSD.gYear

_LEXICAL_GRAMMAR = {
    XSD_STRING: None,
    RDF_LANG_STRING: None,
    XSD_INTEGER: re.compile(r"^[+-]?\d+$"),
    XSD_DECIMAL: re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)$"),
    XSD_BOOLEAN: re.compile(r"^(true|false|1|0)$"),
    XSD_DATE: re.compile(r"^-?\d{4,}-\d{2}-\d{2}$"),
    XSD_GYEAR: re.compile(r"^-?\d{4,}$"),
}

SUPPORTED_DATATYPES = frozenset(_LEXICAL_GRAMMAR)
NUMERIC_DATATYPES = frozenset({XSD_INTEGER, XSD_DECIMAL, XSD_GYEAR})


@dataclass(frozen=True, slots=True)
class IRI:
    """Absolute IRI reference."""
    value: str

    def __post_init__(self):
        if not _SCHEME.match(self.value):
            raise ValueError(f"IRI is not absolute: {self.value!r}")

    def __str__(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class BlankNode:
    """Blank node identified by a document-local label."""
    label: str

    def __str__(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True, slots=True)
class Literal:
    """Literal with lexical form, datatype IRI and optional language tag."""
    lexical: str
    datatype: str = XSD_STRING
    lang: Optional[str] = None

    def __str__(self) -> str:
        text = self.lexical.replace("\\", "\\\\").replace('"', '\\"')
        if self.lang:
            return f'"{text}"@{self.lang}'
        if self.datatype == XSD_STRING:
            return f'"{text}"'
        return f'"{text}"^^<{self.datatype}>'

    @property
    def is_numeric(self) -> bool:
        """True for integer, decimal and gYear literals."""
        return self.datatype in NUMERIC_DATATYPES

    def numeric_value(self) -> Decimal:
        """Numeric value of integer, decimal and gYear literals."""
        if not self.is_numeric:
            raise TypeError(f"not a numeric literal: {self}")
        return Decimal(self.lexical)


Term = Union[IRI, BlankNode, Literal]


@dataclass(frozen=True, slots=True)
class Triple:
    """Subject, predicate, object. Subjects are never literals, predicates are always IRIs."""
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self):
        if isinstance(self.subject, Literal):
            raise ValueError(f"literal in subject position: {self.subject}")
        if not isinstance(self.predicate, IRI):
            raise ValueError(f"predicate must be an IRI: {self.predicate}")

    def __iter__(self):
        yield self.subject
        yield self.predicate
        yield self.object

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


def make_literal(lexical: str, datatype: Optional[str] = None, lang: Optional[str] = None) -> Literal:
    """
    Build a literal, checking the lexical form against the datatype grammar.

    Args:
        lexical: Lexical form
        datatype: Datatype IRI (one of SUPPORTED_DATATYPES); omitted means xsd:string,
            or rdf:langString when a language tag is given
        lang: Optional language tag, only with rdf:langString

    Returns:
        Literal term

    Raises:
        UnsupportedDatatype: datatype outside the supported set
        LangWithoutLangString: lang given with a non language-string datatype
        IllFormedLiteral: lexical form does not match the datatype
    """
    if datatype is None:
        datatype = XSD_STRING if lang is None else RDF_LANG_STRING
    if datatype not in SUPPORTED_DATATYPES:
        raise UnsupportedDatatype(f"unsupported datatype <{datatype}>")
    if lang is not None and datatype != RDF_LANG_STRING:
        raise LangWithoutLangString(f"language tag @{lang} on <{datatype}>")
    if datatype == RDF_LANG_STRING:
        if not lang or not _LANG.match(lang):
            raise IllFormedLiteral(f"language-string requires a valid language tag, got {lang!r}")
        return Literal(lexical, datatype, lang.lower())

    grammar = _LEXICAL_GRAMMAR[datatype]
    if grammar is not None and not grammar.match(lexical):
        raise IllFormedLiteral(f"{lexical!r} is not a valid <{datatype}>")
    if datatype == XSD_DATE:
        try:
            date.fromisoformat(lexical.lstrip("-"))
        except ValueError as e:
            raise IllFormedLiteral(f"{lexical!r} is not a calendar date: {e}") from e
    return Literal(lexical, datatype)


def iri(value: str) -> IRI:
    """
    Build an IRI term.

    Raises:
        ValueError: If ``value`` is not an absolute IRI
    """
    return IRI(value)


def sort_key(term: Optional[Term]) -> tuple:
    """Total order over terms: unbound, blank nodes, IRIs, then literals (numbers by value)."""
    if term is None:
        return (0,)
    if isinstance(term, BlankNode):
        return (1, term.label)
    if isinstance(term, IRI):
        return (2, term.value)
    if term.is_numeric:
        return (3, 0, term.numeric_value(), term.lexical, term.datatype)
    return (3, 1, term.lexical, term.datatype, term.lang or "")
