"""RDF terms, triples and the in-memory graph store."""

from .graph import Graph, insert, match, merge
from .terms import (
    BlankNode,
    IRI,
    Literal,
    NUMERIC_DATATYPES,
    SUPPORTED_DATATYPES,
    Term,
    Triple,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DECIMAL,
    XSD_GYEAR,
    XSD_INTEGER,
    XSD_STRING,
    iri,
    make_literal,
    sort_key,
)

__all__ = [
    "Graph",
    "insert",
    "match",
    "merge",
    "BlankNode",
    "IRI",
    "Literal",
    "NUMERIC_DATATYPES",
    "SUPPORTED_DATATYPES",
    "Term",
    "Triple",
    "XSD_BOOLEAN",
    "XSD_DATE",
    "XSD_DECIMAL",
    "XSD_GYEAR",
    "XSD_INTEGER",
    "XSD_STRING",
    "iri",
    "make_literal",
    "sort_key",
]
