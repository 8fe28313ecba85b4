"""Namespace constants: W3C core vocabularies, ZAMO modules and alignment targets."""

from typing import Dict, Final


class Namespace(str):
    """A namespace IRI; attribute or item access mints member IRIs as strings."""

    def term(self, local: str) -> str:
        return f"{self}{local}"

    def __getattr__(self, local: str) -> str:
        if local.startswith("__"):
            raise AttributeError(local)
        return self.term(local)

    def __getitem__(self, local):  # type: ignore[override]
        if isinstance(local, str):
            return self.term(local)
        return str.__getitem__(self, local)


RDF: Final = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS: Final = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL: Final = Namespace("http://www.w3.org/2002/07/owl#")
XSD: Final = Namespace("http://www.w3.org/2001/XMLSchema#")
SKOS: Final = Namespace("http://www.w3.org/2004/02/skos/core#")

ZAMO_AGENTS: Final = Namespace("https://w3id.org/zeri/ontology/zamo/agents#")
ZAMO_EVENTS: Final = Namespace("https://w3id.org/zeri/ontology/zamo/events#")
ZAMO_SOURCES: Final = Namespace("https://w3id.org/zeri/ontology/zamo/sources#")

RDF_TYPE: Final = RDF.type
RDF_LANG_STRING: Final = RDF.langString

# Alignment targets, keyed by the prefix labels used in the published tables
EXTERNAL_PREFIXES: Final[Dict[str, str]] = {
    "skos": str(SKOS),
    "crm": "http://www.cidoc-crm.org/cidoc-crm/",
    "arco-context": "https://w3id.org/arco/ontology/context-description/",
    "arco-archive": "https://w3id.org/arco/ontology/archive/",
    "org": "http://www.w3.org/ns/org#",
    "dul": "http://www.loa-cnr.it/ontologies/DUL.owl#",
    "fentry": "http://www.essepuntato.it/2014/03/fentry/",
    "hico": "http://purl.org/emmedi/hico/",
    "prov": "http://www.w3.org/ns/prov#",
    "fabio": "http://purl.org/spar/fabio/",
    "cito": "http://purl.org/spar/cito/",
}

ZAMO_PREFIXES: Final[Dict[str, str]] = {
    "zamoa": str(ZAMO_AGENTS),
    "zamoe": str(ZAMO_EVENTS),
    "zamos": str(ZAMO_SOURCES),
}

CORE_PREFIXES: Final[Dict[str, str]] = {
    "rdf": str(RDF),
    "rdfs": str(RDFS),
    "owl": str(OWL),
    "xsd": str(XSD),
}

DEFAULT_PREFIXES: Final[Dict[str, str]] = {**CORE_PREFIXES, **ZAMO_PREFIXES, **EXTERNAL_PREFIXES}

# Vocabularies whose terms never count as undeclared in instance data
CORE_NAMESPACES: Final[tuple[str, ...]] = (str(RDF), str(RDFS), str(OWL), str(XSD), str(SKOS))


def is_core_iri(iri: str) -> bool:
    """True for RDF, RDFS, OWL, XSD and SKOS terms."""
    return iri.startswith(CORE_NAMESPACES)
