"""ZAMO vocabulary data and schema extraction."""

from .schema import OntologySchema, SchemaExtractor, extract_schema, is_datatype, is_subclass_of, namespace_of
from .vocabulary import builtin_vocabulary, controlled_vocabulary, default_prefixes, full_vocabulary

__all__ = [
    "OntologySchema",
    "SchemaExtractor",
    "extract_schema",
    "is_datatype",
    "is_subclass_of",
    "namespace_of",
    "builtin_vocabulary",
    "controlled_vocabulary",
    "default_prefixes",
    "full_vocabulary",
]
