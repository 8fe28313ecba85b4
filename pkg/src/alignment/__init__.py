"""SKOS alignment of ZAMO with external models."""

from .exporter import AlignmentExporter, export_alignment_table
from .mappings import (
    MappingLoader,
    MappingValidator,
    alignment_graph,
    load_all_mappings,
    load_mappings,
    module_of,
    validate_mappings,
)

__all__ = [
    "AlignmentExporter",
    "export_alignment_table",
    "MappingLoader",
    "MappingValidator",
    "alignment_graph",
    "load_all_mappings",
    "load_mappings",
    "module_of",
    "validate_mappings",
]
