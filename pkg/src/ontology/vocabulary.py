"""Shipped ZAMO vocabulary graphs."""

from functools import lru_cache
from typing import Iterable, Optional
from ..models.enums import ZamoModule
from ..rdf.graph import Graph
from ..serialization.parser import parse_turtle_file
from ..serialization.prefixes import PrefixMap
from ..rdf.namespaces import DEFAULT_PREFIXES
from ..utils.helpers import resource_path
from ..utils.logger import get_logger

logger = get_logger(__name__)

CONTROLLED_VOCABULARY_FILE = "controlled-vocabulary.ttl"


def vocabulary_file(module: ZamoModule):
    return resource_path("ontology", "data", f"{ZamoModule(module).value}.ttl")


@lru_cache(maxsize=None)
def builtin_vocabulary(module: ZamoModule) -> Graph:
    """
    Parse the shipped namespace file of a ZAMO module.

    Args:
        module: agents, events or sources

    Returns:
        Frozen vocabulary graph
    """
    module = ZamoModule(module)
    graph, _ = parse_turtle_file(vocabulary_file(module))
    logger.debug(f"Loaded {module.value} vocabulary: {len(graph)} triples")
    return graph.freeze()


@lru_cache(maxsize=None)
def controlled_vocabulary() -> Graph:
    """Roles, knowledge domains, condition states, attribute types and currencies."""
    graph, _ = parse_turtle_file(resource_path("ontology", "data", CONTROLLED_VOCABULARY_FILE))
    return graph.freeze()


def full_vocabulary(
    modules: Optional[Iterable[ZamoModule]] = None,
    include_controlled: bool = True
) -> Graph:
    """
    Merge shipped vocabularies.

    Args:
        modules: Modules to include (all three when None)
        include_controlled: Also merge the controlled vocabulary

    Returns:
        New frozen graph
    """
    selected = list(ZamoModule) if modules is None else [ZamoModule(m) for m in modules]
    merged = Graph()
    for module in selected:
        merged.insert_all(builtin_vocabulary(module))
    if include_controlled:
        merged.insert_all(controlled_vocabulary())
    return merged.freeze()


def default_prefixes() -> PrefixMap:
    """Core, ZAMO and alignment-target prefixes."""
    return PrefixMap(DEFAULT_PREFIXES)
