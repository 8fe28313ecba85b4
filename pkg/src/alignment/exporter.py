"""Tabular export of alignment rows."""

from typing import List, Optional
import pandas as pd
from ..models.enums import ZamoModule
from ..models.schemas import Mapping
from ..rdf.namespaces import EXTERNAL_PREFIXES
from ..serialization.prefixes import PrefixMap
from ..utils.helpers import frame_to_csv
from ..utils.logger import get_logger

logger = get_logger(__name__)

COLUMNS = ["zamo_uri", "skos_property", "aligned_uri"]


class AlignmentExporter:
    """Renders a module's mappings as the published three-column table."""

    def __init__(self, prefixes: Optional[PrefixMap] = None, line_terminator: str = "\n"):
        self.prefixes = prefixes or PrefixMap(EXTERNAL_PREFIXES)
        self.line_terminator = line_terminator

    def to_dataframe(self, mappings: List[Mapping], module: ZamoModule) -> pd.DataFrame:
        """
        Rows of one module in fixture order.

        Args:
            mappings: Loaded mappings (any modules)
            module: Module to export

        Returns:
            DataFrame with columns zamo_uri, skos_property, aligned_uri
        """
        module = ZamoModule(module)
        selected = sorted((m for m in mappings if m.module == module), key=lambda m: m.order)
        records = [
            {
                "zamo_uri": m.local_name,
                "skos_property": f"skos:{m.mapping_property.value}",
                "aligned_uri": self.prefixes.shrink(m.target) or m.target,
            }
            for m in selected
        ]
        return pd.DataFrame(records, columns=COLUMNS)

    def export(self, mappings: List[Mapping], module: ZamoModule) -> str:
        """CSV text of the module's rows, header included."""
        frame = self.to_dataframe(mappings, module)
        logger.info(f"Exported {len(frame)} {ZamoModule(module).value} alignment rows")
        return frame_to_csv(frame, self.line_terminator)


def export_alignment_table(mappings: List[Mapping], module: ZamoModule, line_terminator: str = "\n") -> str:
    """CSV text of one module's alignment table, header included."""
    return AlignmentExporter(line_terminator=line_terminator).export(mappings, module)
