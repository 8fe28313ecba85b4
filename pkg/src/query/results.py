"""Result tables of evaluated queries."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple
import pandas as pd
from ..rdf.terms import IRI, BlankNode, Term
from ..serialization.prefixes import PrefixMap
from ..serialization.serializer import TurtleSerializer
from ..utils.helpers import frame_to_csv

Cell = Optional[Term]


def render_compact(term: Cell, prefixes: PrefixMap) -> str:
    """IRIs as prefixed names where possible, literals as their bare lexical form."""
    if term is None:
        return ""
    if isinstance(term, IRI):
        return prefixes.shrink(term.value) or f"<{term.value}>"
    if isinstance(term, BlankNode):
        return str(term)
    return term.lexical


@dataclass
class ResultTable:
    """
    Header of variable names and rows of terms (None marks an unbound cell).

    Every row has exactly one cell per header entry.
    """
    header: List[str]
    rows: List[Tuple[Cell, ...]] = field(default_factory=list)
    prefixes: PrefixMap = field(default_factory=PrefixMap, compare=False)

    def __post_init__(self):
        width = len(self.header)
        for row in self.rows:
            if len(row) != width:
                raise ValueError(f"row {row!r} does not match header {self.header!r}")

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[Tuple[Cell, ...]]:
        return iter(self.rows)

    def column(self, name: str) -> List[Cell]:
        """
        Cells of one column, in row order.

        Args:
            name: Variable name from the header

        Returns:
            List of terms, None where the variable is unbound

        Raises:
            ValueError: If ``name`` is not in the header
        """
        index = self.header.index(name)
        return [row[index] for row in self.rows]

    def compact_rows(self) -> List[Dict[str, str]]:
        """Rows as variable -> compact rendering."""
        return [
            {name: render_compact(cell, self.prefixes) for name, cell in zip(self.header, row)}
            for row in self.rows
        ]

    def as_multiset(self) -> Counter:
        """Order-insensitive view of the compact rows."""
        return Counter(tuple(sorted(row.items())) for row in self.compact_rows())

    def to_dataframe(self, compact: bool = False) -> pd.DataFrame:
        """
        Tabular view of the results.

        Args:
            compact: Bare lexical forms instead of Turtle term syntax
                (literals quoted, with their datatype)

        Returns:
            DataFrame with one string column per variable
        """
        if compact:
            records = self.compact_rows()
        else:
            serializer = TurtleSerializer(self.prefixes)
            records = [
                {name: "" if cell is None else serializer.render_term(cell, explicit=True) for name, cell in zip(self.header, row)}
                for row in self.rows
            ]
        return pd.DataFrame(records, columns=self.header, dtype=str)

    def to_csv(self, line_terminator: str = "\n") -> str:
        """CSV with a header row; IRIs prefixed where possible, literals with datatype suffix."""
        return frame_to_csv(self.to_dataframe(), line_terminator)

    def to_text(self) -> str:
        """Aligned plain-text table of the compact rows."""
        if not self.rows:
            return " ".join(self.header) + "\n(no results)\n"
        return self.to_dataframe(compact=True).to_string(index=False) + "\n"

    @classmethod
    def empty(cls, header: Sequence[str], prefixes: Optional[PrefixMap] = None) -> "ResultTable":
        """Table with the given header and no rows."""
        return cls(list(header), [], prefixes or PrefixMap())
