"""Prefix label to namespace bindings."""

from typing import Dict, Iterator, Mapping, Optional, Tuple
from ..rdf.terms import IRI
from .lexer import LOCAL_NAME_RE, PREFIX_LABEL_RE


class PrefixMap:
    """
    Prefix bindings plus an optional base IRI.

    Labels are unique; rebinding a label replaces its namespace.
    """

    def __init__(self, prefixes: Optional[Mapping[str, str]] = None, base: Optional[str] = None):
        self._prefixes: Dict[str, str] = {}
        self.base = base
        for label, namespace in (prefixes or {}).items():
            self.bind(label, namespace)

    def bind(self, label: str, namespace: str) -> None:
        """
        Bind a label to a namespace IRI.

        Raises:
            ValueError: if the label is malformed or the namespace is not absolute
        """
        if not PREFIX_LABEL_RE.match(label):
            raise ValueError(f"invalid prefix label {label!r}")
        IRI(namespace)
        self._prefixes[label] = namespace

    def expand(self, pname: str) -> str:
        """
        Expand ``label:local`` to a full IRI.

        Raises:
            KeyError: if the label is not bound
        """
        label, _, local = pname.partition(":")
        if label not in self._prefixes:
            raise KeyError(label)
        return self._prefixes[label] + local

    def shrink(self, iri: str) -> Optional[str]:
        """Prefixed form of an IRI using the longest matching namespace, or None."""
        best: Optional[Tuple[str, str]] = None
        for label, namespace in self._prefixes.items():
            if iri.startswith(namespace) and (best is None or len(namespace) > len(best[1])):
                if LOCAL_NAME_RE.match(iri[len(namespace):]):
                    best = (label, namespace)
        if best is None:
            return None
        return f"{best[0]}:{iri[len(best[1]):]}"

    def merged(self, other: "PrefixMap") -> "PrefixMap":
        """New map with the bindings of both; ``other`` wins on shared labels."""
        combined = PrefixMap(self._prefixes, base=other.base or self.base)
        for label, namespace in other.items():
            combined.bind(label, namespace)
        return combined

    def namespace(self, label: str) -> Optional[str]:
        """Namespace bound to ``label``, or None."""
        return self._prefixes.get(label)

    def items(self):
        return self._prefixes.items()

    def as_dict(self) -> Dict[str, str]:
        return dict(self._prefixes)

    def __contains__(self, label: object) -> bool:
        return label in self._prefixes

    def __iter__(self) -> Iterator[str]:
        return iter(self._prefixes)

    def __len__(self) -> int:
        return len(self._prefixes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrefixMap):
            return NotImplemented
        return self._prefixes == other._prefixes and self.base == other.base

    def __repr__(self) -> str:
        return f"PrefixMap({self._prefixes!r}, base={self.base!r})"
