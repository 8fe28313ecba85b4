"""Indexed in-memory triple store."""

from collections import defaultdict
from typing import Dict, Iterable, Iterator, List, Optional, Set

from ..exceptions import FrozenGraph
from ..utils.logger import get_logger
from .terms import BlankNode, IRI, Literal, Term, Triple

logger = get_logger(__name__)

_Index = Dict[Term, Dict[Term, List[Triple]]]


class Graph:
    """
    Set of triples with subject, predicate and object indexes.

    Each index maps a first key to a second key to the triples sharing both,
    so every pattern with one or two bound positions is answered by lookups:

    - ``spo``: subject -> predicate -> triples
    - ``pos``: predicate -> object -> triples
    - ``osp``: object -> subject -> triples

    Iteration and match results follow insertion order. After ``freeze()``
    the graph is immutable and safe to share between readers.
    """

    __hash__ = None  # mutable container

    def __init__(self, triples: Optional[Iterable[Triple]] = None):
        self._triples: Dict[Triple, int] = {}
        self._spo: _Index = defaultdict(lambda: defaultdict(list))
        self._pos: _Index = defaultdict(lambda: defaultdict(list))
        self._osp: _Index = defaultdict(lambda: defaultdict(list))
        self._frozen = False
        if triples is not None:
            self.insert_all(triples)

    # mutation

    def insert(self, triple: Triple) -> "Graph":
        """
        Add a triple; duplicates leave the graph unchanged.

        Raises:
            FrozenGraph: if the graph has been frozen
        """
        if self._frozen:
            raise FrozenGraph(f"cannot insert into a frozen graph: {triple}")
        if triple in self._triples:
            return self
        self._triples[triple] = len(self._triples)
        s, p, o = triple.subject, triple.predicate, triple.object
        self._spo[s][p].append(triple)
        self._pos[p][o].append(triple)
        self._osp[o][s].append(triple)
        return self

    def insert_all(self, triples: Iterable[Triple]) -> "Graph":
        for triple in triples:
            self.insert(triple)
        return self

    def add(self, s: Term, p: Term, o: Term) -> "Graph":
        """Insert the triple ``(s, p, o)``."""
        return self.insert(Triple(s, p, o))

    def remove(self, triple: Triple) -> "Graph":
        """Remove a triple if present (pre-freeze only)."""
        if self._frozen:
            raise FrozenGraph(f"cannot remove from a frozen graph: {triple}")
        if triple not in self._triples:
            return self
        del self._triples[triple]
        s, p, o = triple.subject, triple.predicate, triple.object
        for index, k1, k2 in ((self._spo, s, p), (self._pos, p, o), (self._osp, o, s)):
            bucket = index[k1][k2]
            bucket.remove(triple)
            if not bucket:
                del index[k1][k2]
                if not index[k1]:
                    del index[k1]
        return self

    def freeze(self) -> "Graph":
        """Make the graph read-only; later inserts and removals raise ``FrozenGraph``."""
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    # access

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._triples

    def contains(self, s: Term, p: Term, o: Term) -> bool:
        return Triple(s, p, o) in self._triples

    def match(
        self,
        s: Optional[Term] = None,
        p: Optional[Term] = None,
        o: Optional[Term] = None
    ) -> List[Triple]:
        """
        Return the triples agreeing with every bound position.

        Args:
            s: Subject or None for a wildcard
            p: Predicate or None for a wildcard
            o: Object or None for a wildcard

        Returns:
            Matching triples in insertion order
        """
        if s is not None and p is not None and o is not None:
            triple = _safe_triple(s, p, o)
            return [triple] if triple is not None and triple in self._triples else []

        if s is not None:
            by_predicate = self._spo.get(s)
            if not by_predicate:
                return []
            if p is not None:
                candidates = by_predicate.get(p, [])
            elif o is not None:
                candidates = self._osp.get(o, {}).get(s, [])
            else:
                candidates = [t for bucket in by_predicate.values() for t in bucket]
        elif p is not None:
            by_object = self._pos.get(p)
            if not by_object:
                return []
            if o is not None:
                candidates = by_object.get(o, [])
            else:
                candidates = [t for bucket in by_object.values() for t in bucket]
        elif o is not None:
            by_subject = self._osp.get(o)
            if not by_subject:
                return []
            candidates = [t for bucket in by_subject.values() for t in bucket]
        else:
            return list(self._triples)

        return sorted(candidates, key=self._triples.__getitem__)

    def cardinality(
        self,
        s: Optional[Term] = None,
        p: Optional[Term] = None,
        o: Optional[Term] = None
    ) -> int:
        """Number of triples matching a pattern."""
        if s is None and p is None and o is None:
            return len(self._triples)
        if s is not None and p is not None and o is None:
            return len(self._spo.get(s, {}).get(p, ()))
        if p is not None and o is not None and s is None:
            return len(self._pos.get(p, {}).get(o, ()))
        if o is not None and s is not None and p is None:
            return len(self._osp.get(o, {}).get(s, ()))
        return len(self.match(s, p, o))

    def subjects(self, p: Optional[Term] = None, o: Optional[Term] = None) -> List[Term]:
        return _unique(t.subject for t in self.match(None, p, o))

    def objects(self, s: Optional[Term] = None, p: Optional[Term] = None) -> List[Term]:
        return _unique(t.object for t in self.match(s, p, None))

    def value(self, s: Term, p: Term) -> Optional[Term]:
        """First object of (s, p, ?), or None."""
        bucket = self._spo.get(s, {}).get(p)
        return bucket[0].object if bucket else None

    def terms(self) -> Set[Term]:
        found: Set[Term] = set()
        for t in self._triples:
            found.update((t.subject, t.predicate, t.object))
        return found

    def has_blank_nodes(self) -> bool:
        return any(
            isinstance(t.subject, BlankNode) or isinstance(t.object, BlankNode)
            for t in self._triples
        )

    # combination

    def copy(self) -> "Graph":
        """Unfrozen copy with the same insertion order."""
        return Graph(self._triples)

    def merge(self, other: "Graph") -> "Graph":
        """
        Union of two graphs as a new, unfrozen graph; inputs are unchanged.

        Args:
            other: Graph to union with

        Returns:
            New graph holding the triples of self followed by the new triples of other
        """
        merged = self.copy()
        merged.insert_all(other)
        logger.debug(f"Merged graphs of {len(self)} and {len(other)} triples into {len(merged)}")
        return merged

    # equality

    def canonical_triples(self) -> Set[Triple]:
        """Triples with blank nodes relabelled in first-occurrence order."""
        if not self.has_blank_nodes():
            return set(self._triples)
        labels: Dict[BlankNode, BlankNode] = {}

        def relabel(term: Term) -> Term:
            if isinstance(term, BlankNode):
                if term not in labels:
                    labels[term] = BlankNode(f"c{len(labels)}")
                return labels[term]
            return term

        return {Triple(relabel(t.subject), t.predicate, relabel(t.object)) for t in self._triples}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return len(self) == len(other) and self.canonical_triples() == other.canonical_triples()

    def __repr__(self) -> str:
        state = "frozen" if self._frozen else "mutable"
        return f"<Graph {len(self)} triples, {state}>"


def insert(graph: Graph, triple: Triple) -> Graph:
    """
    Add a triple to a graph. Inserting a present triple is a no-op.

    Args:
        graph: Target graph
        triple: Triple to add

    Returns:
        The same graph

    Raises:
        FrozenGraph: If the graph is frozen
    """
    return graph.insert(triple)


def match(
    graph: Graph,
    s: Optional[Term] = None,
    p: Optional[Term] = None,
    o: Optional[Term] = None
) -> List[Triple]:
    """
    Triples agreeing with every bound position, in insertion order.

    Args:
        graph: Graph to search
        s: Subject, or None for any
        p: Predicate, or None for any
        o: Object, or None for any

    Returns:
        List of matching triples
    """
    return graph.match(s, p, o)


def merge(a: Graph, b: Graph) -> Graph:
    """Union of two graphs; inputs unchanged."""
    return a.merge(b)


def _safe_triple(s: Term, p: Term, o: Term) -> Optional[Triple]:
    if isinstance(s, Literal) or not isinstance(p, IRI):
        return None
    return Triple(s, p, o)


def _unique(terms: Iterable[Term]) -> List[Term]:
    seen: Dict[Term, None] = {}
    for term in terms:
        seen.setdefault(term, None)
    return list(seen)
