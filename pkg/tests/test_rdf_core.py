"""Tests for RDF terms and the in-memory graph."""

import random

import pytest

from src.exceptions import FrozenGraph, IllFormedLiteral, LangWithoutLangString, UnsupportedDatatype
from src.rdf import (
    BlankNode,
    Graph,
    IRI,
    Literal,
    Triple,
    XSD_BOOLEAN,
    XSD_DATE,
    XSD_DECIMAL,
    XSD_GYEAR,
    XSD_INTEGER,
    XSD_STRING,
    insert,
    make_literal,
    match,
    merge,
    sort_key,
)
from src.rdf.namespaces import RDF_LANG_STRING, RDF_TYPE, ZAMO_AGENTS
from src.serialization.parser import parse_turtle_file

DATA = "https://w3id.org/zeri/data/agents/"


def t(s, p, o):
    return Triple(IRI(DATA + s), IRI(ZAMO_AGENTS[p]), o if not isinstance(o, str) else IRI(DATA + o))


@pytest.fixture
def small_graph():
    graph = Graph()
    graph.insert(t("SR", "providesServiceIn", "AntichitaDirection"))
    graph.insert(t("Antichita", "requestsServiceIn", "AntichitaDirection"))
    graph.insert(t("Antichita", "hasName", Literal("Antichità")))
    return graph


@pytest.fixture
def agents_data(suites_dir):
    graph, _ = parse_turtle_file(suites_dir / "agents" / "iteration-1" / "dataset.ttl")
    return graph


@pytest.fixture
def agents_modelet(suites_dir):
    graph, _ = parse_turtle_file(suites_dir / "agents" / "iteration-1" / "modelet.ttl")
    return graph


# Literals

def test_make_literal_gyear():
    """A year lexical form becomes a gYear literal."""
    literal = make_literal("1949", XSD_GYEAR)

    assert literal == Literal("1949", XSD_GYEAR)
    assert literal.numeric_value() == 1949


def test_make_literal_empty_string():
    """Test an empty string literal."""
    assert make_literal("", XSD_STRING) == Literal("")


@pytest.mark.parametrize("lexical,datatype", [
    ("12x", XSD_INTEGER),
    ("1.2.3", XSD_DECIMAL),
    ("yes", XSD_BOOLEAN),
    ("2008-02-30", XSD_DATE),
    ("2008-2-3", XSD_DATE),
    ("49", XSD_GYEAR),
])
def test_make_literal_ill_formed(lexical, datatype):
    """Test ill-formed lexical forms."""
    with pytest.raises(IllFormedLiteral):
        make_literal(lexical, datatype)


@pytest.mark.parametrize("lexical,datatype", [
    ("-12", XSD_INTEGER),
    ("+7", XSD_INTEGER),
    (".5", XSD_DECIMAL),
    ("15000", XSD_DECIMAL),
    ("0", XSD_BOOLEAN),
    ("2008-02-29", XSD_DATE),
    ("-0500", XSD_GYEAR),
])
def test_make_literal_well_formed(lexical, datatype):
    """Test well-formed lexical forms."""
    assert make_literal(lexical, datatype).lexical == lexical


def test_make_literal_language_tag():
    """A language tag implies rdf:langString and is lower-cased."""
    literal = make_literal("Vendita", lang="IT")

    assert literal.datatype == RDF_LANG_STRING
    assert literal.lang == "it"


def test_make_literal_lang_with_other_datatype():
    """Test a language tag with a non-string datatype."""
    with pytest.raises(LangWithoutLangString):
        make_literal("12", XSD_INTEGER, lang="en")


def test_make_literal_lang_with_explicit_string_datatype():
    """An explicit xsd:string is not widened to rdf:langString."""
    with pytest.raises(LangWithoutLangString):
        make_literal("x", XSD_STRING, "en")


def test_make_literal_unsupported_datatype():
    """Test an unsupported datatype."""
    with pytest.raises(UnsupportedDatatype):
        make_literal("P1Y", "http://www.w3.org/2001/XMLSchema#duration")


def test_lang_string_requires_tag():
    """Test that rdf:langString requires a tag."""
    with pytest.raises(IllFormedLiteral):
        make_literal("x", RDF_LANG_STRING)


# Terms and triples

def test_iri_must_be_absolute():
    """Test that IRIs must be absolute."""
    with pytest.raises(ValueError):
        IRI("SR")


def test_triple_rejects_literal_subject():
    """Test that a triple rejects a literal subject."""
    with pytest.raises(ValueError):
        Triple(Literal("x"), IRI(RDF_TYPE), IRI(DATA + "SR"))


def test_triple_rejects_non_iri_predicate():
    """Test that a triple rejects a non-IRI predicate."""
    with pytest.raises(ValueError):
        Triple(IRI(DATA + "SR"), BlankNode("b0"), IRI(DATA + "SR"))


def test_term_rendering():
    """Test term rendering."""
    assert str(IRI(DATA + "SR")) == f"<{DATA}SR>"
    assert str(BlankNode("b1")) == "_:b1"
    assert str(Literal('say "hi"')) == '"say \\"hi\\""'
    assert str(Literal("ciao", RDF_LANG_STRING, "it")) == '"ciao"@it'
    assert str(Literal("1949", XSD_GYEAR)) == f'"1949"^^<{XSD_GYEAR}>'


def test_sort_key_orders_numbers_by_value():
    """Test sort key orders numbers by value."""
    terms = [Literal("10", XSD_INTEGER), Literal("9", XSD_INTEGER), IRI(DATA + "a"), None, BlankNode("z")]
    ordered = sorted(terms, key=sort_key)

    assert ordered[0] is None
    assert ordered[1] == BlankNode("z")
    assert ordered[2] == IRI(DATA + "a")
    assert [term.lexical for term in ordered[3:]] == ["9", "10"]


# Insert

def test_insert_is_idempotent(small_graph):
    """Test that inserting twice adds one triple."""
    triple = t("SR", "fallsWithin", IRI(ZAMO_AGENTS.ManneristPainting))
    before = len(small_graph)

    insert(small_graph, triple)
    insert(small_graph, triple)

    assert len(small_graph) == before + 1


def test_insert_three_distinct():
    """Test inserting three distinct triples."""
    graph = Graph()
    for name in ("a", "b", "c"):
        insert(graph, t(name, "hasName", Literal(name)))

    assert len(graph) == 3


def test_insert_into_frozen_graph(small_graph):
    """Test inserting into a frozen graph."""
    small_graph.freeze()

    with pytest.raises(FrozenGraph):
        small_graph.insert(t("MF", "hasName", Literal("MF")))
    assert len(small_graph) == 3


def test_remove_before_freeze(small_graph):
    """Test removal before freezing."""
    triple = t("Antichita", "hasName", Literal("Antichità"))
    small_graph.remove(triple)

    assert triple not in small_graph
    assert match(small_graph, IRI(DATA + "Antichita"), None, None) == [
        t("Antichita", "requestsServiceIn", "AntichitaDirection")
    ]


# Match

def test_match_all_wildcards(small_graph):
    """Test match with every position unbound."""
    assert match(small_graph) == list(small_graph)


def test_match_on_empty_graph():
    """Test match on an empty graph."""
    assert match(Graph(), IRI(DATA + "SR")) == []


def test_match_subject_against_linear_scan(agents_data):
    """Indexed lookups agree with a scan for every bound combination."""
    sr = IRI(DATA + "SR")
    expected = [triple for triple in agents_data if triple.subject == sr]

    assert match(agents_data, sr, None, None) == expected
    assert expected


@pytest.mark.parametrize("mask", [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)])
def test_match_patterns_against_linear_scan(agents_data, mask):
    """Test match patterns against linear scan."""
    for triple in agents_data:
        pattern = [term if bound else None for term, bound in zip(triple, mask)]
        expected = [
            candidate for candidate in agents_data
            if all(want is None or want == got for want, got in zip(pattern, candidate))
        ]
        assert match(agents_data, *pattern) == expected
        assert agents_data.cardinality(*pattern) == len(expected)


def test_match_preserves_insertion_order(small_graph):
    """Test match preserves insertion order."""
    direction = IRI(DATA + "AntichitaDirection")
    subjects = [triple.subject for triple in match(small_graph, None, None, direction)]

    assert subjects == [IRI(DATA + "SR"), IRI(DATA + "Antichita")]


def test_match_literal_subject_is_empty(small_graph):
    """Test match with a literal subject."""
    assert match(small_graph, Literal("x"), None, None) == []


# Merge

def test_merge_with_empty_is_identity(agents_data):
    """Test merging with an empty graph."""
    assert merge(agents_data, Graph()) == agents_data


def test_merge_with_itself(agents_data):
    """Test merging a graph with itself."""
    assert merge(agents_data, agents_data) == agents_data


def test_merge_size_is_set_union(agents_modelet, agents_data):
    """Test that merge size is the set union size."""
    merged = merge(agents_modelet, agents_data)
    shared = set(agents_modelet) & set(agents_data)

    assert len(merged) == len(agents_modelet) + len(agents_data) - len(shared)


def test_merge_leaves_inputs_unchanged(agents_modelet, agents_data):
    """Test merge leaves inputs unchanged."""
    sizes = (len(agents_modelet), len(agents_data))
    agents_data.freeze()

    merged = merge(agents_modelet, agents_data)

    assert (len(agents_modelet), len(agents_data)) == sizes
    assert not merged.frozen


def test_graph_equality_ignores_blank_node_labels():
    """Test graph equality ignores blank node labels."""
    a = Graph([Triple(BlankNode("x"), IRI(RDF_TYPE), IRI(ZAMO_AGENTS.Person))])
    b = Graph([Triple(BlankNode("y"), IRI(RDF_TYPE), IRI(ZAMO_AGENTS.Person))])

    assert a == b


# Random graphs

NODES = [IRI(f"urn:n{i}") for i in range(6)] + [BlankNode("b0")]
PREDICATES = [IRI(f"urn:p{i}") for i in range(3)]
OBJECTS = NODES + [Literal("1", XSD_INTEGER), Literal("x"), Literal("1949", XSD_GYEAR)]


def _random_graph(rng, blank_nodes=True):
    subjects = NODES if blank_nodes else NODES[:-1]
    objects = OBJECTS if blank_nodes else OBJECTS[:6] + OBJECTS[7:]
    graph = Graph()
    for _ in range(rng.randint(0, 200)):
        graph.add(rng.choice(subjects), rng.choice(PREDICATES), rng.choice(objects))
    return graph


@pytest.mark.parametrize("seed", range(200))
def test_match_random_graphs_against_linear_scan(seed):
    """Test every pattern shape on random graphs of up to 200 triples."""
    rng = random.Random(seed)
    graph = _random_graph(rng)
    triples = list(graph)

    for _ in range(20):
        pattern = [
            rng.choice(NODES) if rng.random() < 0.5 else None,
            rng.choice(PREDICATES) if rng.random() < 0.5 else None,
            rng.choice(OBJECTS) if rng.random() < 0.5 else None,
        ]
        expected = [
            candidate for candidate in triples
            if all(want is None or want == got for want, got in zip(pattern, candidate))
        ]
        assert match(graph, *pattern) == expected
        assert graph.cardinality(*pattern) == len(expected)


@pytest.mark.parametrize("seed", range(200))
def test_merge_is_commutative_and_associative(seed):
    """Test that merge is commutative and associative."""
    rng = random.Random(seed)
    a, b, c = (_random_graph(rng, blank_nodes=False) for _ in range(3))

    assert merge(a, b) == merge(b, a)
    assert merge(merge(a, b), c) == merge(a, merge(b, c))
    assert set(merge(a, b)) == set(a) | set(b)
