"""Tests for the Turtle parser and serializer."""

from pathlib import Path

import pytest

from src.exceptions import TurtleSyntaxError
from src.rdf import Graph, IRI, Literal, Triple, XSD_GYEAR, XSD_INTEGER
from src.rdf.namespaces import EXTERNAL_PREFIXES, RDF_TYPE, ZAMO_PREFIXES
from src.serialization import lexer
from src.serialization.parser import parse_turtle, parse_turtle_file
from src.serialization.prefixes import PrefixMap
from src.serialization.serializer import serialize_turtle

ROOT = Path(__file__).parent.parent
SHIPPED = sorted(
    [*ROOT.glob("src/**/*.ttl"), *ROOT.glob("fixtures/**/*.ttl"), *ROOT.glob("tests/fixtures/**/*.ttl")]
)

ZERI = "https://w3id.org/zeri/data/"
CRM = EXTERNAL_PREFIXES["crm"]

HEAD = "@prefix : <http://example.org/> .\n@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"

# (document, line, column, message fragment)
MALFORMED = [
    ("x y z .", 1, 1, "expected subject"),
    (":a :b :c .", 1, 1, "undeclared prefix"),
    (HEAD + ":a :b :c", 3, 8, "'.' at end of statement"),
    (HEAD + ':a :b "open .', 3, 7, "unterminated string"),
    (HEAD + ":a :b ( :c ) .", 3, 7, "collections"),
    (HEAD + ":a :b [ :c :d ] .", 3, 7, "blank node property lists"),
    (HEAD + '"x" :b :c .', 3, 1, "literal cannot be a subject"),
    (HEAD + ":a :b 1.5e3 .", 3, 7, "double"),
    (HEAD + ':a :b """x""" .', 3, 7, "triple-quoted"),
    (HEAD + ":a :b <relative> .", 3, 7, "relative IRI"),
    (HEAD + ':a :b "a\\q" .', 3, 7, "invalid escape"),
    (HEAD + ':a :b "12x"^^xsd:integer .', 3, 7, "not a valid"),
    (HEAD + ":a :b .", 3, 7, "expected object"),
    (HEAD + ":a :b :c :d :e :f .", 3, 10, "'.' at end of statement"),
    (HEAD + ':a "p" :c .', 3, 4, "expected predicate"),
    (HEAD + ":a :b :c ~ .", 3, 10, "unexpected character"),
    (HEAD + "@prefix foo <http://example.org/foo#> .", 3, 9, "prefix label"),
    (HEAD + "@prefix ex: <http://example.org/ex#>\n:a :b :c .", 4, 1, "'.' after @prefix"),
    (HEAD + ':a :b "x"@en^^xsd:string .', 3, 13, "'.' at end of statement"),
    (HEAD + ':a :b "x"^^foo:bar .', 3, 12, "undeclared prefix 'foo:'"),
    (HEAD + ":a _:b :c .", 3, 4, "expected predicate"),
    (HEAD + '\n\n   :a :b "1949"^^xsd:gYear ; :c 2x .', 5, 34, "'.' at end of statement"),
]


@pytest.fixture
def hico(fixtures_dir):
    graph, prefixes = parse_turtle_file(fixtures_dir / "turtle" / "hico-snippet.ttl")
    return graph, prefixes


def test_parse_hico_snippet(hico):
    """The attribution snippet yields one creation with two properties plus one typed act."""
    graph, prefixes = hico
    creation = IRI(ZERI + "39794-creation-1")
    act = IRI(ZERI + "39794-authorship-attribution-1")

    assert len(graph) == 4
    assert graph.contains(creation, IRI(RDF_TYPE), IRI(CRM + "E65_Creation"))
    assert graph.contains(creation, IRI(CRM + "P14_carried_out_by"), IRI(ZERI + "baldassarre"))
    assert graph.contains(creation, IRI("http://www.w3.org/ns/prov#wasGeneratedBy"), act)
    assert graph.contains(act, IRI(RDF_TYPE), IRI("http://purl.org/emmedi/hico/InterpretationAct"))
    assert prefixes.namespace("hico") == EXTERNAL_PREFIXES["hico"]


def test_parse_empty_document():
    """Test parsing an empty document."""
    graph, prefixes = parse_turtle("")

    assert len(graph) == 0
    assert len(prefixes) == 0


def test_parse_comments_only():
    """Test parsing a document of comments only."""
    graph, _ = parse_turtle("# nothing here\n   # still nothing\n")

    assert len(graph) == 0


@pytest.mark.parametrize("text,line,column,fragment", MALFORMED)
def test_malformed_documents_report_position(text, line, column, fragment):
    """Test malformed documents report position."""
    with pytest.raises(TurtleSyntaxError) as excinfo:
        parse_turtle(text)

    diagnostic = excinfo.value.diagnostics[0]
    assert (diagnostic.line, diagnostic.column) == (line, column)
    assert fragment in diagnostic.message
    assert len(excinfo.value.diagnostics) == 1


@pytest.mark.parametrize("text", [row[0] for row in MALFORMED])
def test_diagnostic_points_into_source(text):
    """Every reported position indexes a real character of the text."""
    with pytest.raises(TurtleSyntaxError) as excinfo:
        parse_turtle(text)

    diagnostic = excinfo.value.diagnostics[0]
    lines = text.split("\n")
    assert 1 <= diagnostic.line <= len(lines)
    assert 1 <= diagnostic.column <= len(lines[diagnostic.line - 1])


def test_diagnostic_string_form():
    """Test the string form of a diagnostic."""
    with pytest.raises(TurtleSyntaxError) as excinfo:
        parse_turtle("x y z .")

    assert str(excinfo.value).startswith("[ERROR] ")
    assert str(excinfo.value).endswith("(line 1, column 1)")


def test_literal_shorthands():
    """Test numeric and boolean literal shorthands."""
    graph, _ = parse_turtle(HEAD + ":a :n 42 ; :d -1.5 ; :b true ; :s 'single' ; :l \"Vendita\"@it .")
    objects = {t.predicate.value.rsplit("/", 1)[1]: t.object for t in graph}

    assert objects["n"] == Literal("42", XSD_INTEGER)
    assert objects["d"].lexical == "-1.5"
    assert objects["b"].lexical == "true"
    assert objects["s"] == Literal("single")
    assert objects["l"].lang == "it"


def test_object_lists_and_repeated_semicolons():
    """Test object lists and repeated semicolons."""
    graph, _ = parse_turtle(HEAD + ":a :b :c , :d ;; :e :f ; .")

    assert len(graph) == 3


def test_sparql_style_directives_and_base():
    """Test SPARQL-style directives and base."""
    text = "BASE <http://example.org/base/>\nPREFIX ex: <http://example.org/ex#>\n<item> ex:p <other> ."
    graph, prefixes = parse_turtle(text)

    assert graph.contains(
        IRI("http://example.org/base/item"),
        IRI("http://example.org/ex#p"),
        IRI("http://example.org/base/other"),
    )
    assert prefixes.base == "http://example.org/base/"


def test_relative_iri_with_explicit_base():
    """Test a relative IRI resolved against a base."""
    graph, _ = parse_turtle("<a> <http://example.org/p> <b> .", base="http://example.org/")

    assert IRI("http://example.org/a") in {t.subject for t in graph}


def test_local_names_with_digits_dashes_and_dots():
    """Test local names with digits, dashes and dots."""
    graph, _ = parse_turtle(HEAD + ":39794-creation-1 :v1.2 :x.y.")
    triple = next(iter(graph))

    assert triple.subject == IRI("http://example.org/39794-creation-1")
    assert triple.predicate == IRI("http://example.org/v1.2")
    assert triple.object == IRI("http://example.org/x.y")


def test_lexer_positions_across_lines():
    """Test lexer positions across lines."""
    tokens = lexer.TurtleLexer(":a\n  :b").tokens()

    assert [(tok.value, tok.line, tok.column) for tok in tokens[:2]] == [(":a", 1, 1), (":b", 2, 3)]
    assert tokens[-1].kind == "EOF"


# Prefix map

def test_prefix_map_holds_alignment_and_zamo_prefixes():
    """Test prefix map holds alignment and zamo prefixes."""
    prefixes = PrefixMap({**EXTERNAL_PREFIXES, **ZAMO_PREFIXES})

    assert len(EXTERNAL_PREFIXES) == 11
    assert len(prefixes) == 14
    assert prefixes.expand("arco-archive:Archive") == "https://w3id.org/arco/ontology/archive/Archive"


def test_prefix_map_shrink_prefers_longest_namespace():
    """Test that shrinking prefers the longest namespace."""
    prefixes = PrefixMap({"ex": "http://example.org/", "deep": "http://example.org/deep/"})

    assert prefixes.shrink("http://example.org/deep/x") == "deep:x"
    assert prefixes.shrink("http://example.org/a b") is None
    assert prefixes.shrink("http://other.org/x") is None


def test_prefix_map_rejects_relative_namespace():
    """Test that a prefix map rejects relative namespaces."""
    with pytest.raises(ValueError):
        PrefixMap({"ex": "relative/"})


def test_prefix_map_merge_prefers_other():
    """Test that a merged prefix map prefers the other bindings."""
    merged = PrefixMap({"ex": "http://a.org/"}).merged(PrefixMap({"ex": "http://b.org/", "y": "http://y.org/"}))

    assert merged.namespace("ex") == "http://b.org/"
    assert merged.namespace("y") == "http://y.org/"


# Serializer

def test_serialize_empty_graph():
    """Test serializing an empty graph."""
    assert serialize_turtle(Graph()) == ""
    assert serialize_turtle(Graph(), PrefixMap({"ex": "http://example.org/"})) == "@prefix ex: <http://example.org/> .\n"


def test_serialize_uses_a_for_rdf_type():
    """Test that rdf:type is written as 'a'."""
    graph = Graph([Triple(IRI("http://example.org/x"), IRI(RDF_TYPE), IRI("http://example.org/C"))])

    text = serialize_turtle(graph, PrefixMap({"ex": "http://example.org/"}))

    assert text.endswith("ex:x a ex:C .\n")


def test_serialize_falls_back_to_angle_brackets():
    """Test angle brackets for IRIs without a prefix."""
    graph = Graph([Triple(IRI("http://example.org/x"), IRI("http://example.org/p"), Literal("1949", XSD_GYEAR))])

    text = serialize_turtle(graph)

    assert "<http://example.org/x> <http://example.org/p>" in text
    assert '"1949"^^<http://www.w3.org/2001/XMLSchema#gYear>' in text


def test_hico_round_trip(hico):
    """Test round trip of the HiCO fixture."""
    graph, prefixes = hico

    reparsed, _ = parse_turtle(serialize_turtle(graph, prefixes))

    assert reparsed == graph


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: str(p.relative_to(ROOT)))
def test_round_trip_shipped_fixtures(path):
    """Test round trip of the shipped fixtures."""
    graph, prefixes = parse_turtle_file(path)

    text = serialize_turtle(graph, prefixes)
    reparsed, _ = parse_turtle(text)

    assert reparsed == graph
    assert serialize_turtle(reparsed, prefixes) == text


def test_serializer_is_deterministic_across_insertion_orders(hico):
    """Test serializer is deterministic across insertion orders."""
    graph, prefixes = hico
    reversed_graph = Graph(reversed(list(graph)))

    assert serialize_turtle(reversed_graph, prefixes) == serialize_turtle(graph, prefixes)


def test_escaped_strings_round_trip():
    """Test escaped strings round trip."""
    graph = Graph([Triple(IRI("http://example.org/x"), IRI("http://example.org/p"), Literal('line\n"quoted"\\'))])

    reparsed, _ = parse_turtle(serialize_turtle(graph))

    assert reparsed == graph


# Independent parser oracle

def _as_strings(graph):
    return {(str(t.subject), str(t.predicate), str(t.object) if isinstance(t.object, IRI) else "literal") for t in graph}


def _rdflib_strings(rdf_graph, rdflib):
    found = set()
    for s, p, o in rdf_graph:
        obj = f"<{o}>" if isinstance(o, rdflib.URIRef) else "literal"
        found.add((f"<{s}>", f"<{p}>", obj))
    return found


@pytest.mark.parametrize("path", SHIPPED, ids=lambda p: str(p.relative_to(ROOT)))
def test_agrees_with_rdflib(path):
    """Test parsing against rdflib."""
    rdflib = pytest.importorskip("rdflib")
    graph, _ = parse_turtle_file(path)

    oracle = rdflib.Graph()
    oracle.parse(str(path), format="turtle")

    assert len(oracle) == len(graph)
    assert _rdflib_strings(oracle, rdflib) == _as_strings(graph)
