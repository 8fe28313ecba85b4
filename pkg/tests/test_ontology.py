"""Tests for the shipped vocabulary and schema extraction."""

import random

import pytest

from src.alignment.mappings import load_all_mappings
from src.exceptions import SchemaConflict
from src.models.enums import Severity, ZamoModule
from src.ontology.schema import OntologySchema, extract_schema, is_subclass_of, namespace_of
from src.ontology.vocabulary import builtin_vocabulary, controlled_vocabulary, full_vocabulary
from src.rdf import Graph, IRI, Literal
from src.rdf.namespaces import OWL, RDF_TYPE, RDFS, XSD, ZAMO_AGENTS, ZAMO_EVENTS, ZAMO_SOURCES

A, E, S = ZAMO_AGENTS, ZAMO_EVENTS, ZAMO_SOURCES


def declare(graph, iri, kind=OWL.Class):
    graph.add(IRI(iri), IRI(RDF_TYPE), IRI(kind))


# Shipped vocabulary

def test_agents_vocabulary_declares_agent_and_family_venture():
    """Test agents vocabulary declares agent and family venture."""
    graph = builtin_vocabulary(ZamoModule.AGENTS)

    for name in ("Agent", "FamilyVenture"):
        assert graph.contains(IRI(A[name]), IRI(RDF_TYPE), IRI(OWL.Class))


def test_events_vocabulary_has_currency_range():
    """Test events vocabulary has currency range."""
    graph = builtin_vocabulary(ZamoModule.EVENTS)

    assert graph.contains(IRI(E.hasCurrency), IRI(RDFS.range), IRI(E.Currency))


def test_sources_vocabulary_has_extent_data_property():
    """Test sources vocabulary has extent data property."""
    graph = builtin_vocabulary(ZamoModule.SOURCES)

    assert graph.contains(IRI(S.hasExtent), IRI(RDF_TYPE), IRI(OWL.DatatypeProperty))


def test_builtin_vocabulary_is_frozen_and_cached():
    """Test that the builtin vocabulary is frozen and cached."""
    first = builtin_vocabulary(ZamoModule.AGENTS)

    assert first.frozen
    assert builtin_vocabulary(ZamoModule.AGENTS) is first


@pytest.mark.parametrize("module", list(ZamoModule))
def test_builtin_vocabulary_extracts_without_errors(module):
    """Test that each builtin vocabulary extracts without errors."""
    _, diagnostics = extract_schema(builtin_vocabulary(module))

    assert not any(d.is_error for d in diagnostics)


def test_full_vocabulary_has_no_dangling_references(zamo_schema):
    """Test full vocabulary has no dangling references."""
    _, diagnostics = extract_schema(full_vocabulary())

    assert diagnostics == []
    assert zamo_schema.external <= {OWL.Thing}


def test_module_inventory(zamo_schema):
    """Test class and property counts per module."""
    for name in ("Agent", "Person", "Organization", "ArtDealerOrganization", "AuctionHouse", "Branch",
                 "Association", "Membership", "Collaboration", "Role", "KnowledgeDomain", "Seat",
                 "Location", "FamilyVenture", "Foundation", "CompanyModification", "CessationOfActivity",
                 "CompanyPurchase", "Initiative", "EventEdition"):
        assert A[name] in zamo_schema.classes, name
    for name in ("Event", "Transaction", "Purchase", "Gift", "Loan", "Price", "Currency",
                 "AttributeAssignment", "ConditionAssessment", "ValueProposition", "ConditionState",
                 "AttributeType", "LegalNotice"):
        assert E[name] in zamo_schema.classes, name
    for name in ("Thing", "Object", "Artwork", "Photo", "ArchivalItem", "Letter", "BibliographicItem",
                 "Catalog", "CuratedHolding", "Archive", "PhotoArchive", "HistoricalReconstruction"):
        assert S[name] in zamo_schema.classes, name
    for name in ("isContainedIn", "isSourceFor", "hasCurrentOwner", "isReconstructedBy"):
        assert S[name] in zamo_schema.object_properties, name


@pytest.mark.parametrize("sub,sup", [
    (A.AuctionHouse, A.ArtDealerOrganization),
    (A.ArtDealerOrganization, A.Organization),
    (A.Organization, A.Agent),
    (A.Person, A.Agent),
    (A.CompanyPurchase, A.CessationOfActivity),
    (E.Gift, E.Transaction),
    (E.Loan, E.Transaction),
    (E.Purchase, E.Transaction),
    (E.ConditionAssessment, E.AttributeAssignment),
    (E.ValueProposition, E.AttributeAssignment),
    (S.Artwork, S.Thing),
    (S.Photo, S.Thing),
    (S.ArchivalItem, S.Thing),
    (S.BibliographicItem, S.Thing),
    (S.Archive, S.CuratedHolding),
    (S.PhotoArchive, S.CuratedHolding),
])
def test_published_hierarchy(zamo_schema, sub, sup):
    """Test the published subclass hierarchy."""
    assert is_subclass_of(zamo_schema, sub, sup)


def test_collaboration_sub_properties(zamo_schema):
    """Test the collaboration subproperties."""
    assert zamo_schema.is_subproperty_of(A.providesServiceIn, A.isCollaboratorIn)
    assert zamo_schema.is_subproperty_of(A.requestsServiceIn, A.isCollaboratorIn)


def test_only_person_organization_disjointness(zamo_schema):
    """Test that Person and Organization are the only disjoint pair."""
    assert zamo_schema.disjoint == {frozenset((A.Person, A.Organization))}


def test_are_disjoint_is_symmetric(zamo_schema):
    """Test that disjointness holds in both orders."""
    assert zamo_schema.are_disjoint(A.Person, A.Organization)
    assert zamo_schema.are_disjoint(A.Organization, A.Person)
    assert not zamo_schema.are_disjoint(A.Person, A.Agent)


def test_every_declaration_is_labelled(zamo_schema):
    """Test every declaration is labelled."""
    declared = zamo_schema.classes | zamo_schema.properties

    assert declared
    assert all(zamo_schema.label(iri) for iri in declared)


def test_every_alignment_entity_resolves_in_one_namespace(zamo_schema):
    """Test every alignment entity resolves in one namespace."""
    mappings = load_all_mappings()

    assert len(mappings) == 77
    for mapping in mappings:
        assert zamo_schema.declares(mapping.zamo_entity), mapping.zamo_entity
        owners = [ns for ns in (A, E, S) if mapping.zamo_entity.startswith(ns)]
        assert len(owners) == 1


def test_controlled_vocabulary_seed_roles():
    """Test the seed roles of the controlled vocabulary."""
    graph = controlled_vocabulary()

    for role in ("ManagingDirector", "ArtHistorianConsultant", "Restorer", "Photographer"):
        assert graph.contains(IRI(A[role]), IRI(RDF_TYPE), IRI(A.Role))


def test_full_vocabulary_subset_of_modules():
    """Test vocabulary selection by module."""
    agents_only = full_vocabulary([ZamoModule.AGENTS], include_controlled=False)

    assert agents_only == builtin_vocabulary(ZamoModule.AGENTS)
    assert len(full_vocabulary()) > len(agents_only)


# Extraction

def test_extract_empty_graph():
    """Test extraction from an empty graph."""
    schema, diagnostics = extract_schema(Graph())

    assert schema.is_empty()
    assert diagnostics == []


def test_class_and_property_conflict():
    """Test an IRI declared as both class and property."""
    graph = Graph()
    declare(graph, "http://example.org/X")
    declare(graph, "http://example.org/X", OWL.ObjectProperty)

    with pytest.raises(SchemaConflict):
        extract_schema(graph)


def test_generic_property_kind_follows_range():
    """Test generic property kind follows range."""
    graph = Graph()
    declare(graph, "http://example.org/name", "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property")
    graph.add(IRI("http://example.org/name"), IRI(RDFS.range), IRI(XSD.string))
    declare(graph, "http://example.org/knows", "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property")

    schema, _ = extract_schema(graph)

    assert "http://example.org/name" in schema.data_properties
    assert "http://example.org/knows" in schema.object_properties


def test_unknown_schema_vocabulary_is_a_warning():
    """Test unknown schema vocabulary is a warning."""
    graph = Graph()
    declare(graph, "http://example.org/C")
    graph.add(IRI("http://example.org/C"), IRI(OWL.equivalentClass), IRI("http://example.org/D"))

    _, diagnostics = extract_schema(graph)

    assert diagnostics
    assert all(d.severity == Severity.WARNING for d in diagnostics)


def test_undeclared_superclass_is_external():
    """Test undeclared superclass is external."""
    graph = Graph()
    declare(graph, "http://example.org/C")
    graph.add(IRI("http://example.org/C"), IRI(RDFS.subClassOf), IRI("http://example.org/D"))

    schema, diagnostics = extract_schema(graph)

    assert "http://example.org/D" in schema.external
    assert any("referenced but not declared" in d.message for d in diagnostics)


def test_inverse_is_stored_both_ways():
    """Test inverse is stored both ways."""
    graph = Graph()
    declare(graph, "http://example.org/p", OWL.ObjectProperty)
    declare(graph, "http://example.org/q", OWL.ObjectProperty)
    graph.add(IRI("http://example.org/p"), IRI(OWL.inverseOf), IRI("http://example.org/q"))

    schema, _ = extract_schema(graph)

    assert schema.inverse == {"http://example.org/p": "http://example.org/q", "http://example.org/q": "http://example.org/p"}


def test_first_label_wins():
    """Test first label wins."""
    graph = Graph()
    declare(graph, "http://example.org/C")
    graph.add(IRI("http://example.org/C"), IRI(RDFS.label), Literal("First"))
    graph.add(IRI("http://example.org/C"), IRI(RDFS.label), Literal("Second"))

    schema, _ = extract_schema(graph)

    assert schema.label("http://example.org/C") == "First"


def test_namespace_of():
    """Test namespace splitting."""
    assert namespace_of(A.Agent) == str(A)
    assert namespace_of("https://w3id.org/zeri/data/agents/SR") == "https://w3id.org/zeri/data/agents/"


# Subclass closure

def test_subclass_examples(zamo_schema):
    """Test subclass checks on the shipped schema."""
    assert is_subclass_of(zamo_schema, A.AuctionHouse, A.Agent)
    assert is_subclass_of(zamo_schema, A.Agent, A.Agent)
    assert not is_subclass_of(zamo_schema, A.Agent, A.AuctionHouse)
    assert is_subclass_of(zamo_schema, "http://example.org/Unknown", "http://example.org/Unknown")


def test_cycles_are_reported():
    """Test cycles are reported."""
    schema = OntologySchema(
        classes={"urn:a", "urn:b", "urn:c"},
        sub_class_edges={("urn:a", "urn:b"), ("urn:b", "urn:a"), ("urn:c", "urn:a")},
    )

    assert schema.hierarchy_cycles() == ["urn:a", "urn:b"]


def test_closure_follows_edge_changes():
    """Test that ancestors are recomputed after the hierarchy is edited."""
    schema = OntologySchema(classes={"urn:a", "urn:b", "urn:c"}, sub_class_edges={("urn:a", "urn:b")})
    assert schema.superclasses("urn:a") == {"urn:b"}

    schema.sub_class_edges.add(("urn:b", "urn:c"))
    assert schema.superclasses("urn:a") == {"urn:b", "urn:c"}

    schema.sub_class_edges.discard(("urn:a", "urn:b"))
    assert schema.superclasses("urn:a") == set()
    assert not schema.is_subclass_of("urn:a", "urn:c")


def test_property_edits_leave_class_closure_intact():
    """Test that editing property edges keeps class ancestors."""
    schema = OntologySchema(sub_class_edges={("urn:a", "urn:b")}, sub_property_edges={("urn:p", "urn:q")})
    assert schema.superclasses("urn:a") == {"urn:b"}

    schema.sub_property_edges.add(("urn:q", "urn:r"))

    assert schema.superproperties("urn:p") == {"urn:q", "urn:r"}
    assert schema.superclasses("urn:a") == {"urn:b"}


def _random_dag(rng, size):
    nodes = [f"urn:n{i}" for i in range(size)]
    edges = {
        (nodes[child], nodes[parent])
        for child in range(size)
        for parent in range(child)
        if rng.random() < 0.2
    }
    return nodes, edges


def _reachable(edges, start):
    seen, stack = {start}, [start]
    while stack:
        node = stack.pop()
        for child, parent in edges:
            if child == node and parent not in seen:
                seen.add(parent)
                stack.append(parent)
    return seen


@pytest.mark.parametrize("seed", range(50))
def test_is_subclass_of_is_a_preorder(seed):
    """Test that the subclass relation is a preorder on random hierarchies."""
    rng = random.Random(seed)
    nodes, edges = _random_dag(rng, rng.randint(1, 12))
    schema = OntologySchema(classes=set(nodes), sub_class_edges=edges)

    for a in nodes:
        assert is_subclass_of(schema, a, a)
        reachable = _reachable(edges, a)
        for b in nodes:
            assert is_subclass_of(schema, a, b) == (b in reachable)
            if is_subclass_of(schema, a, b):
                for c in nodes:
                    if is_subclass_of(schema, b, c):
                        assert is_subclass_of(schema, a, c)
    assert schema.hierarchy_cycles() == []
