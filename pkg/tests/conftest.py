"""Pytest configuration and shared fixtures."""

import pytest
from pathlib import Path
import sys

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.models.enums import ZamoModule
from src.ontology.schema import extract_schema
from src.ontology.vocabulary import full_vocabulary

ROOT = Path(__file__).parent.parent


@pytest.fixture
def fixtures_dir():
    """Path to the test-only fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def suites_dir():
    """Path to the shipped SAMOD scenario suites."""
    return ROOT / "fixtures"


@pytest.fixture
def manifests(suites_dir):
    """Manifest path per module."""
    return {module: suites_dir / module.value / "manifest.json" for module in ZamoModule}


@pytest.fixture(scope="session")
def zamo_schema():
    """Schema of the three shipped vocabularies plus the controlled vocabulary."""
    schema, _ = extract_schema(full_vocabulary())
    return schema
