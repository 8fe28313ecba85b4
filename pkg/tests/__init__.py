"""Test suite for the ZAMO Knowledge Graph Toolkit."""
