"""
ZAMO Knowledge Graph Toolkit
An in-memory knowledge-graph engine and verification harness for the Zeri Art Market Ontology.
"""

__version__ = "1.0.0"
__author__ = "ZAMO Toolkit Team"
