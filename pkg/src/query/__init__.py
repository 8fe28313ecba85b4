"""Competency-question queries: parsing, evaluation and result tables."""

from .evaluator import QueryEvaluator, evaluate, evaluate_expression
from .parser import (
    And,
    Comparison,
    Not,
    Or,
    OrderCondition,
    Query,
    QueryParser,
    TriplePattern,
    Variable,
    parse_query,
)
from .results import ResultTable, render_compact

__all__ = [
    "QueryEvaluator",
    "evaluate",
    "evaluate_expression",
    "And",
    "Comparison",
    "Not",
    "Or",
    "OrderCondition",
    "Query",
    "QueryParser",
    "TriplePattern",
    "Variable",
    "parse_query",
    "ResultTable",
    "render_compact",
]
