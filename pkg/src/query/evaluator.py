"""Basic graph pattern evaluation with filters, projection and ordering."""

from typing import Dict, List, Optional, Sequence, Set, Tuple
from ..rdf.graph import Graph
from ..rdf.terms import Literal, Term, XSD_BOOLEAN, XSD_DATE, XSD_STRING, sort_key
from ..rdf.namespaces import RDF_LANG_STRING
from ..utils.logger import get_logger
from .parser import And, Comparison, Expression, Not, Or, PatternTerm, Query, TriplePattern, Variable
from .results import ResultTable

logger = get_logger(__name__)

Solution = Dict[str, Term]


class FilterError(Exception):
    """A filter operand is unbound or the operands are not comparable."""


def _compare(op: str, left: Term, right: Term) -> bool:
    if isinstance(left, Literal) and isinstance(right, Literal):
        key_left, key_right = _literal_keys(left, right)
        return {
            "=": key_left == key_right,
            "!=": key_left != key_right,
            "<": key_left < key_right,
            "<=": key_left <= key_right,
            ">": key_left > key_right,
            ">=": key_left >= key_right,
        }[op]
    if isinstance(left, Literal) or isinstance(right, Literal):
        # an IRI or blank node never equals a literal
        if op == "=":
            return False
        if op == "!=":
            return True
        raise FilterError(f"cannot order {left} and {right}")
    if op == "=":
        return left == right
    if op == "!=":
        return left != right
    raise FilterError(f"{op} is not defined on IRIs")


def _literal_keys(left: Literal, right: Literal) -> Tuple[object, object]:
    if left.is_numeric and right.is_numeric:
        return left.numeric_value(), right.numeric_value()
    for datatype in (XSD_DATE, XSD_STRING, XSD_BOOLEAN):
        if left.datatype == datatype and right.datatype == datatype:
            return left.lexical, right.lexical
    if left.datatype == RDF_LANG_STRING and right.datatype == RDF_LANG_STRING and left.lang == right.lang:
        return left.lexical, right.lexical
    raise FilterError(f"incompatible literals {left} and {right}")


def evaluate_expression(expr: Expression, solution: Solution) -> Optional[bool]:
    """
    Three-valued filter evaluation.

    Returns:
        True, False, or None when the expression is an error
    """
    if isinstance(expr, Comparison):
        try:
            return _compare(expr.op, _operand(expr.left, solution), _operand(expr.right, solution))
        except FilterError:
            return None
    if isinstance(expr, Not):
        value = evaluate_expression(expr.operand, solution)
        return None if value is None else not value
    left = evaluate_expression(expr.left, solution)
    right = evaluate_expression(expr.right, solution)
    if isinstance(expr, And):
        if left is False or right is False:
            return False
        return None if left is None or right is None else True
    if isinstance(expr, Or):
        if left is True or right is True:
            return True
        return None if left is None or right is None else False
    raise TypeError(f"unknown expression {expr!r}")


def _operand(term: PatternTerm, solution: Solution) -> Term:
    if isinstance(term, Variable):
        if term.name not in solution:
            raise FilterError(f"?{term.name} is unbound")
        return solution[term.name]
    return term


class QueryEvaluator:
    """
    Evaluates queries against one graph.

    The join order is fixed before evaluation: repeatedly pick the pattern
    with the most positions bound (constants or already-bound variables),
    breaking ties by the index cardinality of its constant positions and
    then by written order. Solutions are extended pattern-at-a-time
    (nested loop) and each filter runs at the first step where all of its
    variables are bound.
    """

    def __init__(self, graph: Graph):
        self.graph = graph

    def plan(self, patterns: Sequence[TriplePattern]) -> List[TriplePattern]:
        """Static join order for a basic graph pattern."""
        remaining = list(enumerate(patterns))
        bound: Set[str] = set()
        order: List[TriplePattern] = []
        while remaining:
            def score(item):
                index, pattern = item
                bound_positions = sum(
                    1 for t in pattern if not isinstance(t, Variable) or t.name in bound
                )
                constants = [None if isinstance(t, Variable) else t for t in pattern]
                return (-bound_positions, self.graph.cardinality(*constants), index)

            best = min(remaining, key=score)
            remaining.remove(best)
            order.append(best[1])
            bound.update(best[1].variables())
        return order

    def _place_filters(self, plan: List[TriplePattern], filters: List[Expression]) -> Dict[int, List[Expression]]:
        placement: Dict[int, List[Expression]] = {}
        bound: Set[str] = set()
        steps: List[Set[str]] = []
        for pattern in plan:
            bound = bound | set(pattern.variables())
            steps.append(bound)
        for expr in filters:
            needed = expr.variables()
            step = next((i for i, vars_ in enumerate(steps) if needed <= vars_), len(plan) - 1)
            placement.setdefault(max(step, 0), []).append(expr)
        return placement

    def _extend(self, solution: Solution, pattern: TriplePattern) -> List[Solution]:
        resolved = [
            solution.get(t.name) if isinstance(t, Variable) else t
            for t in pattern
        ]
        extended = []
        for triple in self.graph.match(*resolved):
            candidate = dict(solution)
            consistent = True
            for position, value in zip(pattern, triple):
                if isinstance(position, Variable):
                    existing = candidate.setdefault(position.name, value)
                    if existing != value:
                        consistent = False
                        break
            if consistent:
                extended.append(candidate)
        return extended

    def solutions(self, query: Query) -> List[Solution]:
        """All solution mappings of the pattern that pass the filters."""
        plan = self.plan(query.patterns)
        placement = self._place_filters(plan, query.filters)
        current: List[Solution] = [{}]

        if not plan:
            return [s for s in current if all(evaluate_expression(f, s) is True for f in query.filters)]

        for step, pattern in enumerate(plan):
            following: List[Solution] = []
            for solution in current:
                following.extend(self._extend(solution, pattern))
            for expr in placement.get(step, ()):
                following = [s for s in following if evaluate_expression(expr, s) is True]
            current = following
            if not current:
                break
        return current

    def evaluate(self, query: Query) -> ResultTable:
        """
        Evaluate a query.

        Args:
            query: Parsed query

        Returns:
            ResultTable with the projected (and, if requested, deduplicated and ordered) rows
        """
        header = query.projection
        solutions = self.solutions(query)
        # ordering runs before projection, so ORDER BY may name unprojected variables
        for condition in reversed(query.order_by):
            solutions.sort(key=lambda s, name=condition.variable: sort_key(s.get(name)), reverse=condition.descending)
        rows = [tuple(s.get(name) for name in header) for s in solutions]
        if query.distinct:
            rows = list(dict.fromkeys(rows))
        logger.debug(f"Query returned {len(rows)} rows")
        return ResultTable(header, rows, query.prefixes)


def evaluate(query: Query, graph: Graph) -> ResultTable:
    """Evaluate ``query`` over ``graph``; see ``QueryEvaluator``."""
    return QueryEvaluator(graph).evaluate(query)
