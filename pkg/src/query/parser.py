"""Parser for the SELECT subset of SPARQL used by competency questions."""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Set, Union
from ..exceptions import QuerySyntaxError
from ..rdf.terms import Term
from ..serialization.lexer import Token, TurtleLexer
from ..serialization.parser import TokenParser
from ..serialization.prefixes import PrefixMap
from ..utils.logger import get_logger

logger = get_logger(__name__)

COMPARISON_OPERATORS = ("=", "!=", "<", "<=", ">", ">=")


@dataclass(frozen=True, slots=True)
class Variable:
    """Query variable, named without its '?' or '$'."""
    name: str

    def __str__(self) -> str:
        return f"?{self.name}"


PatternTerm = Union[Term, Variable]


@dataclass(frozen=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def __iter__(self) -> Iterator[PatternTerm]:
        yield self.subject
        yield self.predicate
        yield self.object

    def variables(self) -> List[str]:
        return [t.name for t in self if isinstance(t, Variable)]

    def __str__(self) -> str:
        return f"{self.subject} {self.predicate} {self.object} ."


@dataclass(frozen=True)
class Comparison:
    op: str
    left: PatternTerm
    right: PatternTerm

    def variables(self) -> Set[str]:
        return {t.name for t in (self.left, self.right) if isinstance(t, Variable)}


@dataclass(frozen=True)
class And:
    left: "Expression"
    right: "Expression"

    def variables(self) -> Set[str]:
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Or:
    left: "Expression"
    right: "Expression"

    def variables(self) -> Set[str]:
        return self.left.variables() | self.right.variables()


@dataclass(frozen=True)
class Not:
    operand: "Expression"

    def variables(self) -> Set[str]:
        return self.operand.variables()


Expression = Union[Comparison, And, Or, Not]


@dataclass(frozen=True)
class OrderCondition:
    variable: str
    descending: bool = False


@dataclass
class Query:
    """A parsed SELECT query."""
    variables: List[str]
    patterns: List[TriplePattern]
    filters: List[Expression] = field(default_factory=list)
    distinct: bool = False
    select_all: bool = False
    order_by: List[OrderCondition] = field(default_factory=list)
    prefixes: PrefixMap = field(default_factory=PrefixMap)

    def bgp_variables(self) -> List[str]:
        """Variables of the pattern in order of first appearance."""
        seen: Dict[str, None] = {}
        for pattern in self.patterns:
            for name in pattern.variables():
                seen.setdefault(name, None)
        return list(seen)

    @property
    def projection(self) -> List[str]:
        """Variables the result table shows: the SELECT list, or every pattern variable for ``*``."""
        return self.bgp_variables() if self.select_all else list(self.variables)


class QueryParser(TokenParser):
    """
    Recursive-descent parser for::

        PREFIX* SELECT DISTINCT? (?var+ | *) WHERE? { triples | FILTER(expr) }
        (ORDER BY (?var | ASC(?var) | DESC(?var))+)?

    Filters combine comparisons with ``&&``, ``||`` and ``!``. After parsing,
    every projected, filtered or ordered variable must occur in the pattern.
    """

    error_class = QuerySyntaxError

    def __init__(self, text: str, prefixes: Optional[PrefixMap] = None):
        super().__init__(text, prefixes)
        self._uses: List[Token] = []

    def parse(self) -> Query:
        """
        Parse the query text.

        Raises:
            QuerySyntaxError: on a syntax error or an unbound projected/filtered variable
        """
        return self.run()

    def _parse_document(self) -> Query:
        while True:
            if self.at_keyword("PREFIX"):
                self.advance()
                self.parse_prefix_directive(sparql_style=True)
            elif self.at_keyword("BASE"):
                self.advance()
                self.parse_base_directive(sparql_style=True)
            else:
                break

        if not self.at_keyword("SELECT"):
            self.fail(self.current, f"expected SELECT, found {self.current}")
        self.advance()
        distinct = False
        if self.at_keyword("DISTINCT"):
            self.advance()
            distinct = True

        variables: List[str] = []
        select_all = False
        if self.accept("OP", "*"):
            select_all = True
        else:
            while self.at("VAR"):
                token = self.advance()
                self._uses.append(token)
                variables.append(token.value[1:])
            if not variables:
                self.fail(self.current, f"expected variables or '*' after SELECT, found {self.current}")

        if self.at_keyword("WHERE"):
            self.advance()
        self.expect("OP", "{", what="'{'")
        patterns: List[TriplePattern] = []
        filters: List[Expression] = []
        while not self.at("OP", "}"):
            if self.at("EOF"):
                self.fail(self.current, "unterminated group pattern, expected '}'")
            if self.accept("OP", "."):
                continue
            if self.at_keyword("FILTER"):
                self.advance()
                self.expect("OP", "(", what="'(' after FILTER")
                filters.append(self._parse_or())
                self.expect("OP", ")", what="')'")
                continue
            self._parse_triples(patterns)
        self.advance()

        order_by = self._parse_order_by()
        if not self.at("EOF"):
            self.fail(self.current, f"unexpected {self.current} after query")

        query = Query(
            variables=variables,
            patterns=patterns,
            filters=filters,
            distinct=distinct,
            select_all=select_all,
            order_by=order_by,
            prefixes=self.prefixes,
        )
        self._check_bound(query)
        logger.debug(f"Parsed query: {len(patterns)} patterns, {len(filters)} filters")
        return query

    def _check_bound(self, query: Query) -> None:
        bound = set(query.bgp_variables())
        for token in self._uses:
            name = token.value[1:]
            if name not in bound:
                self.fail(token, f"variable ?{name} does not occur in the WHERE pattern")

    # patterns

    def _variable(self) -> Variable:
        token = self.advance()
        return Variable(token.value[1:])

    def _parse_triples(self, patterns: List[TriplePattern]) -> None:
        token = self.current
        if token.kind == "VAR":
            subject: PatternTerm = self._variable()
        elif self.is_literal_start():
            self.fail(token, "a literal cannot be a subject")
        elif token.kind == "BNODE":
            self.fail(token, "blank nodes are not supported in queries")
        else:
            subject = self.parse_iri("subject")

        while True:
            predicate = self._variable() if self.at("VAR") else self.parse_verb()
            patterns.append(TriplePattern(subject, predicate, self._parse_object()))
            while self.accept("OP", ","):
                patterns.append(TriplePattern(subject, predicate, self._parse_object()))
            if not self.accept("OP", ";"):
                break
            while self.accept("OP", ";"):
                pass
            if self.at("OP", ".") or self.at("OP", "}"):
                break

    def _parse_object(self) -> PatternTerm:
        token = self.current
        if token.kind == "VAR":
            return self._variable()
        if token.kind == "BNODE":
            self.fail(token, "blank nodes are not supported in queries")
        if self.is_literal_start():
            return self.parse_literal()
        return self.parse_iri("object")

    # filters

    def _parse_or(self) -> Expression:
        expr = self._parse_and()
        while self.accept("OP", "||"):
            expr = Or(expr, self._parse_and())
        return expr

    def _parse_and(self) -> Expression:
        expr = self._parse_unary()
        while self.accept("OP", "&&"):
            expr = And(expr, self._parse_unary())
        return expr

    def _parse_unary(self) -> Expression:
        if self.accept("OP", "!"):
            return Not(self._parse_unary())
        if self.accept("OP", "("):
            expr = self._parse_or()
            self.expect("OP", ")", what="')'")
            return expr
        left = self._parse_operand()
        if self.at("IRIREF"):
            self._split_angle_operator()
        token = self.current
        if token.kind != "OP" or token.value not in COMPARISON_OPERATORS:
            self.fail(token, f"expected comparison operator, found {token}")
        self.advance()
        return Comparison(token.value, left, self._parse_operand())

    def _split_angle_operator(self) -> None:
        # in "?o<5&&?o>1" the lexer reads "<5&&?o>" as an IRIREF
        token = self.current
        op = "<=" if token.value.startswith("<=") else "<"
        rest = TurtleLexer(self.text).tokens(token.offset + len(op))
        self.tokens[self.pos:] = [Token("OP", op, token.line, token.column, token.offset), *rest]

    def _parse_operand(self) -> PatternTerm:
        token = self.current
        if token.kind == "VAR":
            self._uses.append(token)
            return self._variable()
        if self.is_literal_start():
            return self.parse_literal()
        if token.kind in ("IRIREF", "PNAME"):
            return self.parse_iri()
        self.fail(token, f"expected variable, IRI or literal, found {token}")

    # solution modifiers

    def _parse_order_by(self) -> List[OrderCondition]:
        if not self.at_keyword("ORDER"):
            return []
        self.advance()
        if not self.at_keyword("BY"):
            self.fail(self.current, f"expected BY, found {self.current}")
        self.advance()
        conditions: List[OrderCondition] = []
        while True:
            if self.at("VAR"):
                token = self.advance()
                self._uses.append(token)
                conditions.append(OrderCondition(token.value[1:]))
            elif self.at_keyword("ASC") or self.at_keyword("DESC"):
                descending = self.advance().value.upper() == "DESC"
                self.expect("OP", "(", what="'('")
                token = self.expect("VAR", what="variable")
                self._uses.append(token)
                self.expect("OP", ")", what="')'")
                conditions.append(OrderCondition(token.value[1:], descending))
            else:
                break
        if not conditions:
            self.fail(self.current, f"expected ORDER BY condition, found {self.current}")
        return conditions


def parse_query(text: str, prefixes: Optional[PrefixMap] = None) -> Query:
    """
    Parse a SELECT query.

    Args:
        text: Query text with optional leading PREFIX lines
        prefixes: Bindings available in addition to the query's own

    Returns:
        Parsed Query

    Raises:
        QuerySyntaxError: with a positioned diagnostic
    """
    return QueryParser(text, prefixes).parse()

