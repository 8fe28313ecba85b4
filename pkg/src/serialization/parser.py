"""Recursive-descent parser for the supported Turtle subset."""

from pathlib import Path
from typing import List, NoReturn, Optional, Tuple, Union
from urllib.parse import urljoin
from ..exceptions import SyntaxDiagnosticsError, TurtleSyntaxError, ZamoError
from ..models.schemas import ParseDiagnostic
from ..rdf.graph import Graph
from ..rdf.namespaces import RDF_TYPE, XSD
from ..rdf.terms import BlankNode, IRI, Literal, Term, Triple, make_literal
from ..utils.helpers import read_text
from ..utils.logger import get_logger
from .lexer import Token, TurtleLexer, unescape_string
from .prefixes import PrefixMap

logger = get_logger(__name__)

_UNSUPPORTED = {
    "(": "collections '( )' are not supported",
    "[": "blank node property lists '[ ]' are not supported",
}


class _Abort(Exception):
    """Internal signal carrying the first diagnostic."""

    def __init__(self, diagnostic: ParseDiagnostic):
        self.diagnostic = diagnostic


class TokenParser:
    """
    Token cursor with the term grammar shared by Turtle and queries.

    Subclasses set ``error_class`` and implement ``_parse_document``.
    Parsing is fail-fast: the first problem aborts with one diagnostic.
    """

    error_class = SyntaxDiagnosticsError

    def __init__(self, text: str, prefixes: Optional[PrefixMap] = None):
        self.text = text
        self.tokens: List[Token] = TurtleLexer(text).tokens()
        self.pos = 0
        self.prefixes = PrefixMap(prefixes.as_dict(), prefixes.base) if prefixes else PrefixMap()

    # cursor

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "EOF":
            self.pos += 1
        return token

    def at(self, kind: str, value: Optional[str] = None) -> bool:
        token = self.current
        return token.kind == kind and (value is None or token.value == value)

    def at_keyword(self, word: str) -> bool:
        return self.current.kind == "NAME" and self.current.value.upper() == word

    def accept(self, kind: str, value: Optional[str] = None) -> Optional[Token]:
        if self.at(kind, value):
            return self.advance()
        return None

    def expect(self, kind: str, value: Optional[str] = None, what: Optional[str] = None) -> Token:
        if self.at(kind, value):
            return self.advance()
        self.fail(self.current, f"expected {what or value or kind}, found {self.current}")

    def fail(self, token: Token, message: str) -> NoReturn:
        if token.kind == "MISMATCH":
            message = f"unexpected character {token.value!r}"
        elif token.kind == "UNTERMINATED":
            message = "unterminated string literal"
        elif token.kind == "LONG_STRING":
            message = "triple-quoted strings are not supported"
        raise _Abort(ParseDiagnostic(line=token.line, column=token.column, message=message))

    # terms

    def resolve_iriref(self, token: Token) -> IRI:
        value = token.value[1:-1]
        try:
            return IRI(value)
        except ValueError:
            pass
        if self.prefixes.base is None:
            self.fail(token, f"relative IRI <{value}> with no base")
        return IRI(urljoin(self.prefixes.base, value))

    def resolve_pname(self, token: Token) -> IRI:
        try:
            expanded = self.prefixes.expand(token.value)
        except KeyError:
            label = token.value.partition(":")[0]
            self.fail(token, f"undeclared prefix '{label}:'")
        try:
            return IRI(expanded)
        except ValueError as e:
            self.fail(token, str(e))

    def parse_iri(self, what: str = "IRI") -> IRI:
        token = self.current
        if token.kind == "IRIREF":
            self.advance()
            return self.resolve_iriref(token)
        if token.kind == "PNAME":
            self.advance()
            return self.resolve_pname(token)
        self.fail(token, f"expected {what}, found {token}")

    def parse_verb(self) -> IRI:
        if self.at("NAME", "a"):
            self.advance()
            return IRI(RDF_TYPE)
        return self.parse_iri("predicate")

    def parse_literal(self) -> Literal:
        token = self.current
        try:
            if token.kind == "STRING":
                self.advance()
                try:
                    lexical = unescape_string(token.value)
                except ValueError as e:
                    self.fail(token, str(e))
                if self.at("LANGTAG"):
                    return make_literal(lexical, lang=self.advance().value[1:])
                if self.accept("OP", "^^"):
                    datatype = self.parse_iri("datatype IRI")
                    return make_literal(lexical, datatype.value)
                return make_literal(lexical)
            if token.kind == "INTEGER":
                self.advance()
                return make_literal(token.value, XSD.integer)
            if token.kind == "DECIMAL":
                self.advance()
                return make_literal(token.value, XSD.decimal)
            if token.kind == "DOUBLE":
                self.fail(token, "double literals are not supported")
            if token.kind == "NAME" and token.value in ("true", "false"):
                self.advance()
                return make_literal(token.value, XSD.boolean)
        except ZamoError as e:
            self.fail(token, str(e))
        self.fail(token, f"expected literal, found {token}")

    def is_literal_start(self) -> bool:
        token = self.current
        return token.kind in ("STRING", "INTEGER", "DECIMAL", "DOUBLE") or (
            token.kind == "NAME" and token.value in ("true", "false")
        )

    def parse_prefix_directive(self, sparql_style: bool) -> None:
        label_token = self.current
        if label_token.kind != "PNAME" or not label_token.value.endswith(":") or label_token.value.count(":") != 1:
            self.fail(label_token, f"expected prefix label ending in ':', found {label_token}")
        self.advance()
        iri_token = self.expect("IRIREF", what="namespace IRI")
        namespace = self.resolve_iriref(iri_token)
        self.prefixes.bind(label_token.value[:-1], namespace.value)
        if not sparql_style:
            self.expect("OP", ".", what="'.' after @prefix")

    def parse_base_directive(self, sparql_style: bool) -> None:
        iri_token = self.expect("IRIREF", what="base IRI")
        self.prefixes.base = self.resolve_iriref(iri_token).value
        if not sparql_style:
            self.expect("OP", ".", what="'.' after @base")

    # entry point

    def run(self):
        """
        Parse the whole token stream.

        Returns:
            Whatever the subclass's document rule produces

        Raises:
            error_class: On the first syntax error, with its position
        """
        try:
            return self._parse_document()
        except _Abort as abort:
            logger.debug(f"Parse aborted: {abort.diagnostic}")
            raise self.error_class([abort.diagnostic]) from None

    def _parse_document(self):
        raise NotImplementedError


class TurtleParser(TokenParser):
    """
    Parser for Turtle documents.

    Supports ``@prefix``/``@base`` and their SPARQL-style forms, prefixed
    names, ``<iri>``, ``a``, predicate-object lists (``;``), object lists
    (``,``), quoted literals with ``^^`` or ``@lang``, numeric and boolean
    shorthands, blank node labels and comments.
    """

    error_class = TurtleSyntaxError

    def __init__(self, text: str, base: Optional[str] = None):
        super().__init__(text)
        self.prefixes.base = base
        self.graph = Graph()

    def parse(self) -> Tuple[Graph, PrefixMap]:
        """
        Parse the whole document.

        Returns:
            Tuple of (graph, prefix map)

        Raises:
            TurtleSyntaxError: on the first syntax error
        """
        return self.run()

    def _parse_document(self) -> Tuple[Graph, PrefixMap]:
        while not self.at("EOF"):
            self._parse_statement()
        logger.debug(f"Parsed {len(self.graph)} triples, {len(self.prefixes)} prefixes")
        return self.graph, self.prefixes

    def _parse_statement(self) -> None:
        token = self.current
        if token.kind == "LANGTAG" and token.value in ("@prefix", "@base"):
            self.advance()
            if token.value == "@prefix":
                self.parse_prefix_directive(sparql_style=False)
            else:
                self.parse_base_directive(sparql_style=False)
            return
        if self.at_keyword("PREFIX") and self.peek().kind == "PNAME":
            self.advance()
            self.parse_prefix_directive(sparql_style=True)
            return
        if self.at_keyword("BASE") and self.peek().kind == "IRIREF":
            self.advance()
            self.parse_base_directive(sparql_style=True)
            return

        subject = self._parse_subject()
        self._parse_predicate_object_list(subject)
        self.expect("OP", ".", what="'.' at end of statement")

    def _parse_subject(self) -> Term:
        token = self.current
        if token.kind == "BNODE":
            self.advance()
            return BlankNode(token.value[2:])
        if token.kind == "OP" and token.value in _UNSUPPORTED:
            self.fail(token, _UNSUPPORTED[token.value])
        if self.is_literal_start():
            self.fail(token, "a literal cannot be a subject")
        return self.parse_iri("subject")

    def _parse_object(self) -> Term:
        token = self.current
        if token.kind == "BNODE":
            self.advance()
            return BlankNode(token.value[2:])
        if token.kind == "OP" and token.value in _UNSUPPORTED:
            self.fail(token, _UNSUPPORTED[token.value])
        if self.is_literal_start():
            return self.parse_literal()
        return self.parse_iri("object")

    def _parse_predicate_object_list(self, subject: Term) -> None:
        while True:
            predicate = self.parse_verb()
            self._parse_object_list(subject, predicate)
            if not self.accept("OP", ";"):
                return
            while self.accept("OP", ";"):
                pass
            if self.at("OP", "."):
                return

    def _parse_object_list(self, subject: Term, predicate: IRI) -> None:
        self.graph.insert(Triple(subject, predicate, self._parse_object()))
        while self.accept("OP", ","):
            self.graph.insert(Triple(subject, predicate, self._parse_object()))


def parse_turtle(text: str, base: Optional[str] = None) -> Tuple[Graph, PrefixMap]:
    """
    Parse a Turtle document.

    Args:
        text: Document text
        base: Optional base IRI for relative references

    Returns:
        Tuple of (graph, prefix map)

    Raises:
        TurtleSyntaxError: with the positioned diagnostic of the first error
    """
    return TurtleParser(text, base).parse()


def parse_turtle_file(path: Union[str, Path], base: Optional[str] = None) -> Tuple[Graph, PrefixMap]:
    """
    Read and parse a UTF-8 Turtle file.

    Raises:
        OSError: if the file cannot be read
        TurtleSyntaxError: on the first syntax error
    """
    path = Path(path)
    logger.debug(f"Parsing {path}")
    try:
        return parse_turtle(read_text(path), base)
    except TurtleSyntaxError as e:
        logger.error(f"{path}: {e}")
        raise
