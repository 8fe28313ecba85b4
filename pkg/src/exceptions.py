"""Exception hierarchy for the ZAMO toolkit."""

from typing import List, TYPE_CHECKING

if TYPE_CHECKING:
    from .models.schemas import ParseDiagnostic


class ZamoError(Exception):
    """Base class for every error raised by the toolkit."""


class IllFormedLiteral(ZamoError, ValueError):
    """Lexical form does not match the datatype grammar."""


class LangWithoutLangString(ZamoError, ValueError):
    """Language tag given with a datatype other than rdf:langString."""


class UnsupportedDatatype(ZamoError, ValueError):
    """Datatype IRI outside the supported set."""


class FrozenGraph(ZamoError, RuntimeError):
    """Mutation attempted on a frozen graph."""


class SchemaConflict(ZamoError, ValueError):
    """An IRI is declared both as a class and as a property in one namespace."""


class UnknownMappingProperty(ZamoError, ValueError):
    """A mapping predicate is not one of the SKOS mapping properties."""


class SuiteError(ZamoError, ValueError):
    """A SAMOD manifest or one of its referenced files is unusable."""


class SyntaxDiagnosticsError(ZamoError, ValueError):
    """Raised by the parsers; carries positioned diagnostics."""

    def __init__(self, diagnostics: List["ParseDiagnostic"]):
        self.diagnostics = list(diagnostics)
        message = str(self.diagnostics[0]) if self.diagnostics else "syntax error"
        super().__init__(message)


class TurtleSyntaxError(SyntaxDiagnosticsError):
    """Turtle document could not be parsed."""


class QuerySyntaxError(SyntaxDiagnosticsError):
    """Query text could not be parsed or violates a query invariant."""
