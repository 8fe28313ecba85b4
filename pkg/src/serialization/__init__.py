"""Turtle reading and writing."""

from .lexer import Token, TurtleLexer
from .parser import TokenParser, TurtleParser, parse_turtle, parse_turtle_file
from .prefixes import PrefixMap
from .serializer import TurtleSerializer, serialize_turtle

__all__ = [
    "Token",
    "TurtleLexer",
    "TokenParser",
    "TurtleParser",
    "parse_turtle",
    "parse_turtle_file",
    "PrefixMap",
    "TurtleSerializer",
    "serialize_turtle",
]
