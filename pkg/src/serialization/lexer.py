"""Position-tracking tokenizer shared by the Turtle and query parsers."""

import re
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, List

# Local part of a prefixed name: may start with a digit, never ends with '.'
LOCAL_NAME = r"(?:[\w:%](?:[\w\-.:%]*[\w\-:%])?)"
PREFIX_LABEL = r"(?:[A-Za-z](?:[\w\-.]*[\w\-])?)"

LOCAL_NAME_RE = re.compile(rf"^{LOCAL_NAME}?$")
PREFIX_LABEL_RE = re.compile(rf"^{PREFIX_LABEL}?$")

_TOKEN_SPEC = [
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r\f]+"),
    ("COMMENT", r"#[^\n]*"),
    ("LONG_STRING", r'"""|\'\'\''),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"|\'(?:[^\'\\\n]|\\.)*\''),
    ("IRIREF", r'<[^<>"{}|^`\\\s]*>'),
    ("DOUBLE", r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.\d+[eE][+-]?\d+|\d+[eE][+-]?\d+)"),
    ("DECIMAL", r"[+-]?\d*\.\d+"),
    ("INTEGER", r"[+-]?\d+"),
    ("BNODE", rf"_:{LOCAL_NAME}"),
    ("PNAME", rf"{PREFIX_LABEL}?:{LOCAL_NAME}?"),
    ("VAR", r"[?$][A-Za-z_]\w*"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("NAME", r"[A-Za-z_]\w*"),
    ("OP", r"\^\^|&&|\|\||!=|<=|>=|[.;,()\[\]{}=<>!*]"),
    ("UNTERMINATED", r"[\"']"),
    ("MISMATCH", r"."),
]

_MASTER = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))


@dataclass(frozen=True)
class Token:
    """A lexical token with its 1-based source position."""
    kind: str
    value: str
    line: int
    column: int
    offset: int = 0

    def __str__(self) -> str:
        return "end of input" if self.kind == "EOF" else repr(self.value)


class TurtleLexer:
    """
    Splits source text into tokens.

    Whitespace and comments are dropped. Characters that start no token
    come out as ``MISMATCH`` or ``UNTERMINATED`` tokens so the parser can
    report them with a position. The stream always ends with an ``EOF``
    token placed on the last character of the text.
    """

    def __init__(self, text: str):
        self.text = text
        self._line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def position(self, offset: int) -> tuple:
        """1-based (line, column) of a character offset."""
        line = bisect_right(self._line_starts, offset)
        return line, offset - self._line_starts[line - 1] + 1

    def __iter__(self) -> Iterator[Token]:
        return self.scan()

    def scan(self, start: int = 0) -> Iterator[Token]:
        """Tokens from character offset ``start`` to the end of the text."""
        for match in _MASTER.finditer(self.text, start):
            kind = match.lastgroup
            if kind in ("NEWLINE", "SKIP", "COMMENT"):
                continue
            line, column = self.position(match.start())
            yield Token(kind, match.group(), line, column, match.start())
        end = max(len(self.text) - 1, 0)
        line, column = self.position(end)
        yield Token("EOF", "", line, column, len(self.text))

    def tokens(self, start: int = 0) -> List[Token]:
        """
        Tokenize the text from offset ``start`` to the end.

        Returns:
            Tokens ending with an EOF token; unmatched input comes out as
            ``MISMATCH`` or ``UNTERMINATED`` tokens
        """
        return list(self.scan(start))


_ESCAPES = {
    "t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f",
    '"': '"', "'": "'", "\\": "\\",
}

_ESCAPE_RE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)")


def unescape_string(quoted: str) -> str:
    """
    Strip the quotes of a STRING token and resolve its escapes.

    Raises:
        ValueError: on an unknown escape sequence
    """
    body = quoted[1:-1]

    def replace(match: re.Match) -> str:
        code = match.group(1)
        if code[0] in "uU" and len(code) > 1:
            return chr(int(code[1:], 16))
        if code in _ESCAPES:
            return _ESCAPES[code]
        raise ValueError(f"invalid escape sequence \\{code}")

    return _ESCAPE_RE.sub(replace, body)


def escape_string(value: str) -> str:
    """Quote a string for Turtle output."""
    escaped = (
        value.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )
    return f'"{escaped}"'
