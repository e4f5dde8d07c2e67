"""Parser for signed integer combinations of ``F[...]`` and ``s[...]`` atoms.

Grammar (whitespace is insignificant)::

    expr := term (('+' | '-') term)*      a leading '-' is allowed
    term := [integer '*'] atom
    atom := ('F' | 's') '[' integer (',' integer)* ']'

The empty string parses to the zero expression.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .combinat import Composition, ValidationError
from .expansions import FExpansion, SchurExpansion, straighten_schur_terms


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{detail}")


class CompositionError(ParseError):
    """An atom's index contains a non-positive part."""


@dataclass(frozen=True)
class Term:
    coeff: int
    basis: str  # "F" or "s"
    index: Composition
    line: int
    column: int

    def __str__(self) -> str:
        atom = f"{self.basis}[{','.join(map(str, self.index))}]"
        return atom if abs(self.coeff) == 1 else f"{abs(self.coeff)}*{atom}"


@dataclass(frozen=True)
class Expression:
    terms: tuple[Term, ...] = ()

    def f_part(self) -> FExpansion:
        return FExpansion((t.index, t.coeff) for t in self.terms if t.basis == "F")

    def s_part(self) -> SchurExpansion:
        """The ``s`` atoms, straightened and collected."""
        acc: dict = {}
        for t in self.terms:
            if t.basis == "s":
                acc[t.index] = acc.get(t.index, 0) + t.coeff
        return straighten_schur_terms(acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for n, t in enumerate(self.terms):
            if n == 0:
                out.append(str(t) if t.coeff > 0 else "-" + str(t))
            else:
                out.append((" + " if t.coeff > 0 else " - ") + str(t))
        return "".join(out)


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<op>[-+*\[\],])|(?P<name>[A-Za-z_]\w*)|(?P<bad>\S))")


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def where(offset: int) -> tuple[int, int]:
        line = max(i for i, s in enumerate(line_starts) if s <= offset)
        return line + 1, offset - line_starts[line] + 1

    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.lastgroup is None:
            break  # trailing whitespace
        kind = m.lastgroup
        start = m.start(kind)
        line, col = where(start)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", line, col)
        toks.append(_Tok(kind if kind != "op" else m.group(kind), m.group(kind), line, col))
        pos = m.end()
    line, col = where(len(text))
    toks.append(_Tok("end", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: set[str]):
        t = self.tok
        found = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {found}", t.line, t.column, frozenset(expected))

    def take(self, kind: str) -> _Tok:
        if self.tok.kind != kind:
            self.fail({kind})
        t = self.tok
        self.i += 1
        return t

    def expression(self) -> Expression:
        if self.tok.kind == "end":
            return Expression()
        terms = []
        sign = 1
        if self.tok.kind == "-":
            self.i += 1
            sign = -1
        terms.append(self.term(sign))
        while self.tok.kind in ("+", "-"):
            sign = 1 if self.take(self.tok.kind).kind == "+" else -1
            terms.append(self.term(sign))
        if self.tok.kind != "end":
            self.fail({"+", "-", "end"})
        return Expression(tuple(terms))

    def term(self, sign: int) -> Term:
        start = self.tok
        coeff = 1
        if start.kind == "int":
            coeff = int(self.take("int").text)
            self.take("*")
        elif start.kind != "name":
            self.fail({"int", "F", "s"})
        name = self.tok
        if name.kind != "name" or name.text not in ("F", "s"):
            self.fail({"F", "s"})
        self.i += 1
        self.take("[")
        parts = [self.take("int")]
        while self.tok.kind == ",":
            self.i += 1
            parts.append(self.take("int"))
        if self.tok.kind != "]":
            self.fail({",", "]"})
        self.i += 1
        try:
            index = Composition(int(p.text) for p in parts)
        except ValidationError as exc:
            bad = parts[exc.index - 1]
            raise CompositionError(str(exc), bad.line, bad.column) from None
        return Term(sign * coeff, name.text, index, start.line, start.column)


def parse_expression(text: str) -> Expression:
    """Parse ``text`` into an :class:`Expression` that keeps source positions.

    >>> str(parse_expression("2*s[3,1] -F[2,2]"))
    '2*s[3,1] - F[2,2]'
    """
    return _Parser(text).expression()
