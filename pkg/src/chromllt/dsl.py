"""Parser for the graph description language used on the command line.

    graph  := family ":" ints | ("glue" | "union") ":(" graph "," graph ")"
    family := complete | path | lollipop | melting | kdel | mseq | area
    ints   := [int ("," int)*]

``mseq`` takes ``m_1, ..., m_{n-1}`` (an empty list is the one-vertex
graph) and ``area`` takes ``a_1, ..., a_n``.
"""

from __future__ import annotations

from .errors import ParseError
from .unigraphs import (
    UnitIntervalGraph,
    complete,
    complete_deleted,
    disjoint_union,
    glue_sum,
    lollipop,
    melting_lollipop,
    path,
)

_FAMILIES = {
    "complete": (complete, 1),
    "path": (path, 1),
    "lollipop": (lollipop, 2),
    "melting": (melting_lollipop, 3),
    "kdel": (complete_deleted, 2),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ParseError(msg, self.pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def name(self) -> str:
        start = self.pos
        while self.peek().isalpha():
            self.pos += 1
        if start == self.pos:
            self.error("expected a family name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected an integer")
        return int(self.text[start:self.pos])

    def ints(self) -> list[int]:
        if not self.peek().isdigit():
            return []
        out = [self.integer()]
        # a comma followed by a letter belongs to an enclosing glue/union
        while self.peek() == "," and self.text[self.pos + 1:self.pos + 2].isdigit():
            self.pos += 1
            out.append(self.integer())
        return out

    def graph(self) -> UnitIntervalGraph:
        start = self.pos
        name = self.name()
        self.expect(":")
        if name in ("glue", "union"):
            self.expect("(")
            g = self.graph()
            self.expect(",")
            h = self.graph()
            self.expect(")")
            return glue_sum(g, h) if name == "glue" else disjoint_union(g, h)
        args = self.ints()
        if name == "mseq":
            return UnitIntervalGraph.from_mseq(args)
        if name == "area":
            return UnitIntervalGraph.from_area(args)
        if name not in _FAMILIES:
            self.pos = start
            self.error(f"unknown family {name!r}")
        fn, arity = _FAMILIES[name]
        if len(args) != arity:
            self.pos = start
            self.error(f"{name} takes {arity} integer argument(s), got {len(args)}")
        return fn(*args)


def parse_graph_dsl(text: str) -> UnitIntervalGraph:
    p = _Parser(text.strip().replace(" ", ""))
    g = p.graph()
    if p.pos != len(p.text):
        p.error("trailing input")
    return g
