"""Plain-text poset files and Graphviz DOT export.

A poset file holds one or more blocks::

    # comment
    poset CE_COGRAPH
    elements: v1 v2 v3 v4 x
    covers: v1<v2, v2<v3, v3<v4, v1<x, x<v4

``covers`` pairs are order generators (the transitive closure is taken); an
empty or missing ``covers`` line gives an antichain. A ``poset`` line or a
second ``elements`` line starts a new block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Literal

from .graph import ci_graph
from .poset import LABEL_RE, Poset, PosetError, UnknownLabelError, bits, build_poset

__all__ = [
    "PosetSyntaxError",
    "parse_poset_file",
    "parse_poset_stream",
    "serialize_poset",
    "serialize_posets",
    "export_dot",
]

_PAIR_RE = re.compile(r"\s*([^\s<]+)\s*<\s*([^\s<]+)\s*\Z")
_KEYWORDS = ("elements:", "covers:")


class PosetSyntaxError(PosetError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class _Block:
    name: str | None = None
    name_line: int = 0
    elements: list[str] | None = None
    elements_line: int = 0
    pairs: list[tuple[str, str, int, int]] = field(default_factory=list)
    has_covers: bool = False


def _label_ok(lbl: str) -> bool:
    return bool(LABEL_RE.match(lbl))


def _parse_blocks(text: str | bytes) -> list[_Block]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    blocks: list[_Block] = []
    cur: _Block | None = None

    def fresh() -> _Block:
        b = _Block()
        blocks.append(b)
        return b

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("poset") and (len(stripped) == 5 or stripped[5].isspace()):
            rest = stripped[5:]
            name = rest.strip()
            if not _label_ok(name):
                col = indent + 6 + len(rest) - len(rest.lstrip())
                raise PosetSyntaxError(f"bad poset name {name!r}", lineno, col)
            cur = fresh()
            cur.name, cur.name_line = name, lineno
        elif stripped.startswith("elements:"):
            if cur is None or cur.elements is not None:
                cur = fresh()
            body = stripped[len("elements:"):]
            col = indent + len("elements:") + 1
            labels = []
            for m in re.finditer(r"\S+", body):
                if not _label_ok(m.group()):
                    raise PosetSyntaxError(f"bad label {m.group()!r}", lineno, col + m.start())
                labels.append(m.group())
            cur.elements, cur.elements_line = labels, lineno
        elif stripped.startswith("covers:"):
            if cur is None or cur.elements is None:
                raise PosetSyntaxError("covers line before elements line", lineno, indent + 1)
            if cur.has_covers:
                raise PosetSyntaxError("second covers line in one poset", lineno, indent + 1)
            cur.has_covers = True
            body = stripped[len("covers:"):]
            offset = indent + len("covers:") + 1
            if body.strip():
                pos = 0
                for item in body.split(","):
                    m = _PAIR_RE.match(item)
                    col = offset + pos + len(item) - len(item.lstrip())
                    if not m or not (_label_ok(m.group(1)) and _label_ok(m.group(2))):
                        raise PosetSyntaxError(f"expected 'a<b', got {item.strip()!r}", lineno, col)
                    cur.pairs.append((m.group(1), m.group(2), lineno, col))
                    pos += len(item) + 1
        else:
            word = stripped.split()[0]
            raise PosetSyntaxError(f"unexpected {word!r}", lineno, indent + 1)
    for b in blocks:
        if b.elements is None:
            raise PosetSyntaxError("poset has no elements line", b.name_line, 1)
    return blocks


def _build(block: _Block) -> Poset:
    known = set(block.elements or ())
    for a, b, line, col in block.pairs:
        for lbl in (a, b):
            if lbl not in known:
                raise UnknownLabelError(f"line {line}, column {col}: unknown label {lbl!r}")
    return build_poset(block.elements, [(a, b) for a, b, *_ in block.pairs], name=block.name)


def parse_poset_stream(text: str | bytes) -> list[Poset]:
    return [_build(b) for b in _parse_blocks(text)]


def parse_poset_file(text: str | bytes) -> Poset:
    """Parse a file holding exactly one poset."""
    blocks = _parse_blocks(text)
    if len(blocks) != 1:
        raise PosetSyntaxError(f"expected one poset, found {len(blocks)}", 1, 1)
    return _build(blocks[0])


def serialize_poset(P: Poset) -> str:
    head = f"poset {P.name}\n" if P.name else ""
    covers = ", ".join(f"{a}<{b}" for a, b in P.cover_pairs())
    return f"{head}elements: {' '.join(P.labels)}\ncovers:{' ' + covers if covers else ''}\n"


def serialize_posets(posets) -> str:
    return "\n".join(serialize_poset(P) for P in posets)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(P: Poset, which: Literal["hasse", "ci"] = "hasse") -> str:
    """Hasse diagram (``u -> v`` for each cover) or C-I graph as DOT text."""
    name = _quote(P.name or "P")
    lines = []
    if which == "hasse":
        lines.append(f"digraph {name} {{")
        lines.append("  rankdir=BT;")
        lines += [f"  {_quote(lbl)};" for lbl in P.labels]
        lines += [
            f"  {_quote(P.labels[u])} -> {_quote(P.labels[v])};"
            for u in range(P.n) for v in bits(P.cover_up[u])
        ]
    elif which == "ci":
        G = ci_graph(P)
        lines.append(f"graph {name} {{")
        lines += [f"  {_quote(lbl)};" for lbl in G.labels]
        lines += [f"  {_quote(a)} -- {_quote(b)};" for a, b in G.edges()]
    else:
        raise ValueError(f"unknown DOT rendering {which!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"
