"""Plain-text algebra files.

One directive per line, ``#`` starts a comment::

    name: two-cycle
    vertices: 1 2
    arrow a 1 2
    arrow b 2 1
    relation a b

Relations list arrows in traversal order. Tokens made of digits are read as
integers, everything else stays a string.
"""

from dataclasses import dataclass, field
from typing import List, Optional

from .algebra import MonomialAlgebra
from .quiver import Quiver


class FileFormatError(ValueError):
    def __init__(self, msg, line=None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def _token(s):
    return int(s) if s.isdigit() else s


@dataclass
class AlgebraFile:
    vertices: list = field(default_factory=list)
    arrows: list = field(default_factory=list)  # (id, source, target)
    relations: List[tuple] = field(default_factory=list)
    name: Optional[str] = None

    def to_algebra(self) -> MonomialAlgebra:
        return MonomialAlgebra(Quiver(self.vertices, self.arrows), self.relations, name=self.name)


def parse_algebra_file(text: str) -> AlgebraFile:
    out = AlgebraFile()
    seen_vertices = False
    arrow_ids = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if seen_vertices:
                raise FileFormatError("vertices declared twice", lineno)
            seen_vertices = True
            toks = [_token(t) for t in line[len("vertices:"):].split()]
            if not toks:
                raise FileFormatError("no vertices listed", lineno)
            if len(set(toks)) != len(toks):
                raise FileFormatError("duplicate vertex id", lineno)
            out.vertices = toks
        elif line.startswith("name:"):
            out.name = line[len("name:"):].strip() or None
        else:
            head, *rest = line.split()
            if head == "arrow":
                if not seen_vertices:
                    raise FileFormatError("arrow before vertices", lineno)
                if len(rest) != 3:
                    raise FileFormatError("expected: arrow <id> <source> <target>", lineno)
                aid, s, t = (_token(x) for x in rest)
                if aid in arrow_ids:
                    raise FileFormatError(f"duplicate arrow id {aid!r}", lineno)
                for v in (s, t):
                    if v not in out.vertices:
                        raise FileFormatError(f"unknown vertex {v!r}", lineno)
                arrow_ids.add(aid)
                out.arrows.append((aid, s, t))
            elif head == "relation":
                word = tuple(_token(x) for x in rest)
                if len(word) < 2:
                    raise FileFormatError("relation length < 2 (not admissible)", lineno)
                for aid in word:
                    if aid not in arrow_ids:
                        raise FileFormatError(f"relation references unknown arrow {aid!r}", lineno)
                out.relations.append(word)
            else:
                raise FileFormatError(f"unknown directive {head!r}", lineno)
    if not seen_vertices:
        raise FileFormatError("missing 'vertices:' line")
    return out


def emit_algebra_file(a: MonomialAlgebra) -> str:
    lines = []
    if a.name:
        lines.append(f"name: {a.name}")
    lines.append("vertices: " + " ".join(str(v) for v in a.vertices))
    for x in a.quiver.arrows:
        lines.append(f"arrow {x.id} {x.source} {x.target}")
    for p in a.relations:
        lines.append("relation " + " ".join(str(x) for x in p.arrows))
    return "\n".join(lines) + "\n"


def load_algebra(path) -> MonomialAlgebra:
    with open(path) as fh:
        return parse_algebra_file(fh.read()).to_algebra()
