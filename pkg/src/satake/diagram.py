"""Painted Dynkin diagrams with arrow pairings: model, text format, renderer.

The canonical one-line format is::

    <TYPE>[x<TYPE>] black=<csv of 1-based nodes> arrows=<csv of i:j pairs>

with exactly three space-separated sections, e.g. ``"A3 black=1,3 arrows="``
or ``"A1xA1 black= arrows=1:2"``.  Node numbering is Bourbaki, 1-based in
the text format and 0-based in the API; a doubled diagram numbers its
second component after the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DiagramDataError, DiagramParseError
from .involution import dual_cartan_involution
from .rootsys import RootSystem, SimpleType, build_root_system


@dataclass(frozen=True)
class SatakeDiagram:
    """One or two equal simple components, a black node set, arrow pairs.

    Arrows are stored sorted with each pair ascending, so equal diagrams
    compare equal.  Construction only rejects data that makes the object
    meaningless (bad indices, self-arrows, mismatched components);
    semantic consistency is the job of ``validate``.
    """

    types: tuple[SimpleType, ...]
    black: frozenset[int]
    arrows: tuple[tuple[int, int], ...]

    @classmethod
    def create(
        cls,
        types: Sequence[SimpleType | str],
        black: Iterable[int] = (),
        arrows: Iterable[tuple[int, int]] = (),
    ) -> "SatakeDiagram":
        try:
            rs = build_root_system(
                [SimpleType.parse(t) if isinstance(t, str) else t for t in types]
            )
        except ValueError as e:
            raise DiagramDataError([("component types", str(e))]) from e
        n = rs.n
        b = frozenset(int(i) for i in black)
        for i in sorted(b):
            if not 0 <= i < n:
                raise DiagramDataError([("black node out of range", f"node {i + 1}")])
        norm = set()
        for i, j in arrows:
            i, j = int(i), int(j)
            for k in (i, j):
                if not 0 <= k < n:
                    raise DiagramDataError(
                        [("arrow endpoint out of range", f"{i + 1}<->{j + 1}")]
                    )
            if i == j:
                raise DiagramDataError(
                    [("arrow connects a node to itself", f"{i + 1}<->{j + 1}")]
                )
            norm.add((min(i, j), max(i, j)))
        return cls(rs.components, b, tuple(sorted(norm)))

    @cached_property
    def rs(self) -> RootSystem:
        return build_root_system(self.types)

    @property
    def n(self) -> int:
        return self.rs.n

    @property
    def is_doubled(self) -> bool:
        return len(self.types) == 2

    @cached_property
    def whites(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if i not in self.black)

    @cached_property
    def omega_map(self) -> dict[int, int]:
        """Arrow pairing as a total involution of the white nodes."""
        out = {i: i for i in self.whites}
        for i, j in self.arrows:
            if i in out and j in out:
                out[i] = j
                out[j] = i
        return out

    def __str__(self) -> str:
        return format_diagram(self)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple[tuple[str, str], ...]

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{check}: {detail}" for check, detail in self.failures)


def validate(d: SatakeDiagram) -> ValidationReport:
    """Run every structural and lattice-level check on the diagram."""
    try:
        dual_cartan_involution(d)
    except DiagramDataError as e:
        return ValidationReport(False, e.failures)
    return ValidationReport(True, ())


def format_diagram(d: SatakeDiagram) -> str:
    t = "x".join(str(c) for c in d.types)
    b = ",".join(str(i + 1) for i in sorted(d.black))
    a = ",".join(f"{i + 1}:{j + 1}" for i, j in d.arrows)
    return f"{t} black={b} arrows={a}"


def _parse_index(item: str, n: int, pos: int) -> int:
    if not item.isdigit():
        raise DiagramParseError(f"expected a 1-based node index, got {item!r}", pos)
    v = int(item)
    if not 1 <= v <= n:
        raise DiagramParseError(f"node index {v} out of range 1..{n}", pos)
    return v - 1


def parse_diagram(text: str) -> SatakeDiagram:
    """Parse the canonical one-line format; errors carry a character position."""
    parts = text.split(" ")
    if len(parts) != 3 or not all(parts):
        raise DiagramParseError(
            "expected '<TYPE> black=<list> arrows=<list>' with single spaces", 0
        )
    type_part, black_part, arrow_part = parts
    off_black = len(type_part) + 1
    off_arrow = off_black + len(black_part) + 1
    try:
        types = [SimpleType.parse(t) for t in type_part.split("x")]
        rs = build_root_system(types)
    except ValueError as e:
        raise DiagramParseError(str(e), 0) from e
    n = rs.n
    if not black_part.startswith("black="):
        raise DiagramParseError("expected a 'black=' section", off_black)
    if not arrow_part.startswith("arrows="):
        raise DiagramParseError("expected an 'arrows=' section", off_arrow)

    black: set[int] = set()
    cursor = off_black + len("black=")
    body = black_part[len("black="):]
    if body:
        for item in body.split(","):
            black.add(_parse_index(item, n, cursor))
            cursor += len(item) + 1

    arrows: list[tuple[int, int]] = []
    cursor = off_arrow + len("arrows=")
    body = arrow_part[len("arrows="):]
    if body:
        for item in body.split(","):
            halves = item.split(":")
            if len(halves) != 2:
                raise DiagramParseError(f"expected 'i:j', got {item!r}", cursor)
            i = _parse_index(halves[0], n, cursor)
            j = _parse_index(halves[1], n, cursor + len(halves[0]) + 1)
            if i == j:
                raise DiagramParseError(f"arrow {item!r} connects a node to itself", cursor)
            arrows.append((i, j))
            cursor += len(item) + 1
    return SatakeDiagram.create(types, black, arrows)


_EDGE_BY_DROP = {
    (-1, -1): "---",
    (-2, -1): "=<=",
    (-1, -2): "=>=",
    (-3, -1): "≡<≡",
    (-1, -3): "≡>≡",
}


def _edge(rs: RootSystem, left: int, right: int) -> str:
    # the arrowhead points at the short root
    return _EDGE_BY_DROP[(rs.cartan[left][right], rs.cartan[right][left])]


def _glyph(d: SatakeDiagram, i: int) -> str:
    return "●" if i in d.black else "○"


def _render_component(d: SatakeDiagram, t: SimpleType, start: int) -> list[str]:
    rs = d.rs
    nodes = list(range(start, start + t.rank))
    if t.family == "D":
        chain = nodes[:-1]
        branch = nodes[-1]
        branch_at = len(chain) - 2
    elif t.family == "E":
        spine = [0, 2, 3, 4, 5, 6, 7][: t.rank - 1]
        chain = [start + k for k in spine]
        branch = start + 1
        branch_at = 2
    else:
        chain = nodes
        branch = None
        branch_at = -1

    line = ""
    for k, u in enumerate(chain):
        line += _glyph(d, u)
        if k + 1 < len(chain):
            line += _edge(rs, u, chain[k + 1])
    labels = [" "] * len(line)
    for k, u in enumerate(chain):
        tag = str(u + 1)
        col = 4 * k
        for c, ch in enumerate(tag):
            if col + c < len(labels):
                labels[col + c] = ch
            else:
                labels.append(ch)

    out: list[str] = []
    if branch is not None:
        pad = " " * (4 * branch_at)
        out.append(f"{pad}{_glyph(d, branch)} {branch + 1}")
        out.append(f"{pad}|")
    out.append(line)
    out.append("".join(labels).rstrip())
    return out


def render_diagram(d: SatakeDiagram) -> str:
    """Multi-line picture: filled/open nodes, bond glyphs, 1-based labels."""
    lines: list[str] = []
    start = 0
    for t in d.types:
        if lines:
            lines.append("")
        lines.extend(_render_component(d, t, start))
        start += t.rank
    if d.arrows:
        lines.append("arrows: " + ", ".join(f"{i + 1}<->{j + 1}" for i, j in d.arrows))
    return "\n".join(lines)
