"""Quivers, radical-square-zero bound quiver algebras and the named families.

Vertices are 1-indexed. Arrow order is significant: it fixes the order in
which representation maps are stored and therefore every matrix layout
downstream.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

__all__ = [
    "Arrow",
    "Quiver",
    "BoundAlgebraSpec",
    "FamilyKind",
    "FamilySpec",
    "QuiverFormatError",
    "parse_quiver",
    "render_quiver",
    "generate_family",
    "strip_loops",
    "opposite",
]


class QuiverFormatError(ValueError):
    """Raised for malformed quiver files or invalid quiver data."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: int
    target: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[Arrow, ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise QuiverFormatError("a quiver needs at least one vertex")
        seen = set()
        for a in self.arrows:
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise QuiverFormatError(
                        f"arrow {a.id!r} endpoint {v} outside 1..{self.vertex_count}"
                    )
            if a.id in seen:
                raise QuiverFormatError(f"duplicate arrow id {a.id!r}")
            seen.add(a.id)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def arrows_from(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def loops_at(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.is_loop and a.source == v]

    def composable_pairs(self) -> list[tuple[Arrow, Arrow]]:
        """All paths of length two as (first, second) arrow pairs."""
        return [(a, b) for a in self.arrows for b in self.arrows if a.target == b.source]


class RelationKind(str, Enum):
    RADICAL_SQUARE_ZERO = "rad2"


@dataclass(frozen=True)
class BoundAlgebraSpec:
    """The algebra kQ/(>=2): a quiver together with the rad^2 = 0 relation."""

    quiver: Quiver
    relation_kind: RelationKind = RelationKind.RADICAL_SQUARE_ZERO
    loop_counts: tuple[int, ...] = field(default=None)  # derived when omitted

    def __post_init__(self):
        counts = tuple(len(self.quiver.loops_at(v)) for v in self.quiver.vertices)
        if self.loop_counts is None:
            object.__setattr__(self, "loop_counts", counts)
        elif tuple(self.loop_counts) != counts:
            raise QuiverFormatError(f"loop_counts {self.loop_counts} disagree with arrows {counts}")
        if self.relation_kind is not RelationKind.RADICAL_SQUARE_ZERO:
            raise QuiverFormatError(f"unsupported relation kind {self.relation_kind!r}")

    @property
    def vertex_count(self) -> int:
        return self.quiver.vertex_count

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @classmethod
    def from_arrows(cls, vertex_count: int, arrows) -> "BoundAlgebraSpec":
        return cls(Quiver(vertex_count, tuple(Arrow(*a) if not isinstance(a, Arrow) else a for a in arrows)))


# ---------------------------------------------------------------------------
# file format

_VERTICES = re.compile(r"^vertices\s*:\s*(\S+)$")
_ARROW = re.compile(r"^arrow\s+([^\s:]+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_LOOPS = re.compile(r"^loops\s+(\S+)\s*:\s*(\S+)$")
_RELATIONS = re.compile(r"^relations\s*:\s*(\S+)$")


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise QuiverFormatError(f"{what} must be an integer, got {tok!r}", lineno) from None


def parse_quiver(text: str) -> BoundAlgebraSpec:
    """Parse the line-oriented quiver format.

    ::

        vertices: 3
        arrow x2: 1 -> 2
        loops 2: 3          # expands to loop_2_1 .. loop_2_3
        relations: rad2
    """
    vertex_count = None
    relations = None
    arrows: list[tuple[str, int, int, int]] = []  # id, s, t, line
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if m := _VERTICES.match(line):
            if vertex_count is not None:
                raise QuiverFormatError("vertices declared twice", lineno)
            vertex_count = _int(m.group(1), lineno, "vertex count")
            if vertex_count < 1:
                raise QuiverFormatError("vertex count must be positive", lineno)
        elif m := _ARROW.match(line):
            s = _int(m.group(2), lineno, "arrow source")
            t = _int(m.group(3), lineno, "arrow target")
            arrows.append((m.group(1), s, t, lineno))
        elif m := _LOOPS.match(line):
            v = _int(m.group(1), lineno, "loop vertex")
            count = _int(m.group(2), lineno, "loop count")
            if count < 0:
                raise QuiverFormatError("loop count must be nonnegative", lineno)
            arrows.extend((f"loop_{v}_{j}", v, v, lineno) for j in range(1, count + 1))
        elif m := _RELATIONS.match(line):
            if m.group(1) != RelationKind.RADICAL_SQUARE_ZERO.value:
                raise QuiverFormatError(
                    f"unsupported relations {m.group(1)!r}; only 'rad2' is accepted", lineno
                )
            relations = m.group(1)
        else:
            raise QuiverFormatError(f"cannot parse {line!r}", lineno)
    if vertex_count is None:
        raise QuiverFormatError("missing 'vertices:' line")
    if relations is None:
        raise QuiverFormatError("missing 'relations: rad2' line")
    seen: dict[str, int] = {}
    for aid, s, t, lineno in arrows:
        for v in (s, t):
            if not 1 <= v <= vertex_count:
                raise QuiverFormatError(
                    f"arrow {aid!r} endpoint {v} out of range 1..{vertex_count}", lineno
                )
        if aid in seen:
            raise QuiverFormatError(f"duplicate arrow id {aid!r} (first on line {seen[aid]})", lineno)
        seen[aid] = lineno
    return BoundAlgebraSpec(Quiver(vertex_count, tuple(Arrow(a, s, t) for a, s, t, _ in arrows)))


def render_quiver(spec: BoundAlgebraSpec) -> str:
    lines = [f"vertices: {spec.vertex_count}"]
    lines += [f"arrow {a.id}: {a.source} -> {a.target}" for a in spec.arrows]
    lines.append("relations: rad2")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# families


class FamilyKind(str, Enum):
    A = "A"
    D = "D"
    E = "E"
    QNM = "Qnm"
    A3_REVERSED = "A3rev"


@dataclass(frozen=True)
class FamilySpec:
    kind: FamilyKind
    n: int
    loops: tuple[int, ...]

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "loops", tuple(int(x) for x in self.loops))
        if kind is FamilyKind.QNM:
            object.__setattr__(self, "n", 2)
        elif kind is FamilyKind.A3_REVERSED:
            object.__setattr__(self, "n", 3)
        n = self.n
        if kind is FamilyKind.A and n < 1:
            raise ValueError("A(n) requires n >= 1")
        if kind is FamilyKind.D and n < 4:
            raise ValueError("D(n) requires n >= 4")
        if kind is FamilyKind.E and n not in (6, 7, 8):
            raise ValueError("E(n) requires n in {6, 7, 8}")
        if len(self.loops) != n:
            raise ValueError(f"{kind.value} family expects {n} loop counts, got {len(self.loops)}")
        if any(x < 0 for x in self.loops):
            raise ValueError("loop counts must be nonnegative")

    @classmethod
    def a(cls, *loops: int) -> "FamilySpec":
        return cls(FamilyKind.A, len(loops), loops)

    @classmethod
    def d(cls, *loops: int) -> "FamilySpec":
        return cls(FamilyKind.D, len(loops), loops)

    @classmethod
    def e(cls, *loops: int) -> "FamilySpec":
        return cls(FamilyKind.E, len(loops), loops)

    @classmethod
    def qnm(cls, n: int, m: int) -> "FamilySpec":
        return cls(FamilyKind.QNM, 2, (n, m))

    @classmethod
    def a3_reversed(cls, n: int, m: int, l: int) -> "FamilySpec":
        return cls(FamilyKind.A3_REVERSED, 3, (n, m, l))

    def label(self) -> str:
        loops = ",".join(map(str, self.loops))
        if self.kind is FamilyKind.QNM:
            return f"Q({self.loops[0]},{self.loops[1]})"
        if self.kind is FamilyKind.A3_REVERSED:
            return f"A3rev({loops})"
        return f"{self.kind.value}({self.n}; {loops})"


def _loops(letter: str, counts) -> list[Arrow]:
    return [
        Arrow(f"{letter}_{v}^{l}", v, v)
        for v, c in enumerate(counts, start=1)
        for l in range(1, c + 1)
    ]


def generate_family(f: FamilySpec) -> BoundAlgebraSpec:
    """Build the quiver of a named family with the labels used in the literature.

    Arrow order: chain arrows (ascending), branch arrows, then loops grouped
    by vertex.
    """
    n, loops = f.n, f.loops
    if f.kind is FamilyKind.A:
        arrows = [Arrow(f"x{i}", i - 1, i) for i in range(2, n + 1)]
        arrows += _loops("a", loops)
    elif f.kind is FamilyKind.D:
        arrows = [Arrow(f"x{i}", i - 1, i) for i in range(2, n - 1)]
        arrows += [Arrow(f"x{n - 1}", n - 2, n - 1), Arrow(f"x{n}", n - 2, n)]
        arrows += _loops("b", loops)
    elif f.kind is FamilyKind.E:
        arrows = [Arrow("x3", 1, 3)] + [Arrow(f"x{i}", i - 1, i) for i in range(4, n + 1)]
        arrows += [Arrow("x2", 4, 2)]
        arrows += _loops("c", loops)
    elif f.kind is FamilyKind.QNM:
        arrows = [Arrow("x", 1, 2), Arrow("y", 2, 1)]
        arrows += [Arrow(f"a_{i}", 1, 1) for i in range(1, loops[0] + 1)]
        arrows += [Arrow(f"b_{j}", 2, 2) for j in range(1, loops[1] + 1)]
    elif f.kind is FamilyKind.A3_REVERSED:
        arrows = [Arrow("x", 1, 2), Arrow("y", 3, 2)]
        for letter, v, c in zip("abc", (1, 2, 3), loops):
            arrows += [Arrow(f"{letter}_{i}", v, v) for i in range(1, c + 1)]
    else:  # pragma: no cover
        raise ValueError(f"unknown family {f.kind}")
    return BoundAlgebraSpec(Quiver(n, tuple(arrows)))


def strip_loops(spec: BoundAlgebraSpec) -> tuple[BoundAlgebraSpec, tuple[int, ...]]:
    """Remove every loop; return the loop-free base and the removed counts."""
    base = Quiver(spec.vertex_count, tuple(a for a in spec.arrows if not a.is_loop))
    return BoundAlgebraSpec(base), spec.loop_counts


def opposite(spec: BoundAlgebraSpec) -> BoundAlgebraSpec:
    """Reverse every arrow, keeping ids and order."""
    return BoundAlgebraSpec(
        Quiver(spec.vertex_count, tuple(Arrow(a.id, a.target, a.source) for a in spec.arrows))
    )
