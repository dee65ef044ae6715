"""Coloring data model: vertex and edge colorings, total color matrices and reports."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal

from ..exceptions import ColoringFormatError
from ..graphcore import Edge, edge_key

ColoringKind = Literal["vertex", "edge", "total", "conformable"]
BoundClass = Literal[
    "type I", "type II", "beyond-TCC", "class I", "class II", "beyond-Vizing", "n/a"
]
# A witness element is a vertex or an edge
Element = int | Edge


def _check_color(c: Any) -> int:
    if isinstance(c, bool) or not isinstance(c, int) or c < 1:
        raise ColoringFormatError(f"colors must be positive integers, got {c!r}")
    return c


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        for c in self.colors:
            _check_color(c)

    @classmethod
    def of(cls, colors: Iterable[int]) -> "VertexColoring":
        return cls(tuple(int(c) for c in colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, list[int]]:
        """Vertices per color, colors ascending."""
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return dict(sorted(out.items()))

    def normalized(self) -> "VertexColoring":
        """Relabel colors to 1..C in order of first use."""
        relabel: dict[int, int] = {}
        for c in self.colors:
            relabel.setdefault(c, len(relabel) + 1)
        return VertexColoring(tuple(relabel[c] for c in self.colors))


@dataclass(frozen=True)
class EdgeColoring:
    """Map from sorted edge pairs to positive colors."""

    colors: dict[Edge, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        normalized: dict[Edge, int] = {}
        for (i, j), c in self.colors.items():
            if i == j:
                raise ColoringFormatError(f"loop ({i}, {j}) in edge coloring")
            normalized[edge_key(i, j)] = _check_color(c)
        object.__setattr__(self, "colors", normalized)

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]]) -> "EdgeColoring":
        out: dict[Edge, int] = {}
        for t in triples:
            if len(t) != 3:
                raise ColoringFormatError(f"edge entries are [i, j, color], got {list(t)}")
            out[edge_key(int(t[0]), int(t[1]))] = int(t[2])
        return cls(out)

    def __getitem__(self, e: Edge) -> int:
        return self.colors[edge_key(*e)]

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))

    def triples(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in sorted(self.colors.items())]


@dataclass(frozen=True)
class TotalColorMatrix:
    """Symmetric partial matrix: diagonal = vertex colors, off-diagonal = edge colors."""

    n: int
    entries: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ColoringFormatError(f"matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if self.entries[i][i] is None:
                raise ColoringFormatError(f"vertex {i} has no color (cell ({i},{i}))")
            for j in range(self.n):
                v = self.entries[i][j]
                if v != self.entries[j][i]:
                    raise ColoringFormatError(
                        f"asymmetric cell ({i},{j}): {v} vs {self.entries[j][i]}"
                    )
                if v is not None:
                    _check_color(v)

    @classmethod
    def from_colorings(cls, vertex: VertexColoring, edge: EdgeColoring) -> "TotalColorMatrix":
        n = vertex.n
        rows: list[list[int | None]] = [[None] * n for _ in range(n)]
        for i, c in enumerate(vertex.colors):
            rows[i][i] = c
        for (i, j), c in edge.colors.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ColoringFormatError(f"edge ({i}, {j}) outside {n} vertices")
            rows[i][j] = rows[j][i] = c
        return cls(n=n, entries=tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int | None:
        i, j = ij
        return self.entries[i][j]

    def vertex_coloring(self) -> VertexColoring:
        diagonal = (self.entries[i][i] for i in range(self.n))
        return VertexColoring(tuple(c for c in diagonal if c is not None))

    def edge_coloring(self) -> EdgeColoring:
        return EdgeColoring(
            {
                (i, j): c
                for i in range(self.n)
                for j in range(i + 1, self.n)
                if (c := self.entries[i][j]) is not None
            }
        )

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edge_coloring().colors)

    @property
    def colors(self) -> set[int]:
        return {c for row in self.entries for c in row if c is not None}

    @property
    def num_colors(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class ColoringReport:
    """Verdict on one coloring.

    ``witness`` is a conflicting pair of elements whenever ``proper`` is false; elements are
    vertex indices or sorted edge pairs.
    """

    kind: ColoringKind
    proper: bool
    colors_used: int
    max_degree: int
    bound_class: BoundClass = "n/a"
    witness: tuple[Element, Element] | None = None
    detail: str = ""
    conformable: bool | None = None
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.proper and self.conformable is not False

    @property
    def summary(self) -> str:
        """One-line verdict; a construction ``note`` is appended in parentheses."""
        return f"{self._verdict} ({self.note})" if self.note else self._verdict

    @property
    def _verdict(self) -> str:
        if not self.proper:
            return f"improper: {self.detail or f'conflict {self.witness}'}"
        if self.kind == "conformable":
            return "conformable" if self.conformable else f"not conformable: {self.detail}"
        if self.bound_class == "type II":
            return "type II bound met (TCC)"
        if self.bound_class == "n/a":
            return f"proper, {self.colors_used} colors"
        return self.bound_class

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "kind": self.kind,
            "proper": self.proper,
            "colors_used": self.colors_used,
            "max_degree": self.max_degree,
            "bound_class": self.bound_class,
            "summary": self.summary,
            "witness": _witness_json(self.witness),
        }
        if self.detail:
            data["detail"] = self.detail
        if self.conformable is not None:
            data["conformable"] = self.conformable
        if self.note:
            data["note"] = self.note
        return data


def _witness_json(witness: tuple[Element, Element] | None) -> list[Any] | None:
    if witness is None:
        return None
    return [list(w) if isinstance(w, tuple) else w for w in witness]


def class_sizes(c: VertexColoring, num_classes: int | None = None) -> list[int]:
    """Class sizes in ascending color order, padded with empty classes up to ``num_classes``."""
    sizes = [len(v) for v in c.classes().values()]
    if num_classes is not None and num_classes > len(sizes):
        sizes += [0] * (num_classes - len(sizes))
    return sizes


def is_equitable(c: VertexColoring, num_classes: int | None = None) -> bool:
    """Class sizes differ by at most one."""
    sizes = class_sizes(c, num_classes)
    return not sizes or max(sizes) - min(sizes) <= 1

