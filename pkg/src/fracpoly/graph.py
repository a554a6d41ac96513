"""Simple undirected graphs on the vertex set 1..d.

Vertices are 1-indexed in every public function.  A :class:`Graph` never
has isolated vertices; the induced subgraphs returned by
:func:`induced_subgraph` are plain ``(vertices, edges)`` pairs that may.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


class GraphFormatError(ValueError):
    """Malformed graph file or family specification."""


class GraphError(ValueError):
    """Well-formed input describing a graph outside the supported class."""


def _edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    d: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.d < 1:
            raise GraphError(f"vertex count must be positive, got {self.d}")
        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            for v in (i, j):
                if not 1 <= v <= self.d:
                    raise GraphError(f"vertex {v} out of range 1..{self.d}")
            normalized.add(_edge(i, j))
        object.__setattr__(self, "edges", frozenset(normalized))
        covered = {v for e in normalized for v in e}
        for v in range(1, self.d + 1):
            if v not in covered:
                raise GraphError(f"vertex {v} is isolated")

    @classmethod
    def from_edges(cls, d: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(d, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(1, self.d + 1)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return self.adjacency()[v]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for i, j in self.sorted_edges():
            adj[i].append(j)
            adj[j].append(i)
        for v in adj:
            adj[v].sort()
        return adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def __str__(self):
        body = ", ".join(f"{i}-{j}" for i, j in self.sorted_edges())
        return f"Graph(d={self.d}: {body})"


def from_edge_list(text: str) -> Graph:
    """Parse ``d m`` followed by ``m`` lines ``i j``.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise GraphFormatError("empty graph file")

    def ints(line: str, lineno: int) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            return int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None

    d, m = ints(lines[0], 1)
    if d < 1 or m < 0:
        raise GraphFormatError(f"bad header {lines[0]!r}")
    if len(lines) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = [ints(line, k + 2) for k, line in enumerate(lines[1:])]
    return Graph(d, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    rows = [f"{g.d} {len(g.edges)}"] + [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(rows) + "\n"


FAMILIES = ("complete", "cycle", "path", "complete_bipartite")


def family(name: str, *params: int) -> Graph:
    if name == "complete":
        (d,) = _arity(name, params, 1)
        if d < 2:
            raise GraphError("complete:d needs d >= 2")
        return Graph(d, frozenset((i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)))
    if name == "cycle":
        (d,) = _arity(name, params, 1)
        if d < 3:
            raise GraphError("cycle:d needs d >= 3")
        return Graph(d, frozenset([(i, i + 1) for i in range(1, d)] + [(1, d)]))
    if name == "path":
        (d,) = _arity(name, params, 1)
        if d < 2:
            raise GraphError("path:d needs d >= 2")
        return Graph(d, frozenset((i, i + 1) for i in range(1, d)))
    if name == "complete_bipartite":
        m, n = _arity(name, params, 2)
        if m < 1 or n < 1:
            raise GraphError("complete_bipartite:m,n needs m, n >= 1")
        return Graph(m + n, frozenset((i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)))
    raise GraphFormatError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")


def _arity(name, params, k):
    if len(params) != k:
        raise GraphFormatError(f"family {name} takes {k} parameter(s), got {len(params)}")
    return params


def parse_family(spec: str) -> Graph:
    """``"cycle:7"`` or ``"complete_bipartite:2,3"``."""
    name, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise GraphFormatError(f"family spec {spec!r} must look like name:params")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise GraphFormatError(f"non-integer parameter in {spec!r}") from None
    return family(name.strip(), *params)


def connected_components(g: Graph) -> list[frozenset]:
    return _components(list(g.vertices), g.edges)


def _components(vertices, edges) -> list[frozenset]:
    adj = {v: [] for v in vertices}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    seen = set()
    parts = []
    for root in sorted(vertices):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        parts.append(frozenset(comp))
    return parts


def induced_subgraph(g: Graph, s) -> tuple[frozenset, frozenset]:
    """Vertices ``s`` and the edges of ``g`` inside it.  Isolated vertices are kept."""
    s = frozenset(s)
    return s, frozenset(e for e in g.edges if e[0] in s and e[1] in s)


def _two_coloring(vertices, edges):
    adj = {v: [] for v in vertices}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    color = {}
    for root in sorted(vertices):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def shortest_odd_cycle(vertices, edges) -> tuple[int, ...] | None:
    """A shortest odd cycle as a vertex sequence, or ``None`` when bipartite.

    BFS from every root; an edge between two vertices of the same level closes
    an odd cycle of length ``2*level + 1`` whenever the two tree paths only
    meet at the root.  A root lying on a shortest odd cycle always yields one.
    """
    adj = {v: [] for v in vertices}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    for v in adj:
        adj[v].sort()
    best = None
    for root in sorted(vertices):
        level = {root: 0}
        parent = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in level:
                    level[w] = level[v] + 1
                    parent[w] = v
                    order.append(w)
                    queue.append(w)
        for u in order:
            for w in adj[u]:
                if w <= u or level.get(w) != level[u]:
                    continue
                if best is not None and 2 * level[u] + 1 >= len(best):
                    continue
                pu, pw = _path_to_root(u, parent), _path_to_root(w, parent)
                if set(pu[:-1]) & set(pw[:-1]):
                    continue
                best = _canonical_cycle(pu[::-1] + pw[:-1])
    return best


def _path_to_root(v, parent):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def is_bipartite(g: Graph):
    """Return ``(True, coloring)`` or ``(False, odd_cycle)``.

    The coloring maps each vertex to 0 or 1.  The odd cycle is a shortest one,
    rotated to start at its least vertex.
    """
    color = _two_coloring(list(g.vertices), g.edges)
    if color is not None:
        return True, color
    return False, shortest_odd_cycle(list(g.vertices), g.edges)


def all_graphs(d: int):
    """Every graph on 1..d without isolated vertices (labelled, by edge subset)."""
    pairs = [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        if len({v for e in edges for v in e}) == d:
            yield Graph(d, frozenset(edges))
