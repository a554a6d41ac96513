"""H-representations of FRAC(G), P(G) = 2 FRAC(G), Q(G) = 3 FRAC(G) - 1, and their vertices.

Half-integral points are stored doubled so that every computation stays in
the integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .graph import Graph, _components, _two_coloring, induced_subgraph


@dataclass(frozen=True)
class HPolytope:
    """Rows ``(a, b)`` meaning ``a . x <= b`` with integer data."""

    d: int
    rows: tuple

    def __post_init__(self):
        rows = tuple((tuple(int(c) for c in a), int(b)) for a, b in self.rows)
        for a, _ in rows:
            if len(a) != self.d:
                raise ValueError(f"row of length {len(a)} in dimension {self.d}")
        object.__setattr__(self, "rows", rows)

    def dilate(self, n: int) -> "HPolytope":
        return HPolytope(self.d, tuple((a, b * n) for a, b in self.rows))

    def contains(self, x, strict: bool = False) -> bool:
        """Membership of an integer vector or a :class:`HalfIntPoint`."""
        if isinstance(x, HalfIntPoint):
            vec, scale = x.doubled, 2
        else:
            vec, scale = tuple(x), 1
        for a, b in self.rows:
            lhs = sum(ai * xi for ai, xi in zip(a, vec))
            if lhs > scale * b or (strict and lhs == scale * b):
                return False
        return True

    def coordinate_bounds(self) -> list[tuple[int, int]]:
        """Per-coordinate integer box implied by the rows.

        Lower bounds come from rows ``-x_i <= b``; upper bounds from rows
        with nonnegative coefficients once the lower bounds are known.
        """
        lo: list = [None] * self.d
        for a, b in self.rows:
            nz = [(i, c) for i, c in enumerate(a) if c]
            if len(nz) == 1 and nz[0][1] < 0:
                i, c = nz[0]
                bound = _ceil_div(-b, -c)
                lo[i] = bound if lo[i] is None else max(lo[i], bound)
        if any(v is None for v in lo):
            raise ValueError("no lower bound derivable for some coordinate")
        hi: list = [None] * self.d
        for a, b in self.rows:
            if any(c < 0 for c in a) or not any(a):
                continue
            for i, c in enumerate(a):
                if c <= 0:
                    continue
                rest = sum(cj * lo[j] for j, cj in enumerate(a) if j != i)
                bound = (b - rest) // c
                hi[i] = bound if hi[i] is None else min(hi[i], bound)
        if any(v is None for v in hi):
            raise ValueError("no upper bound derivable for some coordinate")
        return list(zip(lo, hi))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True, order=True)
class HalfIntPoint:
    """The point ``doubled / 2``."""

    doubled: tuple

    @classmethod
    def from_values(cls, values: Iterable) -> "HalfIntPoint":
        out = []
        for v in values:
            twice = Fraction(v) * 2
            if twice.denominator != 1:
                raise ValueError(f"{v} is not half-integral")
            out.append(int(twice))
        return cls(tuple(out))

    @classmethod
    def from_integers(cls, values: Iterable[int]) -> "HalfIntPoint":
        return cls(tuple(2 * int(v) for v in values))

    @property
    def d(self) -> int:
        return len(self.doubled)

    def values(self) -> tuple:
        return tuple(Fraction(c, 2) for c in self.doubled)

    def is_integral(self) -> bool:
        return all(c % 2 == 0 for c in self.doubled)

    def integer_vector(self) -> tuple:
        if not self.is_integral():
            raise ValueError("point is not integral")
        return tuple(c // 2 for c in self.doubled)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values()) + ")"


def _unit_rows(d: int, bound: int):
    rows = []
    for i in range(d):
        a = [0] * d
        a[i] = -1
        rows.append((tuple(a), bound))
    return rows


def _edge_rows(g: Graph, bound: int):
    rows = []
    for i, j in g.sorted_edges():
        a = [0] * g.d
        a[i - 1] = a[j - 1] = 1
        rows.append((tuple(a), bound))
    return rows


def frac_polytope(g: Graph) -> HPolytope:
    return HPolytope(g.d, tuple(_unit_rows(g.d, 0) + _edge_rows(g, 1)))


def p_polytope(g: Graph) -> HPolytope:
    return HPolytope(g.d, tuple(_unit_rows(g.d, 0) + _edge_rows(g, 2)))


def q_polytope(g: Graph) -> HPolytope:
    return HPolytope(g.d, tuple(_unit_rows(g.d, 1) + _edge_rows(g, 1)))


def _labelings(g: Graph):
    """Feasible labelings in {0, 1, 2} (doubled {0, 1/2, 1}) of FRAC(G).

    Depth-first over vertices 1..d; a label is rejected as soon as it breaks
    ``x_i + x_j <= 1`` against an already-labelled neighbour.
    """
    adj = g.adjacency()
    d = g.d
    labels = [0] * (d + 1)

    def rec(v):
        if v > d:
            yield tuple(labels[1:])
            return
        for lab in (0, 1, 2):
            if all(labels[w] + lab <= 2 for w in adj[v] if w < v):
                labels[v] = lab
                yield from rec(v + 1)
        labels[v] = 0

    yield from rec(1)


def _half_support_ok(g: Graph, doubled) -> bool:
    half = {i + 1 for i, c in enumerate(doubled) if c == 1}
    if not half:
        return True
    verts, edges = induced_subgraph(g, half)
    for comp in _components(verts, edges):
        comp_edges = [e for e in edges if e[0] in comp]
        if _two_coloring(comp, comp_edges) is not None:
            return False
    return True


def frac_vertices(g: Graph, limits: Limits = DEFAULT_LIMITS) -> list[HalfIntPoint]:
    """Vertices of FRAC(G), sorted by doubled coordinates.

    A feasible {0, 1/2, 1} point is a vertex iff its half-valued support is
    empty or induces a subgraph whose every component has an odd cycle.
    """
    if g.d > limits.vertex_enum_d:
        raise ResourceLimitError(
            f"vertex enumeration over 3^{g.d} labelings exceeds limit d <= {limits.vertex_enum_d}"
        )
    return sorted(HalfIntPoint(lab) for lab in _labelings(g) if _half_support_ok(g, lab))


def q_vertices(g: Graph, limits: Limits = DEFAULT_LIMITS) -> list[HalfIntPoint]:
    # 3v - 1 in doubled coordinates is 3*(2v) - 2
    return sorted(HalfIntPoint(tuple(3 * c - 2 for c in v.doubled)) for v in frac_vertices(g, limits))


def is_lattice_polytope(vertices: Iterable[HalfIntPoint]) -> bool:
    return all(v.is_integral() for v in vertices)


def q_dual_vertices(g: Graph) -> list[tuple]:
    """Vertices of the polar of Q(G): ``e_i + e_j`` per edge, ``-e_i`` per vertex."""
    out = []
    for i, j in g.sorted_edges():
        v = [0] * g.d
        v[i - 1] = v[j - 1] = 1
        out.append(tuple(v))
    for i in range(g.d):
        v = [0] * g.d
        v[i] = -1
        out.append(tuple(v))
    return out


def lattice_points(p: HPolytope, strict: bool = False) -> list[tuple]:
    """Integer points of ``p`` (interior only with ``strict``), lexicographic."""
    bounds = p.coordinate_bounds()
    return [x for x in product(*(range(lo, hi + 1) for lo, hi in bounds)) if p.contains(x, strict)]


def interior_lattice_points(p: HPolytope) -> list[tuple]:
    return lattice_points(p, strict=True)
