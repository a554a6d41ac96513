"""Lattice-point counts of the dilates nFRAC(G), nP(G), nQ(G).

Every dilate has the shape ``{lo <= x_i, x_i + x_j <= s for ij in E}``.
Shifting by ``-lo`` gives ``{0 <= y_i, y_i + y_j <= s - 2 lo}``, and since
no vertex is isolated each ``y_i`` is also at most ``s - 2 lo``.  Both
engines count in the shifted coordinates.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .graph import Graph

KINDS = ("frac", "p", "q")


class WrongFamilyError(ValueError):
    """The transfer-matrix engine only handles paths and cycles on 1..d."""


@dataclass(frozen=True)
class CountRequest:
    kind: str
    graph: Graph
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown polytope kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("dilation must be nonnegative")

    def bounds(self) -> tuple[int, int]:
        """``(lo, s)`` of the dilated system."""
        n = self.n
        if self.kind == "frac":
            return 0, n
        if self.kind == "p":
            return 0, 2 * n
        return -n, n

    def pair_bound(self) -> int:
        lo, s = self.bounds()
        return s - 2 * lo


def search_order(g: Graph) -> list[int]:
    """Vertices by descending degree, ties by index."""
    adj = g.adjacency()
    return sorted(g.vertices, key=lambda v: (-len(adj[v]), v))


class _Search:
    def __init__(self, g: Graph, s: int, max_states: int):
        order = search_order(g)
        pos = {v: k for k, v in enumerate(order)}
        adj = g.adjacency()
        self.d = g.d
        self.s = s
        # for the vertex at position k: positions of later neighbours
        self.later = [[pos[w] for w in adj[v] if pos[w] > k] for k, v in enumerate(order)]
        self.memo: dict = {}
        self.max_states = max_states

    def count(self, k: int, ub: tuple) -> int:
        """Points with positions k.. free, ``ub[j]`` the bound of position k + j."""
        if k == self.d - 1:
            return ub[0] + 1
        key = (k, ub)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        later = self.later[k]
        rest = list(ub[1:])
        total = 0
        for x in range(ub[0] + 1):
            nxt = rest[:]
            for p in later:
                j = p - k - 1
                cap = self.s - x
                if cap < nxt[j]:
                    nxt[j] = cap
            total += self.count(k + 1, tuple(nxt))
        if len(self.memo) >= self.max_states:
            raise ResourceLimitError(f"pruned search exceeded {self.max_states} memoized states")
        self.memo[key] = total
        return total

    def count_with_first(self, x: int) -> int:
        if self.d == 1:
            return 1
        ub = [self.s] * (self.d - 1)
        for p in self.later[0]:
            ub[p - 1] = min(ub[p - 1], self.s - x)
        return self.count(1, tuple(ub))


def _branch(args):
    g, s, x, max_states = args
    return _Search(g, s, max_states).count_with_first(x)


def count_dfs(req: CountRequest, limits: Limits = DEFAULT_LIMITS) -> int:
    """Depth-first count with per-vertex upper bounds from assigned neighbours.

    Subtrees are memoized on the tuple of remaining upper bounds, so the
    work is proportional to the number of distinct bound states rather
    than the number of points.
    """
    s = req.pair_bound()
    g = req.graph
    if limits.workers > 1 and s > 0:
        jobs = [(g, s, x, limits.dfs_states) for x in range(s + 1)]
        with ProcessPoolExecutor(max_workers=limits.workers) as pool:
            return sum(pool.map(_branch, jobs))
    search = _Search(g, s, limits.dfs_states)
    return search.count(0, tuple([s] * g.d))


def path_or_cycle(g: Graph) -> str | None:
    """``"path"`` or ``"cycle"`` when the edges are {i, i+1} (plus {1, d}); else ``None``."""
    chain = {(i, i + 1) for i in range(1, g.d)}
    if g.edges == chain:
        return "path"
    if g.d >= 3 and g.edges == chain | {(1, g.d)}:
        return "cycle"
    return None


def _matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def _matpow(m, e):
    size = len(m)
    result = [[int(i == j) for j in range(size)] for i in range(size)]
    base = m
    while e:
        if e & 1:
            result = _matmul(result, base)
        e >>= 1
        if e:
            base = _matmul(base, base)
    return result


def transfer_matrix(s: int) -> list[list[int]]:
    """``T[p][q] = 1`` iff ``p + q <= s`` on states ``0..s``."""
    return [[int(p + q <= s) for q in range(s + 1)] for p in range(s + 1)]


def count_transfer(req: CountRequest) -> int:
    shape = path_or_cycle(req.graph)
    if shape is None:
        raise WrongFamilyError("transfer-matrix counting needs a path or cycle graph on 1..d")
    s = req.pair_bound()
    t = transfer_matrix(s)
    d = req.graph.d
    if shape == "cycle":
        m = _matpow(t, d)
        return sum(m[i][i] for i in range(s + 1))
    m = _matpow(t, d - 1)
    return sum(sum(row) for row in m)


def count(req: CountRequest, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> int:
    if engine == "auto":
        engine = "transfer" if path_or_cycle(req.graph) else "dfs"
    if engine == "dfs":
        return count_dfs(req, limits)
    if engine == "transfer":
        return count_transfer(req)
    if engine == "both":
        a, b = count_dfs(req, limits), count_transfer(req)
        if a != b:
            raise AssertionError(f"engines disagree: dfs={a} transfer={b}")
        return a
    raise ValueError(f"unknown engine {engine!r}")


def frac_counts(g: Graph, upto: int, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> list[int]:
    """``[i(FRAC(G), n) for n in 0..upto]``."""
    return [count(CountRequest("frac", g, n), engine, limits) for n in range(upto + 1)]


def stable_sets(g: Graph) -> list[frozenset]:
    out = []
    verts = list(g.vertices)
    for mask in range(1 << g.d):
        chosen = {verts[k] for k in range(g.d) if mask >> k & 1}
        if not any(i in chosen and j in chosen for i, j in g.edges):
            out.append(frozenset(chosen))
    return out
