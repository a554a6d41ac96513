"""Normality of the polar polytope Q(G)^v and the related unimodularity checks.

The configuration matrix has the columns ``(a, 1)`` for the lattice points
``a`` of Q(G)^v: the origin, ``e_i + e_j`` per edge and ``-e_i`` per vertex.
Normality means every lattice point of ``k Q(G)^v`` is a sum of ``k``
columns.  Only a bounded-degree version of that statement is checked here;
reports always say up to which degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .graph import Graph, is_bipartite
from .polytope import interior_lattice_points, is_lattice_polytope, q_dual_vertices, q_polytope, q_vertices


@dataclass(frozen=True)
class ConfigurationMatrix:
    d: int
    columns: tuple

    def __post_init__(self):
        cols = tuple(tuple(int(c) for c in col) for col in self.columns)
        for col in cols:
            if len(col) != self.d + 1 or col[-1] != 1:
                raise ValueError(f"column {col} must have length {self.d + 1} and last entry 1")
        object.__setattr__(self, "columns", cols)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]


@dataclass(frozen=True)
class WitnessVector:
    u: tuple
    cycle: tuple
    k: int
    member: bool
    # the 2k + 2 columns whose half-sum is u
    half_columns: tuple
    halves_exactly: bool


def config_matrix(g: Graph) -> ConfigurationMatrix:
    d = g.d
    cols = [tuple([0] * d + [1])]
    cols += [v + (1,) for v in q_dual_vertices(g)]
    return ConfigurationMatrix(d, tuple(cols))


def lattice_basis(vectors) -> list[list[int]]:
    """Echelon basis of the integer span of ``vectors`` (integer row reduction)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    n = len(rows[0])
    basis = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col] != 0]
        dead = [r for r in rows if r[col] == 0]
        if not live:
            col += 1
            continue
        # Euclid on the pivot column until one row remains nonzero there
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            piv = live[0]
            nxt = [piv]
            for r in live[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    dead.append(r)
            live = nxt
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        rows = dead
        col += 1
    return basis


def spans_full_lattice(m: ConfigurationMatrix) -> bool:
    basis = lattice_basis(m.columns)
    return len(basis) == m.d + 1 and all(abs(b[i]) == 1 for i, b in enumerate(basis))


def _column_deltas(m: ConfigurationMatrix):
    return [col[:-1] for col in m.columns]


def semigroup_member(u, m: ConfigurationMatrix, limits: Limits = DEFAULT_LIMITS):
    """Whether ``u`` is a nonnegative integer combination of the columns.

    Returns ``(True, column_indices)`` with a certificate multiset (sorted
    column indices, one per use), or ``(False, None)``.  Every column has last
    entry 1, so exactly ``u[-1]`` columns are used; the search keeps the set
    of partial sums reachable with ``t`` columns, discarding any that can no
    longer reach ``u`` because a column moves each coordinate by at most 1.
    """
    u = tuple(u)
    if len(u) != m.d + 1:
        raise ValueError(f"vector of length {len(u)}, expected {m.d + 1}")
    level = u[-1]
    if level < 0:
        return False, None
    if level > limits.semigroup_degree:
        raise ResourceLimitError(f"membership at degree {level} exceeds limit {limits.semigroup_degree}")
    target = u[:-1]
    deltas = _column_deltas(m)
    zero = tuple([0] * m.d)
    parents: list[dict] = [{zero: None}]
    for t in range(1, level + 1):
        slack = level - t
        layer: dict = {}
        for state in parents[-1]:
            for idx, delta in enumerate(deltas):
                nxt = tuple(a + b for a, b in zip(state, delta))
                if nxt in layer:
                    continue
                if all(abs(x - y) <= slack for x, y in zip(nxt, target)):
                    layer[nxt] = (state, idx)
        parents.append(layer)
        if not layer:
            return False, None
    if target not in parents[-1]:
        return False, None
    cert = []
    state = target
    for t in range(level, 0, -1):
        prev, idx = parents[t][state]
        cert.append(idx)
        state = prev
    return True, tuple(sorted(cert))


def odd_cycle_witness(g: Graph, limits: Limits = DEFAULT_LIMITS) -> WitnessVector:
    """Lattice point of the cone over Q(G)^v that is not in the semigroup.

    For an odd cycle ``c_1 .. c_{2k+1}`` the vector
    ``u = sum e_{c_i} + (k + 1) e_{d+1}`` is half the sum of the origin
    column and the ``2k + 1`` cycle edge columns, yet no ``k + 1`` columns
    add up to it.
    """
    bip, cycle = is_bipartite(g)
    if bip:
        raise ValueError("graph is bipartite; no odd cycle witness exists")
    d = g.d
    k = (len(cycle) - 1) // 2
    u = [0] * (d + 1)
    for v in cycle:
        u[v - 1] = 1
    u[d] = k + 1
    u = tuple(u)

    half_cols = [tuple([0] * d + [1])]
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        col = [0] * (d + 1)
        col[a - 1] = col[b - 1] = 1
        col[d] = 1
        half_cols.append(tuple(col))
    twice = tuple(sum(col[i] for col in half_cols) for i in range(d + 1))
    halves = twice == tuple(2 * x for x in u)

    matrix = config_matrix(g)
    cols = set(matrix.columns)
    if not all(c in cols for c in half_cols):
        raise AssertionError("cycle edge columns missing from the configuration matrix")
    member, _ = semigroup_member(u, matrix, limits)
    if member:
        raise AssertionError(f"witness {u} is in the semigroup; the polar of Q(G) would be normal here")
    return WitnessVector(u, tuple(cycle), k, member, tuple(half_cols), halves)


def polar_lattice_points(g: Graph, k: int, limits: Limits = DEFAULT_LIMITS) -> list[tuple]:
    """Integer points of ``k Q(G)^v``: ``<x, v> <= k`` for every vertex ``v`` of Q(G)."""
    d = g.d
    if (2 * k + 1) ** d > limits.normality_box:
        raise ResourceLimitError(f"box [-{k},{k}]^{d} exceeds {limits.normality_box} points")
    verts = [v.doubled for v in q_vertices(g, limits)]
    out = []
    for x in product(range(-k, k + 1), repeat=d):
        if all(sum(a * b for a, b in zip(x, v)) <= 2 * k for v in verts):
            out.append(x)
    return out


def normality_check_up_to(g: Graph, max_degree: int, limits: Limits = DEFAULT_LIMITS) -> dict:
    """Check that every lattice point of ``k Q(G)^v``, ``k <= max_degree``, is a sum of ``k`` columns."""
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    matrix = config_matrix(g)
    deltas = _column_deltas(matrix)
    reachable = {tuple([0] * g.d)}
    violations = []
    for k in range(1, max_degree + 1):
        reachable = {tuple(a + b for a, b in zip(s, delta)) for s in reachable for delta in deltas}
        for x in polar_lattice_points(g, k, limits):
            if x not in reachable:
                violations.append(x + (k,))
        if violations:
            break
    checked = k if violations else max_degree
    return {
        "checked_up_to": checked,
        "violations": violations,
        "normal_up_to_degree": not violations,
        "summary": (
            f"first violation at degree {violations[0][-1]}: {violations[0]}" if violations
            else f"no violation up to degree {max_degree} (full normality not decided)"
        ),
    }


def determinant(matrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def tu_violation(matrix, limits: Limits = DEFAULT_LIMITS):
    """First square submatrix (rows, cols, det) with determinant outside {-1, 0, 1}, or ``None``."""
    rows = [list(r) for r in matrix]
    if not rows:
        return None
    nr, nc = len(rows), len(rows[0])
    if min(nr, nc) > limits.tu_rank:
        raise ResourceLimitError(f"exhaustive minors of a {nr}x{nc} matrix exceed rank budget {limits.tu_rank}")
    for size in range(1, min(nr, nc) + 1):
        for rs in combinations(range(nr), size):
            for cs in combinations(range(nc), size):
                det = determinant([[rows[r][c] for c in cs] for r in rs])
                if det not in (-1, 0, 1):
                    return rs, cs, det
    return None


def is_totally_unimodular(matrix, limits: Limits = DEFAULT_LIMITS) -> bool:
    return tu_violation(matrix, limits) is None


def incidence_matrix(g: Graph) -> list[list[int]]:
    """Vertex-edge incidence matrix, edges in lexicographic order."""
    edges = g.sorted_edges()
    return [[int(v in e) for e in edges] for v in g.vertices]


def incidence_with_negative_identity(g: Graph) -> list[list[int]]:
    """``[A_G | -E_d]``, the configuration matrix without its origin column and last row."""
    inc = incidence_matrix(g)
    return [row + [-int(i == j) for j in range(g.d)] for i, row in enumerate(inc)]


def gorenstein_fano_check(g: Graph, limits: Limits = DEFAULT_LIMITS) -> dict:
    lattice = is_lattice_polytope(q_vertices(g, limits))
    interior = interior_lattice_points(q_polytope(g))
    fano = interior == [tuple([0] * g.d)]
    dual = q_dual_vertices(g)
    dual_lattice = all(isinstance(c, int) for v in dual for c in v) and len(set(dual)) == len(g.edges) + g.d
    return {
        "lattice": lattice,
        "fano": fano,
        "dual_lattice": dual_lattice,
        "gorenstein_fano": lattice and fano and dual_lattice,
    }


def rational_half_combination(w: WitnessVector) -> tuple:
    """``u`` recomputed as ``sum(col) / 2`` over the witness columns, as Fractions."""
    n = len(w.u)
    return tuple(sum(Fraction(col[i], 2) for col in w.half_columns) for i in range(n))
