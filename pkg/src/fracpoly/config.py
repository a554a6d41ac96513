"""Resource limits and the exception types shared by every module."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


class ResourceLimitError(RuntimeError):
    """An enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class Limits:
    # 3^d labelings in vertex enumeration
    vertex_enum_d: int = 16
    # 2^d * d! signed words
    descent_d: int = 8
    # memo table size of the pruned lattice-point search
    dfs_states: int = 5_000_000
    # largest degree (last coordinate) accepted by semigroup membership
    semigroup_degree: int = 12
    # number of points in the (2k+1)^d box of the normality check
    normality_box: int = 2_000_000
    # exhaustive minors: min(rows, cols) must not exceed this
    tu_rank: int = 7
    # worker processes for the parallel search; 1 means in-process
    workers: int = 1

    def with_(self, **changes) -> "Limits":
        return replace(self, **changes)


def default_workers() -> int:
    raw = os.environ.get("FRACPOLY_THREADS")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(n, 1)


DEFAULT_LIMITS = Limits(workers=default_workers())
