"""Ehrhart data of FRAC(G) and P(G) = 2 FRAC(G).

The series of FRAC(G) is written over ``(1 - t^2)^(d+1)``; its numerator
has degree ``2d - 1`` and interleaves the h*-vector of P(G).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .config import DEFAULT_LIMITS, Limits
from .counting import frac_counts
from .graph import Graph
from .polynomial import Polynomial, interpolate, is_symmetric, is_unimodal


@dataclass(frozen=True)
class DeltaVector:
    entries: tuple

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if not entries or entries[0] != 1:
            raise ValueError(f"delta vector must start with 1, got {entries}")
        if any(e < 0 for e in entries):
            raise ValueError(f"negative entry in delta vector {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def d(self) -> int:
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def polynomial(self) -> Polynomial:
        return Polynomial(self.entries)

    def __eq__(self, other):
        if isinstance(other, DeltaVector):
            return self.entries == other.entries
        if isinstance(other, (tuple, list)):
            return self.entries == tuple(other)
        if isinstance(other, Polynomial):
            return Polynomial(self.entries) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.entries)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Period-two quasi-polynomial: ``even(n)`` for even ``n``, ``odd(n)`` otherwise."""

    even: Polynomial
    odd: Polynomial

    def __call__(self, n: int):
        return self.even(n) if n % 2 == 0 else self.odd(n)

    @property
    def degree(self) -> int:
        return max(self.even.degree, self.odd.degree)


def delta_from_counts(counts, d: int, length: int | None = None) -> DeltaVector:
    """h*-vector of a lattice polytope of dimension ``d`` from ``i(P, 0), i(P, 1), ...``.

    ``delta_k = sum_j (-1)^j C(d+1, j) counts[k-j]``.  ``length`` defaults to
    ``d`` (the degree bound ``d - 1`` of P(G)).  Counts beyond ``length``
    are used as a consistency check: the corresponding coefficients must vanish.
    """
    length = d if length is None else length
    if len(counts) < length:
        raise ValueError(f"need at least {length} counts, got {len(counts)}")
    if counts[0] != 1:
        raise ValueError("i(P, 0) must be 1")
    coeffs = [
        sum((-1) ** j * comb(d + 1, j) * counts[k - j] for j in range(min(k, d + 1) + 1))
        for k in range(len(counts))
    ]
    head, tail = coeffs[:length], coeffs[length:]
    if any(c < 0 for c in head):
        raise ValueError(f"inconsistent counts: negative h* coefficient in {head}")
    if any(tail):
        raise ValueError(f"inconsistent counts: h* coefficients beyond degree {length - 1}: {tail}")
    return DeltaVector(tuple(head))


def p_counts(g: Graph, upto: int, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> list[int]:
    """``i(P(G), n)`` for ``n = 0..upto``; these are the even counts of FRAC(G)."""
    return frac_counts(g, 2 * upto, engine, limits)[::2]


def delta_of_p(g: Graph, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> DeltaVector:
    # one extra count checks that the degree really is d - 1
    return delta_from_counts(p_counts(g, g.d, engine, limits), g.d)


def quasi_polynomial(g: Graph, engine: str = "auto", limits: Limits = DEFAULT_LIMITS,
                     counts: list[int] | None = None) -> QuasiPolynomial:
    d = g.d
    if counts is None:
        counts = frac_counts(g, 2 * d + 1, engine, limits)
    even = interpolate([(n, counts[n]) for n in range(0, 2 * d + 1, 2)], d)
    odd = interpolate([(n, counts[n]) for n in range(1, 2 * d + 2, 2)], d)
    return QuasiPolynomial(even, odd)


def ehrhart_polynomial_p(g: Graph, engine: str = "auto", limits: Limits = DEFAULT_LIMITS) -> Polynomial:
    """``i(P(G), n)`` as a polynomial in ``n``, from the counts at ``n = 0..d``."""
    counts = p_counts(g, g.d, engine, limits)
    return interpolate(list(enumerate(counts)), g.d)


def series_numerator_from_counts(counts, d: int) -> Polynomial:
    """Coefficients of ``(1 - t^2)^(d+1) * sum_n counts[n] t^n`` up to ``len(counts) - 1``."""
    return Polynomial(
        sum((-1) ** k * comb(d + 1, k) * counts[j - 2 * k] for k in range(min(j // 2, d + 1) + 1))
        for j in range(len(counts))
    )


def series_numerator_direct(g: Graph, engine: str = "auto", limits: Limits = DEFAULT_LIMITS,
                            counts: list[int] | None = None) -> Polynomial:
    """Numerator of the FRAC(G) Ehrhart series from lattice-point counts.

    Counts up to ``2d + 1`` are used, so the two coefficients just past the
    expected degree ``2d - 1`` are checked to vanish.
    """
    d = g.d
    if counts is None:
        counts = frac_counts(g, 2 * d + 1, engine, limits)
    num = series_numerator_from_counts(counts[: 2 * d + 2], d)
    if num.degree != 2 * d - 1:
        raise ArithmeticError(f"numerator has degree {num.degree}, expected {2 * d - 1}")
    if any(c < 0 for c in num):
        raise ArithmeticError(f"negative numerator coefficient: {num.coeffs}")
    return num


def series_numerator_theorem(delta) -> Polynomial:
    """Interleave ``(d_0, d_{m-1}, d_1, d_{m-2}, ...)`` into a degree ``2m - 1`` polynomial."""
    entries = tuple(delta)
    m = len(entries)
    if m < 2:
        raise ValueError("delta vector of P(G) has length d >= 2")
    out = [0] * (2 * m)
    for i, c in enumerate(entries):
        out[2 * i] += c
        out[2 * (m - 1 - i) + 1] += c
    return Polynomial(out)


def eulerian_numbers(k: int) -> list[int]:
    """``A(k, 0..k-1)``; ``A_0 = [1]`` by convention."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    row = [1]
    for m in range(2, k + 1):
        prev = row
        row = [
            (i + 1) * (prev[i] if i < len(prev) else 0) + (m - i) * (prev[i - 1] if i >= 1 else 0)
            for i in range(m)
        ]
    return row


def eulerian_number(k: int, i: int) -> int:
    if k == 0:
        return int(i == 0)
    if not 0 <= i <= k - 1:
        return 0
    return eulerian_numbers(k)[i]


def eulerian(k: int) -> Polynomial:
    return Polynomial(eulerian_numbers(k))


def complete_graph_delta(d: int) -> DeltaVector:
    if d < 2:
        raise ValueError("complete graph needs d >= 2")
    return DeltaVector((1,) + tuple(eulerian_number(d, i) + d * eulerian_number(d - 1, i - 1) for i in range(1, d)))


def complete_graph_numerator(d: int) -> Polynomial:
    if d < 2:
        raise ValueError("complete graph needs d >= 2")
    b = [1] + [eulerian_number(d, i // 2) + d * eulerian_number(d - 1, (i - 1) // 2) for i in range(1, 2 * d)]
    return Polynomial(b)


def is_alternatingly_increasing(delta) -> bool:
    """``d_0 <= d_{m-1} <= d_1 <= d_{m-2} <= ...`` over the whole vector."""
    e = list(delta)
    m = len(e)
    chain = []
    lo, hi = 0, m - 1
    while lo <= hi:
        chain.append(e[lo])
        if hi != lo:
            chain.append(e[hi])
        lo += 1
        hi -= 1
    return all(a <= b for a, b in zip(chain, chain[1:]))


def reciprocity_values(g: Graph, k: int, qp: QuasiPolynomial | None = None,
                       ehr_p: Polynomial | None = None, engine: str = "auto",
                       limits: Limits = DEFAULT_LIMITS) -> tuple:
    """``(i_odd(2k+1), (-1)^d i_even(-2k-4), (-1)^d i(P, -k-2))`` as exact rationals."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    qp = qp or quasi_polynomial(g, engine, limits)
    ehr_p = ehr_p or ehrhart_polynomial_p(g, engine, limits)
    sign = (-1) ** g.d
    return (
        Fraction(qp.odd(2 * k + 1)),
        sign * Fraction(qp.even(-2 * k - 4)),
        sign * Fraction(ehr_p(-k - 2)),
    )


def reciprocity_check(g: Graph, k: int, **kw) -> bool:
    a, b, c = reciprocity_values(g, k, **kw)
    return a == b == c and a.denominator == 1


__all__ = [
    "DeltaVector", "QuasiPolynomial", "delta_from_counts", "p_counts", "delta_of_p",
    "quasi_polynomial", "ehrhart_polynomial_p", "series_numerator_from_counts",
    "series_numerator_direct", "series_numerator_theorem", "eulerian_numbers",
    "eulerian_number", "eulerian", "complete_graph_delta", "complete_graph_numerator",
    "is_alternatingly_increasing", "reciprocity_values", "reciprocity_check",
    "is_symmetric", "is_unimodal",
]
