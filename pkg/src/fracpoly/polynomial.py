"""Dense univariate polynomials with exact (int or Fraction) coefficients."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Polynomial:
    """``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are trimmed.

    The zero polynomial has no coefficients and degree ``-1`` (used as the
    minus-infinity sentinel; compare with ``is_zero`` rather than the value).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Polynomial(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        return Polynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return _normalize(acc) if isinstance(acc, Fraction) else acc

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``t**k``."""
        if self.is_zero:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def divide_by_t(self) -> "Polynomial":
        if self[0] != 0:
            raise ValueError("constant term is not zero")
        return Polynomial(self.coeffs[1:])

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return render(self)


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (list, tuple)):
        return Polynomial(x)
    return Polynomial([x])


def render(p: Polynomial, var: str = "t") -> str:
    """``1 + 4*t + 7*t^2``; negative terms are written with ``-``."""
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def interpolate(points: Sequence[tuple], degree: int | None = None) -> Polynomial:
    """Lagrange interpolation through ``(node, value)`` pairs, exactly.

    With ``degree`` given, exactly ``degree + 1`` points are required.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if degree is not None and len(pts) != degree + 1:
        raise ValueError(f"degree {degree} needs {degree + 1} points, got {len(pts)}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate interpolation nodes")
    result = Polynomial()
    for i, (xi, yi) in enumerate(pts):
        if yi == 0:
            continue
        basis = Polynomial([1])
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Polynomial([-xj, 1])
                denom *= xi - xj
        result = result + basis * (yi / denom)
    return result


def is_symmetric(p: Polynomial) -> bool:
    cs = p.coeffs
    return cs == cs[::-1]


def is_unimodal(p) -> bool:
    """Weakly increasing then weakly decreasing; plateaus allowed."""
    cs = list(p.coeffs if isinstance(p, Polynomial) else p)
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i + 1 >= len(cs)
