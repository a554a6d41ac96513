"""Descent statistics on signed permutations and the subsets Pi(G).

Letters are ordered as integers (``... < -2 < -1 < 0 < 1 < 2 < ...``); a
descent is a position ``i < d`` with ``a_i > a_{i+1}`` or the last position
when ``a_d > 0``.

Pi(G) consists of the words in which, for every edge ``{i, j}`` and either
orientation, a letter ``+i`` is preceded by ``-j``.  Membership is a prefix
condition, so Pi(G) is generated by a pruned search; the descent
polynomial is computed by dynamic programming over the same search states.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .config import DEFAULT_LIMITS, Limits, ResourceLimitError
from .ehrhart import eulerian
from .graph import Graph
from .polynomial import Polynomial


@dataclass(frozen=True)
class SignedPermutation:
    word: tuple

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        if sorted(abs(a) for a in word) != list(range(1, len(word) + 1)) or 0 in word:
            raise ValueError(f"{word} is not a signed permutation word")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> "SignedPermutation":
        return cls(tuple(int(tok) for tok in text.replace(",", " ").split()))

    @property
    def d(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return " ".join(str(a) for a in self.word)


@dataclass(frozen=True)
class BlockStructure:
    """Run lengths ``(alpha_j, beta_j)`` of negative then positive letters.

    ``beta`` of the last block is 0 exactly when the word ends negatively.
    ``alpha`` of the first block is 0 for words starting positively, which
    never occur in Pi(G).
    """

    alphas: tuple
    betas: tuple

    def __post_init__(self):
        if len(self.alphas) != len(self.betas) or not self.alphas:
            raise ValueError("need one beta per alpha")
        bad_alpha = self.alphas[0] < 0 or any(a < 1 for a in self.alphas[1:])
        bad_beta = any(b < 1 for b in self.betas[:-1]) or self.betas[-1] < 0
        if bad_alpha or bad_beta:
            raise ValueError(f"bad block lengths {self.alphas}, {self.betas}")

    @property
    def gamma(self) -> int:
        return len(self.alphas)

    @property
    def ends_negative(self) -> bool:
        return self.betas[-1] == 0


def _word(pi):
    return pi.word if isinstance(pi, SignedPermutation) else tuple(pi)


def descent_count(pi) -> int:
    w = _word(pi)
    des = sum(1 for a, b in zip(w, w[1:]) if a > b)
    return des + (1 if w and w[-1] > 0 else 0)


def in_pi(pi, g: Graph) -> bool:
    w = _word(pi)
    where = {a: k for k, a in enumerate(w)}
    for i, j in g.edges:
        for p, q in ((i, j), (j, i)):
            if p in where and where.get(-q, len(w)) > where[p]:
                return False
    return True


def signed_permutations(d: int):
    """All of B_d, lexicographic over (permutation, sign mask).

    Bit ``k`` of the sign mask negates position ``k``; masks run in
    increasing order.
    """
    for perm in permutations(range(1, d + 1)):
        for signs in product((1, -1), repeat=d):
            yield tuple(s * a for s, a in zip(reversed(signs), perm))


def _check_budget(g: Graph, limits: Limits):
    if g.d > limits.descent_d:
        raise ResourceLimitError(
            f"signed-permutation enumeration for d={g.d} exceeds limit d <= {limits.descent_d}"
        )


def pi_members(g: Graph, limits: Limits = DEFAULT_LIMITS):
    """Words of Pi(G) in lexicographic order of the signed word."""
    _check_budget(g, limits)
    d = g.d
    nbr_mask = _neighbour_masks(g)
    letters = [-a for a in range(d, 0, -1)] + list(range(1, d + 1))
    word: list[int] = []

    def rec(used, neg):
        if len(word) == d:
            yield tuple(word)
            return
        for a in letters:
            v = abs(a)
            bit = 1 << (v - 1)
            if used & bit:
                continue
            if a > 0 and nbr_mask[v] & ~neg:
                continue
            word.append(a)
            yield from rec(used | bit, neg | bit if a < 0 else neg)
            word.pop()

    yield from rec(0, 0)


def _neighbour_masks(g: Graph):
    masks = [0] * (g.d + 1)
    for i, j in g.edges:
        masks[i] |= 1 << (j - 1)
        masks[j] |= 1 << (i - 1)
    return masks


def split_polynomials(g: Graph, limits: Limits = DEFAULT_LIMITS) -> tuple[Polynomial, Polynomial]:
    """``(D(Pi_-, t), D(Pi_+, t))``: words of Pi(G) ending negatively / positively.

    State of the search: which letters are used, which of them are
    negative, and the last letter.  The completion polynomial of a state
    only depends on that triple.
    """
    _check_budget(g, limits)
    d = g.d
    full = (1 << d) - 1
    nbr_mask = _neighbour_masks(g)
    letters = [-a for a in range(d, 0, -1)] + list(range(1, d + 1))

    @lru_cache(maxsize=None)
    def completions(used, neg, last):
        if used == full:
            final = [0, 1] if last > 0 else [1]
            return (tuple(final), ()) if last < 0 else ((), tuple(final))
        acc_minus: list[int] = []
        acc_plus: list[int] = []
        for a in letters:
            v = abs(a)
            bit = 1 << (v - 1)
            if used & bit:
                continue
            if a > 0 and nbr_mask[v] & ~neg:
                continue
            step = 1 if last > a else 0
            minus, plus = completions(used | bit, neg | bit if a < 0 else neg, a)
            _accumulate(acc_minus, minus, step)
            _accumulate(acc_plus, plus, step)
        return tuple(acc_minus), tuple(acc_plus)

    acc_minus: list[int] = []
    acc_plus: list[int] = []
    for a in letters:
        if a > 0 and nbr_mask[a]:
            continue
        bit = 1 << (abs(a) - 1)
        minus, plus = completions(bit, bit if a < 0 else 0, a)
        _accumulate(acc_minus, minus, 0)
        _accumulate(acc_plus, plus, 0)
    completions.cache_clear()
    return Polynomial(acc_minus), Polynomial(acc_plus)


def _accumulate(acc: list, coeffs, shift: int):
    need = len(coeffs) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for k, c in enumerate(coeffs):
        acc[k + shift] += c


def descent_polynomial_pi(g: Graph, limits: Limits = DEFAULT_LIMITS) -> Polynomial:
    minus, plus = split_polynomials(g, limits)
    return minus + plus


def descent_polynomial(words) -> Polynomial:
    acc: list[int] = []
    for w in words:
        _accumulate(acc, (1,), descent_count(w))
    return Polynomial(acc)


def block_structure(pi) -> BlockStructure:
    w = _word(pi)
    if not w:
        raise ValueError("empty word")
    runs = []
    for a in w:
        sign = a < 0
        if runs and runs[-1][0] == sign:
            runs[-1][1] += 1
        else:
            runs.append([sign, 1])
    if not runs[0][0]:
        # a word starting positively has an empty first negative run
        runs.insert(0, [True, 0])
    if runs[-1][0]:
        runs.append([False, 0])
    alphas = tuple(r[1] for r in runs[0::2])
    betas = tuple(r[1] for r in runs[1::2])
    return BlockStructure(alphas, betas)


def class_polynomial(bs: BlockStructure) -> Polynomial:
    """Descent polynomial of all words obtained by permuting letters within each run."""
    poly = Polynomial([1])
    for a, b in zip(bs.alphas, bs.betas):
        poly = poly * eulerian(a)
        if b:
            poly = poly * eulerian(b)
    gamma = bs.gamma
    return poly.shift(gamma - 1 if bs.ends_negative else gamma)


def block_class(pi) -> list[tuple]:
    """All words obtained from ``pi`` by permuting letters inside each sign run."""
    w = _word(pi)
    runs: list[list[int]] = []
    for a in w:
        if runs and (runs[-1][0] < 0) == (a < 0):
            runs[-1].append(a)
        else:
            runs.append([a])
    out = [()]
    for run in runs:
        out = [prefix + p for prefix in out for p in permutations(run)]
    return out
