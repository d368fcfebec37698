"""Partitions, permutations, r-colored permutations and q-binomials.

Partitions are plain tuples of non-negative integers, largest part first.
Trailing zeros are allowed and meaningful whenever a partition stands for the
sorted exponent vector of a monomial in ``n`` variables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
RPartition = tuple[Partition, ...]


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


# ---------------------------------------------------------------------------
# partitions

def strip(parts: Sequence[int]) -> Partition:
    """Drop trailing zeros."""
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


def pad(parts: Sequence[int], n: int) -> Partition:
    """Zero-pad ``parts`` to length ``n``; raises if it has more than ``n`` nonzero parts."""
    parts = strip(parts)
    if len(parts) > n:
        raise ValueError(f"{parts} has more than {n} nonzero parts")
    return parts + (0,) * (n - len(parts))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def conjugate(la: Sequence[int]) -> Partition:
    la = strip(la)
    if not la:
        return ()
    return tuple(sum(1 for part in la if part >= j) for j in range(1, la[0] + 1))


def dominance_compare(la: Sequence[int], mu: Sequence[int]) -> Comparison:
    if sum(la) != sum(mu):
        raise ValueError(f"cannot compare partitions of different sizes: {tuple(la)} vs {tuple(mu)}")
    length = max(len(la), len(mu))
    a = list(la) + [0] * (length - len(la))
    b = list(mu) + [0] * (length - len(mu))
    below = above = False
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            below = True
        elif sa > sb:
            above = True
    if below and above:
        return Comparison.INCOMPARABLE
    if below:
        return Comparison.LESS
    if above:
        return Comparison.GREATER
    return Comparison.EQUAL


def dominated_by(la: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff la is weakly dominated by mu (same size assumed)."""
    return dominance_compare(la, mu) in (Comparison.LESS, Comparison.EQUAL)


def partitions(total: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of ``total`` in reverse lexicographic order."""
    if max_part is None:
        max_part = total
    if max_len is None:
        max_len = total

    def rec(remaining, largest, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for part in range(min(remaining, largest), 0, -1):
            if part * slots < remaining:
                break
            for rest in rec(remaining - part, part, slots - 1):
                yield (part,) + rest

    yield from rec(total, max_part, max_len)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``cols``, any size."""
    for total in range(rows * cols + 1):
        yield from partitions(total, cols, rows)


def r_partitions(total: int, r: int) -> Iterator[RPartition]:
    """All r-tuples of partitions with total size ``total``."""
    if r == 1:
        for la in partitions(total):
            yield (la,)
        return
    for first in range(total, -1, -1):
        for la in partitions(first):
            for rest in r_partitions(total - first, r - 1):
                yield (la,) + rest


def partition_descents(mu: Sequence[int], r: int = 1, lo: int = 1, hi: int | None = None) -> frozenset[int]:
    """Indices i in [lo, hi] with floor(mu_i / r) > floor(mu_{i+1} / r).

    The part after the last stored one is read as 0, so an index equal to
    ``len(mu)`` can be a descent.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if hi is None:
        hi = len(mu)
    if not 1 <= lo or hi > len(mu) or lo > hi + 1:
        raise ValueError(f"invalid descent range [{lo}, {hi}] for a partition of length {len(mu)}")
    padded = list(mu) + [0]
    return frozenset(i for i in range(lo, hi + 1) if padded[i - 1] // r > padded[i] // r)


class PartitionClass(NamedTuple):
    is_nk_partition: bool
    is_r_descent_partition: bool
    is_exponent_of_descent_monomial: bool


def _is_r_descent_sequence(parts: Sequence[int], r: int) -> bool:
    if not parts:
        return True
    gaps_ok = all(parts[i] - parts[i + 1] <= r for i in range(len(parts) - 1))
    return gaps_ok and parts[-1] < r


def classify_partition(rho: Sequence[int], n: int, k: int, r: int = 1) -> PartitionClass:
    """Which of the (n,k,r) partition classes ``rho`` belongs to.

    The exponent-of-descent-monomial test is: at most n parts, all < r*k, and
    the last k parts (after padding to n) form an r-descent partition.
    """
    if r < 1 or not 1 <= k <= n:
        raise ValueError("need r >= 1 and 1 <= k <= n")
    if not is_partition(rho):
        raise ValueError(f"{tuple(rho)} is not a partition")
    trimmed = strip(rho)
    if len(trimmed) > n:
        return PartitionClass(False, False, False)
    padded = pad(trimmed, n)
    nk = all(part < r * k for part in padded)
    r_descent = _is_r_descent_sequence(padded, r)
    exponent = nk and _is_r_descent_sequence(padded[n - k:], r)
    return PartitionClass(nk, r_descent, exponent)


def descent_partition_from_set(S: Iterable[int], n: int) -> Partition:
    S = frozenset(S)
    if any(not 1 <= s <= n - 1 for s in S):
        raise ValueError(f"descent set {sorted(S)} not inside 1..{n - 1}")
    return tuple(sum(1 for s in S if s >= i) for i in range(1, n + 1))


def restrict(S: Iterable[int], lo: int, hi: int) -> frozenset[int]:
    return frozenset(s for s in S if lo <= s <= hi)


# ---------------------------------------------------------------------------
# permutations

class PermStats(NamedTuple):
    des: frozenset[int]
    des_count: int
    d: tuple[int, ...]
    inv: int


def check_permutation(word: Sequence[int]) -> tuple[int, ...]:
    word = tuple(word)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
    return word


def inversions(word: Sequence[int]) -> int:
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def d_vector(des: Iterable[int], n: int) -> tuple[int, ...]:
    """d_i = number of descents that are >= i, for i = 1..n."""
    des = frozenset(des)
    return tuple(sum(1 for s in des if s >= i) for i in range(1, n + 1))


def perm_descents(sigma: Sequence[int]) -> PermStats:
    sigma = check_permutation(sigma)
    n = len(sigma)
    des = frozenset(i for i in range(1, n) if sigma[i - 1] > sigma[i])
    return PermStats(des, len(des), d_vector(des, n), inversions(sigma))


def permutations_with_descent_set(n: int, des: Iterable[int]) -> Iterator[tuple[int, ...]]:
    from itertools import permutations as _perms
    des = frozenset(des)
    for word in _perms(range(1, n + 1)):
        if frozenset(i for i in range(1, n) if word[i - 1] > word[i]) == des:
            yield word


@dataclass(frozen=True, order=True)
class ColoredPermutation:
    """A permutation word pi_1 .. pi_n whose i-th letter carries color c_i in 0..r-1."""

    word: tuple[int, ...]
    colors: tuple[int, ...]
    r: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")
        object.__setattr__(self, "word", check_permutation(self.word))
        colors = tuple(c % self.r for c in self.colors)
        if len(colors) != len(self.word):
            raise ValueError("word and colors must have the same length")
        object.__setattr__(self, "colors", colors)

    @classmethod
    def uncolored(cls, word: Sequence[int]) -> ColoredPermutation:
        return cls(tuple(word), (0,) * len(word), 1)

    @property
    def n(self) -> int:
        return len(self.word)

    def __str__(self):
        return " ".join(f"{p}^{c}" for p, c in zip(self.word, self.colors))

    def to_json(self) -> dict:
        return {"word": list(self.word), "colors": list(self.colors), "r": self.r}

    @classmethod
    def from_json(cls, data: dict) -> ColoredPermutation:
        return cls(tuple(data["word"]), tuple(data["colors"]), int(data["r"]))


class ColoredStats(NamedTuple):
    des: frozenset[int]
    d: tuple[int, ...]
    f: tuple[int, ...]


def colored_descents(g: ColoredPermutation) -> ColoredStats:
    w, c, n = g.word, g.colors, g.n
    des = frozenset(
        i for i in range(1, n)
        if c[i - 1] < c[i] or (c[i - 1] == c[i] and w[i - 1] > w[i]))
    d = d_vector(des, n)
    f = tuple(g.r * di + ci for di, ci in zip(d, c))
    return ColoredStats(des, d, f)


def colored_permutations(n: int, r: int) -> Iterator[ColoredPermutation]:
    from itertools import permutations as _perms, product
    for word in _perms(range(1, n + 1)):
        for colors in product(range(r), repeat=n):
            yield ColoredPermutation(word, colors, r)


# ---------------------------------------------------------------------------
# q-polynomials

class QPolynomial:
    """Integer polynomial in q, stored lowest power first with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> QPolynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @classmethod
    def from_powers(cls, powers: Iterable[int]) -> QPolynomial:
        counts: dict[int, int] = {}
        for p in powers:
            counts[p] = counts.get(p, 0) + 1
        if not counts:
            return cls()
        return cls(counts.get(i, 0) for i in range(max(counts) + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def _coerce(self, other) -> QPolynomial:
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, q):
        value = 0
        for c in reversed(self.coeffs):
            value = value * q + c
        return value

    def substitute_power(self, r: int) -> QPolynomial:
        """q -> q^r."""
        if not self.coeffs:
            return QPolynomial()
        out = [0] * (r * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[r * i] = c
        return QPolynomial(out)

    def shift(self, power: int) -> QPolynomial:
        """Multiply by q^power."""
        return QPolynomial([0] * power + list(self.coeffs)) if self.coeffs else QPolynomial()

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms).replace("+ -", "- ")


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> QPolynomial:
    """Gaussian binomial [a choose b]_q; zero when b is outside 0..a."""
    if b < 0 or a < 0 or b > a:
        return QPolynomial()
    if b == 0 or b == a:
        return QPolynomial([1])
    # [a, b] = [a-1, b-1] + q^b [a-1, b]
    return q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shift(b)


def format_partition(la: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in la) + ")"


def format_rpartition(la_bar: Sequence[Sequence[int]]) -> str:
    return "(" + ",".join(format_partition(strip(c)) for c in la_bar) + ")"
