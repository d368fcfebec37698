"""Standard, semistandard and standard r-tableaux, with RSK.

A tableau is a tuple of rows, each row a tuple of entries, in English
notation (first row on top).  An r-tableau is a tuple of r such tableaux;
component ``c`` holds the letters of color ``c``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple, Sequence

from .combinatorics import Partition, d_vector, strip

Tableau = tuple[tuple[int, ...], ...]
RTableau = tuple[Tableau, ...]

SYT_LIMIT = 12
RSYT_LIMIT = 10


class ResourceError(RuntimeError):
    """A desk-scale size guard was exceeded."""


def shape(T: Tableau) -> Partition:
    return tuple(len(row) for row in T)


def size(T: Tableau) -> int:
    return sum(len(row) for row in T)


def hook_length_count(la: Sequence[int]) -> int:
    la = strip(la)
    n = sum(la)
    conj = [sum(1 for part in la if part > j) for j in range(la[0])] if la else []
    hooks = 1
    for i, part in enumerate(la):
        for j in range(part):
            hooks *= (part - j - 1) + (conj[j] - i - 1) + 1
    return factorial(n) // hooks


# ---------------------------------------------------------------------------
# standard tableaux

def _corners(la: list[int]) -> Iterator[int]:
    for i, part in enumerate(la):
        if part and (i + 1 == len(la) or la[i + 1] < part):
            yield i


def enumerate_syt(la: Sequence[int], limit: int | None = SYT_LIMIT) -> list[Tableau]:
    """All standard tableaux of shape ``la``.

    Built by placing n, n-1, ..., 1 into removable corners, top corner
    first, so the order is deterministic.
    """
    la = strip(la)
    n = sum(la)
    if limit is not None and n > limit:
        raise ResourceError(f"SYT enumeration capped at n <= {limit}, got {n}")
    return list(_syt_cached(la))


@lru_cache(maxsize=None)
def _syt_cached(la: Partition) -> tuple[Tableau, ...]:
    n = sum(la)
    if n == 0:
        return ((),)
    out = []
    current = list(la)
    for i in _corners(current):
        smaller = current[:]
        smaller[i] -= 1
        for sub in _syt_cached(strip(smaller)):
            rows = [list(row) for row in sub]
            if i == len(rows):
                rows.append([])
            rows[i].append(n)
            out.append(tuple(tuple(row) for row in rows))
    return tuple(out)


def positions(T: Tableau) -> dict[int, tuple[int, int]]:
    return {entry: (i, j) for i, row in enumerate(T) for j, entry in enumerate(row)}


class TableauStats(NamedTuple):
    des: frozenset[int]
    maj: int
    d: tuple[int, ...]


def syt_descents(T: Tableau) -> TableauStats:
    where = positions(T)
    n = len(where)
    des = frozenset(i for i in range(1, n) if where[i + 1][0] > where[i][0])
    return TableauStats(des, sum(des), d_vector(des, n))


@lru_cache(maxsize=None)
def descent_set_counts(la: Partition) -> Counter:
    """Multiset of descent sets over SYT(la)."""
    return Counter(syt_descents(T).des for T in _syt_cached(strip(la)))


def count_syt_descents_between(la: Sequence[int], lo: Iterable[int], hi: Iterable[int]) -> int:
    """Number of SYT of shape ``la`` whose descent set D satisfies lo <= D <= hi."""
    lo, hi = frozenset(lo), frozenset(hi)
    if not lo <= hi:
        raise ValueError(f"lower descent bound {sorted(lo)} is not inside upper bound {sorted(hi)}")
    la = strip(la)
    if sum(la) > SYT_LIMIT:
        raise ResourceError(f"SYT enumeration capped at n <= {SYT_LIMIT}")
    return sum(c for des, c in descent_set_counts(la).items() if lo <= des <= hi)


# ---------------------------------------------------------------------------
# semistandard tableaux

def enumerate_ssyt(la: Sequence[int], m: int, limit: int | None = SYT_LIMIT) -> list[Tableau]:
    """All SSYT of shape ``la`` with entries in 1..m, row by row."""
    la = strip(la)
    if limit is not None and sum(la) > limit:
        raise ResourceError(f"SSYT enumeration capped at {limit} boxes")
    if len(la) > m:
        return []
    out: list[Tableau] = []

    def rows_above(prev: tuple[int, ...] | None, length: int, floor_row: int) -> Iterator[tuple[int, ...]]:
        # weakly increasing row, strictly larger than the entry above
        def rec(j, lowest):
            if j == length:
                yield ()
                return
            start = lowest
            if prev is not None:
                start = max(start, prev[j] + 1)
            # row i needs entries >= i+1 to leave room for columns below
            start = max(start, floor_row + 1)
            for v in range(start, m + 1):
                for rest in rec(j + 1, v):
                    yield (v,) + rest
        yield from rec(0, 1)

    def fill(i, acc):
        if i == len(la):
            out.append(tuple(acc))
            return
        prev = acc[-1] if acc else None
        for row in rows_above(prev, la[i], i):
            fill(i + 1, acc + [row])

    fill(0, [])
    return out


def weight(T: Tableau, m: int | None = None) -> tuple[int, ...]:
    entries = [e for row in T for e in row]
    top = m if m is not None else max(entries, default=0)
    counts = Counter(entries)
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


# ---------------------------------------------------------------------------
# RSK

def _insert(P: list[list[int]], x: int) -> int:
    """Row-insert x into P in place; return the index of the row that grew."""
    for i, row in enumerate(P):
        # bump the leftmost entry strictly greater than x
        for j, y in enumerate(row):
            if y > x:
                row[j], x = x, y
                break
        else:
            row.append(x)
            return i
    P.append([x])
    return len(P) - 1


def rsk(word: Sequence[int]) -> tuple[Tableau, Tableau]:
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        i = _insert(P, x)
        if i == len(Q):
            Q.append([])
        Q[i].append(step)
    freeze = lambda rows: tuple(tuple(r) for r in rows)
    return freeze(P), freeze(Q)


def rsk_inverse(P: Tableau, Q: Tableau) -> tuple[int, ...]:
    if shape(P) != shape(Q):
        raise ValueError(f"shape mismatch: {shape(P)} vs {shape(Q)}")
    P_rows = [list(row) for row in P]
    where = positions(Q)
    word = []
    for step in range(size(Q), 0, -1):
        i, j = where[step]
        if j != len(P_rows[i]) - 1:
            raise ValueError("Q is not a standard tableau of the same shape")
        x = P_rows[i].pop()
        for row in reversed(P_rows[:i]):
            # the rightmost entry strictly smaller than x is bumped back out
            pos = max(jj for jj, y in enumerate(row) if y < x)
            row[pos], x = x, row[pos]
        word.append(x)
        while P_rows and not P_rows[-1]:
            P_rows.pop()
    return tuple(reversed(word))


def word_descents(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


# ---------------------------------------------------------------------------
# standard r-tableaux

def enumerate_r_syt(la_bar: Sequence[Sequence[int]], limit: int | None = RSYT_LIMIT) -> list[RTableau]:
    """All standard r-tableaux whose component c has shape la_bar[c]."""
    comps = [strip(c) for c in la_bar]
    sizes = [sum(c) for c in comps]
    n = sum(sizes)
    if limit is not None and n > limit:
        raise ResourceError(f"r-SYT enumeration capped at n <= {limit}, got {n}")
    out: list[RTableau] = []

    def split(letters, c, acc):
        if c == len(comps):
            out.append(tuple(acc))
            return
        for chosen in combinations(letters, sizes[c]):
            rest = [x for x in letters if x not in chosen]
            for T in _syt_cached(comps[c]):
                relabeled = tuple(tuple(chosen[e - 1] for e in row) for row in T)
                split(rest, c + 1, acc + [relabeled])

    split(list(range(1, n + 1)), 0, [])
    return out


def count_r_syt(la_bar: Sequence[Sequence[int]]) -> int:
    sizes = [sum(c) for c in la_bar]
    multinomial = factorial(sum(sizes)) // prod(factorial(s) for s in sizes)
    return multinomial * prod(hook_length_count(c) for c in la_bar)


class RTableauStats(NamedTuple):
    des: frozenset[int]
    c: tuple[int, ...]
    f: tuple[int, ...]
    maj: int


def r_tableau_stats(T: RTableau) -> RTableauStats:
    r = len(T)
    where = {}
    for color, comp in enumerate(T):
        for e, (i, j) in positions(comp).items():
            where[e] = (color, i)
    n = len(where)
    des = frozenset(
        i for i in range(1, n)
        if where[i + 1][0] > where[i][0]
        or (where[i + 1][0] == where[i][0] and where[i + 1][1] > where[i][1]))
    c = tuple(where[i][0] for i in range(1, n + 1))
    f = tuple(r * di + ci for di, ci in zip(d_vector(des, n), c))
    return RTableauStats(des, c, f, sum(f))
