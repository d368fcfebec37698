"""Character tables of S_n and of the wreath products Z_r wr S_n.

Both use the Murnaghan-Nakayama rule on beta-sets.  For the wreath product a
class is labelled by an r-tuple of partitions: a cycle of length l whose
colors sum to c (mod r) contributes a part l to component c.  Irreducibles are
labelled so that a single box in component j affords the character
x -> xi^c * x  |->  xi^(j*c), the convention under which x_1 spans the
component-1 irreducible when n = 1.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import NamedTuple, Sequence

from ..combinatorics import ColoredPermutation, Partition, partitions, r_partitions, strip
from .cyclotomic import Cyclotomic


def _beta_set(la: Partition, length: int) -> tuple[int, ...]:
    return tuple(la[i] + (length - 1 - i) if i < len(la) else length - 1 - i for i in range(length))


def _from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    L = len(b)
    return strip(tuple(b[i] - (L - 1 - i) for i in range(L)))


def rim_hooks(la: Partition, size: int) -> list[tuple[Partition, int]]:
    """(la minus a rim hook of the given size, leg length) for every such hook."""
    la = strip(la)
    L = len(la)
    beta = _beta_set(la, L)
    present = set(beta)
    out = []
    for b in beta:
        target = b - size
        if target < 0 or target in present:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = [x for x in beta if x != b] + [target]
        out.append((_from_beta(new_beta), height))
    return out


@lru_cache(maxsize=None)
def sn_character(la: Partition, mu: Partition) -> int:
    la, mu = strip(la), strip(mu)
    if sum(la) != sum(mu):
        raise ValueError("character arguments must have the same size")
    if not mu:
        return 1
    first, rest = mu[0], mu[1:]
    return sum((-1) ** ht * sn_character(smaller, rest) for smaller, ht in rim_hooks(la, first))


def _char_terms(la_bar: tuple[Partition, ...], mu_bar: tuple[Partition, ...], r: int) -> dict[int, int]:
    """Character value as {power of xi: integer coefficient}."""
    return dict(_char_terms_cached(la_bar, mu_bar, r))


@lru_cache(maxsize=None)
def _char_terms_cached(la_bar, mu_bar, r):
    for c, comp in enumerate(mu_bar):
        if comp:
            break
    else:
        return ((0, 1),)
    part = comp[0]
    rest = list(mu_bar)
    rest[c] = comp[1:]
    rest = tuple(rest)
    total: dict[int, int] = {}
    for j, lam in enumerate(la_bar):
        for smaller, ht in rim_hooks(lam, part):
            nxt = list(la_bar)
            nxt[j] = smaller
            for power, coeff in _char_terms_cached(tuple(nxt), rest, r):
                key = (power + j * c) % r
                total[key] = total.get(key, 0) + (-1) ** ht * coeff
    return tuple(sorted((k, v) for k, v in total.items() if v))


def wreath_character(la_bar: Sequence[Sequence[int]], mu_bar: Sequence[Sequence[int]], r: int) -> Cyclotomic:
    la_bar = tuple(strip(c) for c in la_bar)
    mu_bar = tuple(strip(c) for c in mu_bar)
    if len(la_bar) != r or len(mu_bar) != r:
        raise ValueError(f"labels must have exactly {r} components")
    if sum(map(sum, la_bar)) != sum(map(sum, mu_bar)):
        raise ValueError("character arguments must have the same size")
    value = Cyclotomic(r)
    for power, coeff in _char_terms(la_bar, mu_bar, r).items():
        value = value + Cyclotomic.power(r, power, coeff)
    return value


# ---------------------------------------------------------------------------
# classes

def z_factor(mu: Partition) -> int:
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return prod(part ** m * factorial(m) for part, m in counts.items())


class ConjugacyClass(NamedTuple):
    label: tuple[Partition, ...]
    size: int
    representative: ColoredPermutation


def group_order(n: int, r: int) -> int:
    return r ** n * factorial(n)


def class_representative(mu_bar: Sequence[Sequence[int]], r: int) -> ColoredPermutation:
    """One cycle per part on consecutive letters, color c on the cycle's smallest letter."""
    n = sum(map(sum, mu_bar))
    word = [0] * n
    colors = [0] * n
    start = 1
    for c, comp in enumerate(mu_bar):
        for part in comp:
            letters = list(range(start, start + part))
            for idx, a in enumerate(letters):
                word[a - 1] = letters[(idx + 1) % part]
            colors[letters[0] - 1] = c
            start += part
    return ColoredPermutation(tuple(word), tuple(colors), r)


def class_table(n: int, r: int) -> list[ConjugacyClass]:
    order = group_order(n, r)
    out = []
    for mu_bar in r_partitions(n, r):
        z = prod(z_factor(comp) * r ** len(comp) for comp in mu_bar)
        out.append(ConjugacyClass(mu_bar, order // z, class_representative(mu_bar, r)))
    return out


def class_label(g: ColoredPermutation) -> tuple[Partition, ...]:
    """Colored cycle type of g (word read as i -> word[i-1], colors on the letters i)."""
    n, r = g.n, g.r
    seen = [False] * (n + 1)
    comps: list[list[int]] = [[] for _ in range(r)]
    for i in range(1, n + 1):
        if seen[i]:
            continue
        length, color, j = 0, 0, i
        while not seen[j]:
            seen[j] = True
            length += 1
            color += g.colors[j - 1]
            j = g.word[j - 1]
        comps[color % r].append(length)
    return tuple(tuple(sorted(c, reverse=True)) for c in comps)


def irreducible_labels(n: int, r: int) -> list[tuple[Partition, ...]]:
    if r == 1:
        return [(la,) for la in partitions(n)]
    return list(r_partitions(n, r))


def character(la_bar, mu_bar, r: int) -> Cyclotomic:
    if r == 1:
        return Cyclotomic.rational(1, sn_character(strip(la_bar[0]), strip(mu_bar[0])))
    return wreath_character(la_bar, mu_bar, r)
