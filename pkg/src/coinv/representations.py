"""Closed-form multiplicities, Frobenius images and graded generating functions.

The multiplicity of an irreducible in the refined component indexed by rho
counts (r-)standard tableaux whose descent set lies between the descents of
rho in [n-k+1, n] and all descents of rho (and, for r > 1, whose colors match
rho mod r).  Components vanish unless rho is the exponent partition of a
descent monomial.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .combinatorics import (
    Partition,
    QPolynomial,
    classify_partition,
    pad,
    partition_descents,
    partitions,
    partitions_in_box,
    q_binomial,
    r_partitions,
    strip,
)
from .symfunc import (
    SchurExpansion,
    homogeneous_sym,
    ribbon_schur_sym,
    schur_expand,
)
from .tableaux import (
    count_syt_descents_between,
    enumerate_r_syt,
    enumerate_syt,
    r_tableau_stats,
    syt_descents,
)

RPartition = tuple[Partition, ...]


def _normalize_rho(rho: Sequence[int], n: int) -> Partition | None:
    """rho padded to n parts, or None when it has more than n nonzero parts."""
    trimmed = strip(rho)
    if len(trimmed) > n:
        return None
    return pad(trimmed, n)


def component_vanishes(n: int, k: int, rho: Sequence[int], r: int = 1) -> bool:
    padded = _normalize_rho(rho, n)
    if padded is None:
        return True
    return not classify_partition(padded, n, k, r).is_exponent_of_descent_monomial


def descent_window(n: int, k: int, rho: Sequence[int], r: int = 1) -> tuple[frozenset[int], frozenset[int]]:
    """(required descents, allowed descents) for tableaux counted at rho."""
    padded = pad(strip(rho), n)
    return partition_descents(padded, r, n - k + 1, n), partition_descents(padded, r)


def multiplicity_rnk(n: int, k: int, rho: Sequence[int], la: Sequence[int]) -> int:
    if sum(la) != n:
        raise ValueError(f"shape {tuple(la)} is not a partition of {n}")
    if component_vanishes(n, k, rho):
        return 0
    lo, hi = descent_window(n, k, rho)
    return count_syt_descents_between(la, lo, hi)


@lru_cache(maxsize=None)
def _r_tableau_profile(la_bar: RPartition) -> Counter:
    """Multiset of (descent set, color vector) over SYT(la_bar)."""
    return Counter((st.des, st.c) for st in map(r_tableau_stats, enumerate_r_syt(la_bar)))


def multiplicity_snk(n: int, k: int, r: int, rho: Sequence[int], la_bar: Sequence[Sequence[int]]) -> int:
    la_bar = tuple(strip(c) for c in la_bar)
    if len(la_bar) != r:
        raise ValueError(f"expected an r-partition with {r} components")
    if sum(map(sum, la_bar)) != n:
        raise ValueError(f"r-partition {la_bar} does not have size {n}")
    if component_vanishes(n, k, rho, r):
        return 0
    padded = pad(strip(rho), n)
    lo, hi = descent_window(n, k, padded, r)
    colors = tuple(part % r for part in padded)
    return sum(count for (des, c), count in _r_tableau_profile(la_bar).items()
               if c == colors and lo <= des <= hi)


def frob_rnk_rho(n: int, k: int, rho: Sequence[int]) -> SchurExpansion:
    if component_vanishes(n, k, rho):
        return SchurExpansion()
    return SchurExpansion({la: multiplicity_rnk(n, k, rho, la) for la in partitions(n)})


def frob_snk_rho(n: int, k: int, r: int, rho: Sequence[int]) -> SchurExpansion:
    if component_vanishes(n, k, rho, r):
        return SchurExpansion()
    return SchurExpansion({la_bar: multiplicity_snk(n, k, r, rho, la_bar) for la_bar in r_partitions(n, r)})


class RibbonData(NamedTuple):
    gaps: tuple[int, ...]
    p: int
    rows: tuple[int, ...]


def ribbon_data(n: int, k: int, rho: Sequence[int]) -> RibbonData:
    """Gaps between consecutive descents of rho, the number p of descents
    below n-k+1, and the ribbon rows listed top to bottom (zero rows dropped)."""
    padded = pad(strip(rho), n)
    des = sorted(partition_descents(padded))
    gaps = tuple(b - a for a, b in zip([0] + des, des))
    p = sum(1 for s in des if s < n - k + 1)
    rows = (n - sum(gaps),) + tuple(reversed(gaps[p:]))
    return RibbonData(gaps, p, tuple(x for x in rows if x))


def frob_ribbon_product(n: int, k: int, rho: Sequence[int]) -> SchurExpansion:
    """Schur expansion of s_ribbon * prod h_{gap}, computed in n variables."""
    if component_vanishes(n, k, rho):
        return SchurExpansion()
    data = ribbon_data(n, k, rho)
    product = ribbon_schur_sym(data.rows, n)
    for gap in data.gaps[: data.p]:
        product = product * homogeneous_sym(gap, n)
    return schur_expand(product)


# ---------------------------------------------------------------------------
# exponent partitions and generating functions

def valid_rhos(n: int, k: int, r: int = 1) -> Iterator[Partition]:
    """All exponent partitions of (n,k,r)-descent monomials, padded to n parts."""
    for rho in partitions_in_box(n, r * k - 1):
        padded = pad(rho, n)
        if classify_partition(padded, n, k, r).is_exponent_of_descent_monomial:
            yield padded


def graded_mult_gf(n: int, k: int, la: Sequence[int]) -> QPolynomial:
    total = QPolynomial()
    for T in enumerate_syt(la):
        st = syt_descents(T)
        total = total + q_binomial(n - len(st.des) - 1, n - k).shift(st.maj)
    return total


def graded_mult_gf_wreath(n: int, k: int, r: int, la_bar: Sequence[Sequence[int]]) -> QPolynomial:
    total = QPolynomial()
    for T in enumerate_r_syt(la_bar):
        st = r_tableau_stats(T)
        total = total + q_binomial(n - len(st.des) - 1, n - k).substitute_power(r).shift(st.maj)
    return total


def grfrob(n: int, k: int, r: int = 1) -> SchurExpansion:
    if r == 1:
        return SchurExpansion({la: graded_mult_gf(n, k, la) for la in partitions(n)})
    return SchurExpansion({la_bar: graded_mult_gf_wreath(n, k, r, la_bar) for la_bar in r_partitions(n, r)})


def graded_mult_from_components(n: int, k: int, r: int, la) -> QPolynomial:
    """sum over rho of multiplicity * q^|rho|, straight from the component counts."""
    # la is a partition (r = 1 only) or an r-partition
    nested = bool(la) and isinstance(la[0], (tuple, list))
    if not nested and r != 1:
        raise ValueError("r > 1 needs an r-partition")
    total = QPolynomial()
    for rho in valid_rhos(n, k, r):
        m = multiplicity_snk(n, k, r, rho, la) if nested else multiplicity_rnk(n, k, rho, la)
        if m:
            total = total + QPolynomial.monomial(sum(rho), m)
    return total


class MultiplicityTable(NamedTuple):
    n: int
    k: int
    r: int
    rho: Partition
    entries: dict

    def nonzero(self) -> dict:
        return {la: v for la, v in self.entries.items() if v}

    def to_json(self) -> dict:
        def shape_json(la):
            return [list(c) for c in la] if self.r > 1 else list(la)
        return {
            "n": self.n, "k": self.k, "r": self.r, "rho": list(self.rho),
            "multiplicities": [{"shape": shape_json(la), "mult": v} for la, v in sorted(self.nonzero().items(), reverse=True)],
        }


def multiplicity_table(n: int, k: int, rho: Sequence[int], r: int = 1) -> MultiplicityTable:
    padded = _normalize_rho(rho, n)
    if padded is None:
        raise ValueError(f"rho {tuple(rho)} has more than {n} parts")
    if r == 1:
        entries = {la: multiplicity_rnk(n, k, padded, la) for la in partitions(n)}
    else:
        entries = {la_bar: multiplicity_snk(n, k, r, padded, la_bar) for la_bar in r_partitions(n, r)}
    return MultiplicityTable(n, k, r, padded, entries)
