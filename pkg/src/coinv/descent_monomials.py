"""Descent monomials and the straightening algorithm.

Monomials are exponent tuples ``(a_1, ..., a_n)``.  Everything is written once
for general ``r``; ``r = 1`` is the uncolored case, where the index colored
permutation has all colors 0 and b_{g,I} is the Garsia-Stanton style monomial
gs_{pi,I}.

Straightening rewrites a monomial with exponents < r*k as an integer
combination of products b_{g,I} * e_nu(x_1^r, ..., x_n^r).  Each step peels
off the product whose leading monomial is the current monomial; that leading
term always has coefficient 1, so the arithmetic never leaves the integers.
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .combinatorics import (
    ColoredPermutation,
    Comparison,
    Partition,
    colored_descents,
    colored_permutations,
    conjugate,
    dominance_compare,
    inversions,
    pad,
    partition_descents,
    partitions_in_box,
)

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# parsing and printing

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse "x1^3*x4" (or "1") into an exponent tuple of length n."""
    exps = [0] * n
    text = text.strip()
    if text in ("", "1"):
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        exps[i - 1] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Sequence[int]) -> str:
    factors = [f"x{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(m) if e]
    return "*".join(factors) if factors else "1"


# ---------------------------------------------------------------------------
# statistics of a monomial

def index_permutation(m: Sequence[int]) -> tuple[int, ...]:
    """Variables listed by decreasing exponent, ties by smaller index first."""
    return tuple(i + 1 for i in sorted(range(len(m)), key=lambda i: (-m[i], i)))


def index_colored_permutation(m: Sequence[int], r: int = 1) -> ColoredPermutation:
    word = index_permutation(m)
    return ColoredPermutation(word, tuple(m[p - 1] % r for p in word), r)


def exponent_partition(m: Sequence[int]) -> Partition:
    return tuple(sorted(m, reverse=True))


def complementary_vector(m: Sequence[int], r: int = 1) -> tuple[int, ...]:
    """(a_{pi_l} - f_l(g)) / r along the index colored permutation g of m."""
    g = index_colored_permutation(m, r)
    f = colored_descents(g).f
    out = []
    for p, fl in zip(g.word, f):
        diff = m[p - 1] - fl
        assert diff >= 0 and diff % r == 0, "index colored permutation is inconsistent"
        out.append(diff // r)
    assert all(out[i] >= out[i + 1] for i in range(len(out) - 1))
    return tuple(out)


def complementary_partition(m: Sequence[int], r: int = 1) -> Partition:
    return conjugate(complementary_vector(m, r))


def gs_monomial(sigma: Sequence[int]) -> Monomial:
    g = ColoredPermutation.uncolored(sigma)
    return descent_monomial(g, ())


# ---------------------------------------------------------------------------
# descent monomials

@dataclass(frozen=True, order=True)
class DescentBasisElement:
    """(g, I, nu): the product b_{g,I} * e_nu(x^r); nu = () for quotient basis elements."""

    g: ColoredPermutation
    I: tuple[int, ...]
    nu: Partition = ()

    def to_json(self) -> dict:
        return {"g": self.g.to_json(), "I": list(self.I), "nu": list(self.nu)}

    def __str__(self):
        return f"[{self.g}; I={self.I}; nu={self.nu}]"


def descent_monomial(g: ColoredPermutation, I: Sequence[int]) -> Monomial:
    """Exponent of x_{pi_l} is f_l(g) + r*I_l, with I padded by zeros.

    No condition on I is checked here.
    """
    n, r = g.n, g.r
    f = colored_descents(g).f
    I = tuple(I) + (0,) * (n - len(I))
    exps = [0] * n
    for p, fl, il in zip(g.word, f, I):
        exps[p - 1] = fl + r * il
    return tuple(exps)


def check_descent_pair(g: ColoredPermutation, I: Sequence[int], n: int, k: int):
    if g.n != n:
        raise ValueError(f"colored permutation has length {g.n}, expected {n}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if len(I) != n - k:
        raise ValueError(f"I must have length n-k = {n - k}, got {len(I)}")
    des = len(colored_descents(g).des)
    bound = k - des
    if bound <= 0:
        raise ValueError(f"des(g) = {des} is not below k = {k}")
    if any(I[i] < I[i + 1] for i in range(len(I) - 1)) or (I and (I[-1] < 0 or I[0] >= bound)):
        raise ValueError(f"I = {tuple(I)} must satisfy {bound} > I_1 >= ... >= I_(n-k) >= 0")


def check_element(e: DescentBasisElement, n: int, k: int, r: int):
    if e.g.r != r:
        raise ValueError(f"element carries r = {e.g.r}, expected {r}")
    check_descent_pair(e.g, e.I, n, k)
    if e.nu:
        if any(part < n - k + 1 or part > n for part in e.nu):
            raise ValueError(f"nu = {e.nu} must have parts in [{n - k + 1}, {n}]")
        lead = max(descent_monomial(e.g, e.I)) + r * len(e.nu)
        if lead >= r * k:
            raise ValueError(f"leading exponent {lead} is not below r*k = {r * k}")


def descent_basis_monomial(e: DescentBasisElement, n: int, k: int, r: int = 1) -> Monomial:
    if e.nu:
        raise ValueError("expected an element without an e-factor")
    check_element(e, n, k, r)
    return descent_monomial(e.g, e.I)


# ---------------------------------------------------------------------------
# the order on monomials

def prec_compare(m1: Sequence[int], m2: Sequence[int]) -> Comparison:
    if sum(m1) != sum(m2):
        raise ValueError("monomials of different degrees are not compared")
    if tuple(m1) == tuple(m2):
        return Comparison.EQUAL
    dom = dominance_compare(exponent_partition(m1), exponent_partition(m2))
    if dom is not Comparison.EQUAL:
        return dom
    inv1 = inversions(index_permutation(m1))
    inv2 = inversions(index_permutation(m2))
    if inv1 > inv2:
        return Comparison.LESS
    if inv1 < inv2:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def prec_key(m: Sequence[int]) -> tuple:
    """A total order key that extends the partial order (bigger key = bigger monomial)."""
    return (exponent_partition(m), -inversions(index_permutation(m)), tuple(m))


def leading_product_monomial(m: Sequence[int], mu: Sequence[int], r: int = 1) -> Monomial:
    """The largest monomial of m * e_mu(x^r): add r*mu'_l to the l-th largest exponent."""
    n = len(m)
    mu_conj = conjugate(mu)
    if len(mu_conj) > n:
        raise ValueError(f"e_mu needs parts <= {n}, got {tuple(mu)}")
    mu_conj = mu_conj + (0,) * (n - len(mu_conj))
    out = list(m)
    for p, extra in zip(index_permutation(m), mu_conj):
        out[p - 1] += r * extra
    return tuple(out)


# ---------------------------------------------------------------------------
# straightening

def straighten_step(m: Sequence[int], n: int, k: int, r: int = 1) -> DescentBasisElement:
    """The unique (g, I, nu) whose product b_{g,I} e_nu(x^r) has leading monomial m."""
    m = tuple(m)
    if len(m) != n:
        raise ValueError(f"monomial has {len(m)} variables, expected {n}")
    if any(a >= r * k for a in m):
        raise ValueError(f"exponents of {format_monomial(m)} must stay below r*k = {r * k}")
    g = index_colored_permutation(m, r)
    v = complementary_vector(m, r)
    pivot = v[n - k]  # the (n-k+1)-th entry
    I = tuple(v[l] - pivot for l in range(n - k))
    nu_conj = tuple(pivot for _ in range(n - k + 1)) + v[n - k + 1:]
    return DescentBasisElement(g, I, conjugate(nu_conj))


@lru_cache(maxsize=None)
def elementary_offsets(nu: Partition, n: int, r: int) -> tuple[tuple[Monomial, int], ...]:
    """Terms of e_nu(x_1^r, ..., x_n^r) as (exponent vector, coefficient)."""
    terms = {(0,) * n: 1}
    for part in nu:
        subsets = list(combinations(range(n), part))
        nxt: dict[Monomial, int] = {}
        for exps, c in terms.items():
            for chosen in subsets:
                e = list(exps)
                for i in chosen:
                    e[i] += r
                e = tuple(e)
                nxt[e] = nxt.get(e, 0) + c
        terms = nxt
    return tuple(sorted(terms.items()))


def expand_element(e: DescentBasisElement) -> dict[Monomial, int]:
    """b_{g,I} * e_nu(x^r) as a monomial-to-coefficient map."""
    b = descent_monomial(e.g, e.I)
    return {tuple(x + y for x, y in zip(b, off)): c
            for off, c in elementary_offsets(e.nu, e.g.n, e.g.r)}


def _heap_key(m: Monomial) -> tuple:
    # min-heap on this key pops the largest monomial first
    return (tuple(-x for x in sorted(m, reverse=True)), inversions(index_permutation(m)),
            tuple(-x for x in m))


def straighten_full(m: Sequence[int], n: int, k: int, r: int = 1) -> dict[DescentBasisElement, int]:
    """Expand m as sum of c_e * b_{g,I} e_nu(x^r).

    Works on the largest remaining monomial each round, so every new
    monomial is strictly smaller and is never revisited.
    """
    m = tuple(m)
    remainder = {m: 1}
    heap = [(_heap_key(m), m)]
    result: dict[DescentBasisElement, int] = {}
    while heap:
        key, mono = heapq.heappop(heap)
        c = remainder.pop(mono)
        if c == 0:
            continue
        e = straighten_step(mono, n, k, r)
        result[e] = result.get(e, 0) + c
        for term, coeff in expand_element(e).items():
            if term == mono:
                assert coeff == 1, "leading coefficient of a straightening product must be 1"
                continue
            if term in remainder:
                remainder[term] -= c * coeff
            else:
                term_key = _heap_key(term)
                assert term_key > key, "straightening produced a monomial that is not smaller"
                remainder[term] = -c * coeff
                heapq.heappush(heap, (term_key, term))
    return {e: c for e, c in result.items() if c}


def reexpand(expansion: dict[DescentBasisElement, int]) -> dict[Monomial, int]:
    total: dict[Monomial, int] = {}
    for e, c in expansion.items():
        for mono, coeff in expand_element(e).items():
            total[mono] = total.get(mono, 0) + c * coeff
    return {mono: c for mono, c in total.items() if c}


def project_to_quotient(m: Sequence[int], n: int, k: int, r: int = 1) -> dict[DescentBasisElement, int]:
    """Coordinates of the image of m in the quotient, on the descent basis."""
    return {e: c for e, c in straighten_full(m, n, k, r).items() if not e.nu}


# ---------------------------------------------------------------------------
# bases

def enumerate_basis(n: int, k: int, r: int = 1) -> list[DescentBasisElement]:
    """All (g, I) with des(g) < k and k - des(g) > I_1 >= ... >= I_(n-k) >= 0."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = []
    for g in colored_permutations(n, r):
        des = len(colored_descents(g).des)
        if des >= k:
            continue
        for I in partitions_in_box(n - k, k - 1 - des):
            out.append(DescentBasisElement(g, pad(I, n - k)))
    return out


def e_factor_partitions(n: int, k: int, max_parts: int) -> Iterator[Partition]:
    """Partitions with parts in [n-k+1, n] and at most max_parts parts."""
    sizes = range(n, n - k, -1)
    for length in range(max_parts + 1):
        for parts in combinations_with_replacement(sizes, length):
            yield tuple(parts)


def enumerate_full_basis(n: int, k: int, r: int = 1) -> list[DescentBasisElement]:
    """The basis of the box-truncated polynomial space, with e-factors."""
    out = []
    for e in enumerate_basis(n, k, r):
        top = max(descent_monomial(e.g, e.I))
        # leading exponent top + r*len(nu) must stay below r*k
        room = (r * k - 1 - top) // r
        for nu in e_factor_partitions(n, k, room):
            out.append(DescentBasisElement(e.g, e.I, nu))
    return out


# ---------------------------------------------------------------------------
# decompositions of partitions

def decompose_nu(mu: Sequence[int], nu: Sequence[int], r: int = 1) -> Partition | None:
    """rho with mu = nu + r*rho, or None when no such partition exists."""
    length = max(len(mu), len(nu))
    mu = tuple(mu) + (0,) * (length - len(mu))
    nu = tuple(nu) + (0,) * (length - len(nu))
    rho = []
    for a, b in zip(mu, nu):
        if a < b or (a - b) % r:
            return None
        rho.append((a - b) // r)
    if any(rho[i] < rho[i + 1] for i in range(length - 1)):
        return None
    return tuple(rho)


def decompose_by_descent_subset(mu: Sequence[int], S: Iterable[int], n: int, k: int,
                                r: int = 1) -> tuple[Partition, Partition]:
    """The pair (nu, rho) with mu = nu + r*rho, nu an exponent partition of a
    descent monomial whose r-descents in [n-k+1, n] are exactly S, and rho
    constant on its first n-k+1 parts."""
    mu = pad(mu, n)
    S = frozenset(S)
    allowed = partition_descents(mu, r, n - k + 1, n)
    if not S <= allowed:
        raise ValueError(f"S = {sorted(S)} is not inside the r-descents {sorted(allowed)} of {mu} in [{n - k + 1}, {n}]")
    if n in S:
        raise ValueError("an r-descent at position n cannot come from a descent monomial")
    # the tail of nu is forced: floor(nu_i / r) counts elements of S at or after i
    nu = [0] * n
    for i in range(n - k, n):
        nu[i] = r * sum(1 for s in S if s >= i + 1) + mu[i] % r
    tail = nu[n - k:]
    if any(tail[j] - tail[j + 1] > r or tail[j] < tail[j + 1] for j in range(k - 1)) or tail[-1] >= r:
        raise ValueError(f"no r-descent partition with r-descents {sorted(S)} matches the residues of {mu}")
    rho = [0] * n
    for i in range(n - k, n):
        rho[i] = (mu[i] - nu[i]) // r
    for i in range(n - k):
        rho[i] = rho[n - k]
        nu[i] = mu[i] - r * rho[i]
    return tuple(nu), tuple(rho)


def nu_from_descent_set(S: Iterable[int], residues: Sequence[int], r: int = 1) -> Partition:
    """Smallest partition with floor(nu_i / r) = #{s in S : s >= i} and nu_i = residues_i mod r."""
    S = frozenset(S)
    return tuple(r * sum(1 for s in S if s >= i + 1) + c for i, c in enumerate(residues))


def is_r_descent_partition(parts: Sequence[int], r: int = 1) -> bool:
    parts = tuple(parts)
    if not parts:
        return True
    return (all(0 <= parts[i] - parts[i + 1] <= r for i in range(len(parts) - 1))
            and parts[-1] < r)
