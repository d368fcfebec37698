"""Brute-force quotient rings and their refined components.

For r = 1 the quotient Q[x]/<x_i^k, e_n, ..., e_{n-k+1}> is built degree by
degree: modulo the powers x_i^k, the degree-d slice of the ideal is spanned by
the truncations of m * e_j, so exact row reduction over the monomials with
exponents < k finds it.  Pivots sit on the largest monomials in a linear
extension of the order on monomials, so the surviving standard monomials are
the smallest ones.

For r > 1 the generators only involve y_i = x_i^r, and C[x] is free over C[y]
on the monomials x^c with 0 <= c_i < r.  Hence the normal form of x^(c + r*b)
is x^c times the r = 1 normal form of y^b.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from ..combinatorics import (
    ColoredPermutation,
    Comparison,
    Partition,
    dominance_compare,
    pad,
    partitions,
    strip,
)
from ..descent_monomials import Monomial, prec_key
from ..linalg import Echelon
from ..tableaux import ResourceError
from .characters import character, class_table, group_order, irreducible_labels
from .cyclotomic import Cyclotomic


def box_monomials(n: int, degree: int, bound: int) -> Iterator[Monomial]:
    """Monomials of a given degree with every exponent < bound."""
    def rec(i, remaining):
        if i == n - 1:
            if remaining < bound:
                yield (remaining,)
            return
        for a in range(min(remaining, bound - 1), -1, -1):
            for rest in rec(i + 1, remaining - a):
                yield (a,) + rest
    if n == 0:
        if degree == 0:
            yield ()
        return
    yield from rec(0, degree)


@lru_cache(maxsize=None)
def _elementary_supports(n: int, j: int) -> tuple[tuple[int, ...], ...]:
    from itertools import combinations
    return tuple(combinations(range(n), j))


class _Slice:
    """Degree-d slice of the r = 1 quotient."""

    def __init__(self, standard: list[Monomial], rows: dict[Monomial, dict]):
        self.standard = standard
        self.index = {m: i for i, m in enumerate(standard)}
        self.rows = rows

    def normal_form(self, m: Monomial) -> dict[Monomial, Fraction]:
        if m in self.index:
            return {m: Fraction(1)}
        row = self.rows.get(m)
        if row is None:
            return {}  # outside the box
        return {q: -c for q, c in row.items() if q != m}


@lru_cache(maxsize=None)
def _base_quotient(n: int, k: int, cap: int | None) -> tuple[_Slice, ...]:
    slices = []
    d = 0
    while cap is None or d <= cap:
        cols = list(box_monomials(n, d, k))
        ech = Echelon(pivot_key=prec_key)
        for j in range(max(n - k + 1, 1), n + 1):
            if j > d:
                break
            for m in box_monomials(n, d - j, k):
                row = {}
                for support in _elementary_supports(n, j):
                    e = list(m)
                    for i in support:
                        e[i] += 1
                    if max(e) < k:
                        row[tuple(e)] = Fraction(1)
                if row:
                    ech.add(row)
        standard = sorted((m for m in cols if m not in ech.rows), key=prec_key)
        slices.append(_Slice(standard, dict(ech.rows)))
        if not standard:
            break
        d += 1
    return tuple(slices)


MAX_N = {1: 5}
DEFAULT_MAX_N = 4


class GradedQuotient:
    """R_{n,k} (r = 1) or S_{n,k} (r > 1) with explicit standard monomials per degree."""

    def __init__(self, n: int, k: int, r: int = 1, degree_cap: int | None = None, force: bool = False):
        if not 1 <= k <= n or r < 1:
            raise ValueError("need 1 <= k <= n and r >= 1")
        if not force and n > MAX_N.get(r, DEFAULT_MAX_N):
            raise ResourceError(f"oracle is capped at n <= {MAX_N.get(r, DEFAULT_MAX_N)} for r = {r}")
        self.n, self.k, self.r = n, k, r
        y_cap = None if degree_cap is None else degree_cap // r
        self._base = _base_quotient(n, k, y_cap)
        self.top_degree = self._compute_top()
        if degree_cap is not None:
            self.top_degree = min(self.top_degree, degree_cap)
        self._standard_cache: dict[int, list[Monomial]] = {}

    def _compute_top(self) -> int:
        top_y = max((d for d, s in enumerate(self._base) if s.standard), default=0)
        return self.r * top_y + self.n * (self.r - 1)

    def standard_monomials(self, d: int) -> list[Monomial]:
        if d in self._standard_cache:
            return self._standard_cache[d]
        n, r = self.n, self.r
        out = []
        for c in product(range(r), repeat=n):
            rest = d - sum(c)
            if rest < 0 or rest % r:
                continue
            yd = rest // r
            if yd >= len(self._base):
                continue
            for b in self._base[yd].standard:
                out.append(tuple(ci + r * bi for ci, bi in zip(c, b)))
        out.sort(key=prec_key)
        self._standard_cache[d] = out
        return out

    def hilbert(self) -> list[int]:
        return [len(self.standard_monomials(d)) for d in range(self.top_degree + 1)]

    def dimension(self) -> int:
        return sum(self.hilbert())

    def normal_form(self, m: Sequence[int]) -> dict[Monomial, Fraction]:
        m = tuple(m)
        r = self.r
        c = tuple(a % r for a in m)
        b = tuple(a // r for a in m)
        yd = sum(b)
        if yd >= len(self._base):
            return {}
        nf = self._base[yd].normal_form(b)
        return {tuple(ci + r * bi for ci, bi in zip(c, q)): v for q, v in nf.items()}

    def reduce(self, poly: dict) -> dict:
        """Normal form of a polynomial given as {monomial: coefficient}."""
        out: dict = {}
        for m, coeff in poly.items():
            for q, v in self.normal_form(m).items():
                new = out.get(q, 0) + coeff * v
                if new == 0:
                    out.pop(q, None)
                else:
                    out[q] = new
        return out


# ---------------------------------------------------------------------------
# group action

def act(g: ColoredPermutation, m: Sequence[int]) -> tuple[int, Monomial]:
    """g sends x_i to xi^(c_i) x_(w(i)); returns (power of xi, image monomial)."""
    image = [0] * len(m)
    power = 0
    for i, a in enumerate(m):
        image[g.word[i] - 1] = a
        power += g.colors[i] * a
    return power % g.r, tuple(image)


# ---------------------------------------------------------------------------
# refined components

def _distinct_arrangements(rho: Partition, n: int) -> list[Monomial]:
    return sorted(set(permutations(pad(rho, n))), reverse=True)


class RefinedComponent:
    """Coset representatives of span{m : lambda(m) <= rho} modulo span{m : lambda(m) < rho}."""

    def __init__(self, quotient: GradedQuotient, rho: Sequence[int]):
        self.quotient = quotient
        n = quotient.n
        self.rho = tuple(rho)
        d = sum(self.rho)
        self.lower = Echelon()
        self.echelon = Echelon(track=True)
        self.representatives: list[Monomial] = []
        if len(strip(rho)) > n:
            return
        self.rho = pad(strip(rho), n)
        for la in partitions(d, max_len=n):
            if dominance_compare(la, strip(self.rho)) is Comparison.LESS:
                for m in _distinct_arrangements(la, n):
                    self.lower.add(quotient.normal_form(m))
        # rows of the lower span carry an empty combination
        for key, row in self.lower.rows.items():
            self.echelon.rows[key] = dict(row)
            self.echelon.combos[key] = {}
        for m in _distinct_arrangements(strip(self.rho), n):
            if self.echelon.add(quotient.normal_form(m), label=m):
                self.representatives.append(m)

    @property
    def dimension(self) -> int:
        return len(self.representatives)

    def coordinates(self, poly: dict) -> dict:
        """Coordinates on the representatives of a polynomial in span{lambda(m) <= rho}, modulo the lower span."""
        nf = self.quotient.reduce(poly)
        combo = self.echelon.express(nf)
        if combo is None:
            raise ArithmeticError("polynomial is not in the filtered piece")
        return combo

    def trace(self, g: ColoredPermutation) -> Cyclotomic:
        r = self.quotient.r
        if g.r != r:
            raise ValueError(f"group element has r = {g.r}, quotient has r = {r}")
        total = Cyclotomic(r)
        for m in self.representatives:
            power, image = act(g, m)
            coeff = self.coordinates({image: Fraction(1)}).get(m, 0)
            if coeff:
                total = total + Cyclotomic.power(r, power, coeff)
        return total


def refined_component(quotient: GradedQuotient, rho: Sequence[int]) -> RefinedComponent:
    return RefinedComponent(quotient, rho)


def group_action_trace(quotient: GradedQuotient, g: ColoredPermutation, rho: Sequence[int]) -> Cyclotomic:
    return RefinedComponent(quotient, rho).trace(g)


class NonIntegralMultiplicity(ArithmeticError):
    pass


def decompose(quotient: GradedQuotient, rho: Sequence[int], component: RefinedComponent | None = None) -> dict:
    """Multiplicity of every irreducible in the refined component of rho."""
    n, r = quotient.n, quotient.r
    comp = component or RefinedComponent(quotient, rho)
    labels = irreducible_labels(n, r)
    if comp.dimension == 0:
        return {la: 0 for la in labels}
    classes = class_table(n, r)
    traces = [comp.trace(cls.representative) for cls in classes]
    order = group_order(n, r)
    out = {}
    for la in labels:
        total = Cyclotomic(r)
        for cls, tr in zip(classes, traces):
            total = total + tr * character(la, cls.label, r).conjugate() * cls.size
        value = total / order
        if not value.is_rational() or value.rational_value().denominator != 1 or value.rational_value() < 0:
            raise NonIntegralMultiplicity(f"multiplicity of {la} in component {tuple(rho)} came out as {value}")
        out[la] = int(value.rational_value())
    return out


def build_quotient(n: int, k: int, r: int = 1, degree_cap: int | None = None, force: bool = False) -> GradedQuotient:
    return GradedQuotient(n, k, r, degree_cap, force)


def component_partitions(quotient: GradedQuotient) -> Iterator[Partition]:
    """Every partition with at most n parts and size up to the top degree."""
    for d in range(quotient.top_degree + 1):
        for rho in partitions(d, max_len=quotient.n):
            yield pad(rho, quotient.n)
