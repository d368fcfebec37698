"""Exact symmetric polynomials in a fixed number of variables.

Two representations live here.  ``MultiPolynomial`` is a plain sparse map
from exponent vectors to exact coefficients.  ``SymmetricPolynomial`` stores
only the coefficients of the monomial symmetric functions m_mu, which is all
a symmetric polynomial needs and keeps degree-8 products in 8 variables
cheap.  ``expand`` converts the latter into the former.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .combinatorics import Partition, QPolynomial, conjugate, partitions, strip
from .tableaux import enumerate_ssyt, weight

Exponent = tuple[int, ...]


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v != 0}


class MultiPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        self.terms: dict[Exponent, object] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent {exps} does not have {nvars} entries")
            if c != 0:
                self.terms[exps] = self.terms.get(exps, 0) + c
        self.terms = _clean(self.terms)

    @classmethod
    def constant(cls, nvars: int, c=1) -> MultiPolynomial:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> MultiPolynomial:
        return cls(len(exps), {tuple(exps): c})

    def _check(self, other: MultiPolynomial):
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")

    def __add__(self, other: MultiPolynomial) -> MultiPolynomial:
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return MultiPolynomial(self.nvars, out)

    def __neg__(self):
        return MultiPolynomial(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: MultiPolynomial) -> MultiPolynomial:
        return self + (-other)

    def scale(self, c) -> MultiPolynomial:
        return MultiPolynomial(self.nvars, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPolynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, object] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                out[key] = out.get(key, 0) + ca * cb
        return MultiPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> MultiPolynomial:
        out = MultiPolynomial.constant(self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, exps: Sequence[int]):
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.terms}) <= 1

    def is_symmetric(self) -> bool:
        # adjacent transpositions generate the symmetric group
        for i in range(self.nvars - 1):
            for exps, c in self.terms.items():
                swapped = list(exps)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != c:
                    return False
        return True

    def __call__(self, point: Sequence):
        total = 0
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x ** e
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# symmetric polynomials in the monomial symmetric basis

def _sorted_key(exps: Iterable[int]) -> Partition:
    return strip(sorted(exps, reverse=True))


class SymmetricPolynomial:
    """sum of c_mu * m_mu(x_1..x_m), keyed by partitions with at most m parts."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Partition, object] | None = None):
        self.nvars = nvars
        self.coeffs: dict[Partition, object] = {}
        for mu, c in (coeffs or {}).items():
            mu = strip(mu)
            if len(mu) > nvars:
                continue
            if c != 0:
                self.coeffs[mu] = self.coeffs.get(mu, 0) + c
        self.coeffs = _clean(self.coeffs)

    @classmethod
    def from_multi(cls, p: MultiPolynomial) -> SymmetricPolynomial:
        if not p.is_symmetric():
            raise ValueError("polynomial is not symmetric")
        return cls(p.nvars, {strip(k): c for k, c in p.terms.items()
                             if list(k) == sorted(k, reverse=True)})

    def expand(self) -> MultiPolynomial:
        terms = {}
        for mu, c in self.coeffs.items():
            padded = mu + (0,) * (self.nvars - len(mu))
            for exps in set(permutations(padded)):
                terms[exps] = c
        return MultiPolynomial(self.nvars, terms)

    def __add__(self, other: SymmetricPolynomial) -> SymmetricPolynomial:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymmetricPolynomial(self.nvars, out)

    def __neg__(self):
        return SymmetricPolynomial(self.nvars, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> SymmetricPolynomial:
        return SymmetricPolynomial(self.nvars, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return self.scale(other)
        if self.nvars != other.nvars:
            raise ValueError("polynomials live in different variable counts")
        if not self.coeffs or not other.coeffs:
            return SymmetricPolynomial(self.nvars)
        m = self.nvars
        deg_f = {sum(k) for k in self.coeffs}
        deg_g = {sum(k) for k in other.coeffs}
        out: dict[Partition, object] = {}
        for df in deg_f:
            for dg in deg_g:
                for mu in partitions(df + dg, max_len=m):
                    padded = mu + (0,) * (m - len(mu))
                    total = 0
                    # coefficient of x^mu: split mu = alpha + beta
                    for alpha in product(*(range(p + 1) for p in padded)):
                        if sum(alpha) != df:
                            continue
                        a = self.coeffs.get(_sorted_key(alpha))
                        if a is None:
                            continue
                        b = other.coeffs.get(_sorted_key(p - x for p, x in zip(padded, alpha)))
                        if b is not None:
                            total += a * b
                    if total:
                        out[mu] = out.get(mu, 0) + total
        return SymmetricPolynomial(m, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymmetricPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return " + ".join(f"{c}*m{mu}" for mu, c in sorted(self.coeffs.items(), reverse=True)) or "0"


@lru_cache(maxsize=None)
def kostka(la: Partition, mu: Partition) -> int:
    """Number of SSYT of shape la and content mu (mu any composition)."""
    la, mu = strip(la), tuple(mu)
    if sum(la) != sum(mu):
        return 0
    while mu and mu[-1] == 0:
        mu = mu[:-1]
    if not mu:
        return 1 if not la else 0
    # the largest letter occupies a horizontal strip of size mu[-1]
    last = mu[-1]
    total = 0
    for inner in _horizontal_strip_inners(la, last):
        total += kostka(inner, mu[:-1])
    return total


def _horizontal_strip_inners(la: Partition, size: int):
    """Partitions nu inside la with la/nu a horizontal strip of the given size."""
    la = list(la)
    L = len(la)

    def rec(i, remaining):
        if i == L:
            if remaining == 0:
                yield ()
            return
        lower = la[i + 1] if i + 1 < L else 0
        for take in range(min(remaining, la[i] - lower), -1, -1):
            for rest in rec(i + 1, remaining - take):
                yield (la[i] - take,) + rest

    for nu in rec(0, size):
        yield strip(nu)


def schur_sym(la: Sequence[int], m: int) -> SymmetricPolynomial:
    la = strip(la)
    if len(la) > m:
        return SymmetricPolynomial(m)
    return SymmetricPolynomial(m, {mu: kostka(la, mu) for mu in partitions(sum(la), max_len=m)})


def schur(la: Sequence[int], m: int) -> MultiPolynomial:
    """Schur polynomial in m variables, summed over SSYT with entries <= m."""
    la = strip(la)
    terms: dict[Exponent, int] = {}
    for T in enumerate_ssyt(la, m):
        wt = weight(T, m)
        terms[wt] = terms.get(wt, 0) + 1
    return MultiPolynomial(m, terms) if terms or la else MultiPolynomial.constant(m)


def elementary(d: int, m: int, r: int = 1) -> MultiPolynomial:
    """e_d evaluated at x_1^r, ..., x_m^r."""
    if d > m or d < 0:
        return MultiPolynomial(m)
    terms = {}
    for chosen in combinations(range(m), d):
        exps = [0] * m
        for i in chosen:
            exps[i] = r
        terms[tuple(exps)] = 1
    return MultiPolynomial(m, terms)


def elementary_product(mu: Sequence[int], m: int, r: int = 1) -> MultiPolynomial:
    out = MultiPolynomial.constant(m)
    for part in strip(mu):
        out = out * elementary(part, m, r)
    return out


def elementary_sym(d: int, m: int) -> SymmetricPolynomial:
    if d > m or d < 0:
        return SymmetricPolynomial(m)
    return SymmetricPolynomial(m, {(1,) * d: 1})


def homogeneous_sym(d: int, m: int) -> SymmetricPolynomial:
    if d < 0:
        return SymmetricPolynomial(m)
    return SymmetricPolynomial(m, {mu: 1 for mu in partitions(d, max_len=m)})


def homogeneous(d: int, m: int) -> MultiPolynomial:
    return homogeneous_sym(d, m).expand()


# ---------------------------------------------------------------------------
# ribbons

def ribbon_descent_set(rows: Sequence[int]) -> frozenset[int]:
    """Descent positions of a reading word of the ribbon with these rows (top to bottom)."""
    bottom_up = list(reversed(rows))
    cuts, acc = set(), 0
    for length in bottom_up[:-1]:
        acc += length
        cuts.add(acc)
    return frozenset(cuts)


def ribbon_reading_word(filling: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Filling given row by row, top to bottom; read bottom row first, each left to right."""
    return tuple(x for row in reversed(filling) for x in row)


def is_ribbon_filling(filling: Sequence[Sequence[int]]) -> bool:
    """Rows weakly increase; each row's first entry is strictly above the last entry of the row below."""
    for row in filling:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
    return all(filling[i][0] < filling[i + 1][-1] for i in range(len(filling) - 1))


@lru_cache(maxsize=None)
def _words_with_descent_set(content: tuple[int, ...], des: frozenset[int]) -> int:
    """Number of words with the given letter content whose descent set is exactly des."""
    n = sum(content)
    letters = len(content)

    @lru_cache(maxsize=None)
    def rec(remaining: tuple[int, ...], last: int) -> int:
        pos = n - sum(remaining)  # letters already placed
        if pos == n:
            return 1
        total = 0
        for a in range(letters):
            if not remaining[a]:
                continue
            if pos > 0:
                is_des = last > a
                if is_des != (pos in des):
                    continue
            nxt = list(remaining)
            nxt[a] -= 1
            total += rec(tuple(nxt), a)
        return total

    return rec(content, -1)


def ribbon_schur_sym(rows: Sequence[int], m: int) -> SymmetricPolynomial:
    rows = [x for x in rows if x]
    if any(x < 0 for x in rows):
        raise ValueError("ribbon rows must be positive")
    n = sum(rows)
    des = ribbon_descent_set(rows)
    coeffs = {}
    for mu in partitions(n, max_len=m):
        c = _words_with_descent_set(mu, des)
        if c:
            coeffs[mu] = c
    return SymmetricPolynomial(m, coeffs)


def ribbon_schur(rows: Sequence[int], m: int) -> MultiPolynomial:
    return ribbon_schur_sym(rows, m).expand()


def ribbon_skew_shape(rows: Sequence[int]) -> tuple[Partition, Partition]:
    """(outer, inner) of the skew ribbon with given row lengths, top to bottom."""
    rows = [x for x in rows if x]
    t = len(rows)
    outer = [0] * t
    outer[-1] = rows[-1]
    for i in range(t - 2, -1, -1):
        outer[i] = outer[i + 1] + rows[i] - 1
    inner = [outer[i + 1] - 1 for i in range(t - 1)] + [0]
    return tuple(outer), strip(inner)


def skew_schur_jacobi_trudi(outer: Sequence[int], inner: Sequence[int], m: int) -> SymmetricPolynomial:
    """det(h_{outer_i - inner_j - i + j}), expanded row by row over subsets of used columns."""
    L = len(outer)
    inner = list(inner) + [0] * (L - len(inner))
    memo: dict[int, SymmetricPolynomial] = {}

    def rest(i: int, used: int) -> SymmetricPolynomial:
        if i == L:
            return SymmetricPolynomial(m, {(): 1})
        if used in memo:
            return memo[used]
        total = SymmetricPolynomial(m)
        for j in range(L):
            if used >> j & 1:
                continue
            d = outer[i] - inner[j] - i + j
            if d < 0:
                continue
            # sign of the permutation: one inversion per used column to the right of j
            sign = -1 if bin(used >> (j + 1)).count("1") % 2 else 1
            total = total + (homogeneous_sym(d, m) * rest(i + 1, used | 1 << j)).scale(sign)
        memo[used] = total
        return total

    return rest(0, 0)


# ---------------------------------------------------------------------------
# Schur expansions

class SchurExpansion:
    """Map from shapes (partitions or tuples of partitions) to integer or q-polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | None = None):
        self.coeffs = {}
        for shape, c in (coeffs or {}).items():
            if c:
                self.coeffs[shape] = self.coeffs.get(shape, 0) + c
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    def __getitem__(self, shape):
        return self.coeffs.get(shape, 0)

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SchurExpansion(out)

    def items(self):
        return sorted(self.coeffs.items(), reverse=True)

    def evaluate_q(self, q) -> SchurExpansion:
        return SchurExpansion({k: (v(q) if isinstance(v, QPolynomial) else v) for k, v in self.coeffs.items()})

    def to_json(self) -> dict:
        terms = []
        for shape, c in self.items():
            js_shape = [list(s) for s in shape] if shape and isinstance(shape[0], tuple) else list(shape)
            if isinstance(c, QPolynomial):
                terms.append({"shape": js_shape, "qpoly": list(c.coeffs)})
            else:
                terms.append({"shape": js_shape, "coeff": _exact_json(c)})
        return {"terms": terms}

    def __repr__(self):
        return " + ".join(f"({c})*s{shape}" for shape, c in self.items()) or "0"


def _exact_json(c):
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else str(c)
    return c


def schur_expand(p) -> SchurExpansion:
    """Schur expansion of a symmetric polynomial.

    Repeatedly peels off c * s_lambda for the lexicographically largest
    surviving exponent partition, which is dominance-maximal.
    """
    if isinstance(p, MultiPolynomial):
        if p.degree() > p.nvars:
            raise ValueError("too few variables to separate all Schur functions of this degree")
        p = SymmetricPolynomial.from_multi(p)
    remaining = dict(p.coeffs)
    out = {}
    while remaining:
        lead = max(remaining)
        c = remaining[lead]
        out[lead] = c
        for mu in partitions(sum(lead), max_len=p.nvars):
            if mu > lead:
                continue
            k = kostka(lead, mu)
            if k:
                remaining[mu] = remaining.get(mu, 0) - c * k
                if remaining[mu] == 0:
                    del remaining[mu]
    return SchurExpansion(out)


def omega(expansion: SchurExpansion) -> SchurExpansion:
    def flip(shape):
        if shape and isinstance(shape[0], tuple):
            return tuple(conjugate(s) for s in shape)
        return conjugate(shape)
    return SchurExpansion({flip(k): v for k, v in expansion.coeffs.items()})
