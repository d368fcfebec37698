"""Top-degree ideals of finite point sets.

For a finite X the ideal T(X) is spanned by the top-degree forms of the
polynomials vanishing on X.  Under a graded order the leading monomial of
tau(f) equals that of f, so lead(T(X)) = lead(I(X)) and the standard
monomials of either ideal can be read off from evaluation vectors.

Soundness of the staircase shortcut: the staircase of any P in T(X) contains
the standard monomials of <P>, which contain those of T(X), and there are |X|
of the latter.  So a staircase of size |X| is the standard monomial basis of
C[x]/T(X) and <P> = T(X) in every degree.
"""

from __future__ import annotations

import json
from itertools import combinations_with_replacement, permutations, product
from math import factorial
from typing import Iterable, NamedTuple, Sequence

from ..combinatorics import QPolynomial
from ..linalg import Echelon
from ..tableaux import ResourceError
from .quadratic import QuadraticNumber

Monomial = tuple[int, ...]
Point = tuple[QuadraticNumber, ...]

ORDER = "grevlex"
MAX_DN = 5
MAX_POINTS = 64


def grevlex_key(m: Sequence[int]) -> tuple:
    """Sort key for graded reverse lexicographic order with x1 > x2 > ... ."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out, key=grevlex_key)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# polynomials with coefficients in Q(sqrt d)

class ExactPolynomial:
    """Sparse polynomial {exponent tuple: QuadraticNumber} under grevlex."""

    __slots__ = ("nvars", "terms")
    order = ORDER

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        for m, c in (terms or {}).items():
            c = QuadraticNumber.coerce(c)
            if c:
                self.terms[tuple(m)] = c

    @classmethod
    def constant(cls, nvars: int, c=1) -> "ExactPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "ExactPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ExactPolynomial(self.nvars, out)

    def scale(self, c) -> "ExactPolynomial":
        return ExactPolynomial(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return ExactPolynomial(self.nvars, out)

    def __eq__(self, other):
        return isinstance(other, ExactPolynomial) and self.terms == other.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(m) for m in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def __call__(self, point: Sequence) -> QuadraticNumber:
        total = QuadraticNumber(0)
        for m, c in self.terms.items():
            value = c
            for x, e in zip(point, m):
                if e:
                    value = value * QuadraticNumber.coerce(x) ** e
            total = total + value
        return total

    def to_json(self) -> dict:
        ordered = sorted(self.terms, key=grevlex_key, reverse=True)
        return {
            "lead": list(ordered[0]) if ordered else None,
            "terms": [{"exponents": list(m), "coeff": self.terms[m].to_json()} for m in ordered],
        }

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            parts.append(f"({self.terms[m]!r})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def top_degree(f: ExactPolynomial) -> ExactPolynomial:
    """tau(f): the terms of f of maximal total degree."""
    d = f.degree()
    return ExactPolynomial(f.nvars, {m: c for m, c in f.terms.items() if sum(m) == d})


# ---------------------------------------------------------------------------
# points and the group D_n

class SignedPermutation(NamedTuple):
    word: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.word)

    def sign_product(self) -> int:
        p = 1
        for s in self.signs:
            p *= s
        return p

    def act(self, point: Sequence) -> Point:
        """Coordinate i moves to position word[i] with sign signs[i]."""
        image = [None] * len(point)
        for i, (w, s) in enumerate(zip(self.word, self.signs)):
            image[w - 1] = point[i] if s == 1 else -point[i]
        return tuple(image)


def dn_elements(n: int) -> list[SignedPermutation]:
    if n > MAX_DN:
        raise ResourceError(f"D_n enumeration is capped at n <= {MAX_DN}")
    out = []
    for word in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                out.append(SignedPermutation(word, signs))
    assert len(out) == (2 ** (n - 1) * factorial(n) if n else 1)
    return out


def make_point(coords: Iterable) -> Point:
    point = []
    for c in coords:
        if isinstance(c, float):
            raise TypeError("floating point coordinates are not exact")
        q = QuadraticNumber.coerce(c)
        if q is NotImplemented:
            raise TypeError(f"cannot use {c!r} as an exact coordinate")
        point.append(q)
    return tuple(point)


def orbit(W: Iterable[SignedPermutation], p: Sequence) -> set[Point]:
    p = make_point(p)
    return {w.act(p) for w in W}


def check_points(X: Iterable[Sequence]) -> list[Point]:
    """Validate a point set: exact, one length, distinct, at most one radical."""
    pts = [make_point(p) for p in X]
    if not pts:
        raise ValueError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise ValueError("points have different lengths")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points")
    radicals = {c.d for p in pts for c in p if c.d != 1}
    if len(radicals) > 1:
        raise ValueError(f"points mix radicals sqrt of {sorted(radicals)}")
    return pts


def indicator(X: Iterable[Sequence], xbar: Sequence) -> ExactPolynomial:
    """Product of (x_i - y_i)/(xbar_i - y_i) over y != xbar, i the first index where they differ."""
    pts = check_points(X)
    xbar = make_point(xbar)
    if xbar not in pts:
        raise ValueError("xbar is not in X")
    n = len(xbar)
    f = ExactPolynomial.constant(n)
    for y in pts:
        if y == xbar:
            continue
        i = next(j for j in range(n) if y[j] != xbar[j])
        factor = ExactPolynomial.variable(n, i) - ExactPolynomial.constant(n, y[i])
        f = f * factor.scale(QuadraticNumber(1) / (xbar[i] - y[i]))
    return f


# ---------------------------------------------------------------------------
# the sweep

class Generator(NamedTuple):
    """tau(witness) with its leading monomial; witness is None for the seed monomials."""
    lead: Monomial
    form: ExactPolynomial
    witness: ExactPolynomial | None


class TIdealResult(NamedTuple):
    generators: list[Generator]
    standard_monomials: list[Monomial]
    hilbert: QPolynomial

    def to_json(self) -> dict:
        return {
            "order": ORDER,
            "hilbert": list(self.hilbert.coeffs),
            "staircase": [list(m) for m in self.standard_monomials],
            "generators": [g.form.to_json() for g in self.generators],
        }


class _Evaluator:
    """Evaluation vectors of monomials on X, cached."""

    def __init__(self, pts: list[Point]):
        self.pts = pts
        self.cache: dict[Monomial, dict[int, QuadraticNumber]] = {}
        self.powers = [[{0: QuadraticNumber(1)} for _ in p] for p in pts]

    def _power(self, i: int, j: int, e: int) -> QuadraticNumber:
        table = self.powers[i][j]
        if e not in table:
            table[e] = self._power(i, j, e - 1) * self.pts[i][j]
        return table[e]

    def __call__(self, m: Monomial) -> dict[int, QuadraticNumber]:
        if m not in self.cache:
            vec = {}
            for i in range(len(self.pts)):
                value = QuadraticNumber(1)
                for j, e in enumerate(m):
                    if e:
                        value = value * self._power(i, j, e)
                if value:
                    vec[i] = value
            self.cache[m] = vec
        return self.cache[m]


def _vanishing_polynomial(m: Monomial, combo: dict, n: int) -> ExactPolynomial:
    terms = {m: QuadraticNumber(1)}
    for label, c in combo.items():
        terms[label] = terms.get(label, 0) - c
    return ExactPolynomial(n, terms)


def _generator(m: Monomial, combo: dict, n: int) -> Generator:
    f = _vanishing_polynomial(m, combo, n)
    form = top_degree(f)
    assert form.leading_monomial() == m
    return Generator(m, form, f)


def _result(pts: list[Point], gens: list[Generator], std: list[Monomial]) -> TIdealResult:
    if len(std) != len(pts):
        raise ArithmeticError(f"staircase has {len(std)} monomials for {len(pts)} points")
    std = sorted(std, key=grevlex_key)
    return TIdealResult(gens, std, QPolynomial.from_powers(sum(m) for m in std))


def _batched(pts: list[Point]) -> TIdealResult:
    n = len(pts[0])
    evaluate = _Evaluator(pts)
    ech = Echelon(track=True)
    gens: list[Generator] = []
    std: list[Monomial] = []
    d = 0
    while True:
        candidates = [m for m in monomials_of_degree(n, d) if not any(divides(g.lead, m) for g in gens)]
        if not candidates:
            break
        # one batch per degree; within a degree the candidates go in increasing order
        for m in candidates:
            residual, combo = ech.reduce(evaluate(m))
            if residual:
                ech.add(evaluate(m), label=m)
                std.append(m)
            else:
                gens.append(_generator(m, combo, n))
        d += 1
    return _result(pts, gens, std)


def _one_per_step(pts: list[Point]) -> TIdealResult:
    """The literal loop: start from all monomials of degree |X| and add one tau(f) per step,
    taking the null vector whose largest monomial is smallest."""
    n = len(pts[0])
    size = len(pts)
    evaluate = _Evaluator(pts)
    seeds = monomials_of_degree(n, size)
    st = [m for d in range(size) for m in monomials_of_degree(n, d)]
    gens: list[Generator] = []
    while len(st) > size:
        ech = Echelon(track=True)
        for m in st:
            residual, combo = ech.reduce(evaluate(m))
            if not residual:
                break
            ech.add(evaluate(m), label=m)
        else:
            raise ArithmeticError("evaluation matrix has full column rank but the staircase is too large")
        gen = _generator(m, combo, n)
        gens.append(gen)
        st = [s for s in st if not divides(gen.lead, s)]
    for s in seeds:
        if not any(divides(g.lead, s) for g in gens):
            gens.append(Generator(s, ExactPolynomial(n, {s: 1}), None))
    return _result(pts, gens, st)


def compute_t_ideal(X: Iterable[Sequence], one_per_step: bool = False) -> TIdealResult:
    pts = check_points(X)
    if len(pts) > MAX_POINTS:
        raise ResourceError(f"point sets are capped at {MAX_POINTS} points")
    return _one_per_step(pts) if one_per_step else _batched(pts)


def staircase(P: Iterable) -> set[Monomial]:
    """Monomials divisible by no leading monomial of P (polynomials or exponent tuples)."""
    leads = [p.leading_monomial() if isinstance(p, ExactPolynomial) else tuple(p) for p in P]
    if not leads:
        raise ValueError("empty generating set has an infinite staircase")
    n = len(leads[0])
    bounds = []
    for i in range(n):
        pure = [m[i] for m in leads if all(e == 0 for j, e in enumerate(m) if j != i) and m[i] > 0]
        if not pure:
            raise ValueError(f"staircase is infinite: no pure power of x{i + 1} among the leading monomials")
        bounds.append(min(pure))
    return {m for m in product(*(range(b) for b in bounds)) if not any(divides(l, m) for l in leads)}


# ---------------------------------------------------------------------------
# input files

def load_point_set(obj: dict) -> list[Point]:
    """Points from {"n", "d", "orbit_seeds" | "points", "group": "D" | "none"}."""
    d = int(obj.get("d", 1))
    n = obj.get("n")
    group = obj.get("group", "D")
    if "points" in obj:
        pts = [tuple(QuadraticNumber.from_json(c, d) for c in p) for p in obj["points"]]
    else:
        seeds = [tuple(QuadraticNumber.from_json(c, d) for c in s) for s in obj["orbit_seeds"]]
        if n is None:
            n = len(seeds[0])
        if group == "D":
            W = dn_elements(n)
        elif group == "none":
            W = [SignedPermutation(tuple(range(1, n + 1)), (1,) * n)]
        else:
            raise ValueError(f"unknown group {group!r}")
        found: set[Point] = set()
        for s in seeds:
            found |= orbit(W, s)
        pts = sorted(found, key=lambda p: tuple((c.a, c.b) for c in p))
    if n is not None and any(len(p) != n for p in pts):
        raise ValueError(f"points must have {n} coordinates")
    return check_points(pts)


def load_point_file(path) -> list[Point]:
    with open(path) as fh:
        return load_point_set(json.load(fh))
