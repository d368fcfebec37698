"""Exact arithmetic in Q(xi), xi a primitive r-th root of unity.

Elements are coefficient tuples in the power basis 1, xi, ..., xi^(phi(r)-1),
reduced modulo the r-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, lowest degree first; den is monic
    num = num[:]
    quot = [0] * max(len(num) - len(den) + 1, 1)
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        quot[shift] = c
        if c:
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    rem = num[: len(den) - 1]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Phi_r, lowest degree first."""
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class Cyclotomic:
    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs=()):
        self.r = r
        phi = cyclotomic_polynomial(r)
        deg = len(phi) - 1
        c = [Fraction(x) for x in coeffs]
        # reduce: xi^j for j >= deg via the monic relation Phi_r(xi) = 0
        for j in range(len(c) - 1, deg - 1, -1):
            top = c[j]
            if top:
                for i in range(deg):
                    c[j - deg + i] -= top * phi[i]
            c[j] = Fraction(0)
        c = c[:deg] + [Fraction(0)] * (deg - len(c))
        self.coeffs = tuple(c)

    @classmethod
    def power(cls, r: int, j: int, coeff=1) -> Cyclotomic:
        j %= r
        return cls(r, [0] * j + [coeff])

    @classmethod
    def rational(cls, r: int, value) -> Cyclotomic:
        return cls(r, [value])

    def _lift(self, other):
        if isinstance(other, Cyclotomic):
            if other.r != self.r:
                raise ValueError("cyclotomic numbers of different orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.r, [other])
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.r, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.r, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Cyclotomic(self.r, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.r, [a / other for a in self.coeffs])
        return NotImplemented

    def conjugate(self) -> Cyclotomic:
        """Complex conjugation: xi -> xi^(r-1)."""
        total = Cyclotomic(self.r)
        for j, a in enumerate(self.coeffs):
            if a:
                total = total + Cyclotomic.power(self.r, -j, a)
        return total

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        terms = []
        for j, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if j == 0 else f"{a}*xi^{j}")
        return " + ".join(terms) or "0"
