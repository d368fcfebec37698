"""Exact arithmetic in Q(sqrt d) for a single square-free d."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


class MixedRadicalError(ValueError):
    pass


class QuadraticNumber:
    """a + b*sqrt(d) with rational a, b.  Numbers with b = 0 are compatible with every d."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Rational = 0, b: Rational = 0, d: int = 1):
        if not is_square_free(d):
            raise ValueError(f"d = {d} is not a square-free positive integer")
        a, b = Fraction(a), Fraction(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        self.a, self.b = a, b
        self.d = d if b else 1

    @classmethod
    def coerce(cls, value) -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        return NotImplemented

    def _common_d(self, other: "QuadraticNumber") -> int:
        if self.d == 1:
            return other.d
        if other.d == 1 or other.d == self.d:
            return self.d
        raise MixedRadicalError(f"cannot combine sqrt({self.d}) and sqrt({other.d})")

    def __add__(self, other):
        other = QuadraticNumber.coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._common_d(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = QuadraticNumber.coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = QuadraticNumber.coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        return QuadraticNumber(self.a * other.a + d * self.b * other.b,
                               self.a * other.b + self.b * other.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadraticNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        c = self.conjugate()
        return QuadraticNumber(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        other = QuadraticNumber.coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadraticNumber.coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = QuadraticNumber(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = QuadraticNumber.coerce(other)
        if other is NotImplemented:
            return other
        return self.a == other.a and self.b == other.b and (not self.b or self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else 1))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return not self.b

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj, d: int = 1) -> "QuadraticNumber":
        if isinstance(obj, (int, str)):
            return cls(Fraction(obj), 0, d)
        return cls(Fraction(str(obj.get("a", "0"))), Fraction(str(obj.get("b", "0"))), d)

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt({self.d})" if self.a else f"{self.b}*sqrt({self.d})"
