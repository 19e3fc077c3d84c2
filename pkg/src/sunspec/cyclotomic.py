"""Exact arithmetic in Z[zeta_s] = Z[x] / Phi_s(x).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(s)-1), so two
elements are equal exactly when their coefficient tuples are equal.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NotRational
from .polynomial import cyclotomic_poly


@lru_cache(maxsize=None)
def _modulus(s: int) -> tuple[int, ...]:
    return tuple(cyclotomic_poly(s).dense())


def _reduce(coeffs: Sequence[int], s: int) -> tuple[int, ...]:
    mod = _modulus(s)
    deg = len(mod) - 1
    work = list(coeffs)
    for top in range(len(work) - 1, deg - 1, -1):
        c = work[top]
        if not c:
            continue
        shift = top - deg
        for i, m in enumerate(mod):
            if m:
                work[shift + i] -= c * m
    work += [0] * (deg - len(work))
    return tuple(work[:deg])


class CyclotomicElement:
    """An element of the ring of integers of Q(zeta_s), canonical mod Phi_s."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence[int]):
        if order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", _reduce([int(c) for c in coeffs], order))

    def __setattr__(self, name, value):
        raise AttributeError("CyclotomicElement is immutable")

    @classmethod
    def from_int(cls, value: int, order: int) -> "CyclotomicElement":
        return cls(order, [value])

    @classmethod
    def zero(cls, order: int) -> "CyclotomicElement":
        return cls(order, [])

    @classmethod
    def one(cls, order: int) -> "CyclotomicElement":
        return cls(order, [1])

    @property
    def degree(self) -> int:
        """Rank of the ring over Z, i.e. deg Phi_s."""
        return len(self.coeffs)

    def _coerce(self, other) -> "CyclotomicElement":
        if isinstance(other, int):
            return CyclotomicElement.from_int(other, self.order)
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        if other.order != self.order:
            raise ValueError("mixed cyclotomic orders %d and %d" % (self.order, other.order))
        return other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == CyclotomicElement.from_int(other, self.order).coeffs
        if not isinstance(other, CyclotomicElement):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicElement":
        return CyclotomicElement(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicElement(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.order, [a * other for a in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CyclotomicElement(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclotomicElement":
        if exponent < 0:
            raise ValueError("negative exponent in cyclotomic ring")
        result = CyclotomicElement.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        """The element as a rational number, or NotRational."""
        if not self.is_rational():
            raise NotRational("%r is not rational" % (self,))
        return Fraction(self.coeffs[0])

    def to_complex(self) -> complex:
        z = cmath.exp(2j * math.pi / self.order)
        return complex(sum(c * z**i for i, c in enumerate(self.coeffs)))

    def galois_conjugate(self, a: int) -> "CyclotomicElement":
        """Apply the automorphism zeta -> zeta^a; a must be coprime to the order."""
        if math.gcd(a, self.order) != 1:
            raise ValueError("%d is not a unit mod %d" % (a, self.order))
        out = [0] * self.order
        for i, c in enumerate(self.coeffs):
            out[(i * a) % self.order] += c
        return CyclotomicElement(self.order, out)

    def conjugates(self) -> list["CyclotomicElement"]:
        """Galois orbit of this element (with repetition removed, sorted)."""
        units = [a for a in range(1, self.order + 1) if math.gcd(a, self.order) == 1]
        return sorted({self.galois_conjugate(a) for a in units}, key=lambda c: c.coeffs)

    def __repr__(self) -> str:
        return "cyc(%d; %s)" % (self.order, ", ".join(str(c) for c in self.coeffs))

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        return repr(self)


def root_of_unity(j: int, s: int) -> CyclotomicElement:
    """zeta_s^j for 0 <= j < s."""
    if s < 1:
        raise ValueError("order must be positive")
    if not 0 <= j < s:
        raise ValueError("root index %r outside [0, %d)" % (j, s))
    return CyclotomicElement(s, [0] * j + [1])
