"""Characteristic polynomials kept in factored form.

A ``FactoredCharPoly`` stands for

    x^zero_exponent * prod (x^k - c)^exponent

with constants c in a cyclotomic ring. Exponents routinely exceed any machine
word, so expansion into coefficients is opt-in and capped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .cyclotomic import CyclotomicElement
from .errors import DegreeCapExceeded, IntegralityViolation, NotRational
from .polynomial import IntPolynomial

DEFAULT_DEGREE_CAP = 100_000


@dataclass(frozen=True)
class FactoredCharPoly:
    k: int
    order: int
    zero_exponent: int
    factors: tuple[tuple[CyclotomicElement, int], ...] = field(default=())

    def __post_init__(self):
        if self.zero_exponent < 0:
            raise IntegralityViolation("negative zero exponent %r" % self.zero_exponent)
        seen = set()
        for c, e in self.factors:
            if c.order != self.order:
                raise ValueError("factor constant of order %d in ring of order %d" % (c.order, self.order))
            if not c:
                raise ValueError("zero constants belong in zero_exponent")
            if not isinstance(e, int) or e < 0:
                raise IntegralityViolation("exponent %r is not a non-negative integer" % (e,))
            if c in seen:
                raise ValueError("duplicate factor constant %r" % (c,))
            seen.add(c)

    @property
    def degree(self) -> int:
        return self.zero_exponent + self.k * sum(e for _, e in self.factors)

    def exponent_of(self, c: CyclotomicElement | int) -> int:
        """Exponent of the factor (x^k - c); 0 if absent."""
        if isinstance(c, int):
            c = CyclotomicElement.from_int(c, self.order)
        for const, e in self.factors:
            if const == c:
                return e
        return 0

    def is_galois_closed(self) -> bool:
        table = dict(self.factors)
        for c, e in self.factors:
            for conj in c.conjugates():
                if table.get(conj) != e:
                    return False
        return True

    def sorted_factors(self) -> list[tuple[CyclotomicElement, int]]:
        """Rational constants ascending, then irrational ones with conjugates adjacent."""

        def key(item):
            c, _ = item
            if c.is_rational():
                return (0, c.coeffs[0], ())
            return (1, 0, c.conjugates()[0].coeffs, c.coeffs)

        return sorted(self.factors, key=key)

    def render(self, var: str = "x") -> str:
        parts = []
        if self.zero_exponent == 1:
            parts.append(var)
        elif self.zero_exponent > 1:
            parts.append("%s^%d" % (var, self.zero_exponent))
        power = var if self.k == 1 else "%s^%d" % (var, self.k)
        for c, e in self.sorted_factors():
            if e == 0:
                continue
            if c.is_rational():
                v = c.coeffs[0]
                body = "(%s %s %d)" % (power, "-" if v > 0 else "+", abs(v))
            else:
                body = "(%s - %r)" % (power, c)
            parts.append(body if e == 1 else "%s^%d" % (body, e))
        return " * ".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.render()


def factored_power_sum(f: FactoredCharPoly, d: int) -> Fraction:
    """Sum of d-th powers of all roots, read off the factored form.

    The k roots of x^k - c contribute k * c^(d/k) when k | d and cancel
    otherwise; the bare power of x contributes nothing.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if d % f.k:
        return Fraction(0)
    total = CyclotomicElement.zero(f.order)
    for c, e in f.factors:
        total = total + (c ** (d // f.k)) * e
    return total.to_rational() * f.k


def _mul_dense(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pow_dense(a: list[int], e: int) -> list[int]:
    result = [1]
    while e:
        if e & 1:
            result = _mul_dense(result, a)
        e >>= 1
        if e:
            a = _mul_dense(a, a)
    return result


def _cyc_poly_mul(a: list[CyclotomicElement], b: list[CyclotomicElement]) -> list[CyclotomicElement]:
    zero = CyclotomicElement.zero(a[0].order)
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return out


def _to_int(c: CyclotomicElement) -> int:
    q = c.to_rational()
    if q.denominator != 1:
        raise NotRational("non-integral coefficient %s" % q)
    return q.numerator


def expand_factored(f: FactoredCharPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> IntPolynomial:
    """Multiply out the factored form into an integer polynomial.

    Factors are grouped into Galois orbits; each orbit's product is formed in
    the cyclotomic ring and must come out rational before it is raised to its
    exponent over the integers. Orbits whose members carry unequal exponents
    are expanded entirely in the cyclotomic ring.
    """
    if f.degree > degree_cap:
        raise DegreeCapExceeded("degree %d exceeds cap %d" % (f.degree, degree_cap))
    table = dict(f.factors)
    done: set[CyclotomicElement] = set()
    in_y = [1]  # polynomial in y = x^k
    leftovers: list[tuple[CyclotomicElement, int]] = []
    for c, e in f.sorted_factors():
        if c in done or e == 0:
            continue
        orbit = [conj for conj in c.conjugates() if conj in table]
        done.update(orbit)
        if len(orbit) != len(c.conjugates()) or len({table[o] for o in orbit}) != 1:
            leftovers.extend((o, table[o]) for o in orbit)
            continue
        one = CyclotomicElement.one(f.order)
        prod = [one]
        for o in orbit:
            prod = _cyc_poly_mul(prod, [-o, one])
        in_y = _mul_dense(in_y, _pow_dense([_to_int(x) for x in prod], e))
    if leftovers:
        one = CyclotomicElement.one(f.order)
        acc = [CyclotomicElement.from_int(x, f.order) for x in in_y]
        for c, e in leftovers:
            binom = [comb(e, i) * (-c) ** (e - i) for i in range(e + 1)]
            acc = _cyc_poly_mul(acc, binom)
        in_y = [_to_int(x) for x in acc]
    terms = {f.zero_exponent + f.k * i: a for i, a in enumerate(in_y) if a}
    return IntPolynomial(terms)


def numeric_power_sum(poly: IntPolynomial, d: int) -> complex:
    """Sum of d-th powers of the numerically computed roots (validation only)."""
    import numpy as np

    coeffs = [float(c) for c in reversed(poly.dense())]
    roots = np.roots(coeffs)
    return complex(np.sum(roots.astype(complex) ** d))
