"""Sparse univariate polynomials with integer coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping


class IntPolynomial:
    """Immutable polynomial stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            if e < 0:
                raise ValueError("negative exponent %d" % e)
            if c:
                clean[int(e)] = int(c)
        self._terms = dict(sorted(clean.items()))

    @classmethod
    def from_dense(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from coefficients listed from the constant term upwards."""
        return cls(dict(enumerate(coeffs)))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return max(self._terms) if self._terms else -1

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.degree] if self._terms else 0

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def dense(self) -> list[int]:
        return [self.coeff(e) for e in range(self.degree + 1)]

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divmod_monic(self, divisor: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division by a monic divisor; stays within the integers."""
        if divisor.leading_coefficient != 1:
            raise ValueError("divisor must be monic")
        rem = dict(self._terms)
        quo: dict[int, int] = {}
        dd = divisor.degree
        for e in range(self.degree, dd - 1, -1):
            c = rem.get(e, 0)
            if not c:
                continue
            shift = e - dd
            quo[shift] = c
            for de, dc in divisor._terms.items():
                rem[de + shift] = rem.get(de + shift, 0) - c * dc
        return IntPolynomial(quo), IntPolynomial(rem)

    def exact_div(self, divisor: "IntPolynomial") -> "IntPolynomial":
        q, r = self.divmod_monic(divisor)
        if not r.is_zero():
            raise ArithmeticError("division leaves remainder %s" % r)
        return q

    def __call__(self, x):
        return sum(c * x**e for e, c in self._terms.items())

    def __repr__(self) -> str:
        return "IntPolynomial(%r)" % self._terms

    def __str__(self) -> str:
        return format_poly(self._terms)


def format_poly(terms: Mapping[int, int], var: str = "x") -> str:
    """Render like ``x^5 - 3x^3 + 2``, highest power first."""
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else "%s^%d" % (var, e)
            body = mono if a == 1 else "%d%s" % (a, mono)
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append("%s %s" % (sign, body))
    return " ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic_poly(s: int) -> IntPolynomial:
    """The s-th cyclotomic polynomial, by exact recursive division of x^s - 1."""
    if s < 1:
        raise ValueError("cyclotomic order must be positive, got %r" % s)
    poly = IntPolynomial({s: 1, 0: -1})
    for d in range(1, s):
        if s % d == 0:
            poly = poly.exact_div(cyclotomic_poly(d))
    return poly
