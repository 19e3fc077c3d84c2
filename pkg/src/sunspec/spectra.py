"""Closed-form spectra of sunflowers S(k, s, p).

Vectors xi whose coordinates are 0 or s-th roots of unity are handled by
orbit: a ``XiClass`` records how many coordinates equal each root, which is
all that the coordinate sum and the support size depend on.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cyclotomic import CyclotomicElement, root_of_unity
from .errors import IntegralityViolation, InvalidParams, VerificationError, XiNotAdmissible, ZeroSum
from .factored import FactoredCharPoly
from .hypergraph import SunflowerParams


@dataclass(frozen=True)
class XiClass:
    s: int
    p: int
    counts: tuple[int, ...]

    @property
    def support_size(self) -> int:
        return sum(self.counts)

    @property
    def zeros(self) -> int:
        return self.p - self.support_size

    @property
    def class_size(self) -> int:
        t = self.support_size
        size = math.comb(self.p, t) * math.factorial(t)
        for c in self.counts:
            size //= math.factorial(c)
        return size

    def representative(self) -> tuple[int | None, ...]:
        """One member of the class: root indices first, then zeros (None)."""
        out: list[int | None] = []
        for j, c in enumerate(self.counts):
            out += [j] * c
        return tuple(out + [None] * self.zeros)

    def is_full_or_empty(self) -> bool:
        return self.support_size in (0, self.p)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of total into parts, first part descending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def xi_classes(s: int, p: int) -> list[XiClass]:
    """All orbits of Xi^p, ordered by support size."""
    if s < 1 or p < 1:
        raise InvalidParams("s and p must be positive")
    return [XiClass(s, p, c) for t in range(p + 1) for c in _compositions(t, s)]


def class_sum(cls: XiClass) -> CyclotomicElement:
    """The coordinate sum e^T xi of any member of the class."""
    total = CyclotomicElement.zero(cls.s)
    for j, c in enumerate(cls.counts):
        if c:
            total = total + root_of_unity(j, cls.s) * c
    return total


def _admissible(params: SunflowerParams, cls: XiClass) -> bool:
    return params.s < params.k - 1 or cls.is_full_or_empty()


def eigenvalue_factors(params: SunflowerParams) -> list[tuple[CyclotomicElement, str]]:
    """Distinct c such that lam is an eigenvalue iff lam^k = c for one of them."""
    if params.k < 3:
        raise InvalidParams("eigenvalue characterization needs k >= 3")
    tag = "a" if params.s < params.k - 1 else "b"
    values = {
        class_sum(cls) ** params.s
        for cls in xi_classes(params.s, params.p)
        if _admissible(params, cls)
    }
    return [(c, tag) for c in sorted(values, key=lambda c: c.coeffs)]


def multiplicity_mu(params: SunflowerParams, cls: XiClass) -> Fraction:
    """Per-vector exponent of (x^k - (e^T xi)^s) for nonzero xi; may be fractional."""
    t = cls.support_size
    if t == 0:
        raise ValueError("the zero class is handled through the zero exponent")
    k, s, p = params.k, params.s, params.p
    return Fraction(params.K ** (p - t) * k ** (t * (k - s - 1) + s - 1), s)


def k_times_mu_zero(params: SunflowerParams) -> Fraction:
    """k * mu(0), the contribution of xi = 0 to the power of bare x."""
    k, s, p, n = params.k, params.s, params.p, params.n
    return n * (k - 1) ** (n - 1) - Fraction(k**s, s) * ((k - 1) ** (p * (k - s)) - params.K**p)


def degree_of_charpoly(params: SunflowerParams) -> int:
    n = params.n
    return n * (params.k - 1) ** (n - 1)


def _as_nonneg_int(q: Fraction, what: str) -> int:
    if q.denominator != 1 or q < 0:
        raise IntegralityViolation("%s = %s is not a non-negative integer" % (what, q))
    return q.numerator


def char_poly_factored(params: SunflowerParams) -> FactoredCharPoly:
    """Factored characteristic polynomial with exponents aggregated per factor value."""
    k, s, p = params.k, params.s, params.p
    if k == 2:
        return FactoredCharPoly(2, 1, p - 1, ((CyclotomicElement.from_int(p, 1), 1),))
    return _aggregate(params)


def _aggregate(params: SunflowerParams) -> FactoredCharPoly:
    k, s = params.k, params.s
    exponents: dict[CyclotomicElement, Fraction] = {}
    zero_part = k_times_mu_zero(params)
    if zero_part.denominator != 1:
        raise IntegralityViolation("k * mu(0) = %s is not an integer" % zero_part)
    for cls in xi_classes(s, params.p):
        if cls.support_size == 0:
            continue
        weight = cls.class_size * multiplicity_mu(params, cls)
        c = class_sum(cls) ** s
        if c:
            exponents[c] = exponents.get(c, Fraction(0)) + weight
        else:
            zero_part += k * weight
    factors = []
    for c, e in exponents.items():
        e_int = _as_nonneg_int(e, "exponent of (x^%d - %r)" % (k, c))
        if e_int:
            factors.append((c, e_int))
    factors.sort(key=lambda item: item[0].coeffs)
    poly = FactoredCharPoly(k, s, _as_nonneg_int(zero_part, "zero exponent"), tuple(factors))
    expected = degree_of_charpoly(params)
    if poly.degree != expected:
        raise IntegralityViolation("degree %d != %d" % (poly.degree, expected))
    return poly


def spectral_moment_closed(params: SunflowerParams, d: int) -> int:
    """d-th spectral moment from the class-grouped closed form."""
    if d < 1:
        raise InvalidParams("d must be positive")
    k, s, p = params.k, params.s, params.p
    if d % k:
        return 0
    if k == 2:
        return 2 * p ** (d // 2)
    K = params.K
    e = s * d // k
    total = CyclotomicElement.zero(s)
    for cls in xi_classes(s, p):
        t = cls.support_size
        weight = cls.class_size * K ** (p - t) * k ** (t * (k - s - 1) + s)
        if weight:
            total = total + (class_sum(cls) ** e) * weight
    value = total.to_rational() / s
    if value.denominator != 1:
        raise IntegralityViolation("S_%d = %s is not an integer" % (d, value))
    return value.numerator


def spectral_radius(params: SunflowerParams) -> tuple[float, int]:
    """(p^(s/k), k^(p(k-s)+s-1-p)), cross-checked against the factored polynomial."""
    k, s, p = params.k, params.s, params.p
    rho = p ** (s / k)
    mult = k ** (p * (k - s) + s - 1 - p)
    found = char_poly_factored(params).exponent_of(p**s)
    if found != mult:
        raise VerificationError(
            "factor x^%d - %d has exponent %d, expected %d" % (k, p**s, found, mult)
        )
    return rho, mult


@dataclass(frozen=True)
class EigvecRecipe:
    """Inputs for the explicit eigenvector construction.

    ``xi`` lists, per petal, either None (zero coordinate) or j for zeta_s^j.
    Branch indices pick which k-th root is used: root * exp(2 pi i b / k).
    """

    xi: tuple[int | None, ...]
    lambda_branch: int = 0
    mu_branch: int = 0
    gamma_branches: tuple[int, ...] | None = None


def _kth_root(z: complex, k: int, branch: int) -> complex:
    if z == 0:
        return 0j
    return cmath.exp(cmath.log(z) / k) * cmath.exp(2j * math.pi * branch / k)


def _unit(j: int, s: int) -> complex:
    return cmath.exp(2j * math.pi * j / s)


def eigvec_construct(params: SunflowerParams, recipe: EigvecRecipe) -> tuple[complex, list[complex]]:
    """Build (lam, x) with lam^k = (e^T xi)^s from the petal-wise recipe."""
    k, s, p = params.k, params.s, params.p
    xi = tuple(recipe.xi)
    if len(xi) != p:
        raise InvalidParams("xi needs %d coordinates, got %d" % (p, len(xi)))
    for j in xi:
        if j is not None and not 0 <= j < s:
            raise InvalidParams("root index %r outside [0, %d)" % (j, s))
    counts = [0] * s
    for j in xi:
        if j is not None:
            counts[j] += 1
    cls = XiClass(s, p, tuple(counts))
    if s == k - 1 and not cls.is_full_or_empty():
        raise XiNotAdmissible(
            "s = k-1 requires xi with empty or full support (Xi_0^p); got support %d of %d"
            % (cls.support_size, p)
        )
    if not class_sum(cls):
        raise ZeroSum("coordinate sum of xi is zero; eigenvalue 0 has no recipe eigenvector")
    gb = recipe.gamma_branches or (0,) * p
    if len(gb) != p:
        raise InvalidParams("need one gamma branch per petal")

    total = sum(_unit(j, s) for j in xi if j is not None)
    mu = _kth_root(total, k, recipe.mu_branch)
    lam = mu**s * cmath.exp(2j * math.pi * recipe.lambda_branch / k)
    x = [0j] * params.n
    for v in params.seeds():
        x[v - 1] = 1 + 0j
    for i in range(1, p + 1):
        j = xi[i - 1]
        gamma = 0j if j is None else _kth_root(_unit(j, s), k, gb[i - 1])
        petal = params.petal(i)
        x[petal[0] - 1] = lam * gamma ** (s + 1) / mu ** (s + 1)
        for v in petal[1:]:
            x[v - 1] = gamma / mu
    return lam, x


def admissible_nonzero_classes(params: SunflowerParams) -> list[XiClass]:
    """Classes for which the eigenvector recipe applies."""
    return [
        cls
        for cls in xi_classes(params.s, params.p)
        if cls.support_size and _admissible(params, cls) and class_sum(cls)
    ]


def numeric_eigenvalues(poly: FactoredCharPoly) -> list[tuple[complex, int]]:
    """All distinct eigenvalues with multiplicities, as floating-point numbers."""
    out: list[tuple[complex, int]] = []
    if poly.zero_exponent:
        out.append((0j, poly.zero_exponent))
    for c, e in poly.sorted_factors():
        z = c.to_complex()
        for b in range(poly.k):
            out.append((_kth_root(z, poly.k, b), e))
    return out


def sum_nonzero_mu(params: SunflowerParams) -> Fraction:
    """Sum of class_size * mu over nonzero classes."""
    return sum(
        (cls.class_size * multiplicity_mu(params, cls) for cls in xi_classes(params.s, params.p) if cls.support_size),
        Fraction(0),
    )

