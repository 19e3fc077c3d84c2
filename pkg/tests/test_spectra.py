import cmath
import itertools
import math
from collections import Counter
from fractions import Fraction

import pytest

from sunspec.cyclotomic import CyclotomicElement, root_of_unity
from sunspec.errors import InvalidParams, XiNotAdmissible, ZeroSum
from sunspec.factored import factored_power_sum
from sunspec.hypergraph import SunflowerParams, eigen_residual, make_sunflower
from sunspec.spectra import (
    EigvecRecipe,
    XiClass,
    _aggregate,
    admissible_nonzero_classes,
    char_poly_factored,
    class_sum,
    degree_of_charpoly,
    eigenvalue_factors,
    eigvec_construct,
    k_times_mu_zero,
    multiplicity_mu,
    numeric_eigenvalues,
    spectral_moment_closed,
    spectral_radius,
    sum_nonzero_mu,
    xi_classes,
)

from conftest import small_params

GRID = small_params()


def brute_xi(s, p):
    """Every xi in Xi^p as a tuple of None / root index, grouped into count vectors."""
    values = [None] + list(range(s))
    groups = Counter()
    for xi in itertools.product(values, repeat=p):
        counts = [0] * s
        for j in xi:
            if j is not None:
                counts[j] += 1
        groups[tuple(counts)] += 1
    return groups


def numeric_xi_sum(xi, s):
    return sum(cmath.exp(2j * math.pi * j / s) for j in xi if j is not None)


def test_xi_classes_examples():
    cls = xi_classes(1, 2)
    assert [(c.support_size, c.class_size) for c in cls] == [(0, 1), (1, 2), (2, 1)]
    cls = xi_classes(2, 2)
    assert [c.counts for c in cls] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert [c.class_size for c in cls] == [1, 2, 2, 1, 2, 1]
    cls = xi_classes(3, 1)
    assert len(cls) == 4 and sum(c.class_size for c in cls) == 4


@pytest.mark.parametrize("s, p", [(s, p) for s in range(1, 5) for p in range(1, 7)])
def test_class_partition_matches_enumeration(s, p):
    classes = xi_classes(s, p)
    assert sum(c.class_size for c in classes) == (s + 1) ** p
    assert {c.counts: c.class_size for c in classes} == dict(brute_xi(s, p))


def test_class_sum_examples():
    assert class_sum(XiClass(1, 2, (2,))) == 2
    assert class_sum(XiClass(2, 2, (1, 1))) == 0
    assert class_sum(XiClass(3, 3, (1, 1, 1))) == 0


@pytest.mark.parametrize("s, p", [(2, 3), (3, 3), (4, 2), (5, 2)])
def test_class_sum_matches_numeric(s, p):
    for cls in xi_classes(s, p):
        rep = cls.representative()
        assert abs(class_sum(cls).to_complex() - numeric_xi_sum(rep, s)) < 1e-9


def ints(values):
    return sorted(c.to_rational() for c in values)


def test_eigenvalue_factors_examples():
    assert ints(c for c, _ in eigenvalue_factors(SunflowerParams(3, 1, 2))) == [0, 1, 2]
    f = eigenvalue_factors(SunflowerParams(3, 2, 2))
    assert ints(c for c, _ in f) == [0, 4]
    assert {tag for _, tag in f} == {"b"}
    assert ints(c for c, _ in eigenvalue_factors(SunflowerParams(4, 2, 1))) == [0, 1]
    with pytest.raises(InvalidParams):
        eigenvalue_factors(SunflowerParams(2, 1, 3))


def brute_eigen_factor_values(P):
    """Distinct (e^T xi)^s over explicit xi vectors, as rounded complex numbers."""
    out = set()
    for xi in itertools.product([None] + list(range(P.s)), repeat=P.p):
        t = sum(j is not None for j in xi)
        if P.s == P.k - 1 and t not in (0, P.p):
            continue
        z = numeric_xi_sum(xi, P.s) ** P.s
        out.add((round(z.real, 8) + 0.0, round(z.imag, 8) + 0.0))
    return out


@pytest.mark.parametrize("P", [P for P in GRID if P.p <= 3], ids=repr)
def test_eigenvalue_factors_match_explicit_vectors(P):
    got = {(round(c.to_complex().real, 8) + 0.0, round(c.to_complex().imag, 8) + 0.0) for c, _ in eigenvalue_factors(P)}
    assert got == brute_eigen_factor_values(P)


def test_mu_examples():
    assert multiplicity_mu(SunflowerParams(3, 1, 2), XiClass(1, 2, (1,))) == 3
    assert multiplicity_mu(SunflowerParams(3, 2, 2), XiClass(2, 2, (1, 1))) == Fraction(3, 2)
    assert multiplicity_mu(SunflowerParams(3, 2, 2), XiClass(2, 2, (1, 0))) == 0
    with pytest.raises(ValueError):
        multiplicity_mu(SunflowerParams(3, 1, 2), XiClass(1, 2, (0,)))


def test_mu_zero_is_fractional_but_k_times_integral():
    P = SunflowerParams(3, 1, 2)
    assert k_times_mu_zero(P) / 3 == Fraction(35, 3)
    assert k_times_mu_zero(P) == 35


def test_char_poly_examples():
    assert str(char_poly_factored(SunflowerParams(2, 1, 3))) == "x^2 * (x^2 - 3)"
    f = char_poly_factored(SunflowerParams(3, 1, 2))
    assert str(f) == "x^35 * (x^3 - 1)^6 * (x^3 - 2)^9" and f.degree == 80
    f = char_poly_factored(SunflowerParams(3, 2, 2))
    assert str(f) == "x^23 * (x^3 - 4)^3" and f.degree == 32


@pytest.mark.parametrize("p", range(1, 7))
def test_star_graph_route_agrees_with_general_formula(p):
    P = SunflowerParams(2, 1, p)
    assert char_poly_factored(P) == _aggregate(P)


def test_degree_examples():
    assert degree_of_charpoly(SunflowerParams(3, 1, 2)) == 80
    assert degree_of_charpoly(SunflowerParams(3, 2, 2)) == 32
    for p in range(1, 6):
        assert degree_of_charpoly(SunflowerParams(2, 1, p)) == p + 1


def test_moment_examples():
    assert spectral_moment_closed(SunflowerParams(3, 1, 2), 4) == 0
    assert spectral_moment_closed(SunflowerParams(3, 1, 2), 3) == 72
    assert spectral_moment_closed(SunflowerParams(3, 2, 2), 3) == 36
    assert spectral_moment_closed(SunflowerParams(3, 1, 1), 3) == 9


def test_k_zero_iff_s_is_k_minus_1():
    for k in range(2, 9):
        for s in range(1, k):
            K = SunflowerParams(k, s, 1).K
            assert (K == 0) == (s == k - 1)
            assert K >= 0


@pytest.mark.parametrize("P", GRID, ids=repr)
def test_grid_invariants(P):
    f = char_poly_factored(P)
    assert f.degree == degree_of_charpoly(P)
    assert f.is_galois_closed()
    k, s, p = P.k, P.s, P.p
    assert sum_nonzero_mu(P) == Fraction(k ** (s - 1), s) * ((k - 1) ** (p * (k - s)) - P.K**p)
    for d in range(k, 4 * k + 1, k):
        assert spectral_moment_closed(P, d) == factored_power_sum(f, d)
    keys = {c for c, _ in eigenvalue_factors(P)}
    assert keys == {c for c, _ in f.factors} | {CyclotomicElement.zero(s)}
    if s == k - 1:
        for cls in xi_classes(s, p):
            if 0 < cls.support_size < p:
                assert multiplicity_mu(P, cls) == 0


def test_radius_examples():
    rho, m = spectral_radius(SunflowerParams(3, 1, 2))
    assert abs(rho - 2 ** (1 / 3)) < 1e-15 and m == 9
    rho, m = spectral_radius(SunflowerParams(3, 2, 2))
    assert abs(rho - 2 ** (2 / 3)) < 1e-15 and m == 3
    assert spectral_radius(SunflowerParams(3, 1, 1)) == (1.0, 3)
    assert spectral_radius(SunflowerParams(2, 1, 4)) == (2.0, 1)


@pytest.mark.parametrize("P", GRID, ids=repr)
def test_radius_is_largest_modulus(P):
    rho, _ = spectral_radius(P)
    top = max(abs(z) for z, _ in numeric_eigenvalues(char_poly_factored(P)))
    assert abs(top - rho) <= 1e-12 * rho


def test_eigvec_example_s1():
    P = SunflowerParams(3, 1, 2)
    lam, x = eigvec_construct(P, EigvecRecipe((0, 0)))
    c = 2 ** (-1 / 3)
    assert abs(lam - 2 ** (1 / 3)) < 1e-12
    for got, want in zip(x, [1, c, c, c, c]):
        assert abs(got - want) < 1e-12


def test_eigvec_errors():
    with pytest.raises(XiNotAdmissible):
        eigvec_construct(SunflowerParams(3, 2, 2), EigvecRecipe((0, None)))
    # (1, -1) has full support, so it is admissible but sums to zero
    with pytest.raises(ZeroSum):
        eigvec_construct(SunflowerParams(3, 2, 2), EigvecRecipe((0, 1)))
    for kps in [(3, 1, 2), (4, 2, 3), (3, 2, 1)]:
        P = SunflowerParams(*kps)
        with pytest.raises(ZeroSum):
            eigvec_construct(P, EigvecRecipe((None,) * P.p))
    with pytest.raises(InvalidParams):
        eigvec_construct(SunflowerParams(3, 1, 2), EigvecRecipe((0,)))


@pytest.mark.parametrize("P", [P for P in GRID if P.p <= 3], ids=repr)
def test_every_kth_root_has_recipe_eigenvector(P):
    h = make_sunflower(P)
    for cls in admissible_nonzero_classes(P):
        for b in range(P.k):
            lam, x = eigvec_construct(P, EigvecRecipe(cls.representative(), lambda_branch=b))
            assert abs(lam**P.k - (class_sum(cls) ** P.s).to_complex()) < 1e-9 * (1 + abs(lam) ** P.k)
            assert eigen_residual(h, lam, x) <= 1e-9


def test_eigvec_other_branches():
    P = SunflowerParams(4, 2, 3)
    h = make_sunflower(P)
    for mb in range(4):
        for gb in itertools.product(range(4), repeat=3):
            lam, x = eigvec_construct(P, EigvecRecipe((0, 1, 0), mu_branch=mb, gamma_branches=gb))
            assert eigen_residual(h, lam, x) <= 1e-9
