import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sunspec.errors import InvalidParams
from sunspec.hypergraph import SunflowerParams, UniformHypergraph, eigen_residual, make_sunflower, validate
from sunspec.spectra import EigvecRecipe, eigvec_construct


@pytest.mark.parametrize(
    "kps, n, edges",
    [
        ((3, 1, 2), 5, [(1, 2, 3), (1, 4, 5)]),
        ((3, 2, 2), 4, [(1, 2, 3), (1, 2, 4)]),
        ((4, 2, 3), 8, [(1, 2, 3, 4), (1, 2, 5, 6), (1, 2, 7, 8)]),
    ],
)
def test_make_sunflower_examples(kps, n, edges):
    h = make_sunflower(SunflowerParams(*kps))
    assert h.n == n
    assert list(h.edges) == edges


@pytest.mark.parametrize("bad", [(3, 3, 2), (3, 0, 2), (3, 1, 0), (1, 1, 1), (4, 4, 1)])
def test_invalid_params(bad):
    with pytest.raises(InvalidParams):
        SunflowerParams(*bad)


def test_derived_quantities():
    P = SunflowerParams(3, 1, 2)
    assert (P.n, P.K) == (5, 1)
    assert SunflowerParams(3, 2, 2).K == 0
    assert SunflowerParams(4, 1, 1).K == 27 - 16


params_st = st.integers(2, 6).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(1, k - 1), st.integers(1, 6))
)


@given(params_st)
def test_sunflower_structure(kps):
    P = SunflowerParams(*kps)
    h = make_sunflower(P)
    assert validate(h) is None
    assert len(h.edges) == P.p and h.n == P.n
    seeds = set(range(1, P.s + 1))
    for i, a in enumerate(h.edges):
        for b in h.edges[i + 1:]:
            assert set(a) & set(b) == seeds
    for v in range(P.s + 1, P.n + 1):
        assert h.degree(v) == 1


def test_validate_reports():
    assert validate(make_sunflower(SunflowerParams(3, 1, 2))) is None
    assert validate(UniformHypergraph(3, 4, ((1, 2),))).startswith("edge size")
    assert validate(UniformHypergraph(3, 4, ((1, 2, 3), (1, 2, 3)))).startswith("duplicate")
    assert validate(UniformHypergraph(3, 3, ((1, 2, 4),))).startswith("vertex range")


def test_residual_zero_eigenvalue():
    h = make_sunflower(SunflowerParams(3, 1, 2))
    assert eigen_residual(h, 0, [0, 0, 0, 0, 1]) == 0


def test_residual_star_graph():
    h = make_sunflower(SunflowerParams(2, 1, 3))
    r3 = math.sqrt(3)
    assert eigen_residual(h, r3, [r3, 1, 1, 1]) <= 1e-12
    assert eigen_residual(h, -r3, [-r3, 1, 1, 1]) <= 1e-12
    assert eigen_residual(h, 1.0, [r3, 1, 1, 1]) > 0.1


def test_residual_recipe_vector():
    P = SunflowerParams(3, 1, 2)
    lam, x = eigvec_construct(P, EigvecRecipe((0, 0)))
    assert abs(lam - 2 ** (1 / 3)) < 1e-12
    assert eigen_residual(make_sunflower(P), lam, x) <= 1e-9


def test_residual_errors():
    h = make_sunflower(SunflowerParams(3, 1, 2))
    with pytest.raises(ValueError):
        eigen_residual(h, 1, [0] * 5)
    with pytest.raises(ValueError):
        eigen_residual(h, 1, [1] * 4)


@pytest.mark.parametrize("kps", [(3, 1, 2), (4, 2, 3), (5, 3, 2), (4, 1, 2)])
def test_residual_invariant_under_vector_scaling(kps):
    """Both sides of the eigen-equation are homogeneous of degree k-1 in x."""
    P = SunflowerParams(*kps)
    h = make_sunflower(P)
    lam, x = eigvec_construct(P, EigvecRecipe((0,) * P.p))
    assert eigen_residual(h, lam, x) <= 1e-9
    for j in range(P.k - 2):
        t = cmath.exp(2j * math.pi * j / (P.k - 2))
        assert eigen_residual(h, lam, [t * v for v in x]) <= 1e-9
    assert eigen_residual(h, lam, [0.37 * v for v in x]) <= 1e-9
