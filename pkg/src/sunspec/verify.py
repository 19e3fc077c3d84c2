"""The invariant suite behind ``sunspec verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicElement
from .errors import IntegralityViolation, NotRational, VerificationError
from .factored import FactoredCharPoly, factored_power_sum
from .hypergraph import SunflowerParams, eigen_residual, make_sunflower
from .spectra import (
    EigvecRecipe,
    admissible_nonzero_classes,
    char_poly_factored,
    degree_of_charpoly,
    eigenvalue_factors,
    eigvec_construct,
    numeric_eigenvalues,
    spectral_moment_closed,
    spectral_radius,
    sum_nonzero_mu,
)
from .trace import (
    enumerate_profiles,
    spectral_moment_oracle,
    subsunflower_supports,
    verify_lemma35b,
    verify_prop34,
)

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


def _moment_checks(params: SunflowerParams, poly: FactoredCharPoly, max_d: int, cap: int) -> list[Check]:
    h = make_sunflower(params)
    out = []
    for d in range(1, max_d + 1):
        closed = spectral_moment_closed(params, d)
        factored = factored_power_sum(poly, d)
        oracle = spectral_moment_oracle(h, d, cap)
        ok = closed == factored == oracle
        if d % params.k:
            ok = ok and closed == 0
        out.append(
            Check(
                "moment d=%d" % d,
                ok,
                "closed=%s factored=%s oracle=%s" % (closed, factored, oracle),
            )
        )
    return out


def _structure_checks(params: SunflowerParams, max_d: int, cap: int) -> list[Check]:
    k = params.k
    out = []
    for d in range(k, max_d + 1, k):
        report = verify_prop34(params, d, cap)
        out.append(Check("prop34 d=%d" % d, report.ok, "; ".join(report.counterexamples[:3])))
        try:
            sizes = subsunflower_supports(params, d, cap)
            out.append(Check("subsunflower supports d=%d" % d, True, str(sorted(sizes))))
        except VerificationError as exc:
            out.append(Check("subsunflower supports d=%d" % d, False, str(exc)))
        bad = []
        for t in range(1, min(d // k, params.p) + 1):
            for profile in enumerate_profiles(k, params.s, d, t):
                rep = verify_lemma35b(profile)
                if not rep.ok:
                    bad.append(repr(rep))
        out.append(Check("lemma35b d=%d" % d, not bad, "; ".join(bad[:3])))
    return out


def _eigen_checks(params: SunflowerParams, poly: FactoredCharPoly) -> list[Check]:
    out = []
    if params.k >= 3:
        keys = {c for c, _ in eigenvalue_factors(params)}
        have = {c for c, _ in poly.factors}
        have.add(CyclotomicElement.zero(params.s))
        detail = "%s vs %s" % (sorted(map(repr, keys)), sorted(map(repr, have)))
        out.append(Check("eigenvalue factors match char poly", keys == have, detail))
    h = make_sunflower(params)
    worst = 0.0
    for cls in admissible_nonzero_classes(params):
        lam, x = eigvec_construct(params, EigvecRecipe(cls.representative()))
        worst = max(worst, eigen_residual(h, lam, x))
    out.append(Check("eigenvector residuals", worst <= RESIDUAL_TOL, "max residual %.3e" % worst))

    try:
        rho, mult = spectral_radius(params)
        others = [abs(z) for z, _ in numeric_eigenvalues(poly)]
        top = max(others)
        ok = abs(top - rho) <= 1e-12 * rho
        out.append(Check("spectral radius", ok, "rho=%.15g max|lambda|=%.15g multiplicity=%d" % (rho, top, mult)))
    except VerificationError as exc:
        out.append(Check("spectral radius", False, str(exc)))
    return out


def run_checks(params: SunflowerParams, max_d: int, cap: int) -> list[Check]:
    """Every cross-check applicable to params; raises only on resource caps."""
    checks = []
    try:
        poly = char_poly_factored(params)
    except (IntegralityViolation, NotRational) as exc:
        return [Check("char poly integrality", False, str(exc))]
    expected = degree_of_charpoly(params)
    checks.append(Check("degree identity", poly.degree == expected, "%d vs %d" % (poly.degree, expected)))
    checks.append(Check("galois closure", poly.is_galois_closed()))
    if params.k >= 3:
        k, s, p = params.k, params.s, params.p
        total = sum_nonzero_mu(params)
        closed = Fraction(k ** (s - 1), s) * ((k - 1) ** (p * (k - s)) - params.K**p)
        checks.append(Check("total nonzero multiplicity", total == closed, "%s vs %s" % (total, closed)))
    checks += _moment_checks(params, poly, max_d, cap)
    checks += _structure_checks(params, max_d, cap)
    checks += _eigen_checks(params, poly)
    return checks
