"""Exact spectra of sunflower hypergraphs S(k, s, p)."""

__version__ = "0.1.0"

from .cyclotomic import CyclotomicElement, root_of_unity
from .factored import FactoredCharPoly, expand_factored, factored_power_sum
from .hypergraph import SunflowerParams, UniformHypergraph, eigen_residual, make_sunflower, validate
from .linalg import ff_determinant
from .polynomial import IntPolynomial, cyclotomic_poly
from .spectra import (
    EigvecRecipe,
    XiClass,
    char_poly_factored,
    class_sum,
    degree_of_charpoly,
    eigenvalue_factors,
    eigvec_construct,
    multiplicity_mu,
    spectral_moment_closed,
    spectral_radius,
    xi_classes,
)
from .trace import (
    EulerianProfile,
    MultiDigraph,
    RootedEdgeSeq,
    arborescence_count,
    build_Df,
    build_DmQ,
    is_balanced,
    spectral_moment_oracle,
    subsunflower_supports,
    verify_lemma35b,
    verify_prop34,
)

cyc_root_of_unity = root_of_unity
