"""ringlab: exact computation on small finite rings and algebras.

The package provides three layers:

* arithmetic: finite fields GF(p^k) (`gf`), structure-constant algebras
  over them (`algebra`), and general finite rings presented by additive
  moduli plus integer structure constants (`finring`);
* structural queries: centers, centralizers, idempotents, radicals,
  quotients, direct decompositions, and isomorphism testing
  (`structure`);
* verification: exhaustive checks of counting theorems about solutions
  of x^q = x and idempotent densities (`theorems`), and a census of all
  low-dimensional unital algebras up to isomorphism (`census`).

Everything is exact: densities are fractions, memberships are decided by
enumeration, and every verdict carries witnesses.  Hot scans run on a
compiled backend when the extension module is built, with an equivalent
pure-Python fallback selected automatically at import.
"""

from .gf import FieldSpec, enumerate_field, make_field, power_sum
from .algebra import (
    Algebra,
    enumerate_ring,
    eval_poly,
    frobenius_defect,
    make_S,
    make_algebra,
    make_matrix,
    make_product,
    make_qring,
    make_triangular,
)
from .finring import (
    FiniteRing,
    as_algebra,
    as_finite_ring,
    characteristic,
    make_finite_ring,
    make_zm,
    product_ring,
)
from .kernels import available_backends, backend_name, set_backend
from .theorems import (
    TheoremReport,
    catalog,
    density_sequence,
    solution_bound,
    verify_all,
    verify_catalog,
)
from .census import AlgebraClass, CensusResult, run_census
from .structure import (
    ElementSet,
    center,
    centralizer,
    central_defect_solutions,
    central_idempotents,
    check_isomorphism,
    decompose,
    generated_subring,
    idempotents,
    is_boolean,
    is_commutative,
    is_ideal,
    is_isomorphic,
    is_q_ring,
    iso_profile,
    jacobson_radical,
    power_solutions,
    quotient_ring,
    units,
)

__version__ = "0.1.0"

__all__ = [
    "FieldSpec",
    "make_field",
    "enumerate_field",
    "power_sum",
    "Algebra",
    "make_algebra",
    "make_S",
    "make_matrix",
    "make_triangular",
    "make_qring",
    "make_product",
    "enumerate_ring",
    "eval_poly",
    "frobenius_defect",
    "FiniteRing",
    "make_finite_ring",
    "make_zm",
    "product_ring",
    "as_finite_ring",
    "as_algebra",
    "characteristic",
    "available_backends",
    "backend_name",
    "set_backend",
    "ElementSet",
    "center",
    "centralizer",
    "central_defect_solutions",
    "central_idempotents",
    "idempotents",
    "power_solutions",
    "units",
    "jacobson_radical",
    "generated_subring",
    "is_ideal",
    "quotient_ring",
    "decompose",
    "is_commutative",
    "is_boolean",
    "is_q_ring",
    "is_isomorphic",
    "check_isomorphism",
    "iso_profile",
    "TheoremReport",
    "catalog",
    "density_sequence",
    "solution_bound",
    "verify_all",
    "verify_catalog",
    "AlgebraClass",
    "CensusResult",
    "run_census",
    "__version__",
]
