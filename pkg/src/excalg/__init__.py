"""Exact computations with composition algebras, trivectors, and the
exceptional simple Lie algebras.

Everything is exact arithmetic over Q and Q(i): octonions and their
Cayley-Dickson relatives, the orbit classification of trivectors in up to
seven variables, derivation and triality Lie algebras as exact kernels,
cubic Jordan algebras with their determinant calculus, the magic square
of Lie algebras with verified structure constants, root-system gradings,
and the seven-dimensional spinor machinery.
"""

from .scalar import Scalar, sc
from .linalg import Matrix, Subspace, kernel, rank, solve, random_invertible
from .forms import KForm, parse_form, wedge, contract, pullback, support
from .composition import (
    AlgElement,
    CompAlgebra,
    canonical_octonions,
    cayley_dickson,
    named_algebra,
)
from .threeform import classify, q_of, lambda_quartic, degree7_invariant
from .liealg import SCAlgebra, derivations, jacobi_check, stabilizer_in_gl
from .jordan import JordanElement, jordan_algebra, det_cubic, adjugate, cubic_map
from .magicsquare import triality_algebra, vinberg_build, tits_dimension_table
from .rootdata import build_root_system, z_grading, zm_grading
from .clifford import Spinor, clifford_act, omega_chi

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "CompAlgebra",
    "JordanElement",
    "KForm",
    "Matrix",
    "SCAlgebra",
    "Scalar",
    "Spinor",
    "Subspace",
    "adjugate",
    "build_root_system",
    "canonical_octonions",
    "cayley_dickson",
    "classify",
    "clifford_act",
    "contract",
    "cubic_map",
    "degree7_invariant",
    "derivations",
    "det_cubic",
    "jacobi_check",
    "jordan_algebra",
    "kernel",
    "lambda_quartic",
    "named_algebra",
    "omega_chi",
    "parse_form",
    "pullback",
    "q_of",
    "random_invertible",
    "rank",
    "sc",
    "solve",
    "stabilizer_in_gl",
    "support",
    "tits_dimension_table",
    "triality_algebra",
    "vinberg_build",
    "wedge",
    "z_grading",
    "zm_grading",
]
