"""Deformed u(2) symmetry algebra of the 2D anisotropic quantum oscillator.

For a coprime frequency ratio m:n the oscillator's symmetry algebra is a
deformation of u(2) whose ladder commutator closes on a degree m+n-1
polynomial in S0.  This package constructs its spectra and irreducible
representations exactly, realizes the generators as matrices, builds the
"angular momentum" eigenbases that label degenerate states, and verifies
every defining identity both in exact rational arithmetic (where possible)
and as floating-point residuals, against an independent truncated
Fock-space oracle.
"""

from .angular import (
    AngularEigenvector,
    AngularSpectrum,
    GeneralizedHermite,
    angular_eigenvalues,
    angular_eigenvector,
    bisection_eigenvalues,
    build_l0,
    hermite_sequence,
)
from .core import (
    CartesianState,
    FrequencyRatio,
    IrrepLabel,
    IrrepState,
    Level,
    cartesian_to_irrep,
    energy_of_cartesian,
    energy_of_irrep,
    enumerate_levels,
    irrep_members,
    irrep_to_cartesian,
)
from .exceptions import (
    DeformedU2Error,
    NonCoprimeError,
    NotAnEigenvalueError,
    NotDivisibleError,
    ShapeMismatchError,
    TruncationTooSmallError,
    WrongRatioError,
)
from .oracle import CartesianOracle, build_oracle, oracle_compare
from .representation import (
    IrrepMatrices,
    VerificationReport,
    build_irrep,
    verify_algebra,
    w32_check,
)
from .structure import (
    CommutatorPolynomial,
    ParafermionicForm,
    StructureFunction,
    commutator_polynomial,
    parafermionic_decompose,
    u_constant,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "AngularEigenvector",
    "AngularSpectrum",
    "CartesianOracle",
    "CartesianState",
    "CommutatorPolynomial",
    "DeformedU2Error",
    "FrequencyRatio",
    "GeneralizedHermite",
    "IrrepLabel",
    "IrrepMatrices",
    "IrrepState",
    "Level",
    "NonCoprimeError",
    "NotAnEigenvalueError",
    "NotDivisibleError",
    "ParafermionicForm",
    "ShapeMismatchError",
    "StructureFunction",
    "TruncationTooSmallError",
    "VerificationReport",
    "WrongRatioError",
    "angular_eigenvalues",
    "angular_eigenvector",
    "bisection_eigenvalues",
    "build_irrep",
    "build_l0",
    "build_oracle",
    "cartesian_to_irrep",
    "commutator_polynomial",
    "energy_of_cartesian",
    "energy_of_irrep",
    "enumerate_levels",
    "hermite_sequence",
    "irrep_members",
    "irrep_to_cartesian",
    "oracle_compare",
    "parafermionic_decompose",
    "u_constant",
    "verify_algebra",
    "w32_check",
]
