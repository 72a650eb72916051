"""Exact computation with torus-cocycle twisted noncommutative algebras."""

from .scalars import DeformationParams, GaussianRational, PhaseScalar, phase_mul, phase_star
from .cocycle import (CocycleData, cocycle_value, eta_matrix, grouplike_twist_data,
                      swap_phase, verify_cocycle_condition)
from .algebra import (AlgebraPresentation, Certificate, Generator, Hom, NcElement,
                      NotCertified, braided_tensor, ideal_member, multiply, normalize,
                      star, substitute, tensor)
from .matrixalg import (NcMatrix, check_mvn_equivalence, conjugate_by_unitary, is_projection,
                        is_unitary, mat_mul)
from .hopf import BraidedMatrixBialgebra, Cobosonisation, CoactionSpec, SpCoaction
from .spheres import (SpherePresentation, basic_projector, build_sphere,
                      charge_one_parameter_space, coacted_projector)
from .calculus import DgaPresentation, c4_calculus, curvature, s4_calculus
from .adhm import (MonadAlgebra, adhm_coinvariants, adhm_projector, build_monad_algebra,
                   verify_monad_conditions)

__version__ = "0.1.0"

__all__ = [
    "AlgebraPresentation", "Certificate", "CocycleData", "DeformationParams",
    "GaussianRational", "Generator", "Hom", "NcElement", "NotCertified", "PhaseScalar",
    "braided_tensor", "cocycle_value", "eta_matrix", "grouplike_twist_data",
    "ideal_member", "multiply", "normalize", "phase_mul", "phase_star", "star",
    "substitute", "swap_phase", "tensor", "verify_cocycle_condition",
    "NcMatrix", "check_mvn_equivalence", "conjugate_by_unitary", "is_projection", "is_unitary",
    "mat_mul", "BraidedMatrixBialgebra", "Cobosonisation", "CoactionSpec", "SpCoaction",
    "SpherePresentation", "basic_projector", "build_sphere", "charge_one_parameter_space",
    "coacted_projector", "DgaPresentation", "c4_calculus", "curvature", "s4_calculus",
    "MonadAlgebra", "adhm_coinvariants", "adhm_projector", "build_monad_algebra",
    "verify_monad_conditions",
]
