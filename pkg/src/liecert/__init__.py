"""Exact certification of operator identities for the unified even
orthogonal / symplectic Lie algebras so(2n) (eps = +1) and sp(2n) (eps = -1).

All arithmetic is rational and exact; every check is a strict identity,
never a numerical approximation.
"""

__version__ = "0.1.0"

from .algebra import (
    AlgebraContext,
    LieElement,
    commutator,
    dual_basis,
    dual_element,
    generator,
    killing_constant,
    killing_form,
    killing_form_trace,
)
from .fock import (
    FockOperator,
    FockSpace,
    FockVector,
    realize,
    verify_homomorphism,
    verify_relations,
)
from .kmatrix import (
    CommPoly,
    PolyMatrix,
    build_k1,
    find_monic_quadratic,
    pairing_operator,
    verify_power_symmetries,
    verify_square_bridge,
)
from .recursion import (
    RecursionTensors,
    verify_annihilators,
    verify_level_two_collapse,
    verify_symmetry,
)
from .report import CheckRecord, Report
from .sympoly import (
    SymPoly2,
    casimir_spectrum,
    closed_form_projection,
    projector,
    quadratic_invariant,
    target_eigenvalue,
)

__all__ = [
    "AlgebraContext",
    "CheckRecord",
    "CommPoly",
    "FockOperator",
    "FockSpace",
    "FockVector",
    "LieElement",
    "PolyMatrix",
    "RecursionTensors",
    "Report",
    "SymPoly2",
    "build_k1",
    "casimir_spectrum",
    "closed_form_projection",
    "commutator",
    "dual_basis",
    "dual_element",
    "find_monic_quadratic",
    "generator",
    "killing_constant",
    "killing_form",
    "killing_form_trace",
    "pairing_operator",
    "projector",
    "quadratic_invariant",
    "realize",
    "target_eigenvalue",
    "verify_annihilators",
    "verify_homomorphism",
    "verify_level_two_collapse",
    "verify_power_symmetries",
    "verify_relations",
    "verify_square_bridge",
    "verify_symmetry",
]
