"""The Jacobi group G^J = Sp(n,ℝ) ⋉ H^{(n,m)}, its Lie algebra, dual and coadjoint orbits."""

from orbitkit.jacobi.algebra import (
    JacobiDual,
    JacobiLieElement,
    jacobi_bracket,
    jacobi_coadjoint,
    jacobi_pairing,
    orbit_dimension,
    project_jacobi_dual,
)
from orbitkit.jacobi.basis import BasisTable, Gen, basis_table
from orbitkit.jacobi.group import (
    EMBEDDING_ORIENTATION,
    IwasawaMode,
    JacobiElement,
    JacobiIwasawa,
    JacobiPoint,
    jacobi_action,
    jacobi_differential,
    jacobi_embed,
    jacobi_inv,
    jacobi_iwasawa,
    jacobi_mul,
    q_form,
)
from orbitkit.jacobi.orbits import (
    FamilyParams,
    OrbitFamily,
    OrbitMembership,
    minimal_orbit_check,
    orbit_membership,
)
from orbitkit.jacobi.structure import TangentVector, complex_structure, killing_check
from orbitkit.jacobi.table import TableReport, structure_constants, verify_commutation_table

__all__ = [
    "EMBEDDING_ORIENTATION",
    "BasisTable",
    "FamilyParams",
    "Gen",
    "IwasawaMode",
    "JacobiDual",
    "JacobiElement",
    "JacobiIwasawa",
    "JacobiLieElement",
    "JacobiPoint",
    "OrbitFamily",
    "OrbitMembership",
    "TableReport",
    "TangentVector",
    "basis_table",
    "complex_structure",
    "jacobi_action",
    "jacobi_bracket",
    "jacobi_coadjoint",
    "jacobi_differential",
    "jacobi_embed",
    "jacobi_inv",
    "jacobi_iwasawa",
    "jacobi_mul",
    "jacobi_pairing",
    "killing_check",
    "minimal_orbit_check",
    "orbit_dimension",
    "orbit_membership",
    "project_jacobi_dual",
    "q_form",
    "structure_constants",
    "verify_commutation_table",
]
