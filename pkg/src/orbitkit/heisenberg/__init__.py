"""The Heisenberg group H^{(g,h)}, its Lie algebra and dual, and the finite Schrödinger model."""

from orbitkit.heisenberg.algebra import (
    HeisDual,
    HeisLieElement,
    heis_bform,
    heis_bracket,
    heis_coadjoint,
    heis_exp,
    heis_pairing,
    heis_polarization_check,
    heis_radical,
    plancherel_density,
)
from orbitkit.heisenberg.group import (
    DualOrbitClass,
    DualOrbitKind,
    HeisElement,
    classify_dual_orbit,
    diamond_mul,
    from_bracket,
    heis_embed,
    heis_inv,
    heis_mul,
    mackey_split,
)

__all__ = [
    "DualOrbitClass",
    "DualOrbitKind",
    "HeisDual",
    "HeisElement",
    "HeisLieElement",
    "classify_dual_orbit",
    "diamond_mul",
    "from_bracket",
    "heis_bform",
    "heis_bracket",
    "heis_coadjoint",
    "heis_embed",
    "heis_exp",
    "heis_inv",
    "heis_mul",
    "heis_pairing",
    "heis_polarization_check",
    "heis_radical",
    "mackey_split",
    "plancherel_density",
]
