"""Named generators of 𝔤^J and of its complexification.

Every generator is an exact sympy matrix of size 2(n+m) in the (n, m, n, m)
block convention. Indices are 1-based, as in the usual E_ij notation:

    A_ij, B_ij, S_ij, T_ij      1 ≤ i, j ≤ n       (sp(n) part)
    D⁰_ab                       1 ≤ a, b ≤ m       (centre)
    D_pq, D̂_pq                  1 ≤ p ≤ m, 1 ≤ q ≤ n

The complexified generators are Z⁰ = −iD⁰, Y± = ½(D ± iD̂), Z⁺ = −S,
Z⁻ = −iT and X± = ½(A ± iB).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import sympy

from orbitkit.core.errors import DomainError
from orbitkit.linalg.kinds import assemble, is_zero, matrices_equal, unit
from orbitkit.symplectic import is_in_sp

logger = logging.getLogger(__name__)

I = sympy.I

SP_FAMILIES = ("A", "B", "S", "T")
HEIS_FAMILIES = ("D0", "D", "Dhat")
REAL_FAMILIES = SP_FAMILIES + HEIS_FAMILIES
COMPLEX_FAMILIES = ("Z0", "Y+", "Y-", "Z+", "Z-", "X+", "X-")

_DISPLAY = {
    "D0": "D⁰",
    "Dhat": "D̂",
    "Z0": "Z⁰",
    "Y+": "Y⁺",
    "Y-": "Y⁻",
    "Z+": "Z⁺",
    "Z-": "Z⁻",
    "X+": "X⁺",
    "X-": "X⁻",
}


class Gen(NamedTuple):
    family: str
    i: int
    j: int

    @property
    def label(self) -> str:
        """ASCII tag such as ``Dhat_12`` or ``X+_11``; used in JSON."""
        return f"{self.family}_{self.i}{self.j}"

    @property
    def display(self) -> str:
        return f"{_DISPLAY.get(self.family, self.family)}_{self.i}{self.j}"


def index_ranges(family: str, n: int, m: int) -> tuple[int, int]:
    """Upper bounds of the two indices of a family."""
    if family in SP_FAMILIES or family in ("Z+", "Z-", "X+", "X-"):
        return n, n
    if family in ("D0", "Z0"):
        return m, m
    if family in ("D", "Dhat", "Y+", "Y-"):
        return m, n
    raise DomainError({"reason": "unknown generator family", "family": family})


def _s(n: int, i: int, j: int) -> sympy.Matrix:
    return unit(n, n, i, j) + unit(n, n, j, i)


def _a(n: int, i: int, j: int) -> sympy.Matrix:
    return unit(n, n, i, j) - unit(n, n, j, i)


def real_generator(family: str, i: int, j: int, n: int, m: int) -> sympy.Matrix:
    rows, cols = index_ranges(family, n, m)
    if not (1 <= i <= rows and 1 <= j <= cols):
        raise DomainError(
            {"reason": "generator index out of range", "gen": f"{family}_{i}{j}", "n": n, "m": m}
        )
    sizes = (n, m, n, m)
    i0, j0 = i - 1, j - 1
    if family == "A":
        s = _s(n, i0, j0)
        entries = {(0, 0): s, (2, 2): -s}
    elif family == "B":
        s = _s(n, i0, j0)
        entries = {(0, 2): s, (2, 0): s}
    elif family == "S":
        a = _a(n, i0, j0)
        entries = {(0, 0): a, (2, 2): a}
    elif family == "T":
        s = _s(n, i0, j0)
        entries = {(0, 2): s, (2, 0): -s}
    elif family == "D0":
        entries = {(1, 3): _s(m, i0, j0) / 2}
    elif family == "D":
        entries = {(1, 0): unit(m, n, i0, j0), (2, 3): -unit(n, m, j0, i0)}
    elif family == "Dhat":
        entries = {(0, 3): unit(n, m, j0, i0), (1, 2): unit(m, n, i0, j0)}
    else:
        raise DomainError({"reason": "not a real generator family", "family": family})
    return assemble(sizes, entries, True)


def complex_generator(family: str, i: int, j: int, n: int, m: int) -> sympy.Matrix:
    def real(name: str) -> sympy.Matrix:
        return real_generator(name, i, j, n, m)

    if family == "Z0":
        M = -I * real("D0")
    elif family in ("Y+", "Y-"):
        sign = 1 if family == "Y+" else -1
        M = (real("D") + sign * I * real("Dhat")) / 2
    elif family == "Z+":
        M = -real("S")
    elif family == "Z-":
        M = -I * real("T")
    elif family in ("X+", "X-"):
        sign = 1 if family == "X+" else -1
        M = (real("A") + sign * I * real("B")) / 2
    else:
        raise DomainError({"reason": "not a complexified generator family", "family": family})
    return M.applyfunc(sympy.expand)


def generator(family: str, i: int, j: int, n: int, m: int) -> sympy.Matrix:
    if family in REAL_FAMILIES:
        return real_generator(family, i, j, n, m)
    return complex_generator(family, i, j, n, m)


@dataclass(frozen=True)
class BasisTable:
    """Every generator of every family for all index pairs, keyed by :class:`Gen`."""

    n: int
    m: int
    generators: dict[Gen, sympy.Matrix] = field(repr=False)

    def __getitem__(self, key: Gen | tuple[str, int, int]) -> sympy.Matrix:
        return self.generators[Gen(*key)]

    def family(self, name: str) -> list[Gen]:
        return [g for g in self.generators if g.family == name]

    def k_basis(self) -> list[Gen]:
        """{S_ij (i<j), T_kl (k≤l), D⁰_ab (a≤b)}."""
        n, m = self.n, self.m
        return (
            [Gen("S", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            + [Gen("T", k, l) for k in range(1, n + 1) for l in range(k, n + 1)]
            + [Gen("D0", a, b) for a in range(1, m + 1) for b in range(a, m + 1)]
        )

    def p_basis(self) -> list[Gen]:
        """{A_ij, B_ij (i≤j), D_pq, D̂_pq}."""
        n, m = self.n, self.m
        upper = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        heis = [(p, q) for p in range(1, m + 1) for q in range(1, n + 1)]
        return (
            [Gen("A", i, j) for i, j in upper]
            + [Gen("B", i, j) for i, j in upper]
            + [Gen("D", p, q) for p, q in heis]
            + [Gen("Dhat", p, q) for p, q in heis]
        )

    def sp_p_basis(self) -> list[Gen]:
        return [g for g in self.p_basis() if g.family in ("A", "B")]

    def heis_basis(self) -> list[Gen]:
        return [g for g in self.k_basis() if g.family == "D0"] + [
            g for g in self.p_basis() if g.family in ("D", "Dhat")
        ]

    def kc_basis(self) -> list[Gen]:
        """{Z⁰_ab (a≤b), Z⁺_ij (i<j), Z⁻_kl (k≤l)}.

        Z⁻_kk = −iT_kk is nonzero, so the diagonal is part of the basis.
        """
        n, m = self.n, self.m
        return (
            [Gen("Z0", a, b) for a in range(1, m + 1) for b in range(a, m + 1)]
            + [Gen("Z+", i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
            + [Gen("Z-", k, l) for k in range(1, n + 1) for l in range(k, n + 1)]
        )

    def p_plus_basis(self) -> list[Gen]:
        return self._p_half("+")

    def p_minus_basis(self) -> list[Gen]:
        return self._p_half("-")

    def _p_half(self, sign: str) -> list[Gen]:
        n, m = self.n, self.m
        return [Gen(f"X{sign}", i, j) for i in range(1, n + 1) for j in range(i, n + 1)] + [
            Gen(f"Y{sign}", p, q) for p in range(1, m + 1) for q in range(1, n + 1)
        ]

    def counts(self) -> dict[str, int]:
        return {
            "k": len(self.k_basis()),
            "p": len(self.p_basis()),
            "k_C": len(self.kc_basis()),
            "p_plus": len(self.p_plus_basis()),
            "p_minus": len(self.p_minus_basis()),
        }


@lru_cache(maxsize=16)
def basis_table(n: int, m: int) -> BasisTable:
    if n < 1 or m < 1:
        raise DomainError({"reason": "n and m must be positive", "n": n, "m": m})
    generators: dict[Gen, sympy.Matrix] = {}
    for family in REAL_FAMILIES + COMPLEX_FAMILIES:
        rows, cols = index_ranges(family, n, m)
        for i in range(1, rows + 1):
            for j in range(1, cols + 1):
                generators[Gen(family, i, j)] = generator(family, i, j, n, m)
    logger.debug("basis_table(n=%d, m=%d): %d generators", n, m, len(generators))
    return BasisTable(n, m, generators)


def basis_invariants(table: BasisTable) -> dict[str, bool]:
    """Symmetries of the index pairs, nilpotency of D and D̂, and membership in sp(n+m)."""
    t = table

    def all_pairs(family: str, relation: int) -> bool:
        rows, cols = index_ranges(family, t.n, t.m)
        return all(
            matrices_equal(t[family, i, j], relation * t[family, j, i])
            for i in range(1, rows + 1)
            for j in range(1, cols + 1)
        )

    return {
        "A_ij = A_ji": all_pairs("A", 1),
        "B_ij = B_ji": all_pairs("B", 1),
        "S_ij = -S_ji": all_pairs("S", -1),
        "T_ij = T_ji": all_pairs("T", 1),
        "D0_ab = D0_ba": all_pairs("D0", 1),
        "D_pq^2 = 0": all(is_zero(t[g] @ t[g]) for g in t.family("D")),
        "Dhat_pq^2 = 0": all(is_zero(t[g] @ t[g]) for g in t.family("Dhat")),
        "real generators in sp(n+m)": all(
            is_in_sp(M) for g, M in t.generators.items() if g.family in REAL_FAMILIES
        ),
    }
