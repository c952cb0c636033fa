"""Tests for the generator table of 𝔤^J and the exact commutation-relation certificate."""

from __future__ import annotations

import pytest

from orbitkit.core.errors import DomainError
from orbitkit.jacobi import Gen, basis_table, structure_constants, verify_commutation_table
from orbitkit.jacobi.basis import basis_invariants


class TestBasisTable:
    """Generators, bases and their invariants."""

    def test_counts(self) -> None:
        """dim 𝔨^J + dim 𝔭^J = dim 𝔤^J, and 𝔭_± split 𝔭 evenly."""
        for n, m in [(1, 1), (2, 1), (1, 2), (2, 2)]:
            counts = basis_table(n, m).counts()
            dimension = n * (2 * n + 1) + 2 * m * n + m * (m + 1) // 2
            assert counts["k"] + counts["p"] == dimension
            assert counts["k_C"] == counts["k"]
            assert counts["p_plus"] == counts["p_minus"] == counts["p"] // 2

    def test_invariants(self) -> None:
        """Index symmetries, nilpotency of D and D̂, and membership in sp(n+m) hold."""
        assert all(basis_invariants(basis_table(2, 1)).values())

    def test_labels(self) -> None:
        """Labels are ASCII; display strings use the typeset names."""
        gen = Gen("Dhat", 1, 2)
        assert gen.label == "Dhat_12"
        assert gen.display == "D̂_12"

    def test_rejects_empty_dimensions(self) -> None:
        """n and m must be positive."""
        with pytest.raises(DomainError):
            basis_table(0, 1)


class TestCommutationTable:
    """Exact verification over the full index range."""

    @pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (1, 2)])
    def test_corrected_table_passes(self, n: int, m: int) -> None:
        """Every identity, inclusion and invariant holds exactly."""
        report = verify_commutation_table(n, m)
        assert report.passed, report.failed()
        assert report.witness is not None
        assert all(r.checks > 0 for r in report.identities)

    @pytest.mark.slow
    def test_corrected_table_passes_n2_m2(self) -> None:
        """The certificate also holds for n = m = 2."""
        assert verify_commutation_table(2, 2).passed

    def test_printed_table_fails(self) -> None:
        """The commonly printed forms of the corrected entries fail already for n = m = 1."""
        report = verify_commutation_table(1, 1, printed=True)
        assert not report.passed
        failed = report.failed()
        assert "[Dhat,S]" in failed
        assert "[X+,X-]" in failed

    def test_errata_are_reported(self) -> None:
        """Corrected identities carry their erratum note."""
        report = verify_commutation_table(1, 1)
        errata = {r.name: r.erratum for r in report.identities if r.erratum}
        assert "[Dhat,S]" in errata
        assert "[Z+,Z-]" in errata


class TestStructureConstants:
    """Export of the nonzero brackets."""

    def test_heisenberg_pair(self) -> None:
        """[D_11, D̂_11] = 2 D⁰_11."""
        records = structure_constants(1, 1)
        assert {"lhs": ["D_11", "Dhat_11"], "rhs": [{"coef": "2", "gen": "D0_11"}]} in records

    def test_complex_pair(self) -> None:
        """[Y⁺_11, Y⁻_11] = Z⁰_11."""
        records = structure_constants(1, 1, lemma="complex")
        assert {"lhs": ["Y+_11", "Y-_11"], "rhs": [{"coef": "1", "gen": "Z0_11"}]} in records

    def test_only_representatives(self) -> None:
        """Skew generators appear only with i < j, so S never appears for n = 1."""
        records = structure_constants(1, 1)
        labels = {label for r in records for label in r["lhs"]}
        labels |= {term["gen"] for r in records for term in r["rhs"]}
        assert not any(label.startswith("S_") for label in labels)
        assert all(r["rhs"] for r in records)
