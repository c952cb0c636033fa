"""Exact certification of the commutation relations of 𝔤^J and 𝔤^J_ℂ.

Each :class:`Identity` describes a right-hand side as Kronecker-delta sums over
the indices of the two generators. For two sp-type generators (i, j), (k, l)
the four delta slots are

    δ_ik G_jl,  δ_il G_jk,  δ_jk G_il,  δ_jl G_ik

and for a Heisenberg generator (p, q) against an sp-type one (i, j) the two slots are

    δ_qi G_pj,  δ_qj G_pi.

Commutators are computed with DomainMatrix over QQ_I (Gaussian rationals), so every
check is an exact equality.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from orbitkit.jacobi.basis import BasisTable, Gen, basis_invariants, basis_table, index_ranges

logger = logging.getLogger(__name__)

HALF = sympy.Rational(1, 2)

ALL4 = (1, 1, 1, 1)
NEG4 = (-1, -1, -1, -1)


class Shape(str, Enum):
    QUAD = "quad"  # sp × sp, four delta slots
    MIXED = "mixed"  # heis × sp, two delta slots
    PAIR = "pair"  # heis × heis, δ_qs G_pr
    ZERO = "zero"


Term = tuple[sympy.Expr, str, tuple[int, ...]]


@dataclass(frozen=True)
class Identity:
    lemma: str
    left: str
    right: str
    shape: Shape
    terms: tuple[Term, ...] = ()
    erratum: str | None = None
    # The commonly printed right-hand side when it differs from ``terms``.
    printed_terms: tuple[Term, ...] | None = None

    @property
    def name(self) -> str:
        return f"[{self.left},{self.right}]"


def _quad(lemma: str, left: str, right: str, target: str, signs: tuple[int, ...], **kw) -> Identity:
    return Identity(lemma, left, right, Shape.QUAD, ((sympy.Integer(1), target, signs),), **kw)


_INDEX_ERRATUM = "right generator is {}_kl; printed with indices ij"


def _mixed(
    lemma: str, left: str, right: str, target: str, signs: tuple[int, int], **kw
) -> Identity:
    return Identity(lemma, left, right, Shape.MIXED, ((sympy.Integer(1), target, signs),), **kw)


def _zero(lemma: str, left: str, right: str) -> Identity:
    return Identity(lemma, left, right, Shape.ZERO)


REAL_IDENTITIES: tuple[Identity, ...] = (
    _quad("real", "A", "A", "S", ALL4),
    _quad("real", "A", "B", "T", ALL4),
    _quad("real", "A", "S", "A", (1, -1, 1, -1)),
    _quad("real", "A", "T", "B", ALL4),
    _quad("real", "B", "B", "S", ALL4),
    _quad("real", "B", "S", "B", (1, -1, 1, -1)),
    _quad("real", "B", "T", "A", NEG4),
    _quad("real", "S", "S", "S", (-1, 1, 1, -1)),
    _quad("real", "S", "T", "T", (-1, -1, 1, 1)),
    _quad("real", "T", "T", "S", NEG4),
    *(_zero("real", "D0", other) for other in ("A", "B", "S", "T", "D0", "D", "Dhat")),
    _mixed("real", "D", "A", "D", (1, 1)),
    _mixed("real", "D", "B", "Dhat", (1, 1)),
    _mixed("real", "D", "T", "Dhat", (1, 1)),
    _mixed("real", "D", "S", "D", (1, -1)),
    _zero("real", "D", "D"),
    Identity("real", "D", "Dhat", Shape.PAIR, ((sympy.Integer(2), "D0", ()),)),
    _mixed("real", "Dhat", "A", "Dhat", (-1, -1)),
    _mixed("real", "Dhat", "B", "D", (1, 1)),
    _mixed(
        "real",
        "Dhat",
        "S",
        "Dhat",
        (1, -1),
        erratum="first term is D̂_pj; the printed δ_qi D_pj fails already for n = m = 1",
        printed_terms=((sympy.Integer(1), "D", (1, 0)), (sympy.Integer(1), "Dhat", (0, -1))),
    ),
    _mixed("real", "Dhat", "T", "D", (-1, -1)),
    _zero("real", "Dhat", "Dhat"),
)

COMPLEX_IDENTITIES: tuple[Identity, ...] = (
    *(_zero("complex", "Z0", other) for other in ("Z0", "Y+", "Y-", "Z+", "Z-", "X+", "X-")),
    _zero("complex", "Y+", "Y+"),
    Identity("complex", "Y+", "Y-", Shape.PAIR, ((sympy.Integer(1), "Z0", ()),)),
    _mixed("complex", "Y+", "Z+", "Y+", (-1, 1)),
    _mixed("complex", "Y+", "Z-", "Y+", (-1, -1)),
    _zero("complex", "Y+", "X+"),
    _mixed("complex", "Y+", "X-", "Y-", (1, 1)),
    _zero("complex", "Y-", "Y-"),
    _mixed("complex", "Y-", "Z+", "Y-", (-1, 1)),
    _mixed("complex", "Y-", "Z-", "Y-", (1, 1)),
    _mixed("complex", "Y-", "X+", "Y+", (1, 1)),
    _zero("complex", "Y-", "X-"),
    _quad("complex", "Z+", "Z+", "Z+", (1, -1, -1, 1)),
    _quad(
        "complex",
        "Z+",
        "Z-",
        "Z-",
        (1, 1, -1, -1),
        erratum="signs are +δ_ik +δ_il −δ_jk −δ_jl; the printed alternating signs fail for n = 2",
        printed_terms=((sympy.Integer(1), "Z-", (1, -1, 1, -1)),),
    ),
    _quad("complex", "Z+", "X+", "X+", (1, 1, -1, -1)),
    _quad("complex", "Z+", "X-", "X-", (1, 1, -1, -1)),
    _quad("complex", "Z-", "Z-", "Z+", NEG4),
    _quad("complex", "Z-", "X+", "X+", ALL4, erratum=_INDEX_ERRATUM.format("X⁺")),
    _quad("complex", "Z-", "X-", "X-", NEG4, erratum=_INDEX_ERRATUM.format("X⁻")),
    _zero("complex", "X+", "X+"),
    _zero("complex", "X-", "X-"),
    Identity(
        "complex",
        "X+",
        "X-",
        Shape.QUAD,
        ((-HALF, "Z+", ALL4), (HALF, "Z-", ALL4)),
        erratum="the Z⁻ coefficient is +1/2; the printed +i/2 fails for n = 1",
        printed_terms=((-HALF, "Z+", ALL4), (sympy.I / 2, "Z-", ALL4)),
    ),
)


def rhs_terms(
    identity: Identity, lhs: Gen, rhs: Gen, *, printed: bool = False
) -> list[tuple[sympy.Expr, Gen]]:
    """The linear combination predicted for [lhs, rhs], as (coefficient, generator) pairs."""
    terms = identity.terms
    if printed and identity.printed_terms is not None:
        terms = identity.printed_terms
    (_, i, j), (_, k, l) = lhs, rhs
    out: list[tuple[sympy.Expr, Gen]] = []
    for coef, target, signs in terms:
        if identity.shape is Shape.QUAD:
            slots = ((i == k, (j, l)), (i == l, (j, k)), (j == k, (i, l)), (j == l, (i, k)))
        elif identity.shape is Shape.MIXED:
            # left (p, q) arrives as (i, j), right (i, j) as (k, l)
            slots = ((j == k, (i, l)), (j == l, (i, k)))
        elif identity.shape is Shape.PAIR:
            slots = ((j == l, (i, k)),)
            signs = (1,)
        else:
            slots = ()
        for sign, (delta, idx) in zip(signs, slots):
            if sign and delta:
                out.append((coef * sign, Gen(target, *idx)))
    return _combine(out)


def _combine(terms: list[tuple[sympy.Expr, Gen]]) -> list[tuple[sympy.Expr, Gen]]:
    acc: dict[Gen, sympy.Expr] = {}
    for coef, gen in terms:
        acc[gen] = acc.get(gen, sympy.Integer(0)) + coef
    return [(coef, gen) for gen, coef in acc.items() if coef != 0]


class _DomainCache:
    """Generators converted once to DomainMatrix over QQ_I."""

    def __init__(self, table: BasisTable) -> None:
        self.table = table
        self._cache: dict[Gen, DomainMatrix] = {}

    def __getitem__(self, gen: Gen) -> DomainMatrix:
        dm = self._cache.get(gen)
        if dm is None:
            dm = DomainMatrix.from_Matrix(self.table[gen]).convert_to(QQ_I).to_dense()
            self._cache[gen] = dm
        return dm

    def warm(self) -> None:
        for gen in self.table.generators:
            self[gen]

    def bracket(self, a: Gen, b: Gen) -> DomainMatrix:
        A, B = self[a], self[b]
        return A * B - B * A

    def combination(self, terms: list[tuple[sympy.Expr, Gen]]) -> DomainMatrix:
        size = 2 * (self.table.n + self.table.m)
        total = DomainMatrix.zeros((size, size), QQ_I).to_dense()
        for coef, gen in terms:
            total = total + self[gen] * QQ_I.from_sympy(coef)
        return total


@dataclass(frozen=True)
class IdentityResult:
    name: str
    lemma: str
    checks: int
    failures: list[str] = field(default_factory=list)
    erratum: str | None = None

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class TableReport:
    n: int
    m: int
    identities: list[IdentityResult]
    inclusions: dict[str, bool]
    witness: tuple[str, str] | None
    invariants: dict[str, bool]
    counts: dict[str, int]

    @property
    def passed(self) -> bool:
        return (
            all(r.passed for r in self.identities)
            and all(self.inclusions.values())
            and all(self.invariants.values())
            and self.witness is not None
        )

    def failed(self) -> list[str]:
        return [r.name for r in self.identities if not r.passed]


_MAX_REPORTED_FAILURES = 5


def _pairs(identity: Identity, n: int, m: int) -> list[tuple[Gen, Gen]]:
    lr, lc = index_ranges(identity.left, n, m)
    rr, rc = index_ranges(identity.right, n, m)
    return [
        (Gen(identity.left, i, j), Gen(identity.right, k, l))
        for i, j in product(range(1, lr + 1), range(1, lc + 1))
        for k, l in product(range(1, rr + 1), range(1, rc + 1))
    ]


def _check_identity(cache: _DomainCache, identity: Identity, printed: bool) -> IdentityResult:
    table = cache.table
    failures: list[str] = []
    checks = 0
    for lhs, rhs in _pairs(identity, table.n, table.m):
        checks += 1
        predicted = cache.combination(rhs_terms(identity, lhs, rhs, printed=printed))
        difference = cache.bracket(lhs, rhs) - predicted
        if not difference.is_zero_matrix and len(failures) < _MAX_REPORTED_FAILURES:
            failures.append(f"[{lhs.label},{rhs.label}]")
    return IdentityResult(identity.name, identity.lemma, checks, failures, identity.erratum)


def _rank(vectors: list[DomainMatrix]) -> int:
    if not vectors:
        return 0
    rows = [v.flat() for v in vectors]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ_I).rank()


def _brackets(cache: _DomainCache, left: list[Gen], right: list[Gen]) -> list[DomainMatrix]:
    return [cache.bracket(a, b) for a in left for b in right]


def spanned(cache: _DomainCache, vectors: list[DomainMatrix], basis: list[Gen]) -> bool:
    """Every vector lies in span(basis)."""
    span = [cache[g] for g in basis]
    return _rank(span + vectors) == _rank(span)


def real_inclusions(cache: _DomainCache) -> dict[str, bool]:
    t = cache.table
    k, p = t.k_basis(), t.p_basis()
    sp_p, heis = t.sp_p_basis(), t.heis_basis()
    return {
        "[k,k] ⊂ k": spanned(cache, _brackets(cache, k, k), k),
        "[k,p] ⊂ p": spanned(cache, _brackets(cache, k, p), p),
        "[p,h] ⊂ h": spanned(cache, _brackets(cache, sp_p, heis), heis),
        "[h,h] ⊂ h": spanned(cache, _brackets(cache, heis, heis), heis),
    }


def complex_inclusions(cache: _DomainCache) -> dict[str, bool]:
    t = cache.table
    kc, pp, pm = t.kc_basis(), t.p_plus_basis(), t.p_minus_basis()
    heis_c = [g for g in kc if g.family == "Z0"] + [g for g in pp + pm if g.family in ("Y+", "Y-")]
    all_c = kc + pp + pm
    sp_c = [g for g in all_c if g not in heis_c]
    dim = len(t.k_basis()) + len(t.p_basis())
    return {
        "k_C basis independent": _rank([cache[g] for g in kc]) == len(kc),
        "k_C + p_+ + p_- spans g_C": _rank([cache[g] for g in all_c]) == dim,
        "[k_C,k_C] ⊂ k_C": spanned(cache, _brackets(cache, kc, kc), kc),
        "[k_C,p_+] ⊂ p_+": spanned(cache, _brackets(cache, kc, pp), pp),
        "[k_C,p_-] ⊂ p_-": spanned(cache, _brackets(cache, kc, pm), pm),
        "p_+ abelian": all(b.is_zero_matrix for b in _brackets(cache, pp, pp)),
        "p_- abelian": all(b.is_zero_matrix for b in _brackets(cache, pm, pm)),
        "g_C subalgebra": spanned(cache, _brackets(cache, sp_c, sp_c), sp_c),
        "h_C ideal": spanned(cache, _brackets(cache, all_c, heis_c), heis_c),
    }


def p_bracket_witness(cache: _DomainCache) -> tuple[str, str] | None:
    """A pair in 𝔭^J whose bracket leaves 𝔨^J, showing [𝔭^J, 𝔭^J] ⊄ 𝔨^J."""
    t = cache.table
    k = t.k_basis()
    p = t.p_basis()
    for a in p:
        for b in p:
            if not spanned(cache, [cache.bracket(a, b)], k):
                return a.label, b.label
    return None


@lru_cache(maxsize=16)
def _domain_cache(n: int, m: int) -> _DomainCache:
    cache = _DomainCache(basis_table(n, m))
    cache.warm()
    return cache


def verify_commutation_table(
    n: int, m: int, *, printed: bool = False, max_workers: int = 4
) -> TableReport:
    """Check every relation on the full index range for both the real and the complex table.

    With ``printed=True`` the identities carrying an erratum are checked in their
    commonly printed form instead, which makes those entries fail.
    """
    cache = _domain_cache(n, m)
    identities = REAL_IDENTITIES + COMPLEX_IDENTITIES
    for identity in identities:
        if identity.erratum and not printed:
            logger.info("%s checked in corrected form: %s", identity.name, identity.erratum)
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        results = list(pool.map(lambda ident: _check_identity(cache, ident, printed), identities))
    inclusions = {**real_inclusions(cache), **complex_inclusions(cache)}
    witness = p_bracket_witness(cache)
    report = TableReport(
        n=n,
        m=m,
        identities=results,
        inclusions=inclusions,
        witness=witness,
        invariants=basis_invariants(cache.table),
        counts=cache.table.counts(),
    )
    logger.debug(
        "verify_commutation_table(n=%d, m=%d): %d identities, %d checks, failed=%s",
        n,
        m,
        len(results),
        sum(r.checks for r in results),
        report.failed(),
    )
    return report


_SYMMETRIC = frozenset({"A", "B", "T", "D0", "Z0", "Z-", "X+", "X-"})
_SKEW = frozenset({"S", "Z+"})


def canonical_terms(terms: list[tuple[sympy.Expr, Gen]]) -> list[tuple[sympy.Expr, Gen]]:
    """Rewrite on the i ≤ j representatives: A_ji → A_ij, S_ji → −S_ij, S_ii → 0."""
    out = []
    for coef, gen in terms:
        family, i, j = gen
        if family in _SKEW and i == j:
            continue
        if i > j and family in _SYMMETRIC:
            gen = Gen(family, j, i)
        elif i > j and family in _SKEW:
            gen, coef = Gen(family, j, i), -coef
        out.append((coef, gen))
    return _combine(out)


def structure_constants(n: int, m: int, *, lemma: str = "real") -> list[dict]:
    """Nonzero brackets as ``{"lhs": [g1, g2], "rhs": [{"coef": ..., "gen": ...}]}`` records.

    Pairs are listed in identity order, then by index, over basis representatives only.
    Coefficients are exact strings.
    """
    identities = REAL_IDENTITIES if lemma == "real" else COMPLEX_IDENTITIES
    records = []
    for identity in identities:
        for lhs, rhs in _pairs(identity, n, m):
            if not (_representative(lhs) and _representative(rhs)):
                continue
            terms = canonical_terms(rhs_terms(identity, lhs, rhs))
            if terms:
                records.append(
                    {
                        "lhs": [lhs.label, rhs.label],
                        "rhs": [{"coef": str(coef), "gen": gen.label} for coef, gen in terms],
                    }
                )
    return records


def _representative(gen: Gen) -> bool:
    family, i, j = gen
    if family in _SKEW:
        return i < j
    if family in _SYMMETRIC:
        return i <= j
    return True
