"""Sp(n,ℝ) verbs: membership, Cartan and Iwasawa factors, and the Möbius action."""

from __future__ import annotations

from orbitkit.cli.generic import CommandContext, CommandRouter, create_command, make_report
from orbitkit.core.errors import DomainError
from orbitkit.linalg import matrix_exp
from orbitkit.linalg.kinds import is_exact, residual, shape, to_float
from orbitkit.schemas.generic import Report
from orbitkit.schemas.linalg import MoebiusRequest, SymplecticRequest
from orbitkit.schemas.matrix import encode, parse_matrix
from orbitkit.symplectic import (
    J,
    SiegelPoint,
    SymplecticElement,
    cartan_decompose,
    is_symplectic,
    iwasawa_decompose,
    moebius_action,
)

router = CommandRouter(prefix="sp", help="Sp(n,R) and the Siegel upper half space")


def _element(request: SymplecticRequest | MoebiusRequest, ctx: CommandContext) -> SymplecticElement:
    return SymplecticElement.of(parse_matrix(request.M, ctx.exact), ctx.settings.symplectic_tol)


def _check(request: SymplecticRequest, ctx: CommandContext) -> Report:
    M = parse_matrix(request.M, ctx.exact)
    rows, cols = shape(M)
    if rows != cols or rows % 2:
        raise DomainError({"reason": "expected an even square matrix", "shape": [rows, cols]})
    Jn = J(rows // 2, is_exact(M))
    return make_report(
        "sp check",
        request,
        {"symplectic": is_symplectic(M, ctx.settings.symplectic_tol), "n": rows // 2},
        residual=residual(M.T @ Jn @ M, Jn),
        tolerance=ctx.settings.symplectic_tol,
    )


def _cartan(request: SymplecticRequest, ctx: CommandContext) -> Report:
    g = _element(request, ctx)
    k, X = cartan_decompose(g, ctx.settings.symplectic_tol)
    return make_report(
        "sp cartan",
        request,
        {"k": encode(k.M), "X": encode(X)},
        residual=residual(to_float(k.M) @ matrix_exp(X), to_float(g.M)),
        tolerance=ctx.settings.reconstruction_tol,
    )


def _iwasawa(request: SymplecticRequest, ctx: CommandContext) -> Report:
    g = _element(request, ctx)
    factors = iwasawa_decompose(g, ctx.settings.reconstruction_tol)
    validity = factors.validity(ctx.settings.reconstruction_tol)
    gap = residual(factors.product(), to_float(g.M))
    result = {
        "A": encode(factors.A),
        "B": encode(factors.B),
        "H": encode(factors.H),
        "k": encode(factors.k),
        "validity": validity,
    }
    return make_report(
        "sp iwasawa",
        request,
        result,
        residual=gap,
        tolerance=ctx.settings.reconstruction_tol,
        passed=gap <= ctx.settings.reconstruction_tol and all(validity.values()),
    )


def _moebius(request: MoebiusRequest, ctx: CommandContext) -> Report:
    g = _element(request, ctx)
    point = SiegelPoint.of(parse_matrix(request.Z, False), ctx.settings.symplectic_tol)
    image = moebius_action(
        g, point, degeneracy_tol=ctx.settings.degeneracy_tol, tol=ctx.settings.symplectic_tol
    )
    return make_report("sp moebius", request, {"Z": encode(image.Z)})


router.add_command(
    create_command(
        name="check",
        handler=_check,
        request_schema=SymplecticRequest,
        help="Test ^tM J M = J",
    )
)
router.add_command(
    create_command(
        name="cartan",
        handler=_cartan,
        request_schema=SymplecticRequest,
        help="M = k·exp(X) with k in K and X in p",
    )
)
router.add_command(
    create_command(
        name="iwasawa",
        handler=_iwasawa,
        request_schema=SymplecticRequest,
        help="M = n(A, B)·t(H)·k",
    )
)
router.add_command(
    create_command(
        name="moebius",
        handler=_moebius,
        request_schema=MoebiusRequest,
        help="M<Z> = (AZ + B)(CZ + D)^-1",
    )
)
