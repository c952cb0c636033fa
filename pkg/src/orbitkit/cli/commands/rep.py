"""Finite Schrödinger model verbs."""

from __future__ import annotations

import numpy as np

from orbitkit.cli.generic import CommandContext, CommandRouter, create_command, make_report
from orbitkit.core.errors import DomainError
from orbitkit.heisenberg.schrodinger import (
    GridHeisElement,
    GridRep,
    central_character,
    commutant_dimension,
    rep_matrix,
    rep_trace,
)
from orbitkit.schemas.generic import Report
from orbitkit.schemas.heisenberg import RepRequest
from orbitkit.schemas.matrix import encode

router = CommandRouter(prefix="rep", help="The Schrödinger model on (Z/N)^(h,g)")


def _element(request: RepRequest, R: GridRep) -> GridHeisElement:
    if request.x is None:
        raise DomainError("this verb needs a group element x")
    return request.x.build(R)


def _expected_trace(R: GridRep, x: GridHeisElement) -> complex:
    if not x.is_central:
        return 0j
    _, value = central_character(R, x.kappa)
    return R.dimension * value


def _matrix(request: RepRequest, ctx: CommandContext) -> Report:
    R = request.rep.build()
    if R.dimension > ctx.settings.rep_dimension_cap:
        raise DomainError(
            {"reason": "representation exceeds the dimension cap", "size": R.dimension}
        )
    U = rep_matrix(R, _element(request, R))
    unitarity = float(np.max(np.abs(U @ U.conj().T - np.eye(R.dimension))))
    return make_report(
        "rep matrix",
        request,
        {"dimension": R.dimension, "matrix": encode(U)},
        residual=unitarity,
        tolerance=ctx.tol,
    )


def _trace(request: RepRequest, ctx: CommandContext) -> Report:
    R = request.rep.build()
    x = _element(request, R)
    value = rep_trace(R, x)
    return make_report(
        "rep trace",
        request,
        {"trace": encode(value), "central": x.is_central},
        residual=abs(value - _expected_trace(R, x)),
        tolerance=ctx.tol * R.dimension,
    )


def _commutant(request: RepRequest, ctx: CommandContext) -> Report:
    R = request.rep.build()
    dimension = commutant_dimension(
        R, cap=ctx.settings.rep_dimension_cap, tol=ctx.settings.reconstruction_tol
    )
    return make_report(
        "rep commutant",
        request,
        {"dimension": dimension, "size": R.dimension},
        passed=dimension == 1,
    )


def _character(request: RepRequest, ctx: CommandContext) -> Report:
    R = request.rep.build()
    x = _element(request, R)
    index, value = central_character(R, x.kappa)
    return make_report(
        "rep character", request, {"index": index, "modulus": R.N, "value": encode(value)}
    )


router.add_command(
    create_command(
        name="matrix",
        handler=_matrix,
        request_schema=RepRequest,
        help="pi(x) as a unitary matrix",
    )
)
router.add_command(
    create_command(
        name="trace",
        handler=_trace,
        request_schema=RepRequest,
        help="tr pi(x), checked against the character formula",
    )
)
router.add_command(
    create_command(
        name="commutant",
        handler=_commutant,
        request_schema=RepRequest,
        help="Dimension of the commutant of pi",
    )
)
router.add_command(
    create_command(
        name="character",
        handler=_character,
        request_schema=RepRequest,
        help="Central character omega^tr(c kappa)",
    )
)
