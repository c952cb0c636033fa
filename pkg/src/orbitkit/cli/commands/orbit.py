"""Coadjoint orbit verbs for G^J: family membership, sampling and the minimal orbit."""

from __future__ import annotations

import numpy as np

from orbitkit.cli.generic import (
    CommandContext,
    CommandRouter,
    OptionField,
    create_command,
    make_report,
)
from orbitkit.jacobi import OrbitFamily, minimal_orbit_check, orbit_membership
from orbitkit.jacobi.orbits import minimal_orbit_dimension, sample_family
from orbitkit.linalg.kinds import shape
from orbitkit.schemas.generic import Report
from orbitkit.schemas.jacobi import (
    JacobiDualIn,
    MinimalDimensionRequest,
    MinimalOrbitRequest,
    OrbitCheckRequest,
    OrbitSampleRequest,
)
from orbitkit.schemas.matrix import parse_matrix

router = CommandRouter(prefix="orbit", help="Coadjoint orbits of the Jacobi group")

FAMILY_OPTIONS = [OptionField("family", help="X, Y, Z, S, T, P, Q, hR, mR+aX, mR+aY or mR+kZ")]


def _check(request: OrbitCheckRequest, ctx: CommandContext) -> Report:
    verdict = orbit_membership(
        request.F.build(ctx.exact),
        request.family,
        request.params.build(ctx.exact),
        ctx.settings.reconstruction_tol,
    )
    result = {
        "family": verdict.family.value,
        "conditions": verdict.conditions,
        "boundary_degenerate": verdict.boundary_degenerate,
        "member": verdict.member,
    }
    return make_report(
        "orbit check",
        request,
        result,
        residual=verdict.residual,
        tolerance=ctx.settings.reconstruction_tol,
        passed=verdict.member,
    )


def _sample(request: OrbitSampleRequest, ctx: CommandContext) -> Report:
    family = OrbitFamily.parse(request.family)
    params = request.params.build(False)
    rng = np.random.default_rng(request.seed)
    points = sample_family(family, rng, request.count, params)
    tol = ctx.settings.reconstruction_tol
    verdicts = [orbit_membership(F, family, params, tol) for F in points]
    worst = max(v.residual for v in verdicts)
    return make_report(
        "orbit sample",
        request,
        {"family": family.value, "points": [JacobiDualIn.dump(F) for F in points]},
        residual=worst,
        tolerance=tol,
        passed=all(v.member for v in verdicts),
    )


def _minimal(request: MinimalOrbitRequest, ctx: CommandContext) -> Report:
    check = minimal_orbit_check(request.F.build(ctx.exact), parse_matrix(request.delta, ctx.exact))
    return make_report(
        "orbit minimal",
        request,
        {"r_residual": check.r_residual, "x_residual": check.x_residual},
        residual=check.residual,
        tolerance=ctx.settings.reconstruction_tol,
    )


def _dimension(request: MinimalDimensionRequest, ctx: CommandContext) -> Report:
    delta = parse_matrix(request.delta, True)
    m, _ = shape(delta)
    dimension = minimal_orbit_dimension(delta, request.n)
    return make_report(
        "orbit dimension",
        request,
        {"dimension": dimension, "expected": 2 * m * request.n},
        passed=dimension == 2 * m * request.n,
    )


router.add_command(
    create_command(
        name="check",
        handler=_check,
        request_schema=OrbitCheckRequest,
        options=FAMILY_OPTIONS,
        help="Residual of the orbit equations of a family at F (n = m = 1)",
    )
)
router.add_command(
    create_command(
        name="sample",
        handler=_sample,
        request_schema=OrbitSampleRequest,
        options=FAMILY_OPTIONS
        + [
            OptionField("count", python_type=int, help="Number of sampled points"),
            OptionField("seed", python_type=int, help="Random seed"),
        ],
        help="Push the family seed along random group elements",
    )
)
router.add_command(
    create_command(
        name="minimal",
        handler=_minimal,
        request_schema=MinimalOrbitRequest,
        help="Residuals of the minimal orbit equations through delta",
    )
)
router.add_command(
    create_command(
        name="dimension",
        handler=_dimension,
        request_schema=MinimalDimensionRequest,
        options=[OptionField("n", python_type=int, help="Siegel degree n")],
        help="Dimension of the minimal orbit through delta",
    )
)
