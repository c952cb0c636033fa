"""Theta series verbs: evaluation, Γ^J invariance, Fourier coefficients and lattice counts."""

from __future__ import annotations

from orbitkit.cli.generic import (
    CommandContext,
    CommandRouter,
    OptionField,
    create_command,
    make_report,
)
from orbitkit.core.errors import DomainError
from orbitkit.jacobi_forms import (
    fourier_coefficient,
    lattice_count,
    theta_eval,
    theta_function,
    theta_slash_invariance,
)
from orbitkit.schemas.generic import Report
from orbitkit.schemas.jacobi import (
    FourierRequest,
    LatticeCountRequest,
    ThetaEvalRequest,
    ThetaInvarianceRequest,
)
from orbitkit.schemas.matrix import encode, parse_scalar

router = CommandRouter(prefix="theta", help="Theta series of even positive definite lattices")


def _eval(request: ThetaEvalRequest, ctx: CommandContext) -> Report:
    spec = request.spec.build(ctx.settings.theta_radius)
    value = theta_eval(
        spec,
        request.point.build(ctx.settings.symplectic_tol),
        term_tol=ctx.settings.theta_term_tol,
        tolerance=ctx.tol,
    )
    result = {
        "value": encode(value.value),
        "tail_bound": value.tail_bound,
        "points": value.points,
        "radius": value.radius,
    }
    return make_report(
        "theta eval", request, result, residual=value.tail_bound, tolerance=ctx.tol
    )


def _invariance(request: ThetaInvarianceRequest, ctx: CommandContext) -> Report:
    spec = request.spec.build(ctx.settings.theta_radius)
    if request.element is not None:
        generator = request.element.build(False, ctx.settings.symplectic_tol)
    else:
        generator = request.generator
    points = (
        [p.build(ctx.settings.symplectic_tol) for p in request.points] if request.points else None
    )
    report = theta_slash_invariance(
        spec,
        generator,
        points,
        tolerance=request.tolerance,
        term_tol=ctx.settings.theta_term_tol,
        max_workers=ctx.settings.max_workers,
    )
    result = {
        "generator": report.generator,
        "tail_bound": report.tail_bound,
        "residuals": report.residuals,
    }
    return make_report(
        "theta invariance",
        request,
        result,
        residual=report.residual,
        tolerance=report.tolerance,
        passed=report.passed,
    )


def _fourier(request: FourierRequest, ctx: CommandContext) -> Report:
    spec = request.spec.build(ctx.settings.theta_radius)
    if spec.m != 1:
        raise DomainError({"reason": "Fourier coefficients need m = 1", "m": spec.m})
    T = parse_scalar(request.T, True)
    value = fourier_coefficient(
        theta_function(spec, term_tol=ctx.settings.theta_term_tol),
        T,
        request.R,
        Y=request.Y,
        V=request.V,
        grid=request.grid or ctx.settings.fourier_grid,
    )
    count = lattice_count(spec, T, request.R)
    return make_report(
        "theta fourier",
        request,
        {"coefficient": encode(value), "lattice_count": count},
        residual=abs(value - count),
        tolerance=request.tolerance,
    )


def _count(request: LatticeCountRequest, ctx: CommandContext) -> Report:
    spec = request.spec.build(ctx.settings.theta_radius)
    count = lattice_count(spec, parse_scalar(request.T, True), request.R)
    return make_report("theta count", request, {"count": count})


router.add_command(
    create_command(
        name="eval",
        handler=_eval,
        request_schema=ThetaEvalRequest,
        help="theta_{S,c}(Z, W) with a rigorous bound on the omitted terms",
    )
)
router.add_command(
    create_command(
        name="invariance",
        handler=_invariance,
        request_schema=ThetaInvarianceRequest,
        options=[OptionField("generator", help="translation, lambda, mu or inversion")],
        help="Residual of theta under the slash action of a generator of the Jacobi modular group",
    )
)
router.add_command(
    create_command(
        name="fourier",
        handler=_fourier,
        request_schema=FourierRequest,
        options=[
            OptionField("T", flag_name="--T", help="Fourier index T (2T integral)"),
            OptionField("R", flag_name="--R", python_type=int, help="Fourier index R"),
        ],
        help="Fourier coefficient c(T, R) by quadrature, checked against the lattice count",
    )
)
router.add_command(
    create_command(
        name="count",
        handler=_count,
        request_schema=LatticeCountRequest,
        help="#{x : x^tSx / 2 = T, c^tSx = R}",
    )
)
