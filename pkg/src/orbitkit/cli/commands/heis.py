"""Heisenberg group verbs: the group law, the embedding into Sp, coadjoint data and orbits."""

from __future__ import annotations

from orbitkit.cli.generic import CommandContext, CommandRouter, create_command, make_report
from orbitkit.heisenberg import (
    classify_dual_orbit,
    heis_bform,
    heis_bracket,
    heis_coadjoint,
    heis_embed,
    heis_exp,
    heis_inv,
    heis_mul,
    heis_pairing,
    heis_polarization_check,
    heis_radical,
    mackey_split,
    plancherel_density,
)
from orbitkit.heisenberg.algebra import heis_coadjoint_matrix, heis_orbit_rank, heis_pairing_matrix
from orbitkit.heisenberg.group import HeisElement
from orbitkit.linalg.kinds import residual, scalar_to_float
from orbitkit.schemas.generic import Report
from orbitkit.schemas.heisenberg import (
    DualOrbitRequest,
    HeisCoadjointRequest,
    HeisDualIn,
    HeisDualRequest,
    HeisElementIn,
    HeisElementRequest,
    HeisLieIn,
    HeisLieRequest,
    HeisMulRequest,
    HeisPairingRequest,
    PolarizationRequest,
)
from orbitkit.schemas.matrix import encode, parse_matrix

router = CommandRouter(prefix="heis", help="The Heisenberg group H^(g,h) and its coadjoint orbits")


def _tol(ctx: CommandContext) -> float | None:
    return None if ctx.exact else ctx.tol


def _gap(x: HeisElement, y: HeisElement) -> float:
    return max(residual(x.lam, y.lam), residual(x.mu, y.mu), residual(x.kappa, y.kappa))


def _mul(request: HeisMulRequest, ctx: CommandContext) -> Report:
    product = heis_mul(request.x.build(ctx.exact), request.y.build(ctx.exact))
    return make_report("heis mul", request, HeisElementIn.dump(product))


def _inv(request: HeisElementRequest, ctx: CommandContext) -> Report:
    x = request.x.build(ctx.exact)
    inverse = heis_inv(x)
    g, h = x.dims
    return make_report(
        "heis inv",
        request,
        HeisElementIn.dump(inverse),
        residual=_gap(heis_mul(x, inverse), HeisElement.identity(g, h, x.exact)),
        tolerance=ctx.tol,
    )


def _embed(request: HeisElementRequest, ctx: CommandContext) -> Report:
    M = heis_embed(request.x.build(ctx.exact)).M
    return make_report("heis embed", request, {"M": encode(M)})


def _coadjoint(request: HeisCoadjointRequest, ctx: CommandContext) -> Report:
    x = request.x.build(ctx.exact)
    F = request.F.build(ctx.exact)
    closed = heis_coadjoint(x, F)
    oracle = heis_coadjoint_matrix(x, F)
    return make_report(
        "heis coadjoint",
        request,
        HeisDualIn.dump(closed),
        residual=residual(closed.matrix(), oracle.matrix()),
        tolerance=ctx.tol,
    )


def _pairing(request: HeisPairingRequest, ctx: CommandContext) -> Report:
    F = request.F.build(ctx.exact)
    X = request.X.build(ctx.exact)
    if request.Y is not None:
        value = heis_bform(F, X, request.Y.build(ctx.exact))
        return make_report("heis bform", request, {"value": encode(value)})
    value = heis_pairing(F, X)
    gap = abs(complex(scalar_to_float(value - heis_pairing_matrix(F, X))))
    return make_report(
        "heis pairing", request, {"value": encode(value)}, residual=gap, tolerance=ctx.tol
    )


def _bracket(request: HeisLieRequest, ctx: CommandContext) -> Report:
    X = request.X.build(ctx.exact)
    Y = request.Y.build(ctx.exact) if request.Y is not None else X
    bracket = heis_bracket(X, Y)
    commutator = X.matrix() @ Y.matrix() - Y.matrix() @ X.matrix()
    return make_report(
        "heis bracket",
        request,
        HeisLieIn.dump(bracket),
        residual=residual(bracket.matrix(), commutator),
        tolerance=ctx.tol,
    )


def _exp(request: HeisLieRequest, ctx: CommandContext) -> Report:
    image = heis_exp(request.X.build(ctx.exact))
    return make_report("heis exp", request, HeisElementIn.dump(image))


def _radical(request: HeisDualRequest, ctx: CommandContext) -> Report:
    F = request.F.build(ctx.exact)
    basis = heis_radical(F, _tol(ctx))
    result = {
        "dimension": len(basis),
        "orbit_rank": heis_orbit_rank(F, _tol(ctx)),
        "basis": [HeisLieIn.dump(X) for X in basis],
    }
    return make_report("heis radical", request, result)


def _plancherel(request: HeisDualRequest, ctx: CommandContext) -> Report:
    F = request.F.build(ctx.exact)
    density = plancherel_density(F, ctx.settings.nondegenerate_tol)
    return make_report("heis plancherel", request, {"density": encode(density)})


def _polarization(request: PolarizationRequest, ctx: CommandContext) -> Report:
    c = parse_matrix(request.c, ctx.exact)
    report = heis_polarization_check(c, request.g, ctx.settings.nondegenerate_tol)
    result = {
        "isotropic": report.isotropic,
        "maximal": report.maximal,
        "breaking_witnesses": [list(pair) for pair in report.breaking_witnesses],
        "basis": [HeisLieIn.dump(X) for X in report.basis],
    }
    return make_report("heis polarization", request, result, passed=report.ok)


def _classify(request: DualOrbitRequest, ctx: CommandContext) -> Report:
    verdict = classify_dual_orbit(
        parse_matrix(request.mu_hat, ctx.exact),
        parse_matrix(request.kappa_hat, ctx.exact),
        _tol(ctx),
    )
    return make_report(
        "heis classify",
        request,
        {"kind": verdict.kind.value, "stabilizer_dim": verdict.stabilizer_dim},
    )


def _mackey(request: HeisElementRequest, ctx: CommandContext) -> Report:
    x = request.x.build(ctx.exact)
    k_part, s_part = mackey_split(x)
    gap = _gap(heis_mul(k_part, s_part), x)
    result = {"k": HeisElementIn.dump(k_part), "s": HeisElementIn.dump(s_part)}
    return make_report("heis mackey", request, result, residual=gap, tolerance=ctx.tol)


router.add_command(
    create_command(name="mul", handler=_mul, request_schema=HeisMulRequest, help="x ∘ y")
)
router.add_command(
    create_command(name="inv", handler=_inv, request_schema=HeisElementRequest, help="x^-1")
)
router.add_command(
    create_command(
        name="embed",
        handler=_embed,
        request_schema=HeisElementRequest,
        help="Block matrix of x in Sp(g+h, R)",
    )
)
router.add_command(
    create_command(
        name="coadjoint",
        handler=_coadjoint,
        request_schema=HeisCoadjointRequest,
        help="Ad*(x)F, checked against conjugate-and-project",
    )
)
router.add_command(
    create_command(
        name="pairing",
        handler=_pairing,
        request_schema=HeisPairingRequest,
        help="<F, X>, or B_F(X, Y) when Y is given",
    )
)
router.add_command(
    create_command(name="bracket", handler=_bracket, request_schema=HeisLieRequest, help="[X, Y]")
)
router.add_command(
    create_command(name="exp", handler=_exp, request_schema=HeisLieRequest, help="exp X")
)
router.add_command(
    create_command(
        name="radical",
        handler=_radical,
        request_schema=HeisDualRequest,
        help="Radical of B_F and the coadjoint orbit rank",
    )
)
router.add_command(
    create_command(
        name="plancherel",
        handler=_plancherel,
        request_schema=HeisDualRequest,
        help="Pfaffian Plancherel density of a nondegenerate F",
    )
)
router.add_command(
    create_command(
        name="polarization",
        handler=_polarization,
        request_schema=PolarizationRequest,
        help="Check the standard polarization for c",
    )
)
router.add_command(
    create_command(
        name="classify",
        handler=_classify,
        request_schema=DualOrbitRequest,
        help="Type of the S-orbit through (mu_hat, kappa_hat)",
    )
)
router.add_command(
    create_command(
        name="mackey",
        handler=_mackey,
        request_schema=HeisElementRequest,
        help="x = k ∘ s with k in K and s in S",
    )
)
