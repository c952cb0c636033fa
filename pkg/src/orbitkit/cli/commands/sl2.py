"""sl(2)-triple verbs: relations, Cayley transform, Jacobson–Morozov and Sekiguchi data."""

from __future__ import annotations

from orbitkit.cli.generic import CommandContext, CommandRouter, create_command, make_report
from orbitkit.schemas.generic import Report
from orbitkit.schemas.matrix import encode, parse_matrix
from orbitkit.schemas.sl2 import BasisRequest, CompletionRequest, TripleIn, TripleRequest
from orbitkit.sl2 import (
    Sl2Triple,
    cayley_transform,
    check_relations,
    is_triple,
    jacobson_morozov,
    kostant_h,
    morphism_class,
    normal_basis,
    sekiguchi_image,
    standard_basis,
    triple_flavor,
)

router = CommandRouter(prefix="sl2", help="sl(2)-triples and the Kostant–Sekiguchi correspondence")


def _tol(ctx: CommandContext) -> float | None:
    return None if ctx.exact else ctx.tol


def _relations(t: Sl2Triple) -> tuple[dict[str, float], float]:
    residuals = check_relations(t)
    return residuals, max(residuals.values())


def _basis(request: BasisRequest, ctx: CommandContext) -> Report:
    t = standard_basis() if request.basis == "standard" else normal_basis()
    return make_report("sl2 basis", request, TripleIn.dump(t))


def _check(request: TripleRequest, ctx: CommandContext) -> Report:
    t = request.triple.build(ctx.exact)
    residuals, worst = _relations(t)
    flavor = triple_flavor(t, _tol(ctx))
    result = {
        "triple": is_triple(t, _tol(ctx)),
        "relations": residuals,
        "cayley": flavor.is_cayley,
        "normal": flavor.is_normal,
    }
    return make_report("sl2 check", request, result, residual=worst, tolerance=ctx.tol)


def _cayley(request: TripleRequest, ctx: CommandContext) -> Report:
    image = cayley_transform(request.triple.build(ctx.exact), _tol(ctx))
    _, worst = _relations(image)
    return make_report(
        "sl2 cayley", request, TripleIn.dump(image), residual=worst, tolerance=ctx.tol
    )


def _complete(request: CompletionRequest, ctx: CommandContext) -> Report:
    t = jacobson_morozov(parse_matrix(request.E, True), request.ambient.build())
    _, worst = _relations(t)
    return make_report(
        "sl2 complete", request, TripleIn.dump(t), residual=worst, tolerance=ctx.tol
    )


def _sekiguchi(request: TripleRequest, ctx: CommandContext) -> Report:
    t = request.triple.build(ctx.exact)
    result = {"x": encode(sekiguchi_image(t, _tol(ctx))), "h": encode(kostant_h(t))}
    return make_report("sl2 sekiguchi", request, result)


def _morphism(request: TripleRequest, ctx: CommandContext) -> Report:
    flags = morphism_class(request.triple.build(ctx.exact), _tol(ctx))
    return make_report("sl2 morphism", request, {"real": flags.real, "theta": flags.theta})


router.add_command(
    create_command(
        name="basis",
        handler=_basis,
        request_schema=BasisRequest,
        help="The standard or the normal basis of sl(2, C)",
    )
)
router.add_command(
    create_command(
        name="check",
        handler=_check,
        request_schema=TripleRequest,
        help="Bracket relations and the Cayley/normal flavor of a triple",
    )
)
router.add_command(
    create_command(
        name="cayley",
        handler=_cayley,
        request_schema=TripleRequest,
        help="Cayley transform of a Cayley triple",
    )
)
router.add_command(
    create_command(
        name="complete",
        handler=_complete,
        request_schema=CompletionRequest,
        help="Jacobson–Morozov completion of a nilpotent E",
    )
)
router.add_command(
    create_command(
        name="sekiguchi",
        handler=_sekiguchi,
        request_schema=TripleRequest,
        help="Sekiguchi image x and the Kostant element h of a triple",
    )
)
router.add_command(
    create_command(
        name="morphism",
        handler=_morphism,
        request_schema=TripleRequest,
        help="Real and theta-equivariance of the morphism of a triple",
    )
)
