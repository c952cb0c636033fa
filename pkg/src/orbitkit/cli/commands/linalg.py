"""Matrix verbs: Pfaffian, exponential, SPD logarithm and the Jordan decomposition."""

from __future__ import annotations

from orbitkit.cli.generic import CommandContext, CommandRouter, create_command, make_report
from orbitkit.linalg import classify_element, jordan_decompose, matrix_exp, matrix_log_spd, pfaffian
from orbitkit.linalg.kinds import commutator, det, max_abs, residual, scalar_to_float
from orbitkit.schemas.generic import Report
from orbitkit.schemas.linalg import MatrixRequest
from orbitkit.schemas.matrix import encode, parse_matrix

router = CommandRouter(prefix="linalg", help="Pfaffian, matrix exponential and Jordan parts")


def _pfaffian(request: MatrixRequest, ctx: CommandContext) -> Report:
    A = parse_matrix(request.A, ctx.exact)
    value = pfaffian(A, None if ctx.exact else ctx.tol)
    # Pf(A)² = det A
    gap = abs(complex(scalar_to_float(value**2 - det(A))))
    return make_report("linalg pfaffian", request, encode(value), residual=gap, tolerance=ctx.tol)


def _exp(request: MatrixRequest, ctx: CommandContext) -> Report:
    return make_report("linalg exp", request, encode(matrix_exp(parse_matrix(request.A, False))))


def _log(request: MatrixRequest, ctx: CommandContext) -> Report:
    P = parse_matrix(request.A, False)
    L = matrix_log_spd(P, ctx.settings.symplectic_tol)
    return make_report(
        "linalg log",
        request,
        encode(L),
        residual=residual(matrix_exp(L), P),
        tolerance=ctx.settings.reconstruction_tol,
    )


def _jordan(request: MatrixRequest, ctx: CommandContext) -> Report:
    X = parse_matrix(request.A, False)
    parts = jordan_decompose(
        X, separation=ctx.settings.jordan_separation, tol=ctx.settings.classify_tol
    )
    gap = max(
        residual(parts.hyperbolic + parts.elliptic + parts.nilpotent, X),
        max_abs(commutator(parts.hyperbolic, parts.elliptic)),
        max_abs(commutator(parts.semisimple, parts.nilpotent)),
    )
    result = {
        "hyperbolic": encode(parts.hyperbolic),
        "elliptic": encode(parts.elliptic),
        "nilpotent": encode(parts.nilpotent),
    }
    return make_report(
        "linalg jordan", request, result, residual=gap, tolerance=ctx.settings.reconstruction_tol
    )


def _classify(request: MatrixRequest, ctx: CommandContext) -> Report:
    verdict = classify_element(
        parse_matrix(request.A, False),
        tol=ctx.settings.classify_tol,
        separation=ctx.settings.jordan_separation,
    )
    return make_report("linalg classify", request, {"class": verdict.value})


router.add_command(
    create_command(
        name="pfaffian",
        handler=_pfaffian,
        request_schema=MatrixRequest,
        help="Pfaffian of an even skew-symmetric matrix",
    )
)
router.add_command(
    create_command(name="exp", handler=_exp, request_schema=MatrixRequest, help="exp(A)")
)
router.add_command(
    create_command(
        name="log",
        handler=_log,
        request_schema=MatrixRequest,
        help="Principal logarithm of a symmetric positive definite matrix",
    )
)
router.add_command(
    create_command(
        name="jordan",
        handler=_jordan,
        request_schema=MatrixRequest,
        help="Hyperbolic, elliptic and nilpotent parts of a real matrix",
    )
)
router.add_command(
    create_command(
        name="classify",
        handler=_classify,
        request_schema=MatrixRequest,
        help="Nilpotent, hyperbolic, elliptic or mixed",
    )
)
