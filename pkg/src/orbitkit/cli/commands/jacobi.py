"""Jacobi group verbs: the group law, the action on H_n × C^(m,n), Iwasawa factors and the
structure of the Lie algebra."""

from __future__ import annotations

from orbitkit.cli.generic import (
    CommandContext,
    CommandRouter,
    OptionField,
    OptionType,
    create_command,
    make_report,
)
from orbitkit.jacobi import (
    JacobiElement,
    TangentVector,
    complex_structure,
    jacobi_action,
    jacobi_coadjoint,
    jacobi_differential,
    jacobi_embed,
    jacobi_inv,
    jacobi_iwasawa,
    jacobi_mul,
    jacobi_pairing,
    killing_check,
    orbit_dimension,
    structure_constants,
    verify_commutation_table,
)
from orbitkit.jacobi.algebra import jacobi_pairing_matrix
from orbitkit.jacobi.group import differential_fd
from orbitkit.jacobi.structure import eigenvector_check
from orbitkit.linalg.kinds import residual, scalar_to_float
from orbitkit.schemas.generic import Report
from orbitkit.schemas.jacobi import (
    ComplexStructureRequest,
    DimsRequest,
    JacobiActRequest,
    JacobiCoadjointRequest,
    JacobiDifferentialRequest,
    JacobiDualIn,
    JacobiElementIn,
    JacobiElementRequest,
    JacobiIwasawaRequest,
    JacobiMulRequest,
    JacobiPairingRequest,
    JacobiPointIn,
    JacobiTableRequest,
    KillingRequest,
)
from orbitkit.schemas.matrix import encode, parse_matrix
from orbitkit.symplectic import J

router = CommandRouter(prefix="jacobi", help="The Jacobi group G^J = Sp(n,R) ⋉ H^(n,m)")

# Central differences with step 1e-5 agree with the closed form to about 1e-10.
_FD_TOLERANCE = 1e-6

DIMS_OPTIONS = [
    OptionField("n", python_type=int, help="Siegel degree n"),
    OptionField("m", python_type=int, help="Heisenberg rank m"),
]

TABLE_OPTIONS = DIMS_OPTIONS + [
    OptionField("verify", OptionType.FLAG, help="Verify every identity by exact commutators"),
    OptionField("printed", OptionType.FLAG, help="Check the erratum entries as printed"),
    OptionField("lemma", help="Table exported without --verify: real or complex"),
]


def _gap(x: JacobiElement, y: JacobiElement) -> float:
    return max(
        residual(x.M.M, y.M.M),
        residual(x.heis.lam, y.heis.lam),
        residual(x.heis.mu, y.heis.mu),
        residual(x.heis.kappa, y.heis.kappa),
    )


def _element(g: JacobiElementIn, ctx: CommandContext) -> JacobiElement:
    return g.build(ctx.exact, ctx.settings.symplectic_tol)


def _mul(request: JacobiMulRequest, ctx: CommandContext) -> Report:
    product = jacobi_mul(_element(request.g1, ctx), _element(request.g2, ctx))
    return make_report("jacobi mul", request, JacobiElementIn.dump(product))


def _inv(request: JacobiElementRequest, ctx: CommandContext) -> Report:
    g = _element(request.g, ctx)
    inverse = jacobi_inv(g)
    n, m = g.dims
    return make_report(
        "jacobi inv",
        request,
        JacobiElementIn.dump(inverse),
        residual=_gap(jacobi_mul(g, inverse), JacobiElement.identity(n, m, g.exact)),
        tolerance=ctx.settings.reconstruction_tol,
    )


def _embed(request: JacobiElementRequest, ctx: CommandContext) -> Report:
    M = jacobi_embed(_element(request.g, ctx)).M
    size = M.shape[0]
    Jn = J(size // 2, ctx.exact)
    return make_report(
        "jacobi embed",
        request,
        {"M": encode(M)},
        residual=residual(M.T @ Jn @ M, Jn),
        tolerance=ctx.settings.symplectic_tol,
    )


def _act(request: JacobiActRequest, ctx: CommandContext) -> Report:
    image = jacobi_action(
        _element(request.g, ctx),
        request.point.build(ctx.settings.symplectic_tol),
        degeneracy_tol=ctx.settings.degeneracy_tol,
        tol=ctx.settings.symplectic_tol,
    )
    return make_report("jacobi act", request, JacobiPointIn.dump(image))


def _iwasawa(request: JacobiIwasawaRequest, ctx: CommandContext) -> Report:
    g = _element(request.g, ctx)
    tol = ctx.settings.reconstruction_tol
    factors = jacobi_iwasawa(g, request.mode, tol)
    validity = factors.validity(tol)
    gap = _gap(factors.product(), g.as_float())
    result = {
        "mode": factors.mode.value,
        "nil": JacobiElementIn.dump(factors.nil),
        "diag": JacobiElementIn.dump(factors.diag),
        "compact": JacobiElementIn.dump(factors.compact),
        "lam_star": encode(factors.lam_star),
        "mu_star": encode(factors.mu_star),
        "kappa_star": encode(factors.kappa_star),
        "validity": validity,
    }
    return make_report(
        "jacobi iwasawa",
        request,
        result,
        residual=gap,
        tolerance=tol,
        passed=gap <= tol and all(validity.values()),
    )


def _differential(request: JacobiDifferentialRequest, ctx: CommandContext) -> Report:
    g = _element(request.g, ctx)
    v = parse_matrix(request.v, False)
    w = parse_matrix(request.w, False)
    v_image, w_image = jacobi_differential(g, v, w)
    v_fd, w_fd = differential_fd(g, v, w)
    return make_report(
        "jacobi differential",
        request,
        {"v": encode(v_image), "w": encode(w_image)},
        residual=max(residual(v_image, v_fd), residual(w_image, w_fd)),
        tolerance=_FD_TOLERANCE,
    )


def _table(request: JacobiTableRequest, ctx: CommandContext) -> Report:
    if not request.verify:
        records = structure_constants(request.n, request.m, lemma=request.lemma)
        return make_report("jacobi table", request, {"lemma": request.lemma, "brackets": records})
    report = verify_commutation_table(
        request.n, request.m, printed=request.printed, max_workers=ctx.settings.max_workers
    )
    result = {
        "n": report.n,
        "m": report.m,
        "identities": [
            {
                "name": r.name,
                "lemma": r.lemma,
                "checks": r.checks,
                "pass": r.passed,
                "failures": r.failures,
                "erratum": r.erratum,
            }
            for r in report.identities
        ],
        "inclusions": report.inclusions,
        "witness": list(report.witness) if report.witness else None,
        "invariants": report.invariants,
        "counts": report.counts,
    }
    return make_report("jacobi table", request, result, passed=report.passed)


def _killing(request: KillingRequest, ctx: CommandContext) -> Report:
    report = killing_check(request.n)
    result = {
        "n": report.n,
        "coefficient": report.coefficient,
        "checks": report.checks,
        "failures": [list(pair) for pair in report.failures],
    }
    return make_report("jacobi killing", request, result, passed=report.passed)


def _eigen(request: DimsRequest, ctx: CommandContext) -> Report:
    verdict = eigenvector_check(request.n, request.m)
    return make_report("jacobi eigen", request, verdict, passed=all(verdict.values()))


def _complex(request: ComplexStructureRequest, ctx: CommandContext) -> Report:
    v = TangentVector.of(*(parse_matrix(getattr(request, k), ctx.exact) for k in "YXPQ"))
    image = complex_structure(v)
    twice = complex_structure(image)
    result = {"Y": image.Y, "X": image.X, "P": image.P, "Q": image.Q}
    # I² = −1
    gap = max(
        residual(twice.Y, -v.Y),
        residual(twice.X, -v.X),
        residual(twice.P, -v.P),
        residual(twice.Q, -v.Q),
    )
    return make_report("jacobi complex", request, encode(result), residual=gap, tolerance=ctx.tol)


def _coadjoint(request: JacobiCoadjointRequest, ctx: CommandContext) -> Report:
    F = request.F.build(ctx.exact)
    image = jacobi_coadjoint(_element(request.g, ctx), F)
    tol = None if ctx.exact else ctx.settings.classify_tol
    result = {"F": JacobiDualIn.dump(image), "orbit_dimension": orbit_dimension(F, tol)}
    return make_report("jacobi coadjoint", request, result)


def _pairing(request: JacobiPairingRequest, ctx: CommandContext) -> Report:
    F = request.F.build(ctx.exact)
    L = request.X.build(ctx.exact)
    value = jacobi_pairing(F, L)
    gap = abs(complex(scalar_to_float(value - jacobi_pairing_matrix(F, L))))
    return make_report(
        "jacobi pairing", request, {"value": encode(value)}, residual=gap, tolerance=ctx.tol
    )


router.add_command(
    create_command(name="mul", handler=_mul, request_schema=JacobiMulRequest, help="g1·g2")
)
router.add_command(
    create_command(name="inv", handler=_inv, request_schema=JacobiElementRequest, help="g^-1")
)
router.add_command(
    create_command(
        name="embed",
        handler=_embed,
        request_schema=JacobiElementRequest,
        help="Block matrix of g in Sp(n+m, R)",
    )
)
router.add_command(
    create_command(
        name="act",
        handler=_act,
        request_schema=JacobiActRequest,
        help="g·(Z, W) = (M<Z>, (W + λZ + µ)(CZ + D)^-1)",
    )
)
router.add_command(
    create_command(
        name="iwasawa",
        handler=_iwasawa,
        request_schema=JacobiIwasawaRequest,
        options=[OptionField("mode", help="NtildeAK or NAKJ")],
        help="Iwasawa factors of g",
    )
)
router.add_command(
    create_command(
        name="differential",
        handler=_differential,
        request_schema=JacobiDifferentialRequest,
        help="Differential of the action at (iE, 0), checked by finite differences",
    )
)
router.add_command(
    create_command(
        name="table",
        handler=_table,
        request_schema=JacobiTableRequest,
        options=TABLE_OPTIONS,
        help="Export or verify the commutation relations of the Jacobi algebra",
    )
)
router.add_command(
    create_command(
        name="killing",
        handler=_killing,
        request_schema=KillingRequest,
        options=[OptionField("n", python_type=int, help="1 <= n <= 3")],
        help="tr(ad X ad Y) = 2(n+1) tr(XY) on the basis of sp(n, R)",
    )
)
router.add_command(
    create_command(
        name="eigen",
        handler=_eigen,
        request_schema=DimsRequest,
        options=DIMS_OPTIONS,
        help="The X±, Y± generators are ±i eigenvectors of the complex structure",
    )
)
router.add_command(
    create_command(
        name="complex",
        handler=_complex,
        request_schema=ComplexStructureRequest,
        help="Complex structure on the tangent space at (iE, 0)",
    )
)
router.add_command(
    create_command(
        name="coadjoint",
        handler=_coadjoint,
        request_schema=JacobiCoadjointRequest,
        help="Ad*(g)F and the dimension of the orbit through F",
    )
)
router.add_command(
    create_command(
        name="pairing",
        handler=_pairing,
        request_schema=JacobiPairingRequest,
        help="<F, X>, checked against tr(F·X)",
    )
)
