from __future__ import annotations

from orbitkit.cli.commands import heis, jacobi, linalg, orbit, rep, sl2, sp, theta
from orbitkit.cli.generic.router import CommandRouter

router = CommandRouter()
router.include_router(linalg.router)
router.include_router(sp.router)
router.include_router(heis.router)
router.include_router(rep.router)
router.include_router(sl2.router)
router.include_router(jacobi.router)
router.include_router(orbit.router)
router.include_router(theta.router)
