"""
WHQ Engine - Target and Source Projections

Builds Π^L, Π^R, Π̄^L, Π̄^R, evaluates the projection and base-monoid
identity catalog, and extracts the base monoids H_L, H_R together with
their actions on H.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from .checks import Identity, equation, equations, evaluate
from .errors import ModuleLawFailure, MonoidAxiomFailure
from .matrix import ExactMatrix
from .models import SuiteReport
from .moncat import Mor, compose, convolve, split_idempotent, tensor
from .structure import SYMMETRIC_BASE_NOTE, Mode, WeakStructure, dualize

logger = logging.getLogger(__name__)

PI_COMPOSITION_NOTE = (
    "pi-composition-2: the printed fourth member repeats the first; "
    "the mirror equality Π^R∘Π̄^R = Π^R is checked"
)
DUAL_SUITE_NOTE = "coquasigroup mode: identities evaluated on the dual structure"


@dataclass(frozen=True)
class ProjectionSet:
    piL: Mor
    piR: Mor
    piLbar: Mor
    piRbar: Mor

    def as_dict(self) -> dict:
        return {"piL": self.piL, "piR": self.piR, "piLbar": self.piLbar, "piRbar": self.piRbar}


def projection_set(S: WeakStructure) -> ProjectionSet:
    """The four composites, built literally from the structure maps."""
    H, c, u, e = S.H, S.c, S.unit_pair, S.counit_pair
    return ProjectionSet(
        piL=compose(tensor(e, H), tensor(H, c), tensor(u, H)),
        piR=compose(tensor(H, e), tensor(c, H), tensor(H, u)),
        piLbar=compose(tensor(H, e), tensor(u, H)),
        piRbar=compose(tensor(e, H), tensor(H, u)),
    )


def projection_identities(S: WeakStructure, P: Optional[ProjectionSet] = None) -> List[Identity]:
    """The 32 named lines: projection family first, then the base-monoid family."""
    P = P or projection_set(S)
    H, c, mu, delta, eta, eps = S.H, S.c, S.mu, S.delta, S.eta, S.eps
    u, e = S.unit_pair, S.counit_pair
    L, R, Lb, Rb = P.piL, P.piR, P.piLbar, P.piRbar

    def conv(f, g):
        return convolve(S, f, g)

    lines = [
        equation("idempotent-pi-l", lambda: compose(L, L), lambda: L),
        equation("idempotent-pi-r", lambda: compose(R, R), lambda: R),
        equation("idempotent-pi-l-bar", lambda: compose(Lb, Lb), lambda: Lb),
        equation("idempotent-pi-r-bar", lambda: compose(Rb, Rb), lambda: Rb),
        equation(
            "unidadpi",
            lambda: compose(L, eta),
            lambda: compose(R, eta),
            lambda: compose(Lb, eta),
            lambda: compose(Rb, eta),
            lambda: eta,
        ),
        equation(
            "counidadpi",
            lambda: compose(eps, L),
            lambda: compose(eps, R),
            lambda: compose(eps, Lb),
            lambda: compose(eps, Rb),
            lambda: eps,
        ),
        equation("pi-l", lambda: conv(L, H), lambda: conv(H, R), lambda: H),
        equation(
            "mu-pi-l",
            lambda: compose(mu, tensor(H, L)),
            lambda: compose(tensor(e, H), tensor(H, c), tensor(delta, H)),
        ),
        equation(
            "mu-pi-r",
            lambda: compose(mu, tensor(R, H)),
            lambda: compose(tensor(H, e), tensor(c, H), tensor(H, delta)),
        ),
        equation(
            "mu-pi-l-var",
            lambda: compose(mu, tensor(H, Lb)),
            lambda: compose(tensor(H, e), tensor(delta, H)),
        ),
        equation(
            "mu-pi-r-var",
            lambda: compose(mu, tensor(Rb, H)),
            lambda: compose(tensor(e, H), tensor(H, delta)),
        ),
        equation(
            "delta-pi-l",
            lambda: compose(tensor(H, L), delta),
            lambda: compose(tensor(mu, H), tensor(H, c), tensor(u, H)),
        ),
        equation(
            "delta-pi-r",
            lambda: compose(tensor(R, H), delta),
            lambda: compose(tensor(H, mu), tensor(c, H), tensor(H, u)),
        ),
        equation(
            "pi-l-mu-pi-l",
            lambda: compose(L, mu, tensor(H, L)),
            lambda: compose(L, mu),
            lambda: compose(L, mu, tensor(H, Lb)),
        ),
        equation(
            "pi-delta-mu-pi-3",
            lambda: compose(tensor(H, L), delta, L),
            lambda: compose(delta, L),
            lambda: compose(tensor(H, Rb), delta, L),
        ),
        equation(
            "pi-l-barra-delta",
            lambda: compose(tensor(Lb, H), delta),
            lambda: compose(tensor(H, mu), tensor(u, H)),
        ),
        equation(
            "pi-r-barra-delta",
            lambda: compose(tensor(H, Rb), delta),
            lambda: compose(tensor(mu, H), tensor(H, u)),
        ),
        equation(
            "pi-delta-mu-pi-4",
            lambda: compose(tensor(R, H), delta, R),
            lambda: compose(delta, R),
            lambda: compose(tensor(Lb, H), delta, R),
        ),
        equation(
            "doblepiLmu",
            lambda: compose(mu, tensor(L, L)),
            lambda: compose(L, mu, tensor(L, L)),
        ),
        equation(
            "doblepiRmu",
            lambda: compose(mu, tensor(R, R)),
            lambda: compose(R, mu, tensor(R, R)),
        ),
        equations(
            "pi-composition-2",
            (lambda: compose(Rb, L), lambda: L),
            (lambda: compose(Lb, R), lambda: R),
            (lambda: compose(L, Lb), lambda: L),
            (lambda: compose(R, Rb), lambda: R),
        ),
        # base-monoid family
        equations(
            "PiLRconvolution",
            (lambda: conv(L, L), lambda: L),
            (lambda: conv(R, R), lambda: R),
        ),
        equation(
            "aux-1-monoid-hl",
            lambda: compose(delta, mu, tensor(L, H)),
            lambda: compose(tensor(mu, H), tensor(L, delta)),
        ),
        equation(
            "aux-2-monoid-hl",
            lambda: compose(delta, mu, tensor(H, L)),
            lambda: compose(tensor(mu, H), tensor(H, c), tensor(delta, L)),
        ),
        equation(
            "aux-1-monoid-hr",
            lambda: compose(delta, mu, tensor(H, R)),
            lambda: compose(tensor(H, mu), tensor(delta, R)),
        ),
        equation(
            "aux-2-monoid-hr",
            lambda: compose(delta, mu, tensor(R, H)),
            lambda: compose(tensor(H, mu), tensor(c, H), tensor(R, delta)),
        ),
    ]
    for side, pi in (("hl", L), ("hr", R)):
        lines += _monoid_lines(S, side, pi)
    return lines


def _monoid_lines(S: WeakStructure, side: str, pi: Mor) -> List[Identity]:
    H, mu = S.H, S.mu
    return [
        equation(
            f"monoid-{side}-1",
            lambda: compose(mu, tensor(compose(mu, tensor(pi, H)), H)),
            lambda: compose(mu, tensor(pi, mu)),
        ),
        equation(
            f"monoid-{side}-2",
            lambda: compose(mu, tensor(H, compose(mu, tensor(pi, H)))),
            lambda: compose(mu, tensor(compose(mu, tensor(H, pi)), H)),
        ),
        equation(
            f"monoid-{side}-3",
            lambda: compose(mu, tensor(H, compose(mu, tensor(H, pi)))),
            lambda: compose(mu, tensor(mu, pi)),
        ),
    ]


def check_projection_identities(S: WeakStructure, max_workers: Optional[int] = None) -> SuiteReport:
    """One verdict per named line; always 32 lines."""
    notes = [SYMMETRIC_BASE_NOTE, PI_COMPOSITION_NOTE]
    target = S
    if S.mode is Mode.COQUASIGROUP:
        target = dualize(S)
        notes.append(DUAL_SUITE_NOTE)
    report = SuiteReport(
        suite="projections",
        notes=notes,
        lines=evaluate(projection_identities(target), max_workers),
    )
    if report.passed:
        logger.info(f"{S!r}: all {len(report.lines)} projection identities hold")
    else:
        logger.warning(f"{S!r}: projection identities fail at {', '.join(report.failures())}")
    return report


# ---------------------------------------------------------------------------
# Base monoids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseMonoid:
    """H_L or H_R split out of Π^L or Π^R, with its actions on H.

    right_action = μ∘(H⊗inj) : H⊗H_σ -> H; left_action = μ∘(inj⊗H) : H_σ⊗H -> H.
    """

    side: str
    rank: int
    inj: ExactMatrix
    proj: ExactMatrix
    eta_base: ExactMatrix
    mu_base: ExactMatrix
    right_action: ExactMatrix
    left_action: ExactMatrix


def base_monoid(S: WeakStructure, side: str, P: Optional[ProjectionSet] = None) -> BaseMonoid:
    if side not in ("L", "R"):
        raise ValueError(f"side must be L or R, got {side!r}")
    P = P or projection_set(S)
    split = split_idempotent(P.piL if side == "L" else P.piR)
    field, d, r = S.field, S.dim, split.rank
    i, p = split.inj, split.proj
    I_r, I_d = ExactMatrix.identity(r, field), ExactMatrix.identity(d, field)

    eta_base = p @ S.eta.matrix
    mu_base = p @ S.mu.matrix @ i.kron(i)
    if mu_base @ mu_base.kron(I_r) != mu_base @ I_r.kron(mu_base):
        raise MonoidAxiomFailure(f"H_{side} product is not associative")
    if mu_base @ eta_base.kron(I_r) != I_r or mu_base @ I_r.kron(eta_base) != I_r:
        raise MonoidAxiomFailure(f"p∘η is not a unit of H_{side}")

    right_action = S.mu.matrix @ I_d.kron(i)
    left_action = S.mu.matrix @ i.kron(I_d)
    if right_action @ I_d.kron(eta_base) != I_d or left_action @ eta_base.kron(I_d) != I_d:
        raise ModuleLawFailure(f"unit of H_{side} does not act trivially on H")
    if right_action @ right_action.kron(I_r) != right_action @ I_d.kron(mu_base):
        raise ModuleLawFailure(f"H is not a right H_{side}-module under μ∘(H⊗i)")
    if left_action @ I_r.kron(left_action) != left_action @ mu_base.kron(I_d):
        raise ModuleLawFailure(f"H is not a left H_{side}-module under μ∘(i⊗H)")

    logger.info(f"{S!r}: H_{side} has rank {r}")
    return BaseMonoid(
        side=side,
        rank=r,
        inj=i,
        proj=p,
        eta_base=eta_base,
        mu_base=mu_base,
        right_action=right_action,
        left_action=left_action,
    )
