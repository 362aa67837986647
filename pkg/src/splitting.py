"""
WHQ Engine - Omega Morphisms and Their Splittings

The four Ω idempotents on H⊗H, their split images H×_σ^α H, and the
coequalizer/equalizer realizations of those images. Coequalizers of a
parallel pair are cokernels of the difference; equalizers are kernels.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .checks import equation, evaluate, predicate
from .errors import ModuleLawFailure, Singular
from .matrix import ExactMatrix
from .models import SuiteReport
from .moncat import Mor, Splitting, compose, split_idempotent, tensor
from .projections import BaseMonoid, ProjectionSet, base_monoid, projection_set
from .structure import SYMMETRIC_BASE_NOTE, Mode, WeakStructure, dualize, validate_premises

logger = logging.getLogger(__name__)

SIDES = ("L", "R")
OMEGA_KEYS: Tuple[Tuple[str, int], ...] = (("L", 1), ("R", 1), ("L", 2), ("R", 2))

INTERTWINING_NOTE = (
    "muconomega/omegaconmu: printed with (H⊗Ω)∘(μ⊗H), which does not typecheck; "
    "checked as (μ⊗H)∘(H⊗Ω^1) = Ω^1∘(μ⊗H) and (H⊗μ)∘(Ω^2⊗H) = Ω^2∘(H⊗μ)"
)
EQUALIZER_CODOMAIN_NOTE = (
    "equalizer for Ω_R^1: codomain printed as H⊗H_L⊗H, read as H⊗H_R⊗H"
)
PREMISE_GATE_NOTE = "PremiseFailure: premises fail, diagrams not evaluated"


@dataclass(frozen=True)
class OmegaFamily:
    """Ω_σ^α keyed by (σ, α), with splittings q = proj, j = inj."""

    maps: Dict[Tuple[str, int], Mor]
    splits: Dict[Tuple[str, int], Splitting]

    def omega(self, side: str, idx: int) -> Mor:
        return self.maps[(side, idx)]

    def splitting(self, side: str, idx: int) -> Splitting:
        return self.splits[(side, idx)]

    def q(self, side: str, idx: int) -> ExactMatrix:
        return self.splits[(side, idx)].proj

    def j(self, side: str, idx: int) -> ExactMatrix:
        return self.splits[(side, idx)].inj

    def rank(self, side: str, idx: int) -> int:
        return self.splits[(side, idx)].rank


def omega_maps(S: WeakStructure, P: Optional[ProjectionSet] = None) -> Dict[Tuple[str, int], Mor]:
    P = P or projection_set(S)
    H, mu, delta = S.H, S.mu, S.delta
    out = {}
    for side, pi in (("L", P.piL), ("R", P.piR)):
        out[(side, 1)] = compose(tensor(mu, H), tensor(H, pi, H), tensor(H, delta))
        out[(side, 2)] = compose(tensor(H, mu), tensor(H, pi, H), tensor(delta, H))
    return out


def omega_family(S: WeakStructure, P: Optional[ProjectionSet] = None) -> OmegaFamily:
    """All four Ω maps and their splittings; raises NotIdempotent if one does not split."""
    maps = omega_maps(S, P)
    splits = {key: split_idempotent(maps[key]) for key in OMEGA_KEYS}
    logger.info(
        f"{S!r}: Ω ranks "
        + ", ".join(f"{s}{a}={splits[(s, a)].rank}" for s, a in OMEGA_KEYS)
    )
    return OmegaFamily(maps=maps, splits=splits)


def check_omega_identities(S: WeakStructure, max_workers: Optional[int] = None) -> SuiteReport:
    """Idempotency of each Ω and the four μ-intertwining lines."""
    notes = [SYMMETRIC_BASE_NOTE, INTERTWINING_NOTE]
    target = S
    if S.mode is Mode.COQUASIGROUP:
        target = dualize(S)
        notes.append("coquasigroup mode: identities evaluated on the dual structure")
    maps = omega_maps(target)
    H, mu = target.H, target.mu
    lines = []
    for side, idx in OMEGA_KEYS:
        om = maps[(side, idx)]
        lines.append(equation(f"idempotent-omega-{side.lower()}{idx}", lambda om=om: compose(om, om), lambda om=om: om))
    for side in SIDES:
        om = maps[(side, 1)]
        lines.append(
            equation(
                f"muconomega-{side.lower()}",
                lambda om=om: compose(tensor(mu, H), tensor(H, om)),
                lambda om=om: compose(om, tensor(mu, H)),
            )
        )
    for side in SIDES:
        om = maps[(side, 2)]
        lines.append(
            equation(
                f"omegaconmu-{side.lower()}",
                lambda om=om: compose(tensor(H, mu), tensor(om, H)),
                lambda om=om: compose(om, tensor(H, mu)),
            )
        )
    report = SuiteReport(suite="omega", notes=notes, lines=evaluate(lines, max_workers))
    if not report.passed:
        logger.warning(f"{S!r}: Ω identities fail at {', '.join(report.failures())}")
    return report


# ---------------------------------------------------------------------------
# Coequalizers and equalizers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoequalizerResult:
    """Coequalizer of two parallel maps, realized as the cokernel of their difference."""

    side: str
    source_dim: int
    target_dim: int
    left: ExactMatrix
    right: ExactMatrix
    rank: int
    quotient: ExactMatrix

    def coequalizes(self) -> bool:
        return (self.quotient @ self.left) == (self.quotient @ self.right)

    def comparison(self, q: ExactMatrix) -> ExactMatrix:
        """The t with t∘quotient = q, for a q that also coequalizes the pair."""
        return q @ self.quotient.right_inverse()


def _check_module(base: BaseMonoid, module_rank: int, action: ExactMatrix) -> None:
    field, r, m = base.mu_base.field, base.rank, module_rank
    I_m, I_r = ExactMatrix.identity(m, field), ExactMatrix.identity(r, field)
    if base.side == "L":
        # right H_L-module: action M⊗H_L -> M
        if action.shape != (m, m * r):
            raise ModuleLawFailure(f"right action must be {m}x{m * r}, got {action.shape}")
        unital = action @ I_m.kron(base.eta_base) == I_m
        assoc = action @ action.kron(I_r) == action @ I_m.kron(base.mu_base)
    else:
        # left H_R-module: action H_R⊗M -> M
        if action.shape != (m, r * m):
            raise ModuleLawFailure(f"left action must be {m}x{r * m}, got {action.shape}")
        unital = action @ base.eta_base.kron(I_m) == I_m
        assoc = action @ I_r.kron(action) == action @ base.mu_base.kron(I_m)
    if not unital:
        raise ModuleLawFailure(f"unit of H_{base.side} does not act as the identity")
    if not assoc:
        raise ModuleLawFailure(f"action is not compatible with the product of H_{base.side}")


def relative_tensor(
    S: WeakStructure,
    module_rank: int,
    action: ExactMatrix,
    side: str,
    base: Optional[BaseMonoid] = None,
) -> CoequalizerResult:
    """M⊗_{H_L}H for a right H_L-module M (side L) or H⊗_{H_R}M for a left H_R-module (side R)."""
    base = base or base_monoid(S, side)
    _check_module(base, module_rank, action)
    field, d, m = S.field, S.dim, module_rank
    I_d, I_m = ExactMatrix.identity(d, field), ExactMatrix.identity(m, field)
    if side == "L":
        left = action.kron(I_d)
        right = I_m.kron(base.left_action)
    else:
        left = base.right_action.kron(I_m)
        right = I_d.kron(action)
    quotient = (left - right).cokernel()
    result = CoequalizerResult(
        side=side,
        source_dim=left.cols,
        target_dim=left.rows,
        left=left,
        right=right,
        rank=quotient.rows,
        quotient=quotient,
    )
    logger.debug(f"relative tensor over H_{side}: rank {result.rank} of {result.target_dim}")
    return result


def regular_module(S: WeakStructure, side: str, base: Optional[BaseMonoid] = None) -> Tuple[int, ExactMatrix]:
    """H as a right H_L-module (side L) or a left H_R-module (side R)."""
    base = base or base_monoid(S, side)
    return S.dim, base.right_action if side == "L" else base.left_action


def equalizer(left: ExactMatrix, right: ExactMatrix) -> ExactMatrix:
    """Columns spanning {x : left x = right x}."""
    return (left - right).kernel()


def _equalizer_pair(S: WeakStructure, base: BaseMonoid) -> Tuple[ExactMatrix, ExactMatrix]:
    delta, I_d = S.delta.matrix, ExactMatrix.identity(S.dim, S.field)
    p = base.proj
    left = (I_d.kron(p) @ delta).kron(I_d)
    right = I_d.kron(p.kron(I_d) @ delta)
    return left, right


def lemma_diagram_identities(
    S: WeakStructure,
    family: Optional[OmegaFamily] = None,
    bases: Optional[Dict[str, BaseMonoid]] = None,
) -> list:
    P = projection_set(S)
    family = family or omega_family(S, P)
    bases = bases or {side: base_monoid(S, side, P) for side in SIDES}
    lines = []
    for side, idx in (("L", 1), ("R", 2)):
        tag = f"{side.lower()}{idx}"
        rank, action = regular_module(S, side, bases[side])
        coeq = relative_tensor(S, rank, action, side, bases[side])
        q = family.q(side, idx)

        def iso(coeq=coeq, q=q):
            if coeq.rank != q.rows:
                return False
            t = coeq.comparison(q)
            try:
                t.inverse("comparison")
            except Singular:
                return False
            return t @ coeq.quotient == q

        lines.append(predicate(f"coequalizer-{tag}-coequalizes", lambda coeq=coeq: coeq.coequalizes()))
        lines.append(predicate(f"coequalizer-{tag}-q-coequalizes", lambda coeq=coeq, q=q: q @ coeq.left == q @ coeq.right))
        lines.append(predicate(f"coequalizer-{tag}-comparison-iso", iso))
    for side, idx in (("L", 2), ("R", 1)):
        tag = f"{side.lower()}{idx}"
        left, right = _equalizer_pair(S, bases[side])
        j = family.j(side, idx)
        lines.append(predicate(f"equalizer-{tag}-equalizes", lambda a=left, b=right, j=j: a @ j == b @ j))
        lines.append(
            predicate(
                f"equalizer-{tag}-image",
                lambda a=left, b=right, j=j: equalizer(a, b).same_column_space(j),
            )
        )
    return lines


def check_lemma_diagrams(S: WeakStructure, max_workers: Optional[int] = None) -> SuiteReport:
    """Coequalizer realizations of H×_L^1 H, H×_R^2 H and equalizers for H×_L^2 H, H×_R^1 H."""
    notes = [EQUALIZER_CODOMAIN_NOTE]
    if not validate_premises(S, max_workers).passed:
        return SuiteReport(suite="lemma-diagrams", notes=notes + [PREMISE_GATE_NOTE], skipped=True)
    target = S
    if S.mode is Mode.COQUASIGROUP:
        target = dualize(S)
        notes.append("coquasigroup mode: diagrams evaluated on the dual structure")
    report = SuiteReport(
        suite="lemma-diagrams",
        notes=notes,
        lines=evaluate(lemma_diagram_identities(target), max_workers),
    )
    if not report.passed:
        logger.warning(f"{S!r}: (co)equalizer diagrams fail at {', '.join(report.failures())}")
    return report
