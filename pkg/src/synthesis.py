"""
WHQ Engine - Antipode Synthesis and Classification

Synthesizes an antipode from invertible fusion maps, verifies the antipode
axioms, cross-checks the dual (coquasigroup) route against the transpose of
the quasigroup route, and classifies structures into Hopf algebras, weak
Hopf algebras and Hopf / weak Hopf (co)quasigroups.

Statuses are reported in the order the hypotheses are tested: premises,
invertibility, almost (co)linearity, λ = λ̄, then the axiom suite.
"""
import logging
from dataclasses import dataclass, field, replace
from typing import List, NamedTuple, Optional

from .checks import equation, equations, evaluate, predicate
from .errors import CrossCheckMismatch, MissingAntipode, NotIdempotent
from .matrix import ExactMatrix
from .models import (
    AntipodeReport,
    AntipodeStatus,
    ClassificationReport,
    FlagSet,
    IdentityVerdict,
    SuiteReport,
    Verdict,
)
from .moncat import Mor, compose, convolve, mor_equal, tensor, transpose
from .galois import (
    FusionMaps,
    almost_colinear,
    almost_linear,
    candidate_inverses,
    fusion,
    galois_maps,
    lift,
    try_inverse,
)
from .projections import projection_set
from .splitting import omega_family, omega_maps
from .structure import SYMMETRIC_BASE_NOTE, Mode, WeakStructure, dualize, validate_premises
from .structure_io import matrix_literals

logger = logging.getLogger(__name__)

B47_NOTE = (
    "b4-7: the printed right side μ∘(H⊗Π^R) has the wrong type; "
    "checked as (H⊗Π^R)∘δ, the transpose of a4-7"
)
DUAL_FUSION_NOTE = (
    "dual route: h = q_L^2∘γ∘j_R^2 and s = q_R^1∘β∘j_L^1 "
    "(the printed directions are not the transposes of f and g)"
)

Status = AntipodeStatus

# status of the direct coquasigroup route <-> status of the quasigroup route on the dual
DUAL_STATUS = {
    Status.NOT_INVERTIBLE_H: Status.NOT_INVERTIBLE_F,
    Status.NOT_INVERTIBLE_S: Status.NOT_INVERTIBLE_G,
    Status.ALMOST_COLINEARITY_FAILED_H: Status.ALMOST_LINEARITY_FAILED_F,
    Status.ALMOST_COLINEARITY_FAILED_S: Status.ALMOST_LINEARITY_FAILED_G,
}

DUAL_VERDICT = {
    Verdict.HOPF_ALGEBRA: Verdict.HOPF_ALGEBRA,
    Verdict.WEAK_HOPF_ALGEBRA: Verdict.WEAK_HOPF_ALGEBRA,
    Verdict.HOPF_QUASIGROUP: Verdict.HOPF_COQUASIGROUP,
    Verdict.HOPF_COQUASIGROUP: Verdict.HOPF_QUASIGROUP,
    Verdict.WEAK_HOPF_QUASIGROUP: Verdict.WEAK_HOPF_COQUASIGROUP,
    Verdict.WEAK_HOPF_COQUASIGROUP: Verdict.WEAK_HOPF_QUASIGROUP,
    Verdict.NOT_RECOGNIZED: Verdict.NOT_RECOGNIZED,
}


@dataclass(frozen=True)
class AntipodeResult:
    status: AntipodeStatus
    antipode: Optional[Mor] = None
    antipode_bar: Optional[Mor] = None
    failed_axiom: Optional[str] = None
    evidence: List[IdentityVerdict] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def synthesized(self) -> bool:
        return self.status is Status.SYNTHESIZED

    def to_report(self) -> AntipodeReport:
        return AntipodeReport(
            status=self.status,
            failed_axiom=self.failed_axiom,
            antipode=matrix_literals(self.antipode.matrix) if self.antipode is not None else None,
            antipode_bar=matrix_literals(self.antipode_bar.matrix) if self.antipode_bar is not None else None,
            evidence=list(self.evidence),
            notes=list(self.notes),
        )


def strip_lambda(S: WeakStructure) -> WeakStructure:
    return S.with_antipode(None)


# ---------------------------------------------------------------------------
# Axiom suites
# ---------------------------------------------------------------------------

def axiom_identities(S: WeakStructure) -> list:
    if S.antipode is None:
        raise MissingAntipode(f"{S!r} has no antipode to verify")
    P = projection_set(S)
    H, mu, delta, lam = S.H, S.mu, S.delta, S.antipode
    L, R = P.piL, P.piR

    def conv(f, g):
        return convolve(S, f, g)

    prefix = "a4" if S.mode is Mode.QUASIGROUP else "b4"
    lines = [
        equation(f"{prefix}-1", lambda: L, lambda: conv(H, lam)),
        equation(f"{prefix}-2", lambda: R, lambda: conv(lam, H)),
        equations(f"{prefix}-3", (lambda: conv(lam, L), lambda: lam), (lambda: conv(R, lam), lambda: lam)),
    ]
    if S.mode is Mode.QUASIGROUP:
        lines += [
            equation("a4-4", lambda: compose(mu, tensor(lam, mu), tensor(delta, H)), lambda: compose(mu, tensor(R, H))),
            equation(
                "a4-5",
                lambda: compose(mu, tensor(H, mu), tensor(H, lam, H), tensor(delta, H)),
                lambda: compose(mu, tensor(L, H)),
            ),
            equation("a4-6", lambda: compose(mu, tensor(mu, lam), tensor(H, delta)), lambda: compose(mu, tensor(H, L))),
            equation(
                "a4-7",
                lambda: compose(mu, tensor(mu, H), tensor(H, lam, H), tensor(H, delta)),
                lambda: compose(mu, tensor(H, R)),
            ),
        ]
    else:
        lines += [
            equation("b4-4", lambda: compose(tensor(mu, H), tensor(lam, delta), delta), lambda: compose(tensor(R, H), delta)),
            equation(
                "b4-5",
                lambda: compose(tensor(mu, H), tensor(H, lam, H), tensor(H, delta), delta),
                lambda: compose(tensor(L, H), delta),
            ),
            equation("b4-6", lambda: compose(tensor(H, mu), tensor(delta, lam), delta), lambda: compose(tensor(H, L), delta)),
            equation(
                "b4-7",
                lambda: compose(tensor(H, mu), tensor(H, lam, H), tensor(delta, H), delta),
                lambda: compose(tensor(H, R), delta),
            ),
        ]
    return lines


def verify_axioms(S: WeakStructure, max_workers: Optional[int] = None) -> SuiteReport:
    """Exact verdict per antipode axiom line: (a4-1)..(a4-7) or (b4-1)..(b4-7)."""
    notes = [SYMMETRIC_BASE_NOTE]
    if S.mode is Mode.COQUASIGROUP:
        notes.append(B47_NOTE)
    report = SuiteReport(suite="axioms", notes=notes, lines=evaluate(axiom_identities(S), max_workers))
    if not report.passed:
        logger.warning(f"{S!r}: antipode axioms fail at {', '.join(report.failures())}")
    return report


def _evidence(ident: str, holds: bool, detail: Optional[str] = None) -> IdentityVerdict:
    return IdentityVerdict(id=ident, holds=holds, detail=detail)


def _premise_failure(S: WeakStructure, max_workers) -> Optional[AntipodeResult]:
    report = validate_premises(S, max_workers)
    if report.passed:
        return None
    return AntipodeResult(
        status=Status.PREMISE_FAILURE,
        evidence=[line for line in report.lines if not line.holds],
        notes=report.notes,
    )


def _fusion_or_failure(S: WeakStructure) -> "FusionMaps | AntipodeResult":
    try:
        return fusion(strip_lambda(S), omega_family(S))
    except NotIdempotent as e:
        return AntipodeResult(status=Status.PREMISE_FAILURE, evidence=[_evidence("omega-splits", False, str(e))])


def _finish(
    S: WeakStructure,
    lam: Mor,
    lam_bar: Mor,
    evidence: List[IdentityVerdict],
    notes: List[str],
    max_workers,
) -> AntipodeResult:
    """λ = λ̄ check followed by the full axiom suite."""
    if not mor_equal(lam, lam_bar):
        evidence.append(_evidence("lambda-equals-lambda-bar", False))
        return AntipodeResult(Status.LAMBDA_MISMATCH, lam, lam_bar, evidence=evidence, notes=notes)
    evidence.append(_evidence("lambda-equals-lambda-bar", True))
    axioms = verify_axioms(S.with_antipode(lam), max_workers)
    evidence.extend(axioms.lines)
    if not axioms.passed:
        return AntipodeResult(
            Status.AXIOM_FAILURE, lam, lam_bar, failed_axiom=axioms.failures()[0], evidence=evidence, notes=notes
        )
    logger.info(f"{S!r}: antipode synthesized")
    return AntipodeResult(Status.SYNTHESIZED, lam, lam_bar, evidence=evidence, notes=notes + axioms.notes)


def synthesize_antipode(S: WeakStructure, max_workers: Optional[int] = None) -> AntipodeResult:
    """Build λ from f⁻¹ and λ̄ from g⁻¹; any stored antipode is ignored.

    Coquasigroup-mode structures are routed through dual_synthesis.
    """
    if S.mode is Mode.COQUASIGROUP:
        return dual_synthesis(S, max_workers)
    S = strip_lambda(S)
    failure = _premise_failure(S, max_workers)
    if failure is not None:
        return failure
    fm = _fusion_or_failure(S)
    if isinstance(fm, AntipodeResult):
        return fm
    H, eta, eps = S.H, S.eta, S.eps
    evidence: List[IdentityVerdict] = []

    f_inv, detail = try_inverse(fm.f, "f")
    evidence.append(_evidence("f-invertible", f_inv is not None, detail))
    if f_inv is None:
        return AntipodeResult(Status.NOT_INVERTIBLE_F, evidence=evidence)
    g_inv, detail = try_inverse(fm.g, "g")
    evidence.append(_evidence("g-invertible", g_inv is not None, detail))
    if g_inv is None:
        return AntipodeResult(Status.NOT_INVERTIBLE_G, evidence=evidence)

    F = lift(S, fm.expand("f", f_inv))
    G = lift(S, fm.expand("g", g_inv))
    ok = almost_linear(S, F, "left")
    evidence.append(_evidence("f-inverse-almost-left-linear", ok))
    if not ok:
        return AntipodeResult(Status.ALMOST_LINEARITY_FAILED_F, evidence=evidence)
    ok = almost_linear(S, G, "right")
    evidence.append(_evidence("g-inverse-almost-right-linear", ok))
    if not ok:
        return AntipodeResult(Status.ALMOST_LINEARITY_FAILED_G, evidence=evidence)

    lam = compose(tensor(H, eps), F, tensor(eta, H))
    lam_bar = compose(tensor(eps, H), G, tensor(H, eta))
    return _finish(S, lam, lam_bar, evidence, [], max_workers)


def _dual_direct(S: WeakStructure, max_workers) -> AntipodeResult:
    failure = _premise_failure(S, max_workers)
    if failure is not None:
        return failure
    fm = _fusion_or_failure(S)
    if isinstance(fm, AntipodeResult):
        return fm
    H, eta, eps = S.H, S.eta, S.eps
    evidence: List[IdentityVerdict] = []
    notes = [DUAL_FUSION_NOTE]

    h_inv, detail = try_inverse(fm.h, "h")
    evidence.append(_evidence("h-invertible", h_inv is not None, detail))
    if h_inv is None:
        return AntipodeResult(Status.NOT_INVERTIBLE_H, evidence=evidence, notes=notes)
    s_inv, detail = try_inverse(fm.s, "s")
    evidence.append(_evidence("s-invertible", s_inv is not None, detail))
    if s_inv is None:
        return AntipodeResult(Status.NOT_INVERTIBLE_S, evidence=evidence, notes=notes)

    Hinv = lift(S, fm.expand("h", h_inv))
    Sinv = lift(S, fm.expand("s", s_inv))
    ok = almost_colinear(S, Hinv, "left")
    evidence.append(_evidence("h-inverse-almost-left-colinear", ok))
    if not ok:
        return AntipodeResult(Status.ALMOST_COLINEARITY_FAILED_H, evidence=evidence, notes=notes)
    ok = almost_colinear(S, Sinv, "right")
    evidence.append(_evidence("s-inverse-almost-right-colinear", ok))
    if not ok:
        return AntipodeResult(Status.ALMOST_COLINEARITY_FAILED_S, evidence=evidence, notes=notes)

    lam = compose(tensor(eps, H), Hinv, tensor(H, eta))
    lam_bar = compose(tensor(H, eps), Sinv, tensor(eta, H))
    return _finish(S, lam, lam_bar, evidence, notes, max_workers)


def _optional_transpose(m: Optional[Mor]) -> Optional[Mor]:
    return transpose(m) if m is not None else None


def dual_synthesis(S: WeakStructure, max_workers: Optional[int] = None) -> AntipodeResult:
    """Coquasigroup antipode from h and s, cross-checked against the quasigroup route on the dual."""
    if S.mode is not Mode.COQUASIGROUP:
        raise ValueError(f"{S!r} is not in coquasigroup mode")
    S = strip_lambda(S)
    direct = _dual_direct(S, max_workers)
    via_dual = synthesize_antipode(dualize(S), max_workers)

    expected = DUAL_STATUS.get(direct.status, direct.status)
    if via_dual.status is not expected:
        raise CrossCheckMismatch(
            f"{S!r}: direct route gives {direct.status.value}, dual route gives {via_dual.status.value}"
        )
    if direct.antipode is not None:
        transposed = _optional_transpose(via_dual.antipode)
        if transposed is None or not mor_equal(direct.antipode, transposed):
            raise CrossCheckMismatch(f"{S!r}: λ of the direct route is not the transpose of the dual route's λ")
    logger.info(f"{S!r}: dual route agrees with the transposed quasigroup route ({direct.status.value})")
    return replace(direct, evidence=direct.evidence + [_evidence("dual-route-agrees", True)])


# ---------------------------------------------------------------------------
# Proof-level cross-checks
# ---------------------------------------------------------------------------

def _quasigroup_view(S: WeakStructure, notes: List[str]) -> WeakStructure:
    if S.mode is Mode.COQUASIGROUP:
        notes.append("coquasigroup mode: evaluated on the dual structure")
        return dualize(S)
    return S


def check_inverse_formulas(S: WeakStructure, max_workers: Optional[int] = None) -> SuiteReport:
    """f⁻¹ = q_L^1∘β̄∘j_R^1, g⁻¹ = q_R^2∘γ̄∘j_L^2, and their lifts equal β̄, γ̄."""
    notes: List[str] = []
    S = _quasigroup_view(S, notes)
    fm = fusion(S)
    if fm.beta_bar is None:
        raise MissingAntipode(f"{S!r} has no antipode")
    fam = fm.family
    f_formula = fam.q("L", 1) @ fm.beta_bar.matrix @ fam.j("R", 1)
    g_formula = fam.q("R", 2) @ fm.gamma_bar.matrix @ fam.j("L", 2)

    def matches_inverse(m: ExactMatrix, formula: ExactMatrix, label: str) -> bool:
        inv, _ = try_inverse(m, label)
        return inv is not None and inv == formula

    def lift_matches(name: str, m: ExactMatrix, bar: Mor) -> bool:
        inv, _ = try_inverse(m, name)
        return inv is not None and fm.expand(name, inv) == bar.matrix

    lines = [
        predicate("f-inverse-formula", lambda: matches_inverse(fm.f, f_formula, "f")),
        predicate("g-inverse-formula", lambda: matches_inverse(fm.g, g_formula, "g")),
        predicate("f-inverse-lift-is-beta-bar", lambda: lift_matches("f", fm.f, fm.beta_bar)),
        predicate("g-inverse-lift-is-gamma-bar", lambda: lift_matches("g", fm.g, fm.gamma_bar)),
    ]
    return SuiteReport(suite="inverse-formulas", notes=notes, lines=evaluate(lines, max_workers))


def lambda_chain(S: WeakStructure, lam: Mor, lam_bar: Mor, max_workers: Optional[int] = None) -> SuiteReport:
    """λ = λ∗Π^L = ... = λ̄∗Π^L = λ̄, one verdict per step."""
    notes: List[str] = []
    if S.mode is Mode.COQUASIGROUP:
        S, lam, lam_bar = dualize(S), transpose(lam), transpose(lam_bar)
        notes.append("coquasigroup mode: evaluated on the dual structure")
    P = projection_set(S)
    H, mu, delta = S.H, S.mu, S.delta
    L, R = P.piL, P.piR
    chain = [
        lambda: lam,
        lambda: convolve(S, lam, L),
        lambda: compose(mu, tensor(H, L), tensor(lam, H), delta),
        lambda: compose(mu, tensor(mu, lam), tensor(H, delta), tensor(lam, H), delta),
        lambda: compose(mu, tensor(R, H), tensor(H, lam), delta),
        lambda: compose(mu, tensor(lam_bar, mu), tensor(delta, H), tensor(H, lam), delta),
        lambda: convolve(S, lam_bar, L),
        lambda: lam_bar,
    ]
    lines = [
        equation(f"lambda-chain-{k}", chain[k - 1], chain[k])
        for k in range(1, len(chain))
    ]
    return SuiteReport(suite="lambda-chain", notes=notes, lines=evaluate(lines, max_workers))


class Lemma212Result(NamedTuple):
    associative: bool
    intertwines_f: bool
    intertwines_g: bool

    @property
    def consistent(self) -> bool:
        return self.associative == self.intertwines_f == self.intertwines_g


def module_maps(S: WeakStructure, fm: FusionMaps) -> dict:
    """φ_σ = q_σ^1∘(μ⊗H)∘(H⊗j_σ^1) and ψ_σ = q_σ^2∘(H⊗μ)∘(j_σ^2⊗H)."""
    fam = fm.family
    I_d = ExactMatrix.identity(S.dim, S.field)
    mu_h = S.mu.matrix.kron(I_d)
    h_mu = I_d.kron(S.mu.matrix)
    out = {}
    for side in ("L", "R"):
        out[("phi", side)] = fam.q(side, 1) @ mu_h @ I_d.kron(fam.j(side, 1))
        out[("psi", side)] = fam.q(side, 2) @ h_mu @ fam.j(side, 2).kron(I_d)
    return out


def lemma212_check(S: WeakStructure) -> Lemma212Result:
    """Associativity and the two intertwining properties, each computed independently."""
    H, mu = S.H, S.mu
    associative = mor_equal(compose(mu, tensor(mu, H)), compose(mu, tensor(H, mu)))
    fm = fusion(strip_lambda(S))
    maps = module_maps(S, fm)
    I_d = ExactMatrix.identity(S.dim, S.field)
    intertwines_f = fm.f @ maps[("phi", "L")] == maps[("phi", "R")] @ I_d.kron(fm.f)
    intertwines_g = fm.g @ maps[("psi", "R")] == maps[("psi", "L")] @ fm.g.kron(I_d)
    result = Lemma212Result(associative, intertwines_f, intertwines_g)
    if not result.consistent:
        logger.warning(f"{S!r}: associativity and fusion intertwining disagree: {result}")
    return result


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    flags: FlagSet
    route: str
    reason: Optional[str] = None
    dual_verdict: Optional[Verdict] = None
    antipode: Optional[AntipodeResult] = None
    evidence: List[IdentityVerdict] = field(default_factory=list)

    def to_report(self) -> ClassificationReport:
        return ClassificationReport(
            verdict=self.verdict,
            reason=self.reason,
            route=self.route,
            flags=self.flags,
            dual_verdict=self.dual_verdict,
            antipode=self.antipode.to_report() if self.antipode is not None else None,
            evidence=list(self.evidence),
        )


def structure_flags(S: WeakStructure) -> FlagSet:
    H, mu, delta, eta, eps = S.H, S.mu, S.delta, S.eta, S.eps
    P = projection_set(S)
    eta_eps = S.eta_eps
    return FlagSet(
        associative=mor_equal(compose(mu, tensor(mu, H)), compose(mu, tensor(H, mu))),
        coassociative=mor_equal(compose(tensor(delta, H), delta), compose(tensor(H, delta), delta)),
        eps_multiplicative=mor_equal(S.counit_pair, tensor(eps, eps))
        and compose(eps, eta).matrix == ExactMatrix.identity(1, S.field),
        delta_unital=mor_equal(S.unit_pair, tensor(eta, eta)),
        pi_trivial=all(mor_equal(p, eta_eps) for p in P.as_dict().values()),
    )


def _not_recognized(flags: FlagSet, route: str, reason: str, **kw) -> Classification:
    return Classification(Verdict.NOT_RECOGNIZED, flags, route, reason=reason, **kw)


def _hopf_verdict(flags: FlagSet) -> Verdict:
    if flags.eps_multiplicative and flags.delta_unital:
        return Verdict.HOPF_ALGEBRA
    return Verdict.WEAK_HOPF_ALGEBRA


def _weak_hopf_algebra_pass(S: WeakStructure, flags: FlagSet, max_workers) -> Classification:
    """Invertibility of f (or h) alone; almost (co)linearity derived from the module maps."""
    route = "weak-hopf-algebra"
    quasi = S.mode is Mode.QUASIGROUP
    fm = fusion(strip_lambda(S))
    name = "f" if quasi else "h"
    inv, detail = try_inverse(fm.f if quasi else fm.h, name)
    evidence = [_evidence(f"{name}-invertible", inv is not None, detail)]
    if inv is None:
        status = Status.NOT_INVERTIBLE_F if quasi else Status.NOT_INVERTIBLE_H
        return _not_recognized(flags, route, status.value, evidence=evidence)
    lemma = lemma212_check(S if quasi else dualize(S))
    evidence.append(_evidence("lemma212-intertwines-f", lemma.intertwines_f))
    lifted = lift(S, fm.expand(name, inv))
    H, eta, eps = S.H, S.eta, S.eps
    if quasi:
        derived = almost_linear(S, lifted, "left")
        lam = compose(tensor(H, eps), lifted, tensor(eta, H))
    else:
        derived = almost_colinear(S, lifted, "left")
        lam = compose(tensor(eps, H), lifted, tensor(H, eta))
    evidence.append(_evidence(f"{name}-inverse-derived-almost-linearity", derived))
    if not (lemma.intertwines_f and derived):
        return _not_recognized(flags, route, "derived almost (co)linearity does not hold", evidence=evidence)
    axioms = verify_axioms(S.with_antipode(lam), max_workers)
    evidence.extend(axioms.lines)
    if not axioms.passed:
        result = AntipodeResult(Status.AXIOM_FAILURE, lam, lam, failed_axiom=axioms.failures()[0], evidence=evidence)
        return _not_recognized(flags, route, f"AxiomFailure({result.failed_axiom})", antipode=result, evidence=evidence)
    result = AntipodeResult(Status.SYNTHESIZED, lam, lam, evidence=list(evidence), notes=axioms.notes)
    return Classification(_hopf_verdict(flags), flags, route, antipode=result, evidence=evidence)


def _hopf_quasigroup_pass(S: WeakStructure, flags: FlagSet, max_workers) -> Classification:
    """Raw β and γ: the Ω maps are identities when ε and δ are unital-magma maps."""
    quasi = S.mode is Mode.QUASIGROUP
    route = "hopf-quasigroup" if quasi else "hopf-coquasigroup"
    H, eta, eps = S.H, S.eta, S.eps
    identity2 = S.id(2)
    evidence = [
        _evidence("omega-identities", all(mor_equal(om, identity2) for om in omega_maps(S).values()))
    ]
    beta, gamma = galois_maps(S)
    b_inv, detail = try_inverse(beta.matrix, "beta")
    evidence.append(_evidence("beta-invertible", b_inv is not None, detail))
    g_inv, detail = try_inverse(gamma.matrix, "gamma")
    evidence.append(_evidence("gamma-invertible", g_inv is not None, detail))
    if b_inv is None or g_inv is None:
        return _not_recognized(flags, route, "Galois map not invertible", evidence=evidence)
    B, G = lift(S, b_inv), lift(S, g_inv)
    if quasi:
        checks = [("beta-inverse-almost-left-linear", almost_linear(S, B, "left")),
                  ("gamma-inverse-almost-right-linear", almost_linear(S, G, "right"))]
        lam = compose(tensor(H, eps), B, tensor(eta, H))
        lam_bar = compose(tensor(eps, H), G, tensor(H, eta))
    else:
        checks = [("beta-inverse-almost-right-colinear", almost_colinear(S, B, "right")),
                  ("gamma-inverse-almost-left-colinear", almost_colinear(S, G, "left"))]
        lam = compose(tensor(eps, H), G, tensor(H, eta))
        lam_bar = compose(tensor(H, eps), B, tensor(eta, H))
    evidence += [_evidence(ident, ok) for ident, ok in checks]
    if not all(ok for _, ok in checks):
        return _not_recognized(flags, route, "Galois inverse not almost (co)linear", evidence=evidence)
    result = _finish(S, lam, lam_bar, list(evidence), [], max_workers)
    if not result.synthesized:
        return _not_recognized(flags, route, result.status.value, antipode=result, evidence=result.evidence)
    verdict = Verdict.HOPF_QUASIGROUP if quasi else Verdict.HOPF_COQUASIGROUP
    return Classification(verdict, flags, route, antipode=result, evidence=result.evidence)


def _classify_pass(S: WeakStructure, max_workers) -> Classification:
    flags = structure_flags(S)
    premises = validate_premises(S, max_workers)
    if not premises.passed:
        return _not_recognized(
            flags, "premises", f"PremiseFailure({', '.join(premises.failures())})", evidence=premises.lines
        )
    quasi = S.mode is Mode.QUASIGROUP
    if flags.associative and flags.coassociative:
        return _weak_hopf_algebra_pass(S, flags, max_workers)
    if flags.eps_multiplicative and flags.delta_unital:
        return _hopf_quasigroup_pass(S, flags, max_workers)
    route = "weak-hopf-quasigroup" if quasi else "weak-hopf-coquasigroup"
    result = synthesize_antipode(S, max_workers)
    if not result.synthesized:
        reason = result.status.value
        if result.failed_axiom:
            reason = f"{reason}({result.failed_axiom})"
        return _not_recognized(flags, route, reason, antipode=result, evidence=result.evidence)
    verdict = Verdict.WEAK_HOPF_QUASIGROUP if quasi else Verdict.WEAK_HOPF_COQUASIGROUP
    return Classification(verdict, flags, route, antipode=result, evidence=result.evidence)


def classify(S: WeakStructure, max_workers: Optional[int] = None) -> Classification:
    """Verdict of the pass matching S's mode, confirmed by the opposite pass on dualize(S)."""
    primary = _classify_pass(S, max_workers)
    dual = _classify_pass(dualize(S), max_workers)
    out = replace(primary, dual_verdict=dual.verdict)
    if DUAL_VERDICT[dual.verdict] is not primary.verdict:
        out = replace(
            out,
            verdict=Verdict.NOT_RECOGNIZED,
            reason=f"dual pass disagrees: {primary.verdict.value} vs {dual.verdict.value} on the dual",
        )
    logger.info(f"{S!r}: classified as {out.verdict.value} via {out.route}")
    return out
