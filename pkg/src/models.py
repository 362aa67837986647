"""
WHQ Engine - Pydantic Report Models

Machine-readable verdicts produced by the checkers, the synthesis
algorithm and the classifier.
"""
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, computed_field


class IdentityVerdict(BaseModel):
    """Verdict for one named identity or axiom line."""

    id: str = Field(..., description="Identity name, e.g. 'delta-pi-l' or 'a4-3'")
    holds: bool = Field(..., description="Exact equality of both sides")
    detail: Optional[str] = Field(None, description="Extra evidence, e.g. a rank deficiency")


class SuiteReport(BaseModel):
    """A named collection of identity verdicts."""

    suite: str = Field(..., description="Suite name")
    notes: List[str] = Field(default_factory=list, description="Header notes and erratum readings")
    lines: List[IdentityVerdict] = Field(default_factory=list)
    skipped: bool = Field(False, description="True when a gate (premises) prevented evaluation")

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.skipped and all(line.holds for line in self.lines)

    def failures(self) -> List[str]:
        return [line.id for line in self.lines if not line.holds]

    def verdict(self, identity: str) -> bool:
        for line in self.lines:
            if line.id == identity:
                return line.holds
        raise KeyError(identity)

    def to_json_lines(self) -> list:
        """The compact ``[{"id": ..., "holds": ...}]`` form."""
        return [{"id": line.id, "holds": line.holds} for line in self.lines]


class PremiseReport(SuiteReport):
    """Magma/comonoid laws and (a1)-(a3) or (b1)-(b3)."""

    mode: str = Field(..., description="quasigroup or coquasigroup")


class AntipodeStatus(str, Enum):
    SYNTHESIZED = "Synthesized"
    PREMISE_FAILURE = "PremiseFailure"
    NOT_INVERTIBLE_F = "NotInvertibleF"
    NOT_INVERTIBLE_G = "NotInvertibleG"
    ALMOST_LINEARITY_FAILED_F = "AlmostLinearityFailedF"
    ALMOST_LINEARITY_FAILED_G = "AlmostLinearityFailedG"
    NOT_INVERTIBLE_H = "NotInvertibleH"
    NOT_INVERTIBLE_S = "NotInvertibleS"
    ALMOST_COLINEARITY_FAILED_H = "AlmostColinearityFailedH"
    ALMOST_COLINEARITY_FAILED_S = "AlmostColinearityFailedS"
    LAMBDA_MISMATCH = "LambdaMismatch"
    AXIOM_FAILURE = "AxiomFailure"


class AntipodeReport(BaseModel):
    """Serializable form of an antipode synthesis run."""

    status: AntipodeStatus
    failed_axiom: Optional[str] = Field(None, description="First failing axiom line for AxiomFailure")
    antipode: Optional[List[List[str]]] = Field(None, description="λ as rows of exact literals")
    antipode_bar: Optional[List[List[str]]] = Field(None, description="λ̄ as rows of exact literals")
    evidence: List[IdentityVerdict] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class Verdict(str, Enum):
    HOPF_ALGEBRA = "HopfAlgebra"
    WEAK_HOPF_ALGEBRA = "WeakHopfAlgebra"
    HOPF_QUASIGROUP = "HopfQuasigroup"
    HOPF_COQUASIGROUP = "HopfCoquasigroup"
    WEAK_HOPF_QUASIGROUP = "WeakHopfQuasigroup"
    WEAK_HOPF_COQUASIGROUP = "WeakHopfCoquasigroup"
    NOT_RECOGNIZED = "NotRecognized"


class FlagSet(BaseModel):
    """Structural flags driving classification."""

    associative: bool
    coassociative: bool
    eps_multiplicative: bool = Field(..., description="ε∘μ = ε⊗ε and ε∘η = 1")
    delta_unital: bool = Field(..., description="δ∘η = η⊗η")
    pi_trivial: bool = Field(..., description="all four Π maps equal η∘ε; informational, not used for routing")


class ClassificationReport(BaseModel):
    """Classifier verdict with its evidence."""

    verdict: Verdict
    reason: Optional[str] = Field(None, description="Failing step for NotRecognized")
    route: str = Field(..., description="Which characterization was applied")
    flags: FlagSet
    dual_verdict: Optional[Verdict] = Field(None, description="Verdict of the opposite-mode pass on the dual")
    antipode: Optional[AntipodeReport] = None
    evidence: List[IdentityVerdict] = Field(default_factory=list)
