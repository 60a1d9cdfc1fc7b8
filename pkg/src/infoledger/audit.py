"""Conservation-of-information auditor.

The audit never asks what a map "is"; it only compares the information
content (entropy of the average state, in bits) of the input ensemble with
that of the target output ensemble.  An increase flags a forbidden copier,
a decrease flags a forbidden deleter, and a balanced ledger is conserved.
The Gram check is the complementary inner-product diagnostic: equality of
pair overlaps is necessary for realizability by isometric dynamics.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .channels import Channel, Discard, Sequence
from .entropy import ensemble_information, two_pure_state_information
from .scenarios import CLOSED, Scenario

CONSERVATION_TOL = 1e-9  # |delta| below this counts as conserved
GRAM_TOL = 1e-10
ANALYTIC_AGREEMENT_TOL = 1e-10


class DiscardInClosedRegimeError(ValueError):
    """A closed-system scenario was paired with dynamics that discard subsystems."""


class InternalAuditError(RuntimeError):
    """The eigenvalue-based and analytic entropy routes disagreed."""


class Verdict(enum.Enum):
    CONSERVED = "Conserved"
    INCREASE_VIOLATION = "IncreaseViolation"
    DECREASE_VIOLATION = "DecreaseViolation"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class AuditDiagnostics:
    """Pair overlaps and the matching closed-form entropies."""

    input_overlap: float
    target_overlap: float
    analytic_s_in: float
    analytic_s_out: float


@dataclass(frozen=True)
class AuditReport:
    """Entropy ledger of a scenario, all values in bits."""

    s_in: float
    s_out: float
    delta: float
    verdict: Verdict
    regime: str
    gram_preserved: bool
    diagnostics: AuditDiagnostics

    def to_record(self) -> dict:
        """Machine-readable record (JSON-serializable)."""
        return {
            "s_in_bits": self.s_in,
            "s_out_bits": self.s_out,
            "delta_bits": self.delta,
            "verdict": self.verdict.value,
            "regime": self.regime,
            "gram_preserved": self.gram_preserved,
            "input_overlap": self.diagnostics.input_overlap,
            "target_overlap": self.diagnostics.target_overlap,
            "analytic_s_in_bits": self.diagnostics.analytic_s_in,
            "analytic_s_out_bits": self.diagnostics.analytic_s_out,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    def to_text(self) -> str:
        """Human-readable block; entropies at 6 decimal places."""
        lines = [
            f"regime:         {self.regime}",
            f"s_in:           {self.s_in:.6f} bits",
            f"s_out:          {self.s_out:.6f} bits",
            f"delta:          {_signed(self.delta)} bits",
            f"verdict:        {self.verdict.value}",
            f"gram_preserved: {'true' if self.gram_preserved else 'false'}",
            f"input_overlap:  {self.diagnostics.input_overlap:.6f}",
            f"target_overlap: {self.diagnostics.target_overlap:.6f}",
        ]
        return "\n".join(lines)


def _signed(delta: float) -> str:
    text = f"{delta:+.6f}"
    if text in ("+0.000000", "-0.000000"):
        return "0.000000"
    return text


def _contains_discard(ch: Channel) -> bool:
    if isinstance(ch, Discard):
        return True
    if isinstance(ch, Sequence):
        return any(_contains_discard(inner) for inner in ch.channels)
    return False


def gram_preservation_check(s: Scenario) -> bool:
    """Whether the input and target pair overlaps agree within GRAM_TOL.

    True is necessary for realizability by closed mixing-linear (isometric)
    dynamics; copy and delete scenarios with overlap strictly between 0 and 1
    fail it, which is the inner-product form of the no-go results.
    """
    return abs(s.input_overlap - s.target_overlap) <= GRAM_TOL


def overlap_inequality_check(c: float, env_overlap: float) -> bool:
    """Check c > c^2 * env_overlap for 0 < c < 1 and env_overlap in [0, 1].

    This is the arithmetic heart of the copy audit: the target pair is
    always nearer than the input pair, so the output ensemble always holds
    more information.  Holds for every valid argument pair.
    """
    c = float(c)
    env_overlap = float(env_overlap)
    if not 0.0 < c < 1.0:
        raise ValueError(f"overlap must lie strictly inside (0, 1), got {c!r}")
    if not 0.0 <= env_overlap <= 1.0:
        raise ValueError(f"environment overlap must lie in [0, 1], got {env_overlap!r}")
    return c > c * c * env_overlap


def audit(s: Scenario, channel: Channel | None = None) -> AuditReport:
    """Compute the entropy ledger of a scenario and render the verdict.

    If dynamics are supplied alongside a closed-regime scenario they must
    not discard subsystems; that is rejected before any entropy is computed.
    In the open regime the ledger is evaluated on the full target output
    (copies plus any garbage) before anything may be discarded.
    """
    if channel is not None and s.regime == CLOSED and _contains_discard(channel):
        raise DiscardInClosedRegimeError(
            "closed-system scenarios do not admit discarding subsystems"
        )
    s_in = ensemble_information(s.input_ensemble)
    s_out = ensemble_information(s.target_ensemble)
    delta = s_out - s_in

    diagnostics = AuditDiagnostics(
        input_overlap=s.input_overlap,
        target_overlap=s.target_overlap,
        analytic_s_in=two_pure_state_information(min(s.input_overlap, 1.0)),
        analytic_s_out=two_pure_state_information(min(s.target_overlap, 1.0)),
    )
    if (
        abs(s_in - diagnostics.analytic_s_in) > ANALYTIC_AGREEMENT_TOL
        or abs(s_out - diagnostics.analytic_s_out) > ANALYTIC_AGREEMENT_TOL
    ):
        raise InternalAuditError(
            "eigenvalue entropies disagree with the closed-form diagnostics: "
            f"s_in={s_in!r} vs {diagnostics.analytic_s_in!r}, "
            f"s_out={s_out!r} vs {diagnostics.analytic_s_out!r}"
        )

    if abs(delta) <= CONSERVATION_TOL:
        verdict = Verdict.CONSERVED
    elif delta > 0:
        verdict = Verdict.INCREASE_VIOLATION
    else:
        verdict = Verdict.DECREASE_VIOLATION

    return AuditReport(
        s_in=s_in,
        s_out=s_out,
        delta=delta,
        verdict=verdict,
        regime=s.regime,
        gram_preserved=gram_preservation_check(s),
        diagnostics=diagnostics,
    )
