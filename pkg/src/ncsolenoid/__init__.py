"""Exact arithmetic and numerical verification for Morita partners of noncommutative solenoids."""

from .exactnum import PFrac, QuadReal, Rat, RadicandMismatchError, ext_gcd, floor, frac1
from .padic import ORD_INF, PAdic, PrecisionError, TruncatedPAdic
from .solenoid import (
    SeqWindow,
    SolenoidSpec,
    alpha_at,
    coherence_check,
    equal_in_Xi,
    from_even_entries,
    window_agrees_mod1,
)
from .multiplier import GammaElem, MPoint, PhaseArg, cocycle_defect, eta, eta_bar, psi_alpha, rho
from .morita import (
    CertificateResult,
    ConditionError,
    ProjectionData,
    SearchBounds,
    certificate_search,
    condition_check,
    heisenberg_partner,
    heisenberg_partner_spec,
    projection_partner,
    relate_check,
)
from .bimodule import BimCtx, ModElem, SamplePlan, identity_suite

__version__ = "0.1.0"

__all__ = [
    "PFrac",
    "QuadReal",
    "Rat",
    "RadicandMismatchError",
    "ext_gcd",
    "floor",
    "frac1",
    "ORD_INF",
    "PAdic",
    "PrecisionError",
    "TruncatedPAdic",
    "SeqWindow",
    "SolenoidSpec",
    "alpha_at",
    "coherence_check",
    "equal_in_Xi",
    "from_even_entries",
    "window_agrees_mod1",
    "GammaElem",
    "MPoint",
    "PhaseArg",
    "cocycle_defect",
    "eta",
    "eta_bar",
    "psi_alpha",
    "rho",
    "CertificateResult",
    "ConditionError",
    "ProjectionData",
    "SearchBounds",
    "certificate_search",
    "condition_check",
    "heisenberg_partner",
    "heisenberg_partner_spec",
    "projection_partner",
    "relate_check",
    "BimCtx",
    "ModElem",
    "SamplePlan",
    "identity_suite",
    "__version__",
]
