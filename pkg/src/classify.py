""" Theorem layer
1. gcd-of-indices classification for polynomials in nonnegative form
2. Cross-check of the theorem verdict against the numerical oracle
3. Bounded eventual nonnegativity / positivity checker
4. Grid sweeps and the counterexample search harness
"""
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from functools import partial
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from data.corpus import grid_tuples
from matrix import DenseMatrix, GuardError, companion, mat_mul
from poly import Polynomial, TheoremInapplicableError, format_polynomial, index_profile
from spectral import PerronClass, SpectrumReport, Verdict, spectral_classification
from utils import round_significant

logger = logging.getLogger(__name__)

K_MAX_DEFAULT = int(os.getenv("PERRON_K_MAX", "64"))
WORKERS_DEFAULT = int(os.getenv("PERRON_WORKERS", "1"))

EVENTUAL_SIGN_MAX_DIM = 12
MAX_DEGREE = 10
MAX_BUDGET = 1_000_000


class SignKind(str, Enum):
    NONNEG = "nonneg"
    POSITIVE = "positive"


class EventualSignResult(BaseModel):
    """
    First k <= k_max with A^k nonnegative (or positive)

    found_k is None when no such k exists up to k_max; that is evidence, not
    proof. witness_entry is then (k, i, j, value) for the smallest entry of
    A^k_max, 1-based.
    """

    model_config = ConfigDict(frozen=True)

    kind: SignKind
    found_k: Optional[int] = None
    k_max: int
    witness_entry: Optional[Tuple[int, int, int, float]] = None

    @property
    def label(self) -> str:
        if self.found_k is not None:
            return f"A^{self.found_k} is {self.kind.value}"
        return f"no k <= {self.k_max} with A^k {self.kind.value} (bounded check, not a proof)"


class CrossCheckReport(BaseModel):
    """
    Theorem verdict (when the theorems apply) next to the numerical verdict

    peripheral_match is False only when d > 1 and the oracle does not find
    exactly d peripheral roots.
    """

    model_config = ConfigDict(frozen=True)

    polynomial: Polynomial
    theorem_verdict: Optional[PerronClass] = None
    numerical_verdict: PerronClass
    spectrum: SpectrumReport
    d: int
    peripheral_count: int
    peripheral_match: bool = True
    agree: bool
    eventual: Optional[EventualSignResult] = None

    @model_validator(mode="after")
    def check_agree(self):
        verdicts_match = (
            self.theorem_verdict is None
            or self.theorem_verdict.verdict == self.numerical_verdict.verdict
        )
        if self.agree != (verdicts_match and self.peripheral_match):
            raise ValueError("agree must reflect the verdict and peripheral count comparison")
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "poly": format_polynomial(self.polynomial),
            "d": self.d,
            "theorem": None if self.theorem_verdict is None else self.theorem_verdict.verdict.value,
            "numerical": self.numerical_verdict.verdict.value,
            "rho": round_significant(self.spectrum.rho),
            "peripheral": self.peripheral_count,
            "agree": self.agree,
        }


def classify_by_theorem(p: Polynomial) -> PerronClass:
    """
    Classify a polynomial in nonnegative form from d alone

    d = 1 gives SpectrallyPerron, d = 0 NotPerron (the companion is J_n(0)),
    d > 1 WeaklySpectrallyPerron with exactly d eigenvalues of modulus rho.
    """
    profile = index_profile(p)
    if not profile.nonneg_form:
        raise TheoremInapplicableError(f"theorems inapplicable: {p} has a negative c_k")

    evidence = {
        "method": "theorem",
        "d": profile.d,
        "ell": profile.ell,
        "irreducible": profile.irreducible_companion,
    }
    if profile.d == 0:
        evidence["note"] = "nilpotent companion"
        return PerronClass(verdict=Verdict.NOT_PERRON, evidence=evidence)

    evidence["expected_peripheral"] = profile.d
    if not profile.irreducible_companion:
        evidence["note"] = f"argument applied to the irreducible {profile.ell}x{profile.ell} core"
    if profile.d == 1:
        return PerronClass(verdict=Verdict.SPECTRALLY_PERRON, evidence=evidence)
    return PerronClass(verdict=Verdict.WEAKLY_SPECTRALLY_PERRON, evidence=evidence)


def cross_check(p: Polynomial) -> CrossCheckReport:
    """Run both classifiers on p and record whether they agree"""
    profile = index_profile(p)
    theorem = classify_by_theorem(p) if profile.nonneg_form else None
    numerical, spectrum = spectral_classification(p)

    # zero roots are never peripheral once rho > 0, so this count is the core's
    peripheral_match = True
    if theorem is not None and profile.d > 1:
        peripheral_match = spectrum.peripheral_count == profile.d

    agree = (theorem is None or theorem.verdict == numerical.verdict) and peripheral_match
    if not agree:
        logger.error(
            f"Disagreement for {p}: theorem {theorem.verdict.value}, numerical "
            f"{numerical.verdict.value}, d = {profile.d}, peripheral {spectrum.peripheral_count}"
        )

    return CrossCheckReport(
        polynomial=p,
        theorem_verdict=theorem,
        numerical_verdict=numerical,
        spectrum=spectrum,
        d=profile.d,
        peripheral_count=spectrum.peripheral_count,
        peripheral_match=peripheral_match,
        agree=agree,
    )


def eventual_sign(a: DenseMatrix, kind: SignKind, k_max: int = K_MAX_DEFAULT) -> EventualSignResult:
    """
    Scan k = 1..k_max for A^k entrywise >= 0 (nonneg) or > 0 (positive)

    A semi-decision procedure: a miss up to k_max says nothing about larger k.
    """
    kind = SignKind(kind)
    if a.dim > EVENTUAL_SIGN_MAX_DIM:
        raise GuardError(f"eventual_sign supports dim <= {EVENTUAL_SIGN_MAX_DIM}, got {a.dim}")
    if k_max < 1:
        raise GuardError(f"k_max must be at least 1, got {k_max}")

    power = a
    witness = None
    for k in range(1, k_max + 1):
        if k > 1:
            power = mat_mul(power, a)
        entries = power.entries
        holds = np.all(entries >= 0) if kind == SignKind.NONNEG else np.all(entries > 0)
        if holds:
            return EventualSignResult(kind=kind, found_k=k, k_max=k_max)

        i, j = np.unravel_index(np.argmin(entries), entries.shape)
        witness = (k, int(i) + 1, int(j) + 1, float(entries[i, j]))

    return EventualSignResult(kind=kind, k_max=k_max, witness_entry=witness)


def _map(function, items: Sequence, workers: int) -> list:
    """Order preserving map, in a process pool when workers > 1"""
    if workers <= 1 or len(items) < 2:
        return [function(item) for item in items]

    chunksize = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(function, items, chunksize=chunksize))


def _check_grid_arguments(degree: int, grid: Sequence[float], budget: int):
    if not 1 <= degree <= MAX_DEGREE:
        raise GuardError(f"degree must be between 1 and {MAX_DEGREE}, got {degree}")
    if not 1 <= budget <= MAX_BUDGET:
        raise GuardError(f"budget must be between 1 and {MAX_BUDGET}, got {budget}")
    if len(grid) == 0:
        raise GuardError("grid must contain at least one value")


def sweep_grid(
    degree: int,
    grid: Sequence[float],
    budget: int = 4096,
    seed: int = 0,
    workers: int = WORKERS_DEFAULT,
) -> List[CrossCheckReport]:
    """
    Cross-check t^n - c_1 t^(n-1) - ... - c_n for c_k drawn from grid

    Results come back in enumeration order whatever the number of workers.
    """
    _check_grid_arguments(degree, grid, budget)
    polynomials = [Polynomial.from_c_values(c) for c in grid_tuples(degree, grid, budget, seed)]
    reports = _map(cross_check, polynomials, workers)

    disagreements = sum(1 for report in reports if not report.agree)
    logger.info(f"Swept {len(reports)} polynomials of degree {degree}, {disagreements} disagreement(s)")
    return reports


def _counterexample_candidate(p: Polynomial, k_max: int) -> Optional[CrossCheckReport]:
    report = cross_check(p)
    if report.numerical_verdict.verdict != Verdict.SPECTRALLY_PERRON:
        return None

    sign = eventual_sign(companion(p), SignKind.NONNEG, k_max=k_max)
    if sign.found_k is not None:
        return None
    return report.model_copy(update={"eventual": sign})


def search_counterexamples(
    degree: int,
    coeff_grid: Sequence[float],
    budget: int,
    seed: int,
    k_max: int = K_MAX_DEFAULT,
    workers: int = WORKERS_DEFAULT,
) -> List[CrossCheckReport]:
    """
    Spectrally Perron polynomials whose companion is not eventually nonnegative up to k_max

    Tail coefficients a_1..a_n are drawn from coeff_grid, exhaustively when
    |grid|^degree <= budget and by seeded sampling otherwise.
    """
    _check_grid_arguments(degree, coeff_grid, budget)
    polynomials = [
        Polynomial(coeffs=(1.0,) + tail) for tail in grid_tuples(degree, coeff_grid, budget, seed)
    ]
    candidates = _map(partial(_counterexample_candidate, k_max=k_max), polynomials, workers)
    found = [report for report in candidates if report is not None]

    logger.info(f"Searched {len(polynomials)} polynomials of degree {degree}, kept {len(found)}")
    return found
