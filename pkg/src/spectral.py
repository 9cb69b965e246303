""" Numerical spectral oracle
1. All roots of a polynomial (Aberth-Ehrlich)
2. Definitional (weakly) spectrally Perron classification with explicit tolerances
3. Dominant eigenpair of a primitive nonnegative matrix (power iteration)
4. Cauchy radius of a polynomial
"""
import logging
from enum import Enum
from typing import Any, Dict, Optional, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict

from digraph import NotStronglyConnectedError, digraph_of, is_strongly_connected, period
from matrix import DenseMatrix, char_poly, is_nonnegative
from poly import Polynomial, index_profile, strip_zero_roots
from utils import round_significant

logger = logging.getLogger(__name__)

TOL_ROOT = 1e-8
TOL_PERIPHERAL = 1e-7
TOL_SIMPLE = 1e-6
RESIDUAL_LIMIT = 1e-10
MAX_SWEEPS = 200
# fixed irrational offset so the starting circle is not symmetric about the real axis
INITIAL_PHASE = np.sqrt(2.0) - 1.0

POWER_ITERATION_TOL = 1e-8
POWER_ITERATION_MAX = 10000


class Verdict(str, Enum):
    SPECTRALLY_PERRON = "SpectrallyPerron"
    WEAKLY_SPECTRALLY_PERRON = "WeaklySpectrallyPerron"
    NOT_PERRON = "NotPerron"


class RootFindingError(RuntimeError):
    """Raised when the simultaneous iteration does not reach the residual limit"""

    def __init__(self, message: str, best_residual: float):
        super().__init__(f"{message} (best residual {best_residual:.3e})")
        self.best_residual = best_residual


class PowerIterationError(RuntimeError):
    """Raised when power iteration does not converge"""

    def __init__(self, message: str, iterations: int, residual: float):
        super().__init__(f"{message} after {iterations} iterations (residual {residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class SpectrumReport(BaseModel):
    """
    Roots of a polynomial and the quantities the classification is read from

    roots are (re, im) pairs sorted by decreasing modulus.
    clusters lists, per root, the size of the cluster it belongs to.
    """

    model_config = ConfigDict(frozen=True)

    roots: Tuple[Tuple[float, float], ...]
    rho: float
    perron_root: Optional[float] = None
    peripheral_count: int
    clusters: Tuple[int, ...]
    tol_root: float = TOL_ROOT
    tol_peripheral: float = TOL_PERIPHERAL
    tol_simple: float = TOL_SIMPLE
    max_residual: float = 0.0
    sweeps: int = 0
    notes: Tuple[str, ...] = ()

    @property
    def complex_roots(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.roots])

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "roots": [[round_significant(re), round_significant(im)] for re, im in self.roots],
            "rho": round_significant(self.rho),
            "perron_root": None if self.perron_root is None else round_significant(self.perron_root),
            "peripheral": self.peripheral_count,
            "tol_root": self.tol_root,
            "tol_peripheral": self.tol_peripheral,
            "tol_simple": self.tol_simple,
        }


class PerronClass(BaseModel):
    """Three-way verdict with the evidence it was reached on"""

    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    evidence: Dict[str, Any] = {}

    @property
    def is_weakly_perron(self) -> bool:
        """Strict dominance implies the non-strict predicate"""
        return self.verdict != Verdict.NOT_PERRON


def _aberth(p: Polynomial, max_sweeps: int = MAX_SWEEPS) -> Tuple[np.ndarray, int]:
    """Aberth-Ehrlich iteration for a polynomial with nonzero constant term"""
    coeffs = p.array
    n = p.degree
    if n == 1:
        return np.array([complex(-coeffs[1])]), 0

    derivative = p.derivative_coeffs()
    magnitudes = np.abs(coeffs)
    # Cauchy bound
    radius = 1.0 + np.max(np.abs(coeffs[1:]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + INITIAL_PHASE))
    eps = np.finfo(np.float64).eps

    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        values = np.polyval(coeffs, z)
        slopes = np.polyval(derivative, z)

        # residual at rounding level of Horner's rule
        done = np.abs(values) <= 4 * n * eps * np.polyval(magnitudes, np.abs(z))
        if np.all(done):
            break

        differences = z[:, None] - z[None, :]
        np.fill_diagonal(differences, 1.0)
        with np.errstate(divide="ignore"):
            inverse = np.where(differences == 0, 0.0, 1.0 / differences)
        np.fill_diagonal(inverse, 0.0)
        repulsion = inverse.sum(axis=1)

        denominator = slopes - values * repulsion
        active = (~done) & (denominator != 0)
        step = np.zeros_like(z)
        step[active] = values[active] / denominator[active]
        z = z - step

        if np.all(np.abs(step) <= 4 * eps * np.abs(z)):
            break
    else:
        logger.debug(f"Aberth iteration for {p} used all {max_sweeps} sweeps")

    return z, sweeps


def _relative_residuals(p: Polynomial, z: np.ndarray) -> np.ndarray:
    return np.abs(p.evaluate(z)) / (1.0 + np.abs(z) ** p.degree)


def _sorted_roots(z: np.ndarray) -> np.ndarray:
    order = np.lexsort((-z.imag, -z.real, -np.abs(z)))
    return z[order]


def _find_roots(p: Polynomial, max_sweeps: int = MAX_SWEEPS) -> Tuple[np.ndarray, int, float]:
    reduced, zeros = strip_zero_roots(p)
    z = np.zeros(zeros, dtype=np.complex128)
    sweeps = 0
    if reduced is not None:
        found, sweeps = _aberth(reduced, max_sweeps=max_sweeps)
        z = np.concatenate([found, z])

    residuals = _relative_residuals(p, z)
    best_residual = float(np.max(residuals))
    if best_residual > RESIDUAL_LIMIT:
        raise RootFindingError(f"root finding for {p} did not converge in {max_sweeps} sweeps", best_residual)

    return _sorted_roots(z), sweeps, best_residual


def find_roots(p: Polynomial, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """
    All n roots of p with multiplicity, as a complex array

    Exact zero roots (trailing zero coefficients) are split off first; the rest
    come from Aberth-Ehrlich iteration started on the Cauchy-bound circle.
    Every root satisfies |p(z)| / (1 + |z|^n) <= 1e-10.
    """
    roots, _, _ = _find_roots(p, max_sweeps=max_sweeps)
    return roots


def cluster_sizes(roots: np.ndarray, tol: float = TOL_SIMPLE) -> np.ndarray:
    """Size of the single-linkage cluster (radius tol) each root falls in"""
    graph = nx.Graph()
    graph.add_nodes_from(range(len(roots)))
    distances = np.abs(roots[:, None] - roots[None, :])
    close = np.argwhere(np.triu(distances <= tol, k=1))
    graph.add_edges_from((int(i), int(j)) for i, j in close)

    sizes = np.ones(len(roots), dtype=int)
    for component in nx.connected_components(graph):
        for index in component:
            sizes[index] = len(component)
    return sizes


def spectral_classification(p: Polynomial) -> Tuple[PerronClass, SpectrumReport]:
    """
    Classify p from its computed roots

    SpectrallyPerron: the peripheral set is a single real, positive, simple root.
    WeaklySpectrallyPerron: some peripheral root is real, positive and simple.
    NotPerron otherwise, including rho = 0.
    """
    roots, sweeps, max_residual = _find_roots(p)
    moduli = np.abs(roots)
    rho = float(np.max(moduli))
    sizes = cluster_sizes(roots)
    notes = []

    if rho == 0:
        peripheral = np.zeros(len(roots), dtype=bool)
        candidates = peripheral
    else:
        peripheral = moduli >= (1 - TOL_PERIPHERAL) * rho
        real = np.abs(roots.imag) <= TOL_ROOT * (1 + rho)
        candidates = peripheral & real & (roots.real > 0) & (sizes == 1)
        if np.any(sizes[peripheral] > 1):
            notes.append("peripheral roots include a cluster of size > 1; multiplicity is heuristic")

    peripheral_count = int(np.sum(peripheral))
    if np.any(candidates) and peripheral_count == 1:
        verdict = Verdict.SPECTRALLY_PERRON
    elif np.any(candidates):
        verdict = Verdict.WEAKLY_SPECTRALLY_PERRON
    else:
        verdict = Verdict.NOT_PERRON

    perron_root = float(np.max(roots.real[candidates])) if np.any(candidates) else None

    report = SpectrumReport(
        roots=tuple((float(z.real), float(z.imag)) for z in roots),
        rho=rho,
        perron_root=perron_root,
        peripheral_count=peripheral_count,
        clusters=tuple(int(size) for size in sizes),
        max_residual=max_residual,
        sweeps=sweeps,
        notes=tuple(notes),
    )
    evidence = {
        "method": "numerical",
        "d": index_profile(p).d,
        "rho": rho,
        "peripheral_count": peripheral_count,
        "perron_root": perron_root,
    }
    if rho == 0:
        evidence["note"] = "rho = 0"

    return PerronClass(verdict=verdict, evidence=evidence), report


def classify_matrix(a: DenseMatrix) -> Tuple[PerronClass, SpectrumReport]:
    """Spectral classification of a matrix through its characteristic polynomial"""
    return spectral_classification(char_poly(a))


def cauchy_radius(p: Polynomial) -> float:
    """
    Unique positive root of t^n - |a_1| t^(n-1) - ... - |a_n|, which bounds every root of p

    That root is the Perron root of the majorant, i.e. its spectral radius.
    """
    if all(a == 0 for a in p.tail):
        return 0.0
    majorant = Polynomial.from_c_values([abs(a) for a in p.tail], variable=p.variable)
    return float(np.max(np.abs(find_roots(majorant))))


def dominant_eigenpair(
    a: DenseMatrix,
    tol: float = POWER_ITERATION_TOL,
    max_iterations: int = POWER_ITERATION_MAX,
) -> Tuple[float, np.ndarray]:
    """
    Perron root and positive Perron vector of a primitive nonnegative matrix

    Power iteration from the all-ones vector, scaled to max entry 1 every step.
    Stops once ||Av - rho v||_inf <= tol ||v||_inf and the Collatz-Wielandt
    bracket min_i (Av)_i / v_i <= rho <= max_i (Av)_i / v_i is narrower than
    tol * rho. The returned rho is the midpoint of that bracket.
    """
    if not is_nonnegative(a):
        raise ValueError("dominant_eigenpair needs a nonnegative matrix")
    graph = digraph_of(a)
    if not is_strongly_connected(graph):
        raise NotStronglyConnectedError("dominant_eigenpair needs an irreducible matrix")
    if period(graph) != 1:
        raise ValueError("dominant_eigenpair needs a primitive matrix")

    entries = a.entries
    v = np.ones(a.dim)
    residual = np.inf
    for iteration in range(1, max_iterations + 1):
        w = entries @ v
        scale = np.max(w)
        residual = float(np.max(np.abs(w - scale * v)))

        ratios = w / v
        lower, upper = float(np.min(ratios)), float(np.max(ratios))
        if residual <= tol * np.max(v) and upper - lower <= tol * upper:
            logger.debug(f"Power iteration converged after {iteration} iterations")
            return 0.5 * (lower + upper), v

        v = w / scale

    raise PowerIterationError("power iteration did not converge", max_iterations, residual)
