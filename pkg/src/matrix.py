""" Dense matrix kernel
1. Companion matrices and the nilpotent/core decomposition
2. Products, powers and zero-pattern powers
3. Sign predicates
4. Characteristic polynomial (Faddeev-LeVerrier)
"""
import logging
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from poly import Polynomial, TheoremInapplicableError, index_profile

logger = logging.getLogger(__name__)

# coefficient growth in the trace recurrence
CHAR_POLY_MAX_DIM = 12


class DimensionError(ValueError):
    """Raised for non-square data or products of matrices of different sizes"""


class GuardError(ValueError):
    """Raised when an input is larger than an operation allows"""


class DenseMatrix:
    """
    Small square real matrix backed by a read-only float64 numpy array
    """

    def __init__(self, entries):
        array = np.array(entries, dtype=np.float64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] < 1:
            raise DimensionError(f"matrix must be square and nonempty, got shape {array.shape}")
        array.setflags(write=False)
        self._entries = array

    @property
    def entries(self) -> np.ndarray:
        return self._entries

    @property
    def dim(self) -> int:
        return self._entries.shape[0]

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return np.array_equal(self._entries, other._entries)

    def __hash__(self):
        return hash(self._entries.tobytes())

    def __repr__(self) -> str:
        return f"DenseMatrix({self._entries.tolist()})"

    def to_text(self) -> str:
        """One row per line, entries separated by spaces"""
        return "\n".join(" ".join(_format_entry(value) for value in row) for row in self._entries)


def _format_entry(value: float) -> str:
    value = float(value) + 0.0
    if value.is_integer():
        return str(int(value))
    return repr(value)


class CompanionDecomposition(BaseModel):
    """
    C = J_{n-ell}(0) (+) core

    The companion matrix is block upper triangular with these diagonal blocks
    (its superdiagonal crosses from the nilpotent block into the core), so its
    spectrum is n - ell zeros together with the spectrum of the core.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nilpotent_size: int
    core: Optional[DenseMatrix] = None
    nilpotent: Optional[DenseMatrix] = None

    @property
    def core_dim(self) -> int:
        return 0 if self.core is None else self.core.dim


def identity(n: int) -> DenseMatrix:
    return DenseMatrix(np.eye(n))


def jordan_block(m: int) -> DenseMatrix:
    """J_m(0): ones on the superdiagonal"""
    return DenseMatrix(np.eye(m, k=1))


def companion(p: Polynomial) -> DenseMatrix:
    """
    Companion matrix of p with superdiagonal ones and last row [-a_n, ..., -a_1]

    In the c_k = -a_k convention the last row reads [c_n, ..., c_1], and the
    characteristic polynomial of the result is p.
    """
    n = p.degree
    entries = np.eye(n, k=1)
    # adding 0.0 turns -0.0 into 0.0
    entries[n - 1, :] = -np.array(p.tail[::-1], dtype=np.float64) + 0.0
    return DenseMatrix(entries)


def decompose_companion(p: Polynomial) -> CompanionDecomposition:
    """
    Split the companion matrix into J_{n-ell}(0) and the trailing ell x ell core

    Only defined when every c_k >= 0. For p = t^n the core is empty.
    """
    profile = index_profile(p)
    if not profile.nonneg_form:
        raise TheoremInapplicableError(f"{p} is not in nonnegative form")

    n = p.degree
    ell = profile.ell
    nilpotent_size = n - ell
    entries = companion(p).entries

    core = DenseMatrix(entries[nilpotent_size:, nilpotent_size:]) if ell > 0 else None
    nilpotent = DenseMatrix(entries[:nilpotent_size, :nilpotent_size]) if nilpotent_size > 0 else None

    return CompanionDecomposition(nilpotent_size=nilpotent_size, core=core, nilpotent=nilpotent)


def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    if a.dim != b.dim:
        raise DimensionError(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    return DenseMatrix(a.entries @ b.entries)


def mat_power(a: DenseMatrix, k: int) -> DenseMatrix:
    """A^k by repeated squaring, k >= 1"""
    if int(k) != k or k < 1:
        raise ValueError(f"power must be a positive integer, got {k}")

    return DenseMatrix(_square_and_multiply(a.entries, int(k), np.matmul))


def pattern_power(a: DenseMatrix, k: int) -> np.ndarray:
    """
    Zero pattern of A^k for a nonnegative A, as a boolean array

    Works on the pattern only, so it is unaffected by float under- or overflow.
    """
    if int(k) != k or k < 1:
        raise ValueError(f"power must be a positive integer, got {k}")

    def boolean_product(x, y):
        return (x.astype(np.int64) @ y.astype(np.int64)) > 0

    return _square_and_multiply(a.entries != 0, int(k), boolean_product)


def _square_and_multiply(base: np.ndarray, k: int, product):
    result = None
    while k:
        if k & 1:
            result = base if result is None else product(result, base)
        k >>= 1
        if k:
            base = product(base, base)
    return result


def is_nonnegative(a: DenseMatrix) -> bool:
    return bool(np.all(a.entries >= 0))


def is_positive(a: DenseMatrix) -> bool:
    return bool(np.all(a.entries > 0))


def char_poly(a: DenseMatrix) -> Polynomial:
    """
    det(tI - A) by the Faddeev-LeVerrier trace recurrence

    M_1 = I, a_k = -tr(A M_k) / k, M_{k+1} = A M_k + a_k I
    """
    n = a.dim
    if n > CHAR_POLY_MAX_DIM:
        raise GuardError(f"char_poly supports dim <= {CHAR_POLY_MAX_DIM}, got {n}")

    eye = np.eye(n)
    m = eye
    coeffs = [1.0]
    for k in range(1, n + 1):
        am = a.entries @ m
        coefficient = -np.trace(am) / k + 0.0
        coeffs.append(float(coefficient))
        m = am + coefficient * eye

    return Polynomial(coeffs=tuple(coeffs))
