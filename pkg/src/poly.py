""" Monic polynomials
1. Parse and print polynomials
2. Index/gcd profile of the tail coefficients
3. Scaling, zero snapping and zero-root stripping helpers
"""
import logging
import math
import re
from functools import reduce
from typing import FrozenSet, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

logger = logging.getLogger(__name__)

NUMBER_PATTERN = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
TOKEN_PATTERN = re.compile(
    rf"\s*(?:(?P<number>{NUMBER_PATTERN})|(?P<var>[A-Za-z])|(?P<pow>\*\*|\^)"
    r"|(?P<op>[+\-*])|(?P<other>\S))"
)
SIGNED_NUMBER = re.compile(rf"[+-]?{NUMBER_PATTERN}")


class PolynomialParseError(ValueError):
    """Raised when text cannot be read as a monic univariate polynomial"""


class TheoremInapplicableError(ValueError):
    """Raised when an operation needs every c_k >= 0 and the polynomial is not in that form"""


class Polynomial(BaseModel):
    """
    Monic real polynomial p(t) = t^n + a_1 t^(n-1) + ... + a_n

    coeffs are stored highest degree first, so coeffs[0] is always 1.
    scale is the leading coefficient the input had before it was normalized.
    """

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[float, ...]
    scale: float = 1.0
    variable: str = "t"

    @field_validator("coeffs")
    @classmethod
    def check_monic(cls, coeffs):
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 1")
        if coeffs[0] != 1.0:
            raise ValueError(f"leading coefficient must be exactly 1, got {coeffs[0]}")
        if not all(math.isfinite(a) for a in coeffs):
            raise ValueError("coefficients must be finite")
        return tuple(float(a) for a in coeffs)

    @classmethod
    def from_c_values(cls, c_values: Sequence[float], variable: str = "t") -> "Polynomial":
        """Build t^n - c_1 t^(n-1) - ... - c_n"""
        return cls(coeffs=(1.0,) + tuple(_negate(c) for c in c_values), variable=variable)

    @classmethod
    def monomial(cls, degree: int, variable: str = "t") -> "Polynomial":
        return cls(coeffs=(1.0,) + (0.0,) * degree, variable=variable)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def tail(self) -> Tuple[float, ...]:
        """a_1, ..., a_n"""
        return self.coeffs[1:]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.float64)

    def derivative_coeffs(self) -> np.ndarray:
        return np.polyder(self.array)

    def evaluate(self, z):
        """Evaluate p at a scalar or an array of (complex) points"""
        return np.polyval(self.array, z)

    def __str__(self) -> str:
        return format_polynomial(self)


class IndexProfile(BaseModel):
    """
    Zero pattern of c_k = -a_k

    index_set holds every k with c_k != 0, d is their gcd (0 for the empty set)
    and ell is the largest such k (0 for the empty set).
    """

    model_config = ConfigDict(frozen=True)

    degree: int
    c_values: Tuple[float, ...]
    nonneg_form: bool
    index_set: FrozenSet[int]
    d: int
    ell: int

    @property
    def irreducible_companion(self) -> bool:
        """
        The companion matrix is irreducible exactly when c_n != 0

        Degree 1 with c_1 = 0 (p = t) is the exception: its companion [[0]] is a
        single vertex, which digraph.is_strongly_connected counts as strongly
        connected, while this property reports it as reducible.
        """
        return self.ell == self.degree


def _negate(value: float) -> float:
    # 0.0 - x keeps zeros positive
    return 0.0 - float(value)


def index_profile(p: Polynomial) -> IndexProfile:
    """
    Compute c_k, the index set, d = gcd of the indices, and ell

    The zero test is exact on the stored values.
    """
    c_values = tuple(_negate(a) for a in p.tail)
    index_set = frozenset(k for k, c in enumerate(c_values, start=1) if c != 0)
    d = reduce(math.gcd, sorted(index_set), 0)
    ell = max(index_set, default=0)

    return IndexProfile(
        degree=p.degree,
        c_values=c_values,
        nonneg_form=all(c >= 0 for c in c_values),
        index_set=index_set,
        d=d,
        ell=ell,
    )


def scale_substitution(p: Polynomial, s: float) -> Polynomial:
    """
    Return q(t) = s^(-n) p(s t), whose roots are the roots of p divided by s
    """
    if not s > 0:
        raise ValueError(f"scale factor must be positive, got {s}")

    tail = tuple(a / s**k for k, a in enumerate(p.tail, start=1))
    return Polynomial(coeffs=(1.0,) + tail, variable=p.variable)


def snap_zeros(p: Polynomial, eps: float) -> Polynomial:
    """Replace every tail coefficient with |a_k| < eps by an exact zero"""
    if eps < 0:
        raise ValueError(f"zero tolerance must be nonnegative, got {eps}")
    if eps == 0:
        return p

    tail = tuple(0.0 if abs(a) < eps else a for a in p.tail)
    snapped = sum(1 for a, b in zip(p.tail, tail) if a != b)
    if snapped:
        logger.debug(f"Snapped {snapped} coefficient(s) of {p} to zero (eps={eps})")
    return Polynomial(coeffs=(1.0,) + tail, scale=p.scale, variable=p.variable)


def strip_zero_roots(p: Polynomial) -> Tuple[Optional[Polynomial], int]:
    """
    Divide out the exact factor t^m, m being the number of trailing zero coefficients

    Returns (quotient, m). The quotient is None when p = t^n.
    For a polynomial in nonnegative form m = n - ell, and the quotient is the
    characteristic polynomial of the irreducible core of the companion matrix.
    """
    coeffs = list(p.coeffs)
    m = 0
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
        m += 1

    if len(coeffs) == 1:
        return None, m
    return Polynomial(coeffs=tuple(coeffs), variable=p.variable), m


def _format_number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_polynomial(p: Polynomial) -> str:
    """
    Canonical text for p, e.g. "t^3 - 2t^2 - t + 2"

    parse_polynomial(format_polynomial(p)) reproduces p.coeffs exactly.
    """
    n = p.degree
    text = ""
    for k, a in enumerate(p.coeffs):
        power = n - k
        if a == 0:
            continue

        magnitude = abs(a)
        number = "" if (magnitude == 1 and power > 0) else _format_number(magnitude)
        if power == 0:
            monomial = ""
        elif power == 1:
            monomial = p.variable
        else:
            monomial = f"{p.variable}^{power}"
        term = f"{number}{monomial}"

        if k == 0:
            text = term
        else:
            sign = "-" if a < 0 else "+"
            text += f" {sign} {term}"

    return text


def _tokenize(text: str):
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = TOKEN_PATTERN.match(stripped, position)
        kind = match.lastgroup
        value = match.group(kind)
        if kind == "other":
            raise PolynomialParseError(f"malformed token {value!r} at position {match.start(kind)}")
        tokens.append((kind, value))
        position = match.end()
    return tokens


def _parse_coefficient_list(text: str) -> list:
    items = [item.strip() for item in text.split(",")]
    coeffs = []
    for item in items:
        if not SIGNED_NUMBER.fullmatch(item):
            raise PolynomialParseError(f"malformed coefficient {item!r}")
        coeffs.append(float(item))
    return coeffs


def _parse_expression(text: str) -> Tuple[list, str]:
    tokens = _tokenize(text)
    terms = {}
    variable = None
    i = 0

    def peek(kind):
        return i < len(tokens) and tokens[i][0] == kind

    while i < len(tokens):
        sign = 1.0
        if peek("op") and tokens[i][1] in "+-":
            sign = -1.0 if tokens[i][1] == "-" else 1.0
            i += 1

        coefficient = None
        if peek("number"):
            coefficient = float(tokens[i][1])
            i += 1
            if peek("op") and tokens[i][1] == "*":
                i += 1
                if not peek("var"):
                    raise PolynomialParseError("expected a variable after '*'")

        power = 0
        if peek("var"):
            name = tokens[i][1]
            if variable is None:
                variable = name
            elif name != variable:
                raise PolynomialParseError(
                    f"only univariate polynomials are supported, found {variable!r} and {name!r}"
                )
            i += 1
            power = 1
            if peek("pow"):
                i += 1
                if not peek("number") or not tokens[i][1].isdigit():
                    raise PolynomialParseError("exponent must be a nonnegative integer")
                power = int(tokens[i][1])
                i += 1
        elif coefficient is None:
            found = tokens[i][1] if i < len(tokens) else "end of input"
            raise PolynomialParseError(f"expected a term, found {found!r}")

        if coefficient is None:
            coefficient = 1.0
        terms[power] = terms.get(power, 0.0) + sign * coefficient

        if i < len(tokens) and not (peek("op") and tokens[i][1] in "+-"):
            raise PolynomialParseError(f"malformed token {tokens[i][1]!r}")

    degree = max(terms)
    coeffs = [terms.get(power, 0.0) for power in range(degree, -1, -1)]
    return coeffs, variable or "t"


def parse_polynomial(text: str) -> Polynomial:
    """
    Parse a polynomial from an expression or a coefficient list

    Accepted forms are "t^3 - 2t^2 - t + 2", "2*x**2 + 1" and the
    comma-separated list "1,0,-2,0,-3" (highest degree first).
    A leading coefficient other than 1 is divided through and kept as p.scale.
    """
    if text is None or not text.strip():
        raise PolynomialParseError("empty polynomial")

    if "," in text or SIGNED_NUMBER.fullmatch(text.strip()):
        coeffs = _parse_coefficient_list(text)
        variable = "t"
    else:
        coeffs, variable = _parse_expression(text)

    if len(coeffs) < 2:
        raise PolynomialParseError("polynomial has degree 0")
    leading = coeffs[0]
    if leading == 0:
        raise PolynomialParseError("leading coefficient is 0")

    if leading != 1:
        logger.debug(f"Normalizing {text!r} by its leading coefficient {leading}")
        coeffs = [a / leading + 0.0 for a in coeffs]
        coeffs[0] = 1.0

    return Polynomial(coeffs=tuple(coeffs), scale=leading, variable=variable)
