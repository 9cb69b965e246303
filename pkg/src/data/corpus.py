""" Instance corpora
1. Coefficient tuples drawn from a grid, exhaustively or by seeded sampling
2. The named polynomials used as the acceptance corpus
"""
import itertools
import logging
from typing import List, Sequence, Tuple

import numpy as np

from poly import Polynomial, parse_polynomial

logger = logging.getLogger(__name__)

ACCEPTANCE_POLYNOMIALS = [
    "t^3 - 2t^2 - t + 2",
    "t^2 - 1",
    "t^4 - 2t^2 - 3",
    "t^3 - t - 1",
    "t^5",
    "t^6 - t^4 - t^2",
    "t^2 - t - 1",
    "t^3 - t",
    "t^3 - 2t^2 - t - 0.5",
    "t - 3",
    "t^4",
]


def grid_size(degree: int, grid: Sequence[float]) -> int:
    return len(grid) ** degree


def grid_tuples(degree: int, grid: Sequence[float], budget: int, seed: int) -> List[Tuple[float, ...]]:
    """
    Tuples of length degree with entries from grid

    Every tuple, in lexicographic grid order, when |grid|^degree <= budget.
    Otherwise budget tuples sampled uniformly with numpy's default generator
    seeded by seed, duplicates dropped, so the result is fixed for a given seed.
    """
    grid = [float(value) for value in grid]
    total = grid_size(degree, grid)
    if total <= budget:
        logger.info(f"Enumerating all {total} tuples of degree {degree}")
        return list(itertools.product(grid, repeat=degree))

    logger.info(f"Sampling {budget} of {total} tuples of degree {degree} with seed {seed}")
    rng = np.random.default_rng(seed)
    indices = rng.integers(0, len(grid), size=(budget, degree))
    samples = [tuple(grid[i] for i in row) for row in indices]
    return list(dict.fromkeys(samples))


def acceptance_corpus() -> List[Polynomial]:
    return [parse_polynomial(text) for text in ACCEPTANCE_POLYNOMIALS]
