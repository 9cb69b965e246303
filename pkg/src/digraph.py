""" Digraph of a matrix
1. Arc structure of a matrix
2. Strong connectivity and a reducing permutation
3. Period (gcd of cycle lengths) and the zero-pattern primitivity test
"""
import logging
import math
from typing import FrozenSet, List, Optional, Set, Tuple

import networkx as nx
import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from matrix import DenseMatrix, GuardError, is_nonnegative, pattern_power

logger = logging.getLogger(__name__)

PRIMITIVITY_MAX_DIM = 12


class NotStronglyConnectedError(ValueError):
    """Raised when an operation needs a strongly connected digraph"""


class Digraph(BaseModel):
    """
    Vertices 1..n_vertices and arcs (i, j), both 1-based
    """

    model_config = ConfigDict(frozen=True)

    n_vertices: int
    arcs: FrozenSet[Tuple[int, int]] = frozenset()

    @model_validator(mode="after")
    def check_arcs(self):
        if self.n_vertices < 1:
            raise ValueError("a digraph needs at least one vertex")
        for i, j in self.arcs:
            if not (1 <= i <= self.n_vertices and 1 <= j <= self.n_vertices):
                raise ValueError(f"arc ({i}, {j}) has an endpoint outside 1..{self.n_vertices}")
        return self

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.arcs)
        return graph

    def relabel(self, permutation) -> "Digraph":
        """Apply the vertex map i -> permutation[i - 1]"""
        arcs = frozenset((permutation[i - 1], permutation[j - 1]) for i, j in self.arcs)
        return Digraph(n_vertices=self.n_vertices, arcs=arcs)

    def to_text(self) -> str:
        """One "i -> j" line per arc"""
        return "\n".join(f"{i} -> {j}" for i, j in sorted(self.arcs))


def digraph_of(a: DenseMatrix) -> Digraph:
    """Arc (i, j) for every nonzero entry a_ij, exact zero test"""
    rows, columns = np.nonzero(a.entries)
    arcs = frozenset((int(i) + 1, int(j) + 1) for i, j in zip(rows, columns))
    return Digraph(n_vertices=a.dim, arcs=arcs)


def strongly_connected_components(g: Digraph) -> List[Set[int]]:
    return [set(component) for component in nx.strongly_connected_components(g.to_networkx())]


def is_strongly_connected(g: Digraph) -> bool:
    """
    True iff every vertex reaches every other

    A single vertex counts as strongly connected to itself.
    """
    return len(strongly_connected_components(g)) == 1


def reducing_permutation(g: Digraph) -> Optional[Tuple[List[int], int]]:
    """
    Vertex order that puts a reducible matrix in block upper triangular form

    Returns (order, block_size) where permuting rows and columns of A by
    order gives [[A11, A12], [0, A22]] with A11 of size block_size, or None
    when g is strongly connected.
    """
    graph = g.to_networkx()
    condensed = nx.condensation(graph)
    if condensed.number_of_nodes() == 1:
        return None

    members = condensed.graph["mapping"]
    components = {node: [] for node in condensed.nodes}
    for vertex, component in members.items():
        components[component].append(vertex)

    # sources first, so arcs only run from earlier to later blocks
    order_of_components = list(nx.lexicographical_topological_sort(condensed))
    order = []
    for component in order_of_components:
        order.extend(sorted(components[component]))

    return order, len(components[order_of_components[0]])


def period(g: Digraph) -> int:
    """
    gcd of all cycle lengths of a strongly connected digraph

    With BFS levels from a root, the period is the gcd over all arcs (u, v) of
    |level(u) + 1 - level(v)|. A graph without cycles (a single vertex
    without a loop) gives 0.
    """
    if not is_strongly_connected(g):
        raise NotStronglyConnectedError("period is only defined for a strongly connected digraph")

    levels = nx.single_source_shortest_path_length(g.to_networkx(), 1)
    result = 0
    for u, v in g.arcs:
        result = math.gcd(result, abs(levels[u] + 1 - levels[v]))
    return result


def wielandt_bound(n: int) -> int:
    """(n - 1)^2 + 1, by which every primitive n x n matrix has a positive power"""
    return (n - 1) ** 2 + 1


def is_primitive_by_power(a: DenseMatrix) -> bool:
    """
    True iff the zero pattern of A^k is all nonzero at the Wielandt exponent k

    A must be nonnegative and irreducible.
    """
    if a.dim > PRIMITIVITY_MAX_DIM:
        raise GuardError(f"primitivity test supports dim <= {PRIMITIVITY_MAX_DIM}, got {a.dim}")
    if not is_nonnegative(a):
        raise ValueError("primitivity test needs a nonnegative matrix")
    if not is_strongly_connected(digraph_of(a)):
        raise NotStronglyConnectedError("primitivity test needs an irreducible matrix")

    return bool(np.all(pattern_power(a, wielandt_bound(a.dim))))
