"""T-vertex and T-edge neighbourhood coronas.

Vertex layout of every result: ``V(G1)`` first, then the edge-vertices
``I(G1)`` in canonical edge order, then the copies of ``G2`` one contiguous
block each. The vertex corona has one copy per vertex of ``G1``; the edge
corona has one copy per edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graphs import (
    Graph,
    adjacency_matrix,
    incidence_matrix,
    laplacian_matrix,
    line_graph,
    regularity,
    total_graph,
)

CoronaKind = Literal["tvn", "ten"]
KINDS = ("tvn", "ten")


@dataclass(frozen=True)
class CoronaResult:
    graph: Graph
    kind: CoronaKind
    n1: int
    m1: int
    n2: int

    @property
    def copies(self) -> int:
        return self.n1 if self.kind == "tvn" else self.m1

    @property
    def vertex_range(self) -> range:
        return range(0, self.n1)

    @property
    def edge_range(self) -> range:
        return range(self.n1, self.n1 + self.m1)

    def copy_range(self, k: int) -> range:
        if not 0 <= k < self.copies:
            raise IndexError(f"copy {k} out of range")
        start = self.n1 + self.m1 + k * self.n2
        return range(start, start + self.n2)

    def layout(self) -> dict:
        """JSON-ready layout descriptor with half-open ``[start, stop)`` ranges."""
        return {
            "kind": self.kind,
            "n1": self.n1,
            "m1": self.m1,
            "n2": self.n2,
            "order": self.graph.n,
            "ranges": {
                "vertices": [self.vertex_range.start, self.vertex_range.stop],
                "edges": [self.edge_range.start, self.edge_range.stop],
                "copies": [[r.start, r.stop] for r in map(self.copy_range, range(self.copies))],
            },
        }


def _attach_copies(g1: Graph, g2: Graph, attach: list[list[int]]) -> Graph:
    base = total_graph(g1)
    edges = list(base.edges)
    offset = base.n
    for targets in attach:
        edges += [(u + offset, v + offset) for u, v in g2.edges]
        edges += [(t, offset + u) for t in targets for u in range(g2.n)]
        offset += g2.n
    return Graph(offset, edges)


def t_vertex_neighborhood_corona(g1: Graph, g2: Graph) -> CoronaResult:
    """Copy ``i`` of ``g2`` is joined to every T(g1)-neighbour of vertex ``i``."""
    if g1.n < 1:
        raise ValueError("t_vertex_neighborhood_corona needs n1 >= 1")
    n1 = g1.n
    attach = [list(nbrs) for nbrs in g1.neighbors()]
    for j, (u, v) in enumerate(g1.edges):
        attach[u].append(n1 + j)
        attach[v].append(n1 + j)
    graph = _attach_copies(g1, g2, attach)
    return CoronaResult(graph, "tvn", g1.n, g1.m, g2.n)


def t_edge_neighborhood_corona(g1: Graph, g2: Graph) -> CoronaResult:
    """Copy ``i`` of ``g2`` is joined to the two endpoints of edge ``i``.

    Edge-vertices adjacent to ``e_i`` in T(g1) are deliberately not joined;
    this is the attachment the block form of the adjacency matrix encodes.
    """
    if g1.m < 1:
        raise ValueError("t_edge_neighborhood_corona needs m1 >= 1")
    graph = _attach_copies(g1, g2, [list(e) for e in g1.edges])
    return CoronaResult(graph, "ten", g1.n, g1.m, g2.n)


def corona(kind: CoronaKind, g1: Graph, g2: Graph) -> CoronaResult:
    if kind == "tvn":
        return t_vertex_neighborhood_corona(g1, g2)
    if kind == "ten":
        return t_edge_neighborhood_corona(g1, g2)
    raise ValueError(f"unknown corona kind {kind!r}; expected one of {KINDS}")


def expected_order(kind: CoronaKind, n1: int, m1: int, n2: int) -> int:
    if kind == "tvn":
        return n1 * (1 + n2) + m1
    return m1 * (1 + n2) + n1


# ---------------------------------------------------------------------------
# block forms

def block_parts(kind: CoronaKind, matrix: str, g1: Graph, g2: Graph):
    """Blocks of the corona matrix in Kronecker form.

    Returns ``(head, cross, base, copies)`` so that the full matrix is::

        [[head,                    -/+ cross (x) 1^T],
         [-/+ cross^T (x) 1,       I_copies (x) base]]

    ``head`` is the square block on ``V(G1) + I(G1)``, ``cross`` has one
    column per copy, and the sign is ``+`` for ``A`` and ``-`` for ``L``.
    The Laplacian form needs ``g1`` regular.
    """
    a1 = adjacency_matrix(g1)
    r = incidence_matrix(g1)
    a_line = adjacency_matrix(line_graph(g1))
    n1, m1, n2 = g1.n, g1.m, g2.n
    if kind == "tvn":
        cross = np.vstack([a1, r.T])
    elif kind == "ten":
        cross = np.vstack([r, np.zeros((m1, m1), dtype=np.int64)])
    else:
        raise ValueError(f"unknown corona kind {kind!r}")

    if matrix == "A":
        head = np.block([[a1, r], [r.T, a_line]])
        base = adjacency_matrix(g2)
    elif matrix == "L":
        reg = regularity(g1)
        if not reg.is_regular:
            raise ValueError("Laplacian block form needs a regular G1")
        r1 = reg.degree
        l1 = laplacian_matrix(g1)
        top = l1 + r1 * (1 + n2) * np.eye(n1, dtype=np.int64)
        if kind == "tvn":
            mid = (2 * n2 + 2 * r1) * np.eye(m1, dtype=np.int64) - a_line
            base = laplacian_matrix(g2) + 2 * r1 * np.eye(n2, dtype=np.int64)
        else:
            mid = 2 * r1 * np.eye(m1, dtype=np.int64) - a_line
            base = laplacian_matrix(g2) + 2 * np.eye(n2, dtype=np.int64)
        head = np.block([[top, -r], [-r.T, mid]])
    else:
        raise ValueError(f"unknown matrix kind {matrix!r}; expected 'A' or 'L'")
    return head, cross, base, cross.shape[1]


def block_matrix(kind: CoronaKind, matrix: str, g1: Graph, g2: Graph) -> np.ndarray:
    """Assemble the full corona matrix from its Kronecker blocks."""
    head, cross, base, copies = block_parts(kind, matrix, g1, g2)
    sign = 1 if matrix == "A" else -1
    ones = np.ones((1, g2.n), dtype=np.int64)
    off = sign * np.kron(cross, ones)
    lower = np.kron(np.eye(copies, dtype=np.int64), base)
    return np.block([[head, off], [off.T, lower]])
