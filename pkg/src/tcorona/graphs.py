"""Simple undirected graphs, named generators and their integer matrices.

Edges are kept in canonical lexicographic order on ``(min, max)`` endpoints.
That order fixes the columns of the incidence matrix, the vertices of the
line graph, the edge-vertices of the total graph and the copy indices of the
edge corona, so every block matrix assembled from a graph is reproducible.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    """Invalid graph data or generator parameters."""


class GraphFormatError(GraphError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges may be given in any order or orientation; they are normalised to
    sorted ``(u, v)`` pairs with ``u < v``. Loops, duplicates and
    out-of-range endpoints raise :class:`GraphError`.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        normalised = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalised.append((min(u, v), max(u, v)))
        normalised.sort()
        for a, b in zip(normalised, normalised[1:]):
            if a == b:
                raise GraphError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(normalised))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabelled in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(vertices), edges)


@dataclass(frozen=True)
class RegularityInfo:
    is_regular: bool
    degree: int | None = None


# ---------------------------------------------------------------------------
# matrices

def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def degree_matrix(g: Graph) -> np.ndarray:
    return np.diag(g.degrees())


def laplacian_matrix(g: Graph) -> np.ndarray:
    return degree_matrix(g) - adjacency_matrix(g)


def incidence_matrix(g: Graph) -> np.ndarray:
    """``n x m`` 0/1 matrix; column ``j`` is the ``j``-th canonical edge."""
    r = np.zeros((g.n, g.m), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        r[u, j] = r[v, j] = 1
    return r


def regularity(g: Graph) -> RegularityInfo:
    if g.n < 1:
        raise GraphError("regularity is undefined for the empty graph")
    deg = g.degrees()
    if np.all(deg == deg[0]):
        return RegularityInfo(True, int(deg[0]))
    return RegularityInfo(False)


# ---------------------------------------------------------------------------
# derived graphs

def line_graph(g: Graph) -> Graph:
    """Vertex ``i`` is the ``i``-th canonical edge of ``g``."""
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    edges = set()
    for js in incident:
        edges.update(itertools.combinations(js, 2))
    return Graph(g.m, sorted(edges))


def total_graph(g: Graph) -> Graph:
    """T-graph on ``V(g)`` followed by ``I(g)``: edge ``j`` becomes vertex ``n + j``."""
    n = g.n
    edges = list(g.edges)
    edges += [(n + a, n + b) for a, b in line_graph(g).edges]
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, n + j))
        edges.append((v, n + j))
    return Graph(n + g.m, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges]
        offset += h.n
    return Graph(offset, edges)


# ---------------------------------------------------------------------------
# generators

def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("empty graph needs n >= 0")
    return Graph(n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete bipartite graph needs p, q >= 1")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def hypercube(d: int) -> Graph:
    if d < 1:
        raise GraphError("hypercube needs d >= 1")
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)])


def cayley_z4xz4(connection: Iterable[tuple[int, int]]) -> Graph:
    """Cayley graph on Z4 x Z4; vertex ``(a, b)`` is ``4a + b``.

    The connection set must be inverse-closed and exclude the identity.
    """
    conn = {(a % 4, b % 4) for a, b in connection}
    if (0, 0) in conn:
        raise GraphError("connection set contains the identity")
    if any(((-a) % 4, (-b) % 4) not in conn for a, b in conn):
        raise GraphError("connection set is not closed under inverses")
    edges = set()
    for a, b in itertools.product(range(4), repeat=2):
        for da, db in conn:
            u, v = 4 * a + b, 4 * ((a + da) % 4) + (b + db) % 4
            edges.add((min(u, v), max(u, v)))
    return Graph(16, sorted(edges))


SHRIKHANDE_CONNECTION = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1))


def shrikhande() -> Graph:
    return cayley_z4xz4(SHRIKHANDE_CONNECTION)


def rook4() -> Graph:
    """4x4 rook's graph, built as the line graph of K_{4,4}."""
    return line_graph(complete_bipartite(4, 4))


def _ints(arg: str, count: int, key: str) -> list[int]:
    try:
        values = [int(s) for s in arg.split(",")] if arg else []
    except ValueError:
        raise GraphError(f"bad parameters in generator key {key!r}") from None
    if len(values) != count:
        raise GraphError(f"generator key {key!r} expects {count} integer parameter(s)")
    return values


_PARAMETRIC = {
    "empty": (1, empty),
    "path": (1, path),
    "cycle": (1, cycle),
    "complete": (1, complete),
    "kpq": (2, complete_bipartite),
    "hypercube": (1, hypercube),
}

_FIXED = {
    "petersen": petersen,
    "shrikhande": shrikhande,
    "rook4": rook4,
}

# Short names used in the verification grid and on the command line.
_ALIASES = {"C": "cycle", "K": "complete", "P": "path", "Q": "hypercube", "E": "empty"}


def generator_keys() -> list[str]:
    return sorted([f"{k}:..." for k in _PARAMETRIC] + list(_FIXED))


def from_key(key: str) -> Graph:
    """Build a graph from a generator key.

    Accepted forms: ``cycle:5``, ``complete:4``, ``path:3``, ``kpq:2,3``,
    ``hypercube:3``, ``empty:2``, ``petersen``, ``shrikhande``, ``rook4``,
    and the short names ``C5``, ``K4``, ``P3``, ``Q3``, ``K1,2``.
    """
    k = key.strip()
    if k.lower() in _FIXED:
        return _FIXED[k.lower()]()
    if ":" in k:
        name, _, arg = k.partition(":")
        name = name.lower()
        if name not in _PARAMETRIC:
            raise GraphError(f"unknown generator {name!r}")
        count, fn = _PARAMETRIC[name]
        return fn(*_ints(arg, count, key))
    if k and k[0] in _ALIASES and k[1:]:
        if k[0] == "K" and "," in k:
            return complete_bipartite(*_ints(k[1:], 2, key))
        count, fn = _PARAMETRIC[_ALIASES[k[0]]]
        return fn(*_ints(k[1:], count, key))
    raise GraphError(f"unknown generator key {key!r}")


# ---------------------------------------------------------------------------
# edge-list text format

def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines are ignored. Loops, duplicates, out-of-range endpoints and a
    wrong edge count are reported with the line number.
    """
    rows = [(i + 1, line.split()) for i, line in enumerate(text.splitlines())]
    rows = [(i, parts) for i, parts in rows if parts]
    if not rows:
        raise GraphFormatError("missing header 'n m'", 1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise GraphFormatError("header must be 'n m'", lineno)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError("header must contain two integers", lineno) from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative count in header", lineno)
    body = rows[1:]
    if len(body) != m:
        line = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}", line)
    seen = set()
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise GraphFormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"endpoint out of range [0, {n})", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    return Graph(n, edges)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def resolve(spec: str) -> Graph:
    """Generator key, or a path to an edge-list file if one exists there."""
    if os.path.isfile(spec):
        return read_edge_list(spec)
    return from_key(spec)
