import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from tcorona.graphs import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def brute_total_graph(g: Graph) -> set[frozenset]:
    """Edges of T(g) by the definition: elements adjacent or incident."""
    elements = [("v", v) for v in range(g.n)] + [("e", e) for e in g.edges]
    label = {el: i for i, el in enumerate(elements)}
    edge_set = set(g.edges)
    out = set()
    for a, b in itertools.combinations(elements, 2):
        if a[0] == "v" and b[0] == "v":
            hit = (min(a[1], b[1]), max(a[1], b[1])) in edge_set
        elif a[0] == "e" and b[0] == "e":
            hit = bool(set(a[1]) & set(b[1]))
        else:
            v, e = (a[1], b[1]) if a[0] == "v" else (b[1], a[1])
            hit = v in e
        if hit:
            out.add(frozenset((label[a], label[b])))
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
