"""Non-regular cospectral graphs from T-edge neighbourhood coronas.

Swapping one operand of an edge corona for a cospectral regular mate keeps
the spectrum. Every pair built here is certified by eigensolving both
graphs; nothing is taken on trust from the construction.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace

import numpy as np

from .corona import corona
from .graphs import Graph, adjacency_matrix, laplacian_matrix, read_edge_list, regularity, rook4, shrikhande
from .spectra import eigenvalues_symmetric, multiset_equal

COSPECTRAL_TOL = 1e-6
SEED_TOL = 1e-9


class CertificationError(RuntimeError):
    """A constructed pair failed spectral certification."""


@dataclass(frozen=True)
class SeedPair:
    name: str
    left: Graph
    right: Graph


@dataclass(frozen=True)
class CospectralPair:
    left: Graph
    right: Graph
    matrix_kind: str
    certified: bool = False
    max_spectral_deviation: float = float("nan")
    degrees_left: tuple[int, ...] = field(default=())
    degrees_right: tuple[int, ...] = field(default=())
    experimental: bool = False

    def certificate(self) -> dict:
        return {
            "matrix_kind": self.matrix_kind,
            "n": self.left.n,
            "m": self.left.m,
            "deviation": self.max_spectral_deviation,
            "degrees_left": _degree_counts(self.degrees_left),
            "degrees_right": _degree_counts(self.degrees_right),
            "non_regular": len(set(self.degrees_left)) >= 2 and len(set(self.degrees_right)) >= 2,
            "same_degree_sequence": self.degrees_left == self.degrees_right,
            "experimental": self.experimental,
            "certified": self.certified,
        }


def _degree_counts(degrees) -> dict[str, int]:
    values, counts = np.unique(np.asarray(degrees, dtype=int), return_counts=True)
    return {str(int(v)): int(c) for v, c in zip(values, counts)}


def _matrix(g: Graph, kind: str) -> np.ndarray:
    if kind == "A":
        return adjacency_matrix(g)
    if kind == "L":
        return laplacian_matrix(g)
    raise ValueError(f"unknown matrix kind {kind!r}")


def spectral_deviation(left: Graph, right: Graph, kind: str) -> float:
    a = eigenvalues_symmetric(_matrix(left, kind))
    b = eigenvalues_symmetric(_matrix(right, kind))
    return multiset_equal(a, b, COSPECTRAL_TOL).max_deviation


def certify(pair: CospectralPair, tol: float = COSPECTRAL_TOL, require_non_regular: bool = False) -> CospectralPair:
    """Fill in the certificate fields of ``pair`` from an eigensolve of both graphs.

    Non-regularity is always recorded in the certificate; it only gates
    ``certified`` when ``require_non_regular`` is set.
    """
    if pair.left.n != pair.right.n:
        raise ValueError(f"vertex-count mismatch: {pair.left.n} vs {pair.right.n}")
    dev = spectral_deviation(pair.left, pair.right, pair.matrix_kind)
    deg_l = tuple(sorted(int(d) for d in pair.left.degrees()))
    deg_r = tuple(sorted(int(d) for d in pair.right.degrees()))
    ok = dev <= tol and pair.left.m == pair.right.m
    if require_non_regular:
        ok = ok and len(set(deg_l)) >= 2 and len(set(deg_r)) >= 2
    return replace(pair, certified=ok, max_spectral_deviation=dev, degrees_left=deg_l, degrees_right=deg_r)


def verify_seed(seed: SeedPair, kind: str = "A", tol: float = SEED_TOL) -> float:
    """Check the seed graphs are regular of equal degree and cospectral; return the deviation."""
    for g in (seed.left, seed.right):
        if g.n == 0 or not regularity(g).is_regular:
            raise CertificationError(f"seed {seed.name!r}: graphs must be regular")
    if regularity(seed.left).degree != regularity(seed.right).degree or seed.left.n != seed.right.n:
        raise CertificationError(f"seed {seed.name!r}: graphs differ in order or degree")
    dev = spectral_deviation(seed.left, seed.right, kind)
    if dev > tol:
        raise CertificationError(f"seed {seed.name!r}: not {kind}-cospectral (deviation {dev:.3g})")
    return dev


def seed_pairs() -> list[SeedPair]:
    """Built-in cospectral regular pairs, each verified before it is returned."""
    seeds = [SeedPair("shrikhande-rook4", shrikhande(), rook4())]
    for s in seeds:
        verify_seed(s, "A")
    return seeds


def load_seed(left_path: str | os.PathLike, right_path: str | os.PathLike, name: str | None = None) -> SeedPair:
    seed = SeedPair(name or f"{os.fspath(left_path)}~{os.fspath(right_path)}",
                    read_edge_list(left_path), read_edge_list(right_path))
    verify_seed(seed, "A")
    return seed


def build_cospectral_corona(seed: SeedPair, other: Graph, side: str = "left", matrix_kind: str = "A",
                            kind: str = "ten", tol: float = COSPECTRAL_TOL) -> CospectralPair:
    """Corona each seed graph with ``other`` and certify the two results.

    ``side="left"`` builds ``H1 * other`` and ``H2 * other``; ``side="right"``
    builds ``other * H1`` and ``other * H2``. ``kind="tvn"`` is experimental:
    it is constructed and certified the same way but no closed form backs it.
    Raises :class:`CertificationError` if the pair is not certified.
    """
    verify_seed(seed, matrix_kind)
    if other.n == 0 or not regularity(other).is_regular:
        raise ValueError("the fixed operand must be a regular graph")
    if side == "left":
        left, right = corona(kind, seed.left, other).graph, corona(kind, seed.right, other).graph
    elif side == "right":
        left, right = corona(kind, other, seed.left).graph, corona(kind, other, seed.right).graph
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    pair = certify(CospectralPair(left, right, matrix_kind, experimental=(kind != "ten")), tol,
                   require_non_regular=True)
    if not pair.certified:
        raise CertificationError(
            f"{kind} pair from seed {seed.name!r} not certified {matrix_kind}-cospectral "
            f"(deviation {pair.max_spectral_deviation:.3g})"
        )
    return pair


def compose(first: SeedPair, second: SeedPair, matrix_kind: str = "A", kind: str = "ten",
            tol: float = COSPECTRAL_TOL) -> CospectralPair:
    """``F1 * H1`` against ``F2 * H2`` for two cospectral seed pairs."""
    verify_seed(first, matrix_kind)
    verify_seed(second, matrix_kind)
    left = corona(kind, first.left, second.left).graph
    right = corona(kind, first.right, second.right).graph
    pair = certify(CospectralPair(left, right, matrix_kind, experimental=(kind != "ten")), tol,
                   require_non_regular=True)
    if not pair.certified:
        raise CertificationError(
            f"composition of {first.name!r} and {second.name!r} not certified "
            f"(deviation {pair.max_spectral_deviation:.3g})"
        )
    return pair
