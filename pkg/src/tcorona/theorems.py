"""Characteristic polynomials and spectra of T-coronas of a regular graph.

Every closed form here is evaluated at points, factor by factor, and checked
against ``det(xI - M)`` of the corona matrix assembled from the graph itself.

Three kinds of evaluator exist for each characteristic polynomial:

``block``
    Eliminate the copies block of ``xI - M`` (a Kronecker product with an
    ``n2 x n2`` base) and take the remaining determinant numerically. This
    only relies on the block layout and is the correctness gate.
``derived``
    A closed factorisation re-derived from the block form. It uses the same
    named factors as the printed result so the two can be compared factor by
    factor.
``printed`` and its variants
    Literal transcriptions of the published statements. Where they disagree
    with the oracle the harness reports a documented discrepancy rather than a
    failure.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from .corona import CoronaResult, block_parts, corona as build_corona
from .graphs import (
    Graph,
    adjacency_matrix,
    from_key,
    incidence_matrix,
    laplacian_matrix,
    regularity,
)
from .spectra import (
    ComplexRootError,
    PoleError,
    Spectrum,
    coronal,
    det_at,
    eigenvalues_symmetric,
    multiset_equal,
    real_roots_monic,
    slogdet_at,
    POLE_DELTA,
)

BLOCK_TOL = 1e-9
FORMULA_TOL = 1e-6
SPECTRUM_TOL = 1e-6
DEFAULT_POINTS = 20
DEFAULT_SEED = 20240601

G1_GRID = ("C3", "C4", "C5", "C6", "K4", "K5", "petersen", "Q3")
G2_GRID = ("K1", "K2", "K3", "C4", "P3", "K1,2", "K2,3")

# Instances the A-spectrum corollary is held to.
A_COROLLARY_G1 = ("C3", "C4", "K4", "petersen")
A_COROLLARY_G2 = ("K1", "K2", "K3")


class HypothesisError(ValueError):
    """The instance does not satisfy a theorem's hypotheses."""


@dataclass(frozen=True)
class TheoremInstance:
    """A regular connected ``G1`` with ``r1 >= 2`` and an arbitrary ``G2``."""

    g1: Graph
    g2: Graph
    name1: str = "G1"
    name2: str = "G2"

    def __post_init__(self):
        if self.g1.n < 1:
            raise HypothesisError("G1 must be non-empty")
        reg = regularity(self.g1)
        if not reg.is_regular:
            raise HypothesisError(f"{self.name1}: theorems require a regular G1")
        if reg.degree < 2:
            raise HypothesisError(f"{self.name1}: theorems require r1 >= 2 (got r1={reg.degree})")
        if not self.g1.is_connected():
            raise HypothesisError(f"{self.name1}: theorems require a connected G1")

    @classmethod
    def from_keys(cls, key1: str, key2: str) -> "TheoremInstance":
        return cls(from_key(key1), from_key(key2), key1, key2)

    @property
    def key(self) -> str:
        return f"{self.name1}|{self.name2}"

    @property
    def n1(self) -> int:
        return self.g1.n

    @property
    def m1(self) -> int:
        return self.g1.m

    @property
    def n2(self) -> int:
        return self.g2.n

    @cached_property
    def r1(self) -> int:
        return regularity(self.g1).degree

    @cached_property
    def r2(self) -> int | None:
        if self.g2.n == 0:
            return None
        return regularity(self.g2).degree

    @cached_property
    def a1(self) -> np.ndarray:
        return adjacency_matrix(self.g1).astype(float)

    @cached_property
    def l1(self) -> np.ndarray:
        return laplacian_matrix(self.g1).astype(float)

    @cached_property
    def r(self) -> np.ndarray:
        return incidence_matrix(self.g1).astype(float)

    @cached_property
    def a2(self) -> np.ndarray:
        return adjacency_matrix(self.g2).astype(float)

    @cached_property
    def l2(self) -> np.ndarray:
        return laplacian_matrix(self.g2).astype(float)

    @cached_property
    def lam1(self) -> np.ndarray:
        return eigenvalues_symmetric(self.a1).values

    @cached_property
    def mu1(self) -> np.ndarray:
        return eigenvalues_symmetric(self.l1, descending=False).values

    @cached_property
    def lam2(self) -> np.ndarray:
        return eigenvalues_symmetric(self.a2).values

    @cached_property
    def mu2(self) -> np.ndarray:
        return eigenvalues_symmetric(self.l2, descending=False).values

    def corona(self, kind: str) -> CoronaResult:
        return build_corona(kind, self.g1, self.g2)

    def assembled(self, kind: str, matrix: str) -> np.ndarray:
        """Corona matrix built from the constructed graph, not the block form."""
        g = self.corona(kind).graph
        if matrix == "A":
            return adjacency_matrix(g).astype(float)
        if matrix == "L":
            return laplacian_matrix(g).astype(float)
        raise ValueError(f"unknown matrix kind {matrix!r}")


# ---------------------------------------------------------------------------
# block elimination

def block_schur_eval(matrix_kind: str, corona_kind: str, inst: TheoremInstance, x: float,
                     delta: float = POLE_DELTA) -> float:
    """``det(xI - M)`` with the copies block eliminated first.

    The copies block is ``I (x) (xI - B)``; its inverse is ``I (x) (xI - B)^-1``
    and the cross blocks are ``C (x) 1^T``, so the Schur complement collapses
    to ``xI - H - coronal_B(x) * C C^T``.
    """
    head, cross, base, copies = block_parts(corona_kind, matrix_kind, inst.g1, inst.g2)
    head = head.astype(float)
    cross = cross.astype(float)
    gamma = coronal(base, x, delta).value
    schur = x * np.eye(len(head)) - head - gamma * (cross @ cross.T)
    s_sign, s_log = np.linalg.slogdet(schur)
    b_sign, b_log = slogdet_at(base, x)
    sign = s_sign * b_sign ** copies
    if sign == 0:
        return 0.0
    return float(sign * math.exp(s_log + copies * b_log))


# ---------------------------------------------------------------------------
# factorised forms

Factors = dict[str, float]


def _prod(values) -> float:
    return float(np.prod(np.asarray(values, dtype=float)))


def _solve_det(p: np.ndarray, left: np.ndarray, q: np.ndarray, right: np.ndarray) -> float:
    """``det(P - left Q^-1 right)`` with the inverse applied as a solve."""
    return float(np.linalg.det(p - left @ np.linalg.solve(q, right)))


def _thm1_factors(inst: TheoremInstance, x: float) -> Factors:
    n1, m1, r1 = inst.n1, inst.m1, inst.r1
    a1, r = inst.a1, inst.r
    g = coronal(inst.a2, x).value
    eye_n = np.eye(n1)
    # "(1 + Gamma A(G1))" read as I + Gamma A(G1); a scalar 1 does not type-check.
    k = eye_n + g * a1
    q = (x + 2) * np.eye(m1) - (1 + g) * (r.T @ r)
    p = x * eye_n - a1 - g * (a1 @ a1)
    return {
        "line_power": (x + 2) ** (m1 - n1),
        "g2_power": _prod(x - inst.lam2) ** n1,
        "q_product": _prod((x + 2) - (1 + g) * (inst.lam1 + r1)),
        "residual": _solve_det(p, k @ r, q, r.T @ k),
    }


def _thm2_factors(inst: TheoremInstance, x: float, variant: str) -> Factors:
    n1, m1, n2, r1 = inst.n1, inst.m1, inst.n2, inst.r1
    a1, r, l1 = inst.a1, inst.r, inst.l1
    g = coronal(inst.l2, x - 2 * r1).value
    c = x - 2 - 2 * n2 - 2 * r1
    mu = inst.mu1
    quad = x**2 - (2 + 2 * n2 + 2 * r1 + mu) * x + 2 * r1 * (2 + 2 * n2 + 2 * r1) + (2 * r1 + n2) * (mu - 2 * r1)
    eye_n = np.eye(n1)
    q_shift = x - 4 - 2 * n2 - r1 if variant == "proof-final" else c
    right_sign = -1.0 if variant == "derived" else 1.0
    p = (x - r1 * (1 + n2)) * eye_n - l1 - g * (a1 @ a1)
    left = (eye_n - g * a1) @ r
    right = r.T @ (eye_n + right_sign * g * a1)
    q = q_shift * np.eye(m1) + (1 - g) * (r.T @ r)
    return {
        "line_power": c ** (m1 - n1),
        "g2_power": _prod(x - 2 * r1 - inst.mu2[1:]) ** n1,
        "quad_product": _prod(quad),
        "residual": _solve_det(p, left, q, right),
    }


def _thm3_printed(inst: TheoremInstance, x: float) -> Factors:
    n1, m1, r1 = inst.n1, inst.m1, inst.r1
    g = coronal(inst.a2, x).value
    lam = inst.lam1
    quad = (x**2 + (2 - r1 * g - r1 - (g + 2) * lam) * x + (1 + g) * lam**2
            + ((2 * r1 - 2) * g + r1 - 3) * lam + r1 * (r1 - 2) * g - r1)
    return {
        "line_power": (x + 2) ** (m1 - n1),
        "g2_power": _prod(x - inst.lam2) ** m1,
        "quad_product": _prod(quad),
    }


def _thm3_derived(inst: TheoremInstance, x: float) -> Factors:
    # Per eigenvalue of A(G1): theta = lambda + r1 is the matching eigenvalue of R R^T.
    n1, m1 = inst.n1, inst.m1
    g = coronal(inst.a2, x).value
    theta = inst.lam1 + inst.r1
    return {
        "line_power": (x + 2) ** (m1 - n1),
        "g2_power": _prod(x - inst.lam2) ** m1,
        "quad_product": _prod((x + 2 - theta) * (x - inst.lam1 - g * theta) - theta),
    }


def _thm4_printed(inst: TheoremInstance, x: float, variant: str) -> Factors:
    n1, m1, n2, r1 = inst.n1, inst.m1, inst.n2, inst.r1
    g = coronal(inst.l2, x - 2).value
    s = r1 - inst.mu1
    square_coef = 1 + g if variant == "statement" else 1 - g
    quad = (x**2 - (r1 * (7 + n2) + 2 - r1 * g + (2 - g) * s) * x
            + square_coef * s**2 + r1 * (3 + n2) * (2 * r1 + 2) + 4 * r1**2 + 3 * r1 + r1**2 * n2
            + (r1 * (7 + n2) + 3 - (4 * r1 + 2) * g) * s - r1 * (r1 + 2) * g)
    return {
        "line_power": (x - 2 - 2 * r1) ** (m1 - n1),
        "g2_power": _prod(x - 2 - inst.mu2[1:]) ** m1,
        "quad_product": _prod(quad),
    }


def _thm4_derived(inst: TheoremInstance, x: float) -> Factors:
    n1, m1, n2, r1 = inst.n1, inst.m1, inst.n2, inst.r1
    g = coronal(inst.l2, x - 2).value
    mu = inst.mu1
    theta = 2 * r1 - mu
    return {
        "line_power": (x - 2 - 2 * r1) ** (m1 - n1),
        "g2_power": _prod(x - 2 - inst.mu2) ** m1,
        "quad_product": _prod((x - 2 - mu) * (x - r1 * (1 + n2) - mu - g * theta) - theta),
    }


@dataclass(frozen=True)
class TheoremSpec:
    id: str
    matrix: str
    corona: str
    variants: dict[str, Callable[[TheoremInstance, float], Factors]]
    quoted: dict[str, str] = field(default_factory=dict)

    @property
    def printed_variants(self) -> list[str]:
        return [v for v in self.variants if v != "derived"]


THEOREMS: dict[str, TheoremSpec] = {
    "thm1": TheoremSpec(
        "thm1", "A", "tvn",
        {"printed": _thm1_factors, "derived": _thm1_factors},
        {"printed": "(x+2)^(m1-n1) prod_i[(x+2)-(1+G(x))(lam_i+r1)] prod_j(x-lam_j(G2))^n1 "
                    "det(xI-A-G A^2-(I+G A)R((x+2)I-(1+G)R'R)^-1 R'(I+G A))"},
    ),
    "thm2": TheoremSpec(
        "thm2", "L", "tvn",
        {
            "statement": lambda i, x: _thm2_factors(i, x, "statement"),
            "proof-final": lambda i, x: _thm2_factors(i, x, "proof-final"),
            "derived": lambda i, x: _thm2_factors(i, x, "derived"),
        },
        {
            "statement": "residual uses Q=(x-2-2n2-2r1)I+(1-G)R'R and right factor R'+G R'A",
            "proof-final": "residual uses Q=(x-4-2n2-r1)I+(1-G)R'R and right factor R'+G R'A",
            "derived": "residual uses Q=(x-2-2n2-2r1)I+(1-G)R'R and right factor R'-G R'A",
        },
    ),
    "thm3": TheoremSpec(
        "thm3", "A", "ten",
        {"printed": _thm3_printed, "derived": _thm3_derived},
        {"printed": "x^2+(2-r1 G-r1-(G+2)lam)x+(1+G)lam^2+((2r1-2)G+r1-3)lam+r1(r1-2)G-r1",
         "derived": "(x+2-theta)(x-lam-G theta)-theta, theta=lam+r1"},
    ),
    "thm4": TheoremSpec(
        "thm4", "L", "ten",
        {
            "statement": lambda i, x: _thm4_printed(i, x, "statement"),
            "proof-sign": lambda i, x: _thm4_printed(i, x, "proof-sign"),
            "derived": _thm4_derived,
        },
        {
            "statement": "prod_{j>=2}(x-2-mu_j(G2))^m1 with (1+G)(r1-mu)^2 in the quadratic",
            "proof-sign": "prod_{j>=2}(x-2-mu_j(G2))^m1 with (1-G)(r1-mu)^2 in the quadratic",
            "derived": "prod_{j>=1}(x-2-mu_j(G2))^m1 prod_i[(x-2-mu)(x-r1(1+n2)-mu-G theta)-theta], theta=2r1-mu",
        },
    ),
}


def theorem_factors(theorem: str, inst: TheoremInstance, x: float, variant: str = "derived") -> Factors:
    return THEOREMS[theorem].variants[variant](inst, x)


def theorem_eval(theorem: str, inst: TheoremInstance, x: float, variant: str = "derived") -> float:
    return _prod(list(theorem_factors(theorem, inst, x, variant).values()))


def thm1_eval_A_tvn(inst: TheoremInstance, x: float) -> float:
    return theorem_eval("thm1", inst, x, "printed")


def thm2_eval_L_tvn(inst: TheoremInstance, x: float, variant: str = "statement") -> float:
    return theorem_eval("thm2", inst, x, variant)


def thm3_eval_A_ten(inst: TheoremInstance, x: float, variant: str = "printed") -> float:
    return theorem_eval("thm3", inst, x, variant)


def thm4_eval_L_ten(inst: TheoremInstance, x: float, variant: str = "statement") -> float:
    return theorem_eval("thm4", inst, x, variant)


# ---------------------------------------------------------------------------
# evaluation points

def theorem_poles(theorem: str, inst: TheoremInstance) -> np.ndarray:
    """Scalar points where the theorem's right-hand side is undefined or singular."""
    r1, n2 = inst.r1, inst.n2
    if theorem in ("thm1", "thm3"):
        return np.concatenate([inst.lam2, [-2.0]])
    if theorem == "thm2":
        return np.concatenate([2 * r1 + inst.mu2, [2 + 2 * n2 + 2 * r1, 4 + 2 * n2 + r1]])
    if theorem == "thm4":
        return np.concatenate([2 + inst.mu2, [2 + 2 * r1, 2.0]])
    raise KeyError(theorem)


def _q_block_clear(theorem: str, inst: TheoremInstance, x: float, delta: float) -> bool:
    """The residual determinants invert a block; keep away from its singular points."""
    theta = inst.lam1 + inst.r1
    if theorem == "thm1":
        g = coronal(inst.a2, x).value
        return bool(np.min(np.abs((x + 2) - (1 + g) * theta)) > delta)
    if theorem == "thm2":
        g = coronal(inst.l2, x - 2 * inst.r1).value
        for shift in (x - 2 - 2 * inst.n2 - 2 * inst.r1, x - 4 - 2 * inst.n2 - inst.r1):
            if np.min(np.abs(shift + (1 - g) * theta)) <= delta:
                return False
    return True


def instance_seed(seed: int, theorem: str, inst: TheoremInstance) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(f"{theorem}|{inst.key}".encode())])


def sample_points(theorem: str, inst: TheoremInstance, count: int = DEFAULT_POINTS,
                  seed: int = DEFAULT_SEED, delta: float = POLE_DELTA) -> np.ndarray:
    """Uniform points in ``[min eig - 2, max eig + 2]`` of the corona matrix.

    Points within ``delta`` of a pole, of an eigenvalue of the corona matrix
    (where relative error is meaningless) or of a singular residual block are
    rejected and redrawn.
    """
    spec = THEOREMS[theorem]
    eig = eigenvalues_symmetric(inst.assembled(spec.corona, spec.matrix)).values
    avoid = np.concatenate([theorem_poles(theorem, inst), eig])
    lo, hi = float(eig.min()) - 2, float(eig.max()) + 2
    rng = instance_seed(seed, theorem, inst)
    points: list[float] = []
    while len(points) < count:
        x = float(rng.uniform(lo, hi))
        if np.min(np.abs(avoid - x)) <= delta:
            continue
        try:
            if not _q_block_clear(theorem, inst, x, delta):
                continue
        except PoleError:
            continue
        points.append(x)
    return np.array(points)


def relative_error(value: float, reference: float) -> float:
    if reference == 0:
        return abs(value)
    return abs(value - reference) / abs(reference)


# ---------------------------------------------------------------------------
# closed-form spectra (edge corona)

def _expand(*terms) -> np.ndarray:
    """Sum of products of polynomials, each a highest-power-first coefficient list."""
    total = np.zeros(1)
    for coef, *factors in terms:
        poly = np.array([coef], dtype=float)
        for f in factors:
            poly = np.polymul(poly, f)
        total = np.polyadd(total, poly)
    return np.trim_zeros(total, "f")


def a_ten_cubic_derived(inst: TheoremInstance, lam: float) -> np.ndarray:
    """``(x+2-t)((x-lam)(x-r2) - n2 t) - t (x-r2)`` with ``t = lam + r1``."""
    r2, n2 = inst.r2, inst.n2
    t = lam + inst.r1
    inner = _expand((1.0, [1, -lam], [1, -r2]), (-n2 * t, [1]))
    return _expand((1.0, [1, 2 - t], inner), (-t, [1, -r2]))


def a_ten_cubic_printed(inst: TheoremInstance, lam: float) -> np.ndarray:
    r1, r2, n2 = inst.r1, inst.r2, inst.n2
    return np.array([
        1.0,
        2 - r1 - r2 - 2 * lam,
        r1 * r2 - r1 * n2 - 3 * r1 - (n2 - 3 * r1 + 3) * lam + lam**2,
        (n2 - r2) * lam**2 + (2 * r1 * n2 - 2 * n2 - r1 * r2 + 3 * r2) * lam + r1 * (r1 - 2) * n2 + r1 * r2,
    ])


def a_ten_kpq_quartic_derived(inst: TheoremInstance, lam: float, p: int, q: int) -> np.ndarray:
    """Quartic from the coronal ``((p+q)x + 2pq) / (x^2 - pq)`` of ``K_{p,q}``."""
    t = lam + inst.r1
    pq = p * q
    inner = _expand((1.0, [1, -lam], [1, 0, -pq]), (-t, [p + q, 2 * pq]))
    return _expand((1.0, [1, 2 - t], inner), (-t, [1, 0, -pq]))


def a_ten_kpq_quartic_printed(inst: TheoremInstance, lam: float, p: int, q: int) -> np.ndarray:
    r1 = inst.r1
    pq, s = p * q, p + q
    return np.array([
        1.0,
        2 - r1 - 2 * lam,
        -pq - s * (r1 + lam) + lam**2 + (r1 - 3) * lam - r1,
        -2 * pq - r1 * pq + s * lam**2 + (2 * r1 - 2) * s * lam + r1 * (r1 - 2) * s,
        pq * lam**2 + ((2 * r1 - 2) * 2 * pq - pq * (r1 - 3)) * lam + r1 * (r1 - 2) * 2 * pq + r1 * pq,
    ])


def l_ten_cubic_derived(inst: TheoremInstance, mu: float) -> np.ndarray:
    """``(x-2-mu)((x-r1(1+n2)-mu)(x-2) - n2 t) - t (x-2)`` with ``t = 2 r1 - mu``."""
    r1, n2 = inst.r1, inst.n2
    t = 2 * r1 - mu
    inner = _expand((1.0, [1, -r1 * (1 + n2) - mu], [1, -2]), (-n2 * t, [1]))
    return _expand((1.0, [1, -2 - mu], inner), (-t, [1, -2]))


def l_ten_cubic_printed(inst: TheoremInstance, mu: float) -> np.ndarray:
    r1, n2 = inst.r1, inst.n2
    s = r1 - mu
    k = r1 * (3 + n2) * (2 * r1 + 2) + 4 * r1**2 + 3 * r1 + r1**2 * n2
    return np.array([
        1.0,
        -(r1 * (7 + n2) + 4 + 2 * s),
        2 * r1 * (7 + n2) + 4 + r1 * n2 + (7 * r1 + r1 * n2 + 7 + n2) * s + s**2 + k,
        -(2 + n2) * s**2 - (2 * r1 * (7 + n2) + 6 + 4 * r1 * n2 + 2 * n2) * s
        - 2 * r1 * (3 + n2) * (2 * r1 + 2) - 2 * (4 * r1**2 + 3 * r1 + r1**2 * n2) - r1 * (r1 + 2) * n2,
    ])


def _require_regular_g2(inst: TheoremInstance) -> int:
    if inst.n2 == 0 or not regularity(inst.g2).is_regular:
        raise HypothesisError(f"{inst.name2}: this corollary requires a regular G2")
    return inst.r2


def _spectrum(parts: list[np.ndarray], descending: bool) -> Spectrum:
    vals = np.sort(np.concatenate([np.asarray(p, dtype=float).ravel() for p in parts]))
    return Spectrum(vals[::-1] if descending else vals, SPECTRUM_TOL)


def predict_A_spectrum_ten(inst: TheoremInstance, variant: str = "derived") -> Spectrum:
    """Adjacency spectrum of the edge corona with a regular ``G2``."""
    r2 = _require_regular_g2(inst)
    extra = inst.m1 - inst.n1
    cubic = a_ten_cubic_derived if variant == "derived" else a_ten_cubic_printed
    # lam2 is descending and its top value is r2; that copy is absorbed by the cubics.
    parts = [np.repeat(inst.lam2[1:], inst.m1), np.full(extra, float(r2)), np.full(extra, -2.0)]
    parts += [real_roots_monic(cubic(inst, lam)) for lam in inst.lam1]
    return _spectrum(parts, descending=True)


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Part sizes ``(p, q)``, ``p <= q``, if ``g`` is complete bipartite."""
    if g.n < 2:
        return None
    colour = [-1] * g.n
    adj = g.neighbors()
    for start in range(g.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return None
    p = colour.count(0)
    q = g.n - p
    if p == 0 or g.m != p * q:
        return None
    return (min(p, q), max(p, q))


def predict_A_spectrum_ten_kpq(inst: TheoremInstance, variant: str = "derived") -> Spectrum:
    """Adjacency spectrum of the edge corona with ``G2 = K_{p,q}``.

    The printed variant lists ``pq`` once per extra edge where the block form
    gives ``+sqrt(pq)`` and ``-sqrt(pq)``, so its cardinality falls short by
    ``m1 - n1``.
    """
    pq_sizes = bipartition(inst.g2)
    if pq_sizes is None:
        raise HypothesisError(f"{inst.name2}: this corollary requires G2 = K_(p,q)")
    p, q = pq_sizes
    extra = inst.m1 - inst.n1
    zeros = np.zeros(inst.m1 * (p + q - 2))
    if variant == "derived":
        root = math.sqrt(p * q)
        parts = [zeros, np.full(extra, root), np.full(extra, -root), np.full(extra, -2.0)]
        quartic = a_ten_kpq_quartic_derived
    else:
        parts = [zeros, np.full(extra, float(p * q)), np.full(extra, -2.0)]
        quartic = a_ten_kpq_quartic_printed
    parts += [real_roots_monic(quartic(inst, lam, p, q)) for lam in inst.lam1]
    return _spectrum(parts, descending=True)


def predict_L_spectrum_ten(inst: TheoremInstance, variant: str = "derived") -> Spectrum:
    """Laplacian spectrum of the edge corona.

    The derived variant holds for any ``G2``: the Laplacian coronal is always
    ``n2 / y``. The printed variant is stated for a regular ``G2``.
    """
    if variant != "derived":
        _require_regular_g2(inst)
    extra = inst.m1 - inst.n1
    r1 = inst.r1
    cubic = l_ten_cubic_derived if variant == "derived" else l_ten_cubic_printed
    parts = [np.repeat(2 + inst.mu2[1:], inst.m1), np.full(extra, 2.0 + 2 * r1), np.full(extra, 2.0)]
    parts += [real_roots_monic(cubic(inst, mu)) for mu in inst.mu1]
    return _spectrum(parts, descending=False)


COROLLARIES = {
    "cor-a-ten": ("A", predict_A_spectrum_ten),
    "cor-a-ten-kpq": ("A", predict_A_spectrum_ten_kpq),
    "cor-l-ten": ("L", predict_L_spectrum_ten),
}

_COROLLARY_POLYS = {
    "cor-a-ten": (a_ten_cubic_printed, a_ten_cubic_derived, "lam1"),
    "cor-l-ten": (l_ten_cubic_printed, l_ten_cubic_derived, "mu1"),
}


def corollary_polynomials(corollary: str, inst: TheoremInstance) -> list[dict]:
    """Printed vs derived factor polynomials, one entry per distinct G1 eigenvalue."""
    if corollary == "cor-a-ten-kpq":
        p, q = bipartition(inst.g2)
        printed = lambda i, lam: a_ten_kpq_quartic_printed(i, lam, p, q)  # noqa: E731
        derived = lambda i, lam: a_ten_kpq_quartic_derived(i, lam, p, q)  # noqa: E731
        eigs = inst.lam1
    else:
        printed, derived, attr = _COROLLARY_POLYS[corollary]
        eigs = getattr(inst, attr)
    out = []
    for ev in _distinct(eigs):
        out.append({
            "eigenvalue": _round(ev),
            "printed": [_round(c) for c in printed(inst, ev)],
            "derived": [_round(c) for c in derived(inst, ev)],
        })
    return out


def _distinct(values, tol: float = 1e-8) -> list[float]:
    out: list[float] = []
    for v in sorted(values):
        if not out or abs(v - out[-1]) > tol:
            out.append(float(v))
    return out


def _round(v: float, digits: int = 10) -> float:
    r = round(float(v), digits)
    return 0.0 if r == 0 else r


# ---------------------------------------------------------------------------
# reports

PASS, FAIL, DISCREPANCY = "pass", "fail", "documented-discrepancy"


@dataclass
class TheoremReport:
    theorem: str
    instance: tuple[str, str]
    mode: str
    evaluator: str
    tolerance: float
    seed: int | None
    deviations: list[float]
    verdict: str
    notes: dict = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations) if self.deviations else 0.0

    @property
    def fatal(self) -> bool:
        return self.verdict == FAIL

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "instance": list(self.instance),
            "mode": self.mode,
            "evaluator": self.evaluator,
            "tolerance": self.tolerance,
            "seed": self.seed,
            "deviations": [_round(d, 15) for d in self.deviations],
            "max_deviation": _round(self.max_deviation, 15),
            "verdict": self.verdict,
            "notes": self.notes,
        }


def _verdict(ok: bool, printed: bool) -> str:
    if ok:
        return PASS
    return DISCREPANCY if printed else FAIL


def verify_theorem(theorem: str, inst: TheoremInstance, count: int = DEFAULT_POINTS,
                   seed: int = DEFAULT_SEED, block_tol: float = BLOCK_TOL,
                   formula_tol: float = FORMULA_TOL) -> list[TheoremReport]:
    """Point-evaluation reports for one theorem on one instance.

    One report for the block evaluator (gate, relative ``1e-9``), one for the
    derived factorisation and one per printed variant (relative ``1e-6``).
    """
    spec = THEOREMS[theorem]
    inst_key = (inst.name1, inst.name2)
    matrix = inst.assembled(spec.corona, spec.matrix)
    xs = sample_points(theorem, inst, count, seed)
    oracle = [det_at(matrix, x) for x in xs]

    block = [relative_error(block_schur_eval(spec.matrix, spec.corona, inst, x), o)
             for x, o in zip(xs, oracle)]
    reports = [TheoremReport(theorem, inst_key, "point-evaluation", "block", block_tol, seed,
                             block, _verdict(max(block) <= block_tol, False),
                             {"points": [_round(x, 12) for x in xs]})]

    derived_factors = [theorem_factors(theorem, inst, x, "derived") for x in xs]
    dev = [relative_error(_prod(list(f.values())), o) for f, o in zip(derived_factors, oracle)]
    reports.append(TheoremReport(theorem, inst_key, "point-evaluation", "derived", formula_tol, seed,
                                 dev, _verdict(max(dev) <= formula_tol, False),
                                 {"formula": spec.quoted.get("derived", "same as printed")}))

    for variant in spec.printed_variants:
        factors = [theorem_factors(theorem, inst, x, variant) for x in xs]
        dev = [relative_error(_prod(list(f.values())), o) for f, o in zip(factors, oracle)]
        ok = max(dev) <= formula_tol
        notes = {"formula": spec.quoted.get(variant, "")}
        if not ok:
            notes["mismatched_factors"] = sorted({
                name for f, d in zip(factors, derived_factors)
                for name in f if relative_error(f[name], d[name]) > formula_tol
            })
        reports.append(TheoremReport(theorem, inst_key, "point-evaluation", variant, formula_tol,
                                     seed, dev, _verdict(ok, True), notes))
    return reports


def verify_corollary(corollary: str, inst: TheoremInstance,
                     spectrum_tol: float = SPECTRUM_TOL) -> list[TheoremReport]:
    """Spectrum-multiset reports for the derived and printed closed forms."""
    matrix_kind, predictor = COROLLARIES[corollary]
    inst_key = (inst.name1, inst.name2)
    matrix = inst.assembled("ten", matrix_kind)
    oracle = eigenvalues_symmetric(matrix, descending=(matrix_kind == "A"))
    trace = float(np.trace(matrix))
    reports = []
    for variant in ("derived", "printed"):
        printed = variant == "printed"
        notes: dict = {}
        try:
            pred = predictor(inst, variant)
        except ComplexRootError as exc:
            notes["error"] = str(exc)
            pred = None
        except HypothesisError as exc:
            if printed:
                continue
            raise
        deviations: list[float] = []
        ok = False
        if pred is not None:
            notes["trace_deviation"] = _round(abs(float(np.sum(pred.values)) - trace), 12)
            if len(pred) != len(oracle):
                notes["cardinality"] = {"predicted": len(pred), "oracle": len(oracle)}
            else:
                cmp = multiset_equal(pred, oracle, spectrum_tol)
                deviations = [cmp.max_deviation]
                ok = cmp.equal and notes["trace_deviation"] <= spectrum_tol
        if printed and not ok:
            notes["polynomials"] = corollary_polynomials(corollary, inst)
        reports.append(TheoremReport(corollary, inst_key, "spectrum-multiset", variant, spectrum_tol,
                                     None, deviations, _verdict(ok, printed), notes))
    return reports


def corollary_applies(corollary: str, g2: Graph) -> bool:
    if corollary == "cor-a-ten":
        return g2.n > 0 and regularity(g2).is_regular
    if corollary == "cor-a-ten-kpq":
        return bipartition(g2) is not None
    return True


ALL_CHECKS = tuple(THEOREMS) + tuple(COROLLARIES)


def run_verification(checks=ALL_CHECKS, g1_keys=G1_GRID, g2_keys=G2_GRID,
                     count: int = DEFAULT_POINTS, seed: int = DEFAULT_SEED,
                     block_tol: float = BLOCK_TOL, formula_tol: float = FORMULA_TOL) -> list[TheoremReport]:
    """Run every check over the ``g1_keys x g2_keys`` grid in a fixed order.

    ``formula_tol`` applies to closed forms, both point evaluations and
    spectrum multisets; ``block_tol`` to the block elimination gate.
    """
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    instances = [TheoremInstance.from_keys(k1, k2) for k1 in g1_keys for k2 in g2_keys]
    reports: list[TheoremReport] = []
    for check in checks:
        for inst in instances:
            if check in THEOREMS:
                reports += verify_theorem(check, inst, count, seed, block_tol, formula_tol)
            elif corollary_applies(check, inst.g2):
                reports += verify_corollary(check, inst, formula_tol)
    return reports

