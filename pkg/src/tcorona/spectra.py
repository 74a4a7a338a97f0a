"""Eigenvalues, determinant evaluation, coronals and small polynomial roots.

Characteristic polynomials are only ever evaluated at points; coefficients
are never extracted except for the degree <= 4 factors that come out of the
closed-form spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

EIGEN_TOL = 1e-6
SYMMETRY_TOL = 1e-12
POLE_DELTA = 1e-3
IMAG_TOL = 1e-7


class PoleError(ValueError):
    """Evaluation point too close to a pole of the expression."""


class ComplexRootError(ValueError):
    """A polynomial expected to have only real roots has a complex one."""


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray
    tolerance: float = EIGEN_TOL

    def __len__(self):
        return len(self.values)

    def to_list(self) -> list[float]:
        return [float(v) for v in self.values]

    def ascending(self) -> np.ndarray:
        return np.sort(self.values)


@dataclass(frozen=True)
class CoronalValue:
    x: float
    value: float


@dataclass(frozen=True)
class Comparison:
    equal: bool
    max_deviation: float

    def __bool__(self):
        return self.equal


def _as_float(m) -> np.ndarray:
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def eigenvalues_symmetric(m, descending: bool = True, tolerance: float = EIGEN_TOL) -> Spectrum:
    """Full eigenvalue multiset of a symmetric matrix.

    Sorted descending by default (adjacency convention); pass
    ``descending=False`` for Laplacians.
    """
    a = _as_float(m)
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ValueError("matrix is not symmetric")
    vals = np.linalg.eigvalsh(a)
    if descending:
        vals = vals[::-1]
    return Spectrum(vals, tolerance)


def slogdet_at(m, x: float) -> tuple[float, float]:
    """``(sign, log|det(xI - M)|)``; sign is 0 for a singular matrix."""
    a = _as_float(m)
    sign, logdet = np.linalg.slogdet(x * np.eye(len(a)) - a)
    return float(sign), float(logdet)


def det_at(m, x: float) -> float:
    """Characteristic polynomial ``det(xI - M)`` evaluated at ``x`` via LU."""
    sign, logdet = slogdet_at(m, x)
    if sign == 0:
        return 0.0
    return sign * float(np.exp(logdet))


def coronal(m, x: float, delta: float = POLE_DELTA) -> CoronalValue:
    """Sum of the entries of ``(xI - M)^{-1}``, by a linear solve."""
    a = _as_float(m)
    n = len(a)
    if n == 0:
        return CoronalValue(float(x), 0.0)
    poles = np.linalg.eigvals(a)
    if np.min(np.abs(poles - x)) <= delta:
        raise PoleError(f"x={x} within {delta} of an eigenvalue of M")
    y = np.linalg.solve(x * np.eye(n) - a, np.ones(n))
    return CoronalValue(float(x), float(y.sum()))


def coronal_constant_row_sum(n: int, t: float, x: float) -> float:
    """Closed form ``n / (x - t)`` for a matrix with every row summing to ``t``."""
    return n / (x - t)


def multiset_equal(a, b, tol: float = EIGEN_TOL) -> Comparison:
    """Compare two eigenvalue multisets after sorting both."""
    va = np.sort(np.asarray(getattr(a, "values", a), dtype=float))
    vb = np.sort(np.asarray(getattr(b, "values", b), dtype=float))
    if len(va) != len(vb):
        raise ValueError(f"multiset sizes differ: {len(va)} vs {len(vb)}")
    dev = float(np.max(np.abs(va - vb))) if len(va) else 0.0
    return Comparison(dev <= tol, dev)


def companion_matrix(coeffs) -> np.ndarray:
    """Companion matrix of the monic polynomial ``x^d + c1 x^(d-1) + ... + cd``."""
    c = np.asarray(coeffs, dtype=float)
    d = len(c) - 1
    comp = np.zeros((d, d))
    comp[0, :] = -c[1:]
    comp[1:, :-1] = np.eye(d - 1)
    return comp


CLUSTER_RADIUS = 1e-3
REAL_CLUSTER_RADIUS = 1e-4


def _merge_clusters(roots: np.ndarray, imag_tol: float) -> np.ndarray:
    roots = roots[np.argsort(roots.real)].astype(complex)
    out = roots.copy()
    i = 0
    while i < len(roots):
        j = i + 1
        while j < len(roots) and abs(roots[j] - roots[i]) <= CLUSTER_RADIUS * max(1.0, abs(roots[i])):
            j += 1
        group = roots[i:j]
        scale = np.maximum(1.0, np.abs(group))
        complex_member = np.any(np.abs(group.imag) > imag_tol * scale)
        tight = np.ptp(group.real) <= REAL_CLUSTER_RADIUS * scale.max()
        if len(group) > 1 and (complex_member or tight):
            out[i:j] = group.mean()
        i = j
    return out


def real_roots_monic(coeffs, imag_tol: float = IMAG_TOL) -> np.ndarray:
    """Real roots of a monic polynomial of degree 1 to 4, highest power first.

    Roots are eigenvalues of the companion matrix. An imaginary part is
    dropped when it is below ``imag_tol`` relative to ``max(1, |root|)``.

    A k-fold root comes back from the eigensolver as a ring of radius about
    ``eps**(1/k)``, which for a triple root is far above ``imag_tol``. Such a
    cluster is replaced by its centroid, which is accurate to working
    precision. An all-real cluster is merged only when it spans less than
    ``REAL_CLUSTER_RADIUS``: a split double root lands there, and roots that
    close cannot be told apart from floating-point coefficients anyway.
    """
    c = np.asarray(coeffs, dtype=float)
    d = len(c) - 1
    if not 1 <= d <= 4:
        raise ValueError(f"degree must be between 1 and 4, got {d}")
    if c[0] != 1:
        raise ValueError("polynomial must be monic")
    roots = _merge_clusters(np.linalg.eigvals(companion_matrix(c)), imag_tol)
    scale = np.maximum(1.0, np.abs(roots))
    bad = np.abs(roots.imag) > imag_tol * scale
    if np.any(bad):
        raise ComplexRootError(f"complex root(s) {roots[bad]} for coefficients {c.tolist()}")
    return np.sort(roots.real)
