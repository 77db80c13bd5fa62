"""Dense complex-matrix arithmetic and subspace (span) calculus.

Subspace arithmetic works with the trace inner product <X, Y> = tr(X* Y)
on vectorized matrices.  Rank cutoffs are always relative to the largest
singular value, so every span decision is scale invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_matrix",
    "operator_norm",
    "frobenius_norm",
    "polar_decompose",
    "MatrixSpan",
    "span_of",
    "span_contains",
    "span_equal",
    "span_product",
    "span_intersect",
    "haar_unitary",
]


@dataclass(frozen=True)
class Tolerance:
    """Single tolerance policy shared by every module.

    eps_eq drives entrywise/residual comparisons, eps_rank is the relative
    singular-value cutoff for all rank decisions.
    """

    eps_eq: float = 1e-9
    eps_rank: float = 1e-8

    def __post_init__(self):
        for name in ("eps_eq", "eps_rank"):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ValueError(f"{name} must lie in (0, 1), got {value}")


DEFAULT_TOL = Tolerance()


def as_matrix(m) -> np.ndarray:
    """Coerce to a 2-d complex array, rejecting NaN/Inf entries."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got ndim={arr.ndim}")
    if arr.size and not np.all(np.isfinite(arr.view(float))):
        raise ValueError("matrix has non-finite entries")
    return arr


def operator_norm(m) -> float:
    """Largest singular value of ``m`` (0.0 for empty matrices)."""
    arr = as_matrix(m)
    if arr.size == 0:
        return 0.0
    return float(np.linalg.norm(arr, 2))


def frobenius_norm(m) -> float:
    arr = np.asarray(m, dtype=complex)
    return float(np.linalg.norm(arr.ravel()))


def polar_decompose(m, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition ``m = u @ p`` with ``u`` a partial isometry.

    ``u`` has rank equal to the numerical rank of ``m`` at ``tol.eps_rank``
    and ``p = (m* m)^(1/2)`` is positive semidefinite.  The zero matrix
    yields ``u = 0``, ``p = 0``; a rank-0 partial isometry is legal.
    """
    arr = as_matrix(m)
    rows, cols = arr.shape
    u_svd, s, vh = np.linalg.svd(arr, full_matrices=False)
    p = (vh.conj().T * s) @ vh
    if s.size == 0 or s[0] <= 0.0:
        return np.zeros((rows, cols), dtype=complex), p
    keep = s > tol.eps_rank * s[0]
    u = u_svd[:, keep] @ vh[keep, :]
    return u, p


def _orthonormal_rows(vecs: np.ndarray, eps_rank: float) -> np.ndarray:
    """Orthonormal basis (as rows) of the row space of ``vecs``."""
    if vecs.shape[0] == 0:
        return np.zeros((0, vecs.shape[1]), dtype=complex)
    _, s, vh = np.linalg.svd(vecs, full_matrices=False)
    if s.size == 0 or s[0] <= 0.0:
        return np.zeros((0, vecs.shape[1]), dtype=complex)
    rank = int(np.sum(s > eps_rank * s[0]))
    return vh[:rank]


class MatrixSpan:
    """A linear subspace of d x d matrices with a trace-orthonormal basis."""

    def __init__(self, dim: int, basis: np.ndarray):
        basis = np.asarray(basis, dtype=complex)
        if basis.ndim != 3 or basis.shape[1:] != (dim, dim):
            raise ValueError(f"basis must have shape (k, {dim}, {dim})")
        self.dim = int(dim)
        self.basis = basis
        self._vecs = basis.reshape(basis.shape[0], dim * dim)

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    def __len__(self) -> int:
        return self.basis.shape[0]

    def coords(self, m) -> np.ndarray:
        """Trace-inner-product coordinates of ``m`` against the basis."""
        arr = as_matrix(m)
        if arr.shape != (self.dim, self.dim):
            raise ValueError(f"ambient dimension mismatch: {arr.shape} vs {self.dim}")
        return self._vecs.conj() @ arr.ravel()

    def project(self, m) -> np.ndarray:
        """Orthogonal projection of ``m`` onto the span."""
        coords = self.coords(m)
        return (coords @ self._vecs).reshape(self.dim, self.dim)

    def residual(self, m) -> float:
        """Frobenius distance from ``m`` to the span."""
        arr = as_matrix(m)
        return frobenius_norm(arr - self.project(arr))

    def from_coords(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=complex)
        if coords.shape != (self.rank,):
            raise ValueError(f"expected {self.rank} coordinates, got {coords.shape}")
        return (coords @ self._vecs).reshape(self.dim, self.dim)

    def adjoint(self) -> "MatrixSpan":
        """Span of the adjoints; adjoints of an orthonormal basis stay orthonormal."""
        return MatrixSpan(self.dim, np.conj(np.transpose(self.basis, (0, 2, 1))))

    def vec_projection(self) -> np.ndarray:
        """The d^2 x d^2 orthogonal projector onto the vectorized span."""
        return self._vecs.T @ self._vecs.conj()


def span_of(mats, tol: Tolerance = DEFAULT_TOL, dim: int | None = None) -> MatrixSpan:
    """Orthonormalized span of a family of equally shaped square matrices."""
    mats = [as_matrix(m) for m in mats]
    if not mats:
        if dim is None:
            raise ValueError("cannot infer ambient dimension from an empty family")
        return MatrixSpan(dim, np.zeros((0, dim, dim), dtype=complex))
    d = mats[0].shape[0]
    if mats[0].shape != (d, d):
        raise ValueError("span arithmetic requires square matrices")
    if dim is not None and dim != d:
        raise ValueError(f"ambient dimension mismatch: {d} vs {dim}")
    for m in mats:
        if m.shape != (d, d):
            raise ValueError("all matrices in a span must share one shape")
    stack = np.stack(mats).reshape(len(mats), d * d)
    basis = _orthonormal_rows(stack, tol.eps_rank)
    return MatrixSpan(d, basis.reshape(-1, d, d))


def span_contains(span: MatrixSpan, m, tol: Tolerance = DEFAULT_TOL) -> bool:
    arr = as_matrix(m)
    if arr.shape != (span.dim, span.dim):
        raise ValueError(f"ambient dimension mismatch: {arr.shape} vs {span.dim}")
    return span.residual(arr) < tol.eps_eq * max(1.0, frobenius_norm(arr))


def span_equal(s1: MatrixSpan, s2: MatrixSpan, tol: Tolerance = DEFAULT_TOL) -> bool:
    if s1.dim != s2.dim:
        raise ValueError(f"ambient dimension mismatch: {s1.dim} vs {s2.dim}")
    if s1.rank != s2.rank:
        return False
    return all(span_contains(s2, b, tol) for b in s1.basis) and all(
        span_contains(s1, b, tol) for b in s2.basis
    )


def span_product(s1: MatrixSpan, s2: MatrixSpan, tol: Tolerance = DEFAULT_TOL) -> MatrixSpan:
    """Span of all pairwise products of basis elements."""
    if s1.dim != s2.dim:
        raise ValueError(f"ambient dimension mismatch: {s1.dim} vs {s2.dim}")
    d = s1.dim
    if s1.rank == 0 or s2.rank == 0:
        return MatrixSpan(d, np.zeros((0, d, d), dtype=complex))
    products = np.einsum("iab,jbc->ijac", s1.basis, s2.basis).reshape(-1, d, d)
    return span_of(products, tol)


def span_intersect(s1: MatrixSpan, s2: MatrixSpan, tol: Tolerance = DEFAULT_TOL) -> MatrixSpan:
    """Intersection of two spans via the common fixed space of their projectors."""
    if s1.dim != s2.dim:
        raise ValueError(f"ambient dimension mismatch: {s1.dim} vs {s2.dim}")
    d = s1.dim
    if s1.rank == 0 or s2.rank == 0:
        return MatrixSpan(d, np.zeros((0, d, d), dtype=complex))
    eye = np.eye(d * d, dtype=complex)
    stacked = np.vstack([eye - s1.vec_projection(), eye - s2.vec_projection()])
    _, s, vh = np.linalg.svd(stacked)
    if s.size == 0 or s[0] <= tol.eps_rank:
        # both spans full: intersection is everything
        basis = eye.reshape(d * d, d, d)
        return MatrixSpan(d, basis)
    rank = int(np.sum(s > tol.eps_rank * s[0]))
    null = vh[rank:].conj()
    return MatrixSpan(d, null.reshape(-1, d, d))


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random unitary from the QR of a complex Gaussian matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    phases = np.diag(r).copy()
    phases = phases / np.abs(phases)
    return q * phases
