"""Index grid, inner-product space, discrete Fourier transform and a dense
Hermitian eigensolver.

The state space is the set of complex functions on the symmetric integer grid
{-j, ..., j} of odd size d = 2j+1, with periodic (mod d) index extension.
Everything downstream (Gaussians, Wigner maps, frames, oscillators) is built
on the types and operations defined here.

All values are immutable after construction and every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
import numbers

import numpy as np

__all__ = [
    "GridDim",
    "GridFunction",
    "LinearOperator",
    "SpectralDecomposition",
    "JacobiConfig",
    "ConvergenceError",
    "inner_product",
    "fourier_operator",
    "fourier_transform",
    "inverse_fourier_transform",
    "parity_operator",
    "convolve",
    "outer",
    "canonical_phase",
    "eigendecompose_hermitian",
    "operator_exponential",
]


@dataclass(frozen=True, order=True)
class GridDim:
    """Grid size descriptor: half-width j >= 1, giving d = 2j+1 points."""

    j: int

    def __post_init__(self):
        if not isinstance(self.j, (int, np.integer)) or self.j < 1:
            raise ValueError(f"j must be a positive integer, got {self.j!r}")
        object.__setattr__(self, "j", int(self.j))

    @classmethod
    def from_size(cls, d: int) -> "GridDim":
        if d < 3 or d % 2 == 0:
            raise ValueError(f"dimension must be odd and >= 3, got {d}")
        return cls((d - 1) // 2)

    @property
    def d(self) -> int:
        return 2 * self.j + 1

    def indices(self) -> np.ndarray:
        """The index set -j, ..., j in ascending order."""
        return np.arange(-self.j, self.j + 1)

    def wrap(self, n: int) -> int:
        """Reduce an arbitrary integer index to the symmetric range mod d."""
        return (int(n) + self.j) % self.d - self.j

    def __str__(self):
        return f"d={self.d}"


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class GridFunction:
    """A complex-valued function on the grid; the state vector.

    Values are stored in index order n = -j, ..., j.  Item access wraps the
    index mod d (periodic extension).
    """

    dim: GridDim
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        if v.shape != (self.dim.d,):
            raise ValueError(f"expected {self.dim.d} values, got shape {v.shape}")
        object.__setattr__(self, "values", _readonly(v.copy()))

    @classmethod
    def delta(cls, dim: GridDim, k: int) -> "GridFunction":
        v = np.zeros(dim.d, dtype=complex)
        v[(k + dim.j) % dim.d] = 1.0
        return cls(dim, v)

    @classmethod
    def zero(cls, dim: GridDim) -> "GridFunction":
        return cls(dim, np.zeros(dim.d, dtype=complex))

    def __getitem__(self, n: int) -> complex:
        return complex(self.values[(int(n) + self.dim.j) % self.dim.d])

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def reflected(self) -> "GridFunction":
        """The parity image n -> value(-n)."""
        return GridFunction(self.dim, self.values[::-1])

    def is_even(self, tol: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.values - self.values[::-1])) <= tol)

    def conjugated(self) -> "GridFunction":
        return GridFunction(self.dim, np.conj(self.values))

    def __add__(self, other: "GridFunction") -> "GridFunction":
        _same_dim(self, other)
        return GridFunction(self.dim, self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        _same_dim(self, other)
        return GridFunction(self.dim, self.values - other.values)

    def __mul__(self, scalar) -> "GridFunction":
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return GridFunction(self.dim, self.values * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "GridFunction":
        return GridFunction(self.dim, self.values / scalar)

    def __neg__(self) -> "GridFunction":
        return GridFunction(self.dim, -self.values)


def _same_dim(a, b):
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True, eq=False)
class LinearOperator:
    """A d x d complex matrix in the canonical basis, rows/cols ordered -j..j."""

    dim: GridDim
    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.shape != (self.dim.d, self.dim.d):
            raise ValueError(f"expected {self.dim.d}x{self.dim.d} matrix, got {m.shape}")
        object.__setattr__(self, "matrix", _readonly(m.copy()))

    @classmethod
    def identity(cls, dim: GridDim) -> "LinearOperator":
        return cls(dim, np.eye(dim.d, dtype=complex))

    @classmethod
    def diagonal(cls, dim: GridDim, entries) -> "LinearOperator":
        return cls(dim, np.diag(np.asarray(entries, dtype=complex)))

    def entry(self, n: int, m: int) -> complex:
        """Matrix element <j;n| M |j;m>, indices wrapped mod d."""
        j, d = self.dim.j, self.dim.d
        return complex(self.matrix[(n + j) % d, (m + j) % d])

    def apply(self, psi: GridFunction) -> GridFunction:
        _same_dim(self, psi)
        return GridFunction(self.dim, self.matrix @ psi.values)

    def __call__(self, psi: GridFunction) -> GridFunction:
        return self.apply(psi)

    def adjoint(self) -> "LinearOperator":
        return LinearOperator(self.dim, self.matrix.conj().T)

    def is_hermitian(self, tol: float = 1e-10) -> bool:
        return bool(np.max(np.abs(self.matrix - self.matrix.conj().T)) <= tol)

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.matrix))

    def __matmul__(self, other):
        if isinstance(other, LinearOperator):
            _same_dim(self, other)
            return LinearOperator(self.dim, self.matrix @ other.matrix)
        if isinstance(other, GridFunction):
            return self.apply(other)
        return NotImplemented

    def __add__(self, other: "LinearOperator") -> "LinearOperator":
        _same_dim(self, other)
        return LinearOperator(self.dim, self.matrix + other.matrix)

    def __sub__(self, other: "LinearOperator") -> "LinearOperator":
        _same_dim(self, other)
        return LinearOperator(self.dim, self.matrix - other.matrix)

    def __mul__(self, scalar) -> "LinearOperator":
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return LinearOperator(self.dim, self.matrix * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "LinearOperator":
        return LinearOperator(self.dim, -self.matrix)


def outer(phi: GridFunction, psi: GridFunction) -> LinearOperator:
    """The rank-one operator |phi><psi|."""
    _same_dim(phi, psi)
    return LinearOperator(phi.dim, np.outer(phi.values, psi.values.conj()))


def inner_product(phi: GridFunction, psi: GridFunction) -> complex:
    """<phi, psi> = sum_n conj(phi(n)) psi(n); conjugate-linear in phi."""
    _same_dim(phi, psi)
    return complex(np.vdot(phi.values, psi.values))


_FOURIER_CACHE: dict[GridDim, LinearOperator] = {}


def fourier_operator(dim: GridDim) -> LinearOperator:
    """The unitary discrete Fourier transform F[psi](k) = d^{-1/2} sum_n e^{-2pi i kn/d} psi(n)."""
    op = _FOURIER_CACHE.get(dim)
    if op is None:
        n = dim.indices()
        op = LinearOperator(dim, np.exp(-2j * np.pi * np.outer(n, n) / dim.d) / np.sqrt(dim.d))
        _FOURIER_CACHE[dim] = op
    return op


def fourier_transform(psi: GridFunction) -> GridFunction:
    return fourier_operator(psi.dim).apply(psi)


def inverse_fourier_transform(psi: GridFunction) -> GridFunction:
    return fourier_operator(psi.dim).adjoint().apply(psi)


def parity_operator(dim: GridDim) -> LinearOperator:
    """The reflection n -> -n; equals F squared."""
    m = np.zeros((dim.d, dim.d), dtype=complex)
    for i in range(dim.d):
        m[dim.d - 1 - i, i] = 1.0
    return LinearOperator(dim, m)


def convolve(phi: GridFunction, psi: GridFunction) -> GridFunction:
    """Cyclic convolution (phi * psi)(n) = sum_m phi(m) psi(n - m), indices mod d."""
    _same_dim(phi, psi)
    d, j = phi.dim.d, phi.dim.j
    i = np.arange(d)
    # shifted[i_n, i_m] = psi(n - m) in storage indices (value n <-> index n + j)
    shifted = psi.values[(i[:, None] - i[None, :] + j) % d]
    return GridFunction(phi.dim, shifted @ phi.values)


# ---------------------------------------------------------------------------
# Hermitian eigensolver: cyclic Jacobi rotations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobiConfig:
    """Tolerances for the cyclic Jacobi eigensolver.

    Convergence is declared when the off-diagonal Frobenius mass drops below
    ``off_tol`` times the Frobenius norm of the input.
    """

    off_tol: float = 1e-14
    max_sweeps: int = 100
    hermiticity_tol: float = 1e-10
    degeneracy_gap: float = 1e-10


DEFAULT_JACOBI = JacobiConfig()


class ConvergenceError(RuntimeError):
    """The Jacobi sweep cap was reached before the off-diagonal mass vanished."""


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """Ascending real eigenvalues with orthonormal eigenvectors."""

    dim: GridDim
    eigenvalues: np.ndarray
    eigenvectors: tuple[GridFunction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "eigenvalues", _readonly(np.asarray(self.eigenvalues, dtype=float).copy())
        )

    def vector(self, k: int) -> GridFunction:
        return self.eigenvectors[k]

    def vector_matrix(self) -> np.ndarray:
        """Eigenvectors as columns of a d x d array."""
        return np.column_stack([v.values for v in self.eigenvectors])

    def reconstruct(self) -> LinearOperator:
        """sum_k lambda_k |v_k><v_k|."""
        V = self.vector_matrix()
        return LinearOperator(self.dim, (V * self.eigenvalues) @ V.conj().T)


def _off_mass(a: np.ndarray) -> float:
    # summed directly over the off-diagonal: subtracting the diagonal mass
    # from the total cancels catastrophically once convergence sets in
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def canonical_phase(v: np.ndarray, tie_tol: float = 1e-9) -> np.ndarray:
    """Multiply by the unit phase making the largest-magnitude entry real positive.

    Ties (entries within tie_tol relative of the maximum) break toward the
    lowest index, so vectors with symmetric entries get a stable sign even
    when roundoff perturbs which entry is formally largest.
    """
    mags = np.abs(v)
    top = float(mags.max())
    if top == 0.0:
        return v
    i = int(np.argmax(mags >= top * (1.0 - tie_tol)))
    return v * (np.conj(v[i]) / mags[i])


def eigendecompose_hermitian(
    M: LinearOperator, config: JacobiConfig = DEFAULT_JACOBI
) -> SpectralDecomposition:
    """Diagonalize a Hermitian operator by cyclic Jacobi rotations.

    Rotations run in lexicographic (p, q) order until the off-diagonal
    Frobenius mass falls below ``config.off_tol`` times the input norm, with a
    hard cap of ``config.max_sweeps`` sweeps.  Output is deterministic:
    eigenvalues ascend (stable sort), eigenvectors within a degenerate cluster
    (gap below ``config.degeneracy_gap``) are re-orthonormalized by modified
    Gram-Schmidt in index order, and each eigenvector carries the phase that
    makes its largest-magnitude entry real and positive.
    """
    dim = M.dim
    d = dim.d
    A = M.matrix
    if np.max(np.abs(A - A.conj().T)) > config.hermiticity_tol:
        raise ValueError("operator is not Hermitian within tolerance")
    A = (A + A.conj().T) / 2.0  # exact Hermitian working copy
    A = np.array(A, dtype=complex)
    V = np.eye(d, dtype=complex)

    norm = float(np.linalg.norm(A))
    if norm == 0.0:
        vals = np.zeros(d)
        vecs = tuple(GridFunction.delta(dim, k) for k in dim.indices())
        return SpectralDecomposition(dim, vals, vecs)

    threshold = config.off_tol * norm
    skip = threshold / (2.0 * d)
    converged = False
    for _ in range(config.max_sweeps):
        if _off_mass(A) < threshold:
            converged = True
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = A[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                tau = (A[q, q].real - A[p, p].real) / (2.0 * r)
                t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau)) if tau != 0 else 1.0
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * np.conj(phase) * col_q
                A[:, q] = s * phase * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * phase * row_q
                A[q, :] = s * np.conj(phase) * row_p + c * row_q
                A[p, q] = 0.0
                A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * np.conj(phase) * vq
                V[:, q] = s * phase * vp + c * vq
    else:
        converged = _off_mass(A) < threshold
    if not converged:
        raise ConvergenceError(
            f"Jacobi did not converge in {config.max_sweeps} sweeps "
            f"(off mass {_off_mass(A):.3e}, target {threshold:.3e})"
        )

    vals = np.diag(A).real
    order = np.argsort(vals, kind="stable")
    vals = vals[order]
    V = V[:, order]

    # re-orthonormalize degenerate clusters in index order
    start = 0
    for k in range(1, d + 1):
        if k == d or vals[k] - vals[k - 1] >= config.degeneracy_gap:
            if k - start > 1:
                for a in range(start, k):
                    v = V[:, a]
                    for b in range(start, a):
                        v = v - np.vdot(V[:, b], v) * V[:, b]
                    V[:, a] = v / np.linalg.norm(v)
            start = k

    vecs = tuple(GridFunction(dim, canonical_phase(V[:, k])) for k in range(d))
    return SpectralDecomposition(dim, vals, vecs)


def operator_exponential(
    M: LinearOperator, scale: complex, config: JacobiConfig = DEFAULT_JACOBI
) -> LinearOperator:
    """exp(scale * M) for Hermitian M, via the spectral decomposition.

    Unitary whenever ``scale`` is purely imaginary.
    """
    dec = eigendecompose_hermitian(M, config)
    V = dec.vector_matrix()
    return LinearOperator(M.dim, (V * np.exp(scale * dec.eigenvalues)) @ V.conj().T)
