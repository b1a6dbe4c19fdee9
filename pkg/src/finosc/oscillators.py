"""Finite oscillator Hamiltonians, Harper eigenbasis, fractional Fourier
transform, weighted Gram-Schmidt oscillators, time evolution and revivals.

Five families: the Fourier-conjugated quadratic oscillator, the Harper
finite-difference oscillator, the diagonal ladder oscillator J_z + j + 1/2,
frame quantizations of the harmonic symbol (a^2+b^2)/2 over each coherent
family, and spectral sums over weighted-orthonormal polynomial bases with
half-integer levels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .frames import coherent_family, quantize
from .gaussians import Family, gaussian, normalized_gaussian
from .grid import (
    DEFAULT_JACOBI,
    GridDim,
    GridFunction,
    JacobiConfig,
    LinearOperator,
    SpectralDecomposition,
    eigendecompose_hermitian,
    fourier_operator,
)

__all__ = [
    "DegenerateSpectrumError",
    "AlternationCountError",
    "HarperBasis",
    "GramSchmidtOscillator",
    "RevivalProgression",
    "RevivalReport",
    "fourier_hamiltonian",
    "harper_hamiltonian",
    "kravchuk_hamiltonian",
    "frame_hamiltonian",
    "deformed_fourier_hamiltonian",
    "deformed_harper_hamiltonian",
    "hamiltonian",
    "position_squared",
    "difference_momentum_squared",
    "sign_alternations",
    "harper_basis",
    "fractional_fourier",
    "orthonormal_functions_for_weight",
    "gram_schmidt_oscillator",
    "kravchuk_functions_via_orthonormalization",
    "evolve",
    "evolve_spectral",
    "detect_revivals",
]


class DegenerateSpectrumError(RuntimeError):
    """Two eigenvalues closer than the degeneracy gap where simple spectrum is required."""


class AlternationCountError(RuntimeError):
    """Sign-alternation counts did not come out as a permutation of 0..2j."""


def position_squared(dim: GridDim) -> LinearOperator:
    """Q^2: multiplication by n^2."""
    return LinearOperator.diagonal(dim, dim.indices().astype(float) ** 2)


def difference_momentum_squared(dim: GridDim) -> LinearOperator:
    """The periodic second-difference operator (P^2 psi)(n) = -[psi(n+1) - 2 psi(n) + psi(n-1)]."""
    d = dim.d
    m = 2.0 * np.eye(d, dtype=complex)
    for i in range(d):
        m[i, (i + 1) % d] -= 1.0
        m[i, (i - 1) % d] -= 1.0
    return LinearOperator(dim, m)


def _symmetrized(op: LinearOperator) -> LinearOperator:
    return LinearOperator(op.dim, (op.matrix + op.matrix.conj().T) / 2.0)


def fourier_hamiltonian(dim: GridDim) -> LinearOperator:
    """H = (1/2) F^+ Q^2 F + (1/2) Q^2; commutes with F."""
    F = fourier_operator(dim)
    Q2 = position_squared(dim)
    return _symmetrized(0.5 * (F.adjoint() @ Q2 @ F) + 0.5 * Q2)


def harper_hamiltonian(dim: GridDim) -> LinearOperator:
    """H = (1/2) P^2 + (1/2) F P^2 F^+ with the second-difference P^2."""
    F = fourier_operator(dim)
    P2 = difference_momentum_squared(dim)
    return _symmetrized(0.5 * P2 + 0.5 * (F @ P2 @ F.adjoint()))


def kravchuk_hamiltonian(dim: GridDim) -> LinearOperator:
    """The diagonal ladder oscillator J_z + j + 1/2 with eigenvalues n + j + 1/2."""
    return LinearOperator.diagonal(dim, dim.indices() + dim.j + 0.5)


def frame_hamiltonian(dim: GridDim, family: Family | int) -> LinearOperator:
    """Frame quantization of the harmonic symbol f(a, b) = (a^2 + b^2)/2.

    H_i = (1/d) sum_{a,b} f(a,b) |a,b>_i <a,b|_i over the coherent family of
    the i-th normalized Gaussian.  The spectrum already carries the harmonic
    zero-point offset; no additive constant is applied.
    """
    fam = Family(f"g{family}") if isinstance(family, int) else family
    states = coherent_family(dim, fam)
    H = quantize(states, lambda a, b: (a * a + b * b) / 2.0)
    return _symmetrized(H)


def _check_deformation(alpha: float) -> float:
    if not 0.0 < alpha < 2.0:
        raise ValueError(f"deformation exponent must lie in (0, 2), got {alpha}")
    return float(alpha)


def deformed_fourier_hamiltonian(
    dim: GridDim, alpha: float, config: JacobiConfig = DEFAULT_JACOBI
) -> LinearOperator:
    """H = (1/2) F^{-alpha} Q^2 F^{alpha} + (1/2) Q^2 with the fractional transform."""
    alpha = _check_deformation(alpha)
    Fa = fractional_fourier(dim, alpha, config)
    Q2 = position_squared(dim)
    return _symmetrized(0.5 * (Fa.adjoint() @ Q2 @ Fa) + 0.5 * Q2)


def deformed_harper_hamiltonian(
    dim: GridDim, alpha: float, config: JacobiConfig = DEFAULT_JACOBI
) -> LinearOperator:
    """H = (1/2) P^2 + (1/2) F^{alpha} P^2 F^{-alpha} with the fractional transform."""
    alpha = _check_deformation(alpha)
    Fa = fractional_fourier(dim, alpha, config)
    P2 = difference_momentum_squared(dim)
    return _symmetrized(0.5 * P2 + 0.5 * (Fa @ P2 @ Fa.adjoint()))


def hamiltonian(
    dim: GridDim,
    kind: str,
    family: Family | int | None = None,
    alpha: float | None = None,
) -> LinearOperator:
    """Dispatch by kind tag: fourier, harper, kravchuk, frame, gramschmidt,
    deformed-fourier, deformed-harper."""
    kind = kind.lower()
    if kind == "fourier":
        return fourier_hamiltonian(dim)
    if kind == "harper":
        return harper_hamiltonian(dim)
    if kind == "kravchuk":
        return kravchuk_hamiltonian(dim)
    if kind in ("frame", "gramschmidt"):
        if family is None:
            raise ValueError(f"kind {kind!r} requires a Gaussian family")
        if kind == "frame":
            return frame_hamiltonian(dim, family)
        return gram_schmidt_oscillator(dim, family).operator
    if kind in ("deformed-fourier", "deformed-harper"):
        if alpha is None:
            raise ValueError(f"kind {kind!r} requires a deformation exponent alpha")
        builder = deformed_fourier_hamiltonian if kind == "deformed-fourier" else deformed_harper_hamiltonian
        return builder(dim, alpha)
    raise ValueError(f"unknown oscillator kind {kind!r}")


# ---------------------------------------------------------------------------
# Harper eigenbasis and the fractional Fourier transform
# ---------------------------------------------------------------------------


def sign_alternations(values: np.ndarray, zero_tol: float = 1e-9) -> int:
    """Number of adjacent strict sign flips, scanning n = -j..j.

    Entries below ``zero_tol`` times the max magnitude count as exact zeros
    and are skipped.  Harper eigenvectors have near-zero tails and parity
    zeros at n = 0 that must not produce spurious flips.
    """
    v = np.asarray(values, dtype=float)
    cut = zero_tol * np.max(np.abs(v))
    signs = [x > 0 for x in v if abs(x) > cut]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@dataclass(frozen=True, eq=False)
class HarperBasis:
    """Harper eigenfunctions h_0..h_{2j} ordered by sign-alternation count.

    ``fourier_eigenvalues[n]`` is (-i)^n, verified against F h_n at build
    time.  ``energies`` are the corresponding Harper eigenvalues in the same
    (alternation) order; ``energy_order_consistent`` records whether that
    order coincides with ascending energy, which can fail in the upper
    spectrum and is surfaced as a diagnostic rather than an error.
    """

    dim: GridDim
    functions: tuple[GridFunction, ...]
    energies: np.ndarray
    fourier_eigenvalues: np.ndarray
    energy_order_consistent: bool


@lru_cache(maxsize=None)
def harper_basis(
    dim: GridDim,
    config: JacobiConfig = DEFAULT_JACOBI,
    zero_tol: float = 1e-9,
    fourier_tol: float = 1e-8,
) -> HarperBasis:
    """Diagonalize the Harper oscillator and order eigenvectors by alternations."""
    dec = eigendecompose_hermitian(harper_hamiltonian(dim), config)
    gaps = np.diff(dec.eigenvalues)
    if np.any(gaps < config.degeneracy_gap):
        k = int(np.argmin(gaps))
        raise DegenerateSpectrumError(
            f"Harper eigenvalues {k} and {k + 1} differ by {gaps[k]:.3e} "
            f"(< {config.degeneracy_gap:.1e}) at {dim}"
        )
    counted = []
    for ev, vec in zip(dec.eigenvalues, dec.eigenvectors):
        imag = float(np.max(np.abs(vec.values.imag)))
        if imag > 1e-8:
            raise AlternationCountError(f"Harper eigenvector has imaginary residue {imag:.3e}")
        counted.append((sign_alternations(vec.values.real, zero_tol), float(ev), vec))
    counts = sorted(c for c, _, _ in counted)
    if counts != list(range(dim.d)):
        raise AlternationCountError(
            f"alternation counts {counts} are not a permutation of 0..{dim.d - 1}; "
            "an entry near the zero threshold makes the count ambiguous"
        )
    counted.sort(key=lambda t: t[0])
    functions = tuple(vec for _, _, vec in counted)
    energies = np.array([ev for _, ev, _ in counted])
    phases = np.array([(-1j) ** n for n in range(dim.d)])
    F = fourier_operator(dim)
    for n, h in enumerate(functions):
        resid = np.max(np.abs(F.matrix @ h.values - phases[n] * h.values))
        if resid > fourier_tol:
            raise AlternationCountError(
                f"F h_{n} deviates from (-i)^{n} h_{n} by {resid:.3e} (> {fourier_tol:.1e})"
            )
    consistent = bool(np.all(np.diff(energies) > 0))
    return HarperBasis(dim, functions, energies, phases, consistent)


def fractional_fourier(
    dim: GridDim, alpha: float, config: JacobiConfig = DEFAULT_JACOBI
) -> LinearOperator:
    """F^alpha = sum_n e^{-i pi n alpha / 2} |h_n><h_n| over the Harper basis.

    The exponent branch e^{-i pi n alpha/2} is continuous in alpha and matches
    (-i)^n at integers; F^0 is the identity and F^1 the Fourier transform.
    """
    basis = harper_basis(dim, config)
    V = np.column_stack([h.values for h in basis.functions])
    w = np.exp(-0.5j * np.pi * np.arange(dim.d) * alpha)
    return LinearOperator(dim, (V * w) @ V.conj().T)


# ---------------------------------------------------------------------------
# Weighted Gram-Schmidt oscillators
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GramSchmidtOscillator:
    """Orthonormal ladder functions phi_m and the spectral-sum Hamiltonian.

    ``operator`` = sum_m (j + m + 1/2) |phi_m><phi_m| has eigenvalues exactly
    1/2, 3/2, ..., 2j + 1/2 and ground state phi_{-j}.
    """

    dim: GridDim
    family: Family
    functions: tuple[GridFunction, ...]
    operator: LinearOperator
    gram_condition: float


def orthonormal_functions_for_weight(
    dim: GridDim,
    weight: np.ndarray,
    multiplier: np.ndarray,
    condition_limit: float = 1e12,
    config: JacobiConfig = DEFAULT_JACOBI,
) -> tuple[list[np.ndarray], float]:
    """Orthonormalize the polynomial ladder 1, X, ..., X^{2j} under
    <f, g> = sum_n weight(n) f(n) g(n) and return multiplier * Phi_m.

    Modified Gram-Schmidt with one re-orthogonalization pass; the ladder is
    evaluated in a Chebyshev basis of the scaled coordinate n/j, which spans
    the same nested polynomial spaces degree by degree but keeps the Gram
    matrix condition far below that of raw monomials.  The condition number
    of that Gram matrix is monitored and the run aborts above
    ``condition_limit`` to bound silent precision loss.  Output signs follow
    positive leading coefficients.
    """
    w = np.asarray(weight, dtype=float)
    mult = np.asarray(multiplier, dtype=float)
    d, j = dim.d, dim.j
    if w.shape != (d,) or mult.shape != (d,):
        raise ValueError(f"weight and multiplier must have {d} entries")
    if np.any(w < 0):
        raise ValueError("weight must be non-negative")
    zeros = np.flatnonzero(w == 0.0)
    if zeros.size:
        labels = [int(z) - j for z in zeros]
        raise ValueError(f"weight vanishes at n = {labels}; moment matrix is singular")

    x = dim.indices() / j
    basis = np.polynomial.chebyshev.chebvander(x, d - 1).T  # row k: T_k(n/j), degree k

    gram = basis @ (w[:, None] * basis.T)
    gdec = eigendecompose_hermitian(LinearOperator(dim, gram.astype(complex)), config)
    lo, hi = float(gdec.eigenvalues[0]), float(gdec.eigenvalues[-1])
    if lo <= 0.0:
        raise ValueError("moment matrix is numerically singular")
    condition = hi / lo
    if condition > condition_limit:
        raise ValueError(
            f"moment matrix condition {condition:.3e} exceeds {condition_limit:.1e}; "
            "orthonormalization would lose precision silently"
        )

    ortho: list[np.ndarray] = []
    for k in range(d):
        v = basis[k].astype(float).copy()
        for _ in range(2):  # MGS plus one re-orthogonalization pass
            for p in ortho:
                v -= np.sum(w * p * v) * p
        nv = math.sqrt(np.sum(w * v * v))
        if nv == 0.0:
            raise ValueError(f"degree-{k} ladder vector collapsed under the weight")
        ortho.append(v / nv)
    return [mult * p for p in ortho], condition


@lru_cache(maxsize=None)
def gram_schmidt_oscillator(dim: GridDim, family: Family | int) -> GramSchmidtOscillator:
    """Oscillator with ground state G_i: phi_m = G_i * Phi_m for the polynomials
    orthonormal under the weight G_i^2, and H = sum (j+m+1/2) |phi_m><phi_m|."""
    fam = Family(f"g{family}") if isinstance(family, int) else family
    G = normalized_gaussian(dim, fam).values.real
    funcs, condition = orthonormal_functions_for_weight(dim, G * G, G)
    j = dim.j
    H = np.zeros((dim.d, dim.d))
    for k, f in enumerate(funcs):
        H += (k + 0.5) * np.outer(f, f)  # level j + m + 1/2 with m = k - j
    return GramSchmidtOscillator(
        dim,
        fam,
        tuple(GridFunction(dim, f) for f in funcs),
        LinearOperator(dim, H.astype(complex)),
        condition,
    )


def kravchuk_functions_via_orthonormalization(dim: GridDim) -> tuple[GridFunction, ...]:
    """Recover the Kravchuk functions as sqrt(g4) times the polynomials
    orthonormal under the binomial weight g4 itself (not G4 squared).

    The classical normalization has leading-coefficient sign (-1)^{j+m}, so
    the positive-leading Gram-Schmidt output is sign-flipped accordingly.
    """
    g4 = gaussian(dim, Family.G4).values.real
    funcs, _ = orthonormal_functions_for_weight(dim, g4, np.sqrt(g4))
    return tuple(
        GridFunction(dim, f if k % 2 == 0 else -f) for k, f in enumerate(funcs)
    )


# ---------------------------------------------------------------------------
# Time evolution and revivals
# ---------------------------------------------------------------------------


def evolve_spectral(dec: SpectralDecomposition, psi: GridFunction, t: float) -> GridFunction:
    """e^{-i t H} psi from a precomputed spectral decomposition."""
    V = dec.vector_matrix()
    coeff = V.conj().T @ psi.values
    return GridFunction(dec.dim, V @ (np.exp(-1j * t * dec.eigenvalues) * coeff))


def evolve(
    H: LinearOperator, psi: GridFunction, t: float, config: JacobiConfig = DEFAULT_JACOBI
) -> GridFunction:
    """e^{-i t H} psi for Hermitian H; preserves the norm."""
    return evolve_spectral(eigendecompose_hermitian(H, config), psi, t)


@dataclass(frozen=True)
class RevivalProgression:
    """A maximal run of equally spaced eigenvalues in the sorted spectrum."""

    start: int
    length: int
    gap: float
    max_deviation: float
    period: float


@dataclass(frozen=True)
class RevivalReport:
    progressions: tuple[RevivalProgression, ...]

    def full_length(self, d: int) -> bool:
        return any(p.length == d for p in self.progressions)


def detect_revivals(
    dec: SpectralDecomposition, min_len: int = 3, tol: float = 1e-8
) -> RevivalReport:
    """Find all maximal runs of >= min_len consecutive eigenvalues with a
    common gap (within tol); each run carries the revival period 2 pi / gap."""
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if min_len < 3:
        raise ValueError(f"min_len must be at least 3, got {min_len}")
    e = dec.eigenvalues
    found = []
    i = 0
    while i < len(e) - 1:
        ref = e[i + 1] - e[i]
        k = i + 1
        while k + 1 < len(e) and abs((e[k + 1] - e[k]) - ref) <= tol:
            k += 1
        length = k - i + 1
        if length >= min_len:
            gaps = np.diff(e[i : k + 1])
            mean = float(np.mean(gaps))
            dev = float(np.max(np.abs(gaps - mean)))
            period = 2.0 * np.pi / mean if mean > 0 else math.inf
            found.append(RevivalProgression(i, length, mean, dev, period))
            i = k
        else:
            i += 1
    return RevivalReport(tuple(found))
