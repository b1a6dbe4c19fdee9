"""Kravchuk polynomials and functions, the Kravchuk transform and the su(2)
generator calculus.

K_m(n) is the coefficient of X^{j+m} in (1-X)^{j+n} (1+X)^{j-n}, computed by
the explicit alternating binomial sum.  The binomials are exact integers
(math.comb): the alternating sum cancels from magnitude ~4^j down to O(1),
so floating-point binomials lose ~j bits while integer arithmetic keeps the
sum exact until the final float conversion.  The weighted companions
curly-K_m(n) = 2^{-j} sqrt(C(2j,j+n)/C(2j,j+m)) K_m(n) form an orthonormal
basis diagonalizing J_x with integer eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, sqrt

import numpy as np

from .grid import GridDim, GridFunction, LinearOperator

__all__ = [
    "KravchukTable",
    "Su2Generators",
    "kravchuk_polynomial",
    "kravchuk_function",
    "kravchuk_function_hypergeometric",
    "kravchuk_table",
    "kravchuk_transform",
    "generalized_kravchuk_transform",
    "su2_generators",
]


def _check_index(dim: GridDim, value: int, name: str) -> int:
    if not -dim.j <= value <= dim.j:
        raise ValueError(f"{name}={value} outside the grid range [-{dim.j}, {dim.j}]")
    return int(value)


def _kravchuk_polynomial_int(j: int, m: int, n: int) -> int:
    lo = max(0, m + n)
    hi = min(j + m, j + n)
    total = 0
    for k in range(lo, hi + 1):
        term = comb(j + n, k) * comb(j - n, j + m - k)
        total += -term if k % 2 else term
    return total


def kravchuk_polynomial(dim: GridDim, m: int, n: int) -> float:
    """K_m(n) via the alternating binomial sum, exact until the final rounding."""
    j = dim.j
    m = _check_index(dim, m, "m")
    n = _check_index(dim, n, "n")
    return float(_kravchuk_polynomial_int(j, m, n))


def kravchuk_function(dim: GridDim, m: int, n: int) -> float:
    """The orthonormal weighted value 2^{-j} sqrt(C(2j,j+n)/C(2j,j+m)) K_m(n)."""
    j = dim.j
    m = _check_index(dim, m, "m")
    n = _check_index(dim, n, "n")
    ratio = Fraction(comb(2 * j, j + n), comb(2 * j, j + m) * 4**j)
    return sqrt(float(ratio)) * _kravchuk_polynomial_int(j, m, n)


def kravchuk_function_hypergeometric(dim: GridDim, m: int, n: int) -> float:
    """Same value through the terminating 2F1(-j-m, -j-n; -2j | 2) sum.

    Kept as an independent route for testing the symmetry in (m, n); the
    series terminates at min(j+m, j+n) before the lower Pochhammer vanishes,
    and the rational terms are accumulated exactly.
    """
    j = dim.j
    m = _check_index(dim, m, "m")
    n = _check_index(dim, n, "n")
    a, b, c = -(j + m), -(j + n), -2 * j
    hyp = Fraction(1)
    term = Fraction(1)
    for k in range(min(j + m, j + n)):
        term *= Fraction((a + k) * (b + k) * 2, (c + k) * (k + 1))
        hyp += term
    weight = Fraction(comb(2 * j, j + m) * comb(2 * j, j + n), 4**j)
    return sqrt(float(weight)) * float(hyp)


@dataclass(frozen=True, eq=False)
class KravchukTable:
    """All K_m(n) and curly-K_m(n) for one grid, indexed [m + j, n + j]."""

    dim: GridDim
    poly: np.ndarray
    func: np.ndarray

    def polynomial(self, m: int, n: int) -> float:
        j = self.dim.j
        return float(self.poly[m + j, n + j])

    def function(self, m: int, n: int) -> float:
        j = self.dim.j
        return float(self.func[m + j, n + j])

    def function_row(self, m: int) -> GridFunction:
        """The basis vector curly-K_m as a grid function."""
        return GridFunction(self.dim, self.func[m + self.dim.j])


@lru_cache(maxsize=None)
def kravchuk_table(dim: GridDim) -> KravchukTable:
    j, d = dim.j, dim.d
    poly = np.empty((d, d))
    func = np.empty((d, d))
    for mi, m in enumerate(dim.indices()):
        for ni, n in enumerate(dim.indices()):
            poly[mi, ni] = kravchuk_polynomial(dim, m, n)
            func[mi, ni] = kravchuk_function(dim, m, n)
    poly.setflags(write=False)
    func.setflags(write=False)
    return KravchukTable(dim, poly, func)


def kravchuk_transform(dim: GridDim) -> LinearOperator:
    """The unitary K sending |j;n> to |curly-K_{-n}>; K^4 = identity."""
    func = kravchuk_table(dim).func
    # matrix[m_idx, n_idx] = curly-K_{-n}(m)
    return LinearOperator(dim, func[::-1].T)


def generalized_kravchuk_transform(dim: GridDim, phases) -> LinearOperator:
    """K with an extra unit phase e^{i alpha_n} per column; still maps J_z to J_x."""
    phases = np.asarray(phases, dtype=float)
    if phases.shape != (dim.d,):
        raise ValueError(f"expected {dim.d} phases, got shape {phases.shape}")
    return LinearOperator(dim, kravchuk_transform(dim).matrix * np.exp(1j * phases)[None, :])


@dataclass(frozen=True, eq=False)
class Su2Generators:
    """The spin-j generators on the grid: J_z diagonal, J_+/- ladders."""

    dim: GridDim
    jz: LinearOperator
    jplus: LinearOperator
    jminus: LinearOperator
    jx: LinearOperator
    jy: LinearOperator


@lru_cache(maxsize=None)
def su2_generators(dim: GridDim) -> Su2Generators:
    j, d = dim.j, dim.d
    n = dim.indices().astype(float)
    jz = np.diag(n.astype(complex))
    jp = np.zeros((d, d), dtype=complex)
    jm = np.zeros((d, d), dtype=complex)
    for i, m in enumerate(n[:-1]):
        jp[i + 1, i] = np.sqrt((j - m) * (j + m + 1))
    for i, m in enumerate(n[1:], start=1):
        jm[i - 1, i] = np.sqrt((j + m) * (j - m + 1))
    jx = (jp + jm) / 2.0
    jy = (jp - jm) / 2j
    return Su2Generators(
        dim,
        LinearOperator(dim, jz),
        LinearOperator(dim, jp),
        LinearOperator(dim, jm),
        LinearOperator(dim, jx),
        LinearOperator(dim, jy),
    )
