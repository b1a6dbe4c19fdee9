import numpy as np
import pytest

from finosc.grid import GridDim, GridFunction


@pytest.fixture
def d3():
    return GridDim.from_size(3)


@pytest.fixture
def d7():
    return GridDim.from_size(7)


@pytest.fixture
def d15():
    return GridDim.from_size(15)


def rand_state(dim: GridDim, seed: int, normalize: bool = False) -> GridFunction:
    rng = np.random.default_rng(seed)
    psi = GridFunction(dim, rng.normal(size=dim.d) + 1j * rng.normal(size=dim.d))
    return psi / psi.norm() if normalize else psi


def wigner_brute(psi: GridFunction) -> np.ndarray:
    """Literal triple-loop evaluation of the defining Wigner sum.

    Independent of the vectorized implementation; used as the indexing oracle.
    """
    j, d = psi.dim.j, psi.dim.d
    v = psi.values
    W = np.zeros((d, d), dtype=complex)
    for ni, n in enumerate(range(-j, j + 1)):
        for mi, m in enumerate(range(-j, j + 1)):
            acc = 0j
            for k in range(-j, j + 1):
                acc += (
                    np.exp(4j * np.pi * m * k / d)
                    * v[(n - k + j) % d]
                    * np.conj(v[(n + k + j) % d])
                )
            W[ni, mi] = acc / d
    return W


def lattice_sum_brute(d: int, kappa: float, n: int, offset: float, alternating: bool) -> float:
    """Direct wide-window evaluation of the periodized Gaussian lattice sum."""
    total = 0.0
    for a in range(-60, 61):
        t = np.exp(-kappa * np.pi / d * ((a + offset) * d + n) ** 2)
        total += -t if (alternating and a % 2) else t
    return total
