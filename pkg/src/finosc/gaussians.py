"""The five finite Gaussian families, Jacobi theta evaluation and the
closed-form norm identities.

Families G1-G3 are lattice periodizations of e^{-kappa pi x^2 / d} (plain,
half-period shifted, and sign-alternating) and carry a width parameter
kappa > 0.  G4 is the centered binomial profile and G5 the cosine power;
both are parameter-free.  Values are real, even in n, and periodic mod d.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from functools import lru_cache
from math import exp, lgamma, log

import numpy as np

from ._binomial import log_binomial
from .grid import GridDim, GridFunction

__all__ = [
    "Family",
    "theta",
    "gaussian",
    "normalized_gaussian",
    "norm_squared_closed_form",
]

# Lattice/theta series are truncated once the next term falls below this
# fraction of the running partial sum (with at least MIN_TERMS pairs taken);
# the terms decay super-exponentially so this certifies full double precision.
SERIES_REL_TOL = 1e-18
SERIES_MIN_TERMS = 3
_SERIES_CAP = 10_000


class Family(Enum):
    """Tag for the five Gaussian families; G1-G3 take a width kappa > 0."""

    G1 = "g1"
    G2 = "g2"
    G3 = "g3"
    G4 = "g4"
    G5 = "g5"

    @classmethod
    def from_label(cls, label: str) -> "Family":
        try:
            return cls(label.lower())
        except ValueError:
            raise ValueError(f"unknown Gaussian family {label!r}; expected g1..g5") from None

    @property
    def has_kappa(self) -> bool:
        return self in (Family.G1, Family.G2, Family.G3)

    @property
    def index(self) -> int:
        return int(self.value[1])


def _check_kappa(family: Family, kappa: float | None) -> float:
    if family.has_kappa:
        if kappa is None:
            return 1.0
        if not kappa > 0:
            raise ValueError(f"kappa must be positive, got {kappa}")
        return float(kappa)
    if kappa is not None:
        raise ValueError(f"{family.value} takes no kappa parameter")
    return 1.0


def _paired_sum(term, min_terms: int = SERIES_MIN_TERMS, rel_tol: float = SERIES_REL_TOL):
    """Sum term(a) over a symmetric pairing a = 0, 1, 2, ... of a lattice series.

    ``term(a)`` must return the combined contribution of the mirror pair at
    offset a.  Stops once the next pair is below rel_tol times the partial sum.
    """
    total = term(0)
    a = 1
    while True:
        t = term(a)
        total += t
        if a >= min_terms and abs(t) < rel_tol * max(abs(total), 1e-300):
            return total
        a += 1
        if a > _SERIES_CAP:
            raise ValueError("series did not converge (is Im(tau) > 0?)")


def theta(kind: int, z: complex, tau: complex) -> complex:
    """Jacobi theta function theta_kind(z, tau) for kind in {2, 3, 4}.

    theta_3(z,tau) = sum_a e^{i pi tau a^2} e^{2 pi i a z}; theta_4 carries the
    alternating sign (-1)^a and theta_2 runs over half-integers a + 1/2.
    Requires Im(tau) > 0 for convergence.

    Truncation stops once the Gaussian envelope of the next mirror pair drops
    below SERIES_REL_TOL times the larger of the partial sum and the peak pair
    seen so far; the envelope, not the pair value itself, drives the decision
    because the oscillatory factor can make individual pairs accidentally
    vanish long before the tail is negligible.
    """
    if kind not in (2, 3, 4):
        raise ValueError(f"theta kind must be 2, 3 or 4, got {kind}")
    if not complex(tau).imag > 0:
        raise ValueError("theta requires Im(tau) > 0")
    z = complex(z)
    tau = complex(tau)
    decay = math.pi * tau.imag
    growth = 2.0 * math.pi * abs(z.imag)

    def envelope(x: float) -> float:
        arg = -decay * x * x + growth * x
        return 2.0 * math.exp(arg) if arg < 700.0 else math.inf

    if kind == 2:

        def term(a):
            out = 0j
            for alpha in (a, -1 - a):
                h = alpha + 0.5
                out += cmath.exp(1j * cmath.pi * tau * h * h + 2j * cmath.pi * h * z)
            return out

        coord = lambda a: a + 0.5
    else:
        sign = -1.0 if kind == 4 else 1.0

        def term(a):
            if a == 0:
                return cmath.exp(0j)
            s = sign**a
            e = cmath.exp(1j * cmath.pi * tau * a * a)
            return s * e * (cmath.exp(2j * cmath.pi * a * z) + cmath.exp(-2j * cmath.pi * a * z))

        coord = lambda a: float(a)

    total = term(0)
    peak = abs(total)
    a = 1
    while True:
        t = term(a)
        total += t
        peak = max(peak, abs(t))
        if a >= SERIES_MIN_TERMS and envelope(coord(a + 1)) < SERIES_REL_TOL * max(
            abs(total), peak
        ):
            return total
        a += 1
        if a > _SERIES_CAP:
            raise ValueError("theta series did not converge (Im(tau) too small)")


def _lattice_value(d: int, kappa: float, n: int, offset: float, alternating: bool) -> float:
    """sum_a (+-1)^a exp(-kappa pi ((a + offset) d + n)^2 / d), paired symmetrically."""
    c = kappa * np.pi / d

    def term(a):
        if offset == 0.0:
            xs = (a,) if a == 0 else (a, -a)
        else:
            xs = (a, -1 - a)
        out = 0.0
        for alpha in xs:
            t = exp(-c * ((alpha + offset) * d + n) ** 2)
            out += -t if (alternating and alpha % 2) else t
        return out

    return _paired_sum(term)


@lru_cache(maxsize=None)
def _gaussian_cached(dim: GridDim, family: Family, kappa: float) -> GridFunction:
    j, d = dim.j, dim.d
    half = np.zeros(j + 1)
    if family is Family.G1:
        for n in range(j + 1):
            half[n] = _lattice_value(d, kappa, n, 0.0, False)
    elif family is Family.G2:
        for n in range(j + 1):
            half[n] = _lattice_value(d, kappa, n, 0.5, False)
    elif family is Family.G3:
        for n in range(j + 1):
            half[n] = (-1.0) ** n * _lattice_value(d, kappa, n, 0.0, True)
    elif family is Family.G4:
        log4j = 2 * j * log(2.0)
        for n in range(j + 1):
            half[n] = exp(log_binomial(2 * j, j + n) - log4j)
    else:  # G5
        for n in range(j + 1):
            half[n] = np.cos(n * np.pi / d) ** (2 * j) / np.sqrt(d)
    # mirror so that value(-n) == value(n) holds exactly
    values = np.concatenate([half[:0:-1], half])
    return GridFunction(dim, values)


def gaussian(dim: GridDim, family: Family, kappa: float | None = None) -> GridFunction:
    """The (unnormalized) finite Gaussian of the given family on the grid."""
    return _gaussian_cached(dim, family, _check_kappa(family, kappa))


def normalized_gaussian(dim: GridDim, family: Family, kappa: float | None = None) -> GridFunction:
    """gaussian(...) scaled to unit l2 norm."""
    g = gaussian(dim, family, kappa)
    return g / g.norm()


def norm_squared_closed_form(dim: GridDim, family: Family, kappa: float | None = None) -> float:
    """Closed form of ||g||^2, available for G1-G3 at kappa = 1 and for G4, G5.

    G1-G3 norms reduce to central values of the half-width families; G4 and G5
    share the central binomial expression C(4j, 2j) / 2^{4j}.
    """
    kappa = _check_kappa(family, kappa)
    if family.has_kappa and kappa != 1.0:
        raise ValueError(f"closed-form norm only available at kappa=1 for {family.value}")
    j, d = dim.j, dim.d
    if family in (Family.G4, Family.G5):
        return exp(lgamma(4 * j + 1) - 2 * lgamma(2 * j + 1) - 4 * j * log(2.0))
    a0 = gaussian(dim, Family.G1, 2.0)[0]
    b0 = gaussian(dim, Family.G2, 2.0)[0].real
    a0 = a0.real
    if family is Family.G1:
        return np.sqrt(d / 2.0) * (a0 * a0 + 2.0 * a0 * b0 - b0 * b0)
    return np.sqrt(d / 2.0) * (a0 * a0 + b0 * b0)
