"""Single-qubit dictionary: spinor <-> spherical angles <-> Bloch ball.

Sign convention: the up state (1, 0) sits at the NORTH pole, Bloch vector
(0, 0, +1/2).  Pure states fill the surface of the radius-1/2 ball and
mixed states its interior; the half-trace t of a normalized density
matrix is always 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .spinor import as_spinor, normalized

_ANGLE_SLACK = 1e-12
_POLE_TOL = 1e-15


class SphericalDirection(NamedTuple):
    theta: float
    phi: float


@dataclass(frozen=True)
class DensityMatrix2:
    """Bloch parametrization (t, x, y, z) of a 2x2 density matrix."""

    t: float
    x: float
    y: float
    z: float

    @property
    def radius(self) -> float:
        return float(np.sqrt(self.x**2 + self.y**2 + self.z**2))

    @property
    def matrix(self) -> np.ndarray:
        # (0,0) entry is t+z so that the up state (1,0) has z = +1/2.
        return np.array(
            [
                [self.t + self.z, self.x - 1j * self.y],
                [self.x + 1j * self.y, self.t - self.z],
            ]
        )

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.radius - 0.5) <= tol


def spinor_from_angles(theta: float, phi: float) -> np.ndarray:
    """Unit spinor (cos(theta/2), sin(theta/2) e^{i phi}) for a sphere point."""
    if not -_ANGLE_SLACK <= theta <= np.pi + _ANGLE_SLACK:
        raise ValueError(f"theta must lie in [0, pi], got {theta}")
    if not -_ANGLE_SLACK <= phi < 2.0 * np.pi + _ANGLE_SLACK:
        raise ValueError(f"phi must lie in [0, 2*pi), got {phi}")
    return np.array([np.cos(0.5 * theta), np.sin(0.5 * theta) * np.exp(1j * phi)])


def angles_from_spinor(s) -> SphericalDirection:
    """Sphere point of a single-qubit ray; left inverse of spinor_from_angles.

    Gauge: the first nonzero component is made real positive, and phi is
    reported as 0 at both poles.
    """
    arr = normalized(as_spinor(s, rank=1))
    if abs(arr[0]) > _POLE_TOL:
        arr = arr * (np.conj(arr[0]) / abs(arr[0]))
    else:
        arr = arr * (np.conj(arr[1]) / abs(arr[1]))
    theta = 2.0 * np.arctan2(abs(arr[1]), arr[0].real)
    phi = float(np.angle(arr[1])) if abs(arr[1]) > _POLE_TOL else 0.0
    if phi < 0.0:
        phi += 2.0 * np.pi
    if theta <= _POLE_TOL or theta >= np.pi - _POLE_TOL:
        phi = 0.0
    return SphericalDirection(float(theta), phi)


def bloch_from_spinor(s) -> DensityMatrix2:
    """Bloch image of a ray: x = Re(conj(a) b), y = Im(conj(a) b), z = (|a|^2-|b|^2)/2."""
    a, b = normalized(as_spinor(s, rank=1))
    cross = np.conj(a) * b
    return DensityMatrix2(
        t=0.5,
        x=float(cross.real),
        y=float(cross.imag),
        z=float(0.5 * (abs(a) ** 2 - abs(b) ** 2)),
    )


def density_eigenvalues(d: DensityMatrix2) -> tuple[float, float]:
    """Eigenvalue pair (t + r, t - r) with r the Bloch radius."""
    r = d.radius
    lo = d.t - r
    if lo < -1e-12:
        raise ValueError(f"not a density matrix: lambda_- = {lo} < 0")
    return (d.t + r, lo)
