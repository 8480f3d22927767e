"""Two-qubit state geometry: product quadric, concurrence and spin constructions.

A two-qubit state psi^{AB} is disentangled exactly when the full epsilon
contraction eps_{AC} eps_{BD} psi^{AB} psi^{CD} vanishes, i.e. when the
2x2 component matrix has rank one.  The modulus of that contraction,
normalized by the squared norm, is the concurrence.
"""

from __future__ import annotations

import numpy as np

from .projective import ProjectiveLine, line_quadric_intersect
from .spinor import (
    EPSILON,
    as_spinor,
    conjugate_state,
    lower_all,
    normalized,
)

FACTOR_TOL = 1e-8


class NotProductStateError(ValueError):
    """Factorization refused: the state is entangled beyond tolerance."""


def quadric_form(phi, psi) -> complex:
    """Symmetric bilinear form eps_{AC} eps_{BD} phi^{AB} psi^{CD}."""
    a = as_spinor(phi, rank=2)
    b = as_spinor(psi, rank=2)
    return complex(np.sum(a * lower_all(b)))


def quadric_value(psi) -> complex:
    """Value of the quadric form on (psi, psi); equals 2(ad - bc) componentwise."""
    return quadric_form(psi, psi)


def concurrence(psi) -> float:
    """|quadric value| / <psi, psi>: 0 on products, 1 on maximally entangled states."""
    arr = as_spinor(psi, rank=2)
    n2 = np.vdot(arr, arr).real
    if n2 == 0.0:
        raise ValueError("zero spinor has no concurrence")
    return float(abs(quadric_value(arr)) / n2)


def segre_embed(factor1, factor2) -> np.ndarray:
    """Product state psi^{AB} = phi1^A phi2^B; lies on the quadric."""
    f1 = as_spinor(factor1, rank=1)
    f2 = as_spinor(factor2, rank=1)
    if not f1.any() or not f2.any():
        raise ValueError("product factors must be nonzero")
    return np.outer(f1, f2)


def segre_factor(psi, tol: float = FACTOR_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Split a product state into its two unit-norm qubit factors.

    Refuses (rather than approximates) when the concurrence exceeds ``tol``.
    Extraction takes the dominant row of the 2x2 matrix as the second
    factor and projects to recover the first.
    """
    arr = normalized(as_spinor(psi, rank=2))
    if concurrence(arr) >= tol:
        raise NotProductStateError(
            f"not a product state: concurrence {concurrence(arr):.3e} >= {tol:.1e}"
        )
    row = int(np.argmax(np.linalg.norm(arr, axis=1)))
    f2 = arr[row] / np.linalg.norm(arr[row])
    f1 = arr @ np.conj(f2)
    return f1 / np.linalg.norm(f1), f2


def singlet() -> np.ndarray:
    """Total-spin-zero state eps^{AB}/sqrt(2); concurrence 1, antisymmetric."""
    return EPSILON / np.sqrt(2.0)


def triplet(psi, m: int) -> np.ndarray:
    """Unit-norm spin-one state along the axis of psi, for m in {+1, 0, -1}.

    m=+1 is psi psi, m=-1 the same on the antipodal spinor, and m=0 the
    normalized symmetrization of psi with its antipode.
    """
    v = normalized(as_spinor(psi, rank=1))
    vb = conjugate_state(v)
    if m == 1:
        return np.outer(v, v)
    if m == -1:
        return np.outer(vb, vb)
    if m == 0:
        return (np.outer(v, vb) + np.outer(vb, v)) / np.sqrt(2.0)
    raise ValueError(f"m must be +1, 0 or -1, got {m}")


def measurement_outcomes(state, direction, tol: float = 1e-9) -> tuple[np.ndarray, np.ndarray]:
    """Disentangled outcomes of an axis measurement on a singlet/triplet-0 mix.

    The input must lie on the line joining the singlet and the m=0 triplet
    for the given axis; the two intersection points of that line with the
    product quadric are returned (projectively psi psi-bar and psi-bar psi).
    """
    arr = normalized(as_spinor(state, rank=2))
    v = normalized(as_spinor(direction, rank=1))
    z = singlet()
    t0 = triplet(v, 0)
    # z and t0 are orthonormal, so line membership is a projection residual.
    residual = arr - np.vdot(z, arr) * z - np.vdot(t0, arr) * t0
    if np.linalg.norm(residual) > tol:
        raise ValueError("state does not lie on the singlet/triplet-0 line")
    x1, x2, _ = line_quadric_intersect(ProjectiveLine(z, t0), quadric_form)
    return x1, x2


def on_conic(psi, tol: float = 1e-10) -> bool:
    """True for symmetric product states (the Veronese conic v -> v v)."""
    arr = as_spinor(psi, rank=2)
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        return False
    antisym = 0.5 * (arr - arr.T)
    if np.linalg.norm(antisym) > tol * norm:
        return False
    return abs(quadric_value(arr)) <= tol * norm * norm
