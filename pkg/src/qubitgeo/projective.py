"""Fubini-Study geometry and projective incidence constructions.

Distances are geodesic angles on projective space, with
``cos^2(theta/2)`` equal to the transition probability between the rays.
Lines are stored by two representative points; the line/quadric solver
works on the restriction of a symmetric bilinear form to such a line.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .spinor import as_spinor, inner_product, normalized, projective_equal

TANGENCY_REL_TOL = 1e-12
LINE_IN_QUADRIC_REL_TOL = 1e-12


class LineInQuadricError(ValueError):
    """The whole line lies on the quadric; there is no two-point intersection."""


def fs_distance(p, q) -> float:
    """Geodesic angle between two rays, in [0, pi].

    Nearly coincident rays are handled through the orthogonal residual of
    one against the other: the direct arccos of the overlap cannot resolve
    angles below the square root of machine precision.
    """
    a = as_spinor(p)
    b = as_spinor(q)
    na = np.vdot(a, a).real
    nb = np.vdot(b, b).real
    if na == 0.0 or nb == 0.0:
        raise ValueError("zero spinor has no projective image")
    a = a / np.sqrt(na)
    b = b / np.sqrt(nb)
    overlap = np.vdot(a, b)
    if abs(overlap) ** 2 < 0.5:
        return float(2.0 * np.arccos(min(abs(overlap), 1.0)))
    residual = b - a * overlap
    return float(2.0 * np.arcsin(min(np.linalg.norm(residual), 1.0)))


def transition_probability(p, q) -> float:
    """cos^2(theta/2) for the geodesic angle theta; equals |normalized overlap|^2."""
    return float(np.cos(0.5 * fs_distance(p, q)) ** 2)


@dataclass(frozen=True)
class Hyperplane:
    """States with vanishing Hermitian overlap against a fixed covector."""

    covector: np.ndarray

    def contains(self, state, tol: float = 1e-10) -> bool:
        s = as_spinor(state)
        if s.shape != self.covector.shape:
            raise ValueError("rank mismatch between hyperplane and state")
        val = abs(np.sum(self.covector * s))
        scale = np.linalg.norm(self.covector) * np.linalg.norm(s)
        return bool(val <= tol * scale)


def hermitian_hyperplane(p) -> Hyperplane:
    """Hyperplane of all states orthogonal to p; p itself never lies on it."""
    arr = as_spinor(p)
    if not arr.any():
        raise ValueError("zero spinor has no conjugate hyperplane")
    return Hyperplane(covector=np.conj(arr))


@dataclass(frozen=True)
class ProjectiveLine:
    """Line a*p + b*q through two projectively distinct points of equal rank."""

    p: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", as_spinor(self.p))
        object.__setattr__(self, "q", as_spinor(self.q))
        if self.p.shape != self.q.shape:
            raise ValueError("line endpoints must have equal rank")
        if projective_equal(self.p, self.q):
            raise ValueError("line endpoints are projectively identical")

    def point(self, a: complex, b: complex) -> np.ndarray:
        return a * self.p + b * self.q


BilinearForm = Callable[[np.ndarray, np.ndarray], complex]


def line_quadric_intersect(
    line: ProjectiveLine, form: BilinearForm
) -> tuple[np.ndarray, np.ndarray, bool]:
    """Intersect a line with the quadric {x : form(x, x) = 0}.

    Solves q_pp a^2 + 2 q_pq ab + q_qq b^2 = 0 for (a : b) and returns the
    two intersection points (unit-normalized) plus a tangency flag; a double
    root is reported as the same point twice.  Raises LineInQuadricError
    when the restricted form vanishes identically.
    """
    p = normalized(line.p)
    q = normalized(line.q)
    qpp = complex(form(p, p))
    qpq = 0.5 * (complex(form(p, q)) + complex(form(q, p)))
    qqq = complex(form(q, q))

    scale = max(abs(qpp), abs(qpq), abs(qqq))
    if scale <= LINE_IN_QUADRIC_REL_TOL:
        raise LineInQuadricError("line is contained in the quadric")

    disc = qpq * qpq - qpp * qqq
    tangent = abs(disc) <= TANGENCY_REL_TOL * scale * scale
    sqrt_disc = 0.0 if tangent else np.sqrt(disc)

    roots = []
    for sign in (+1.0, -1.0):
        u = -qpq + sign * sqrt_disc
        # (u, qpp) and (qqq, -qpq - sign*sqrt_disc) are the same projective
        # root; pick the better-conditioned representation.
        alt = -qpq - sign * sqrt_disc
        if max(abs(u), abs(qpp)) >= max(abs(qqq), abs(alt)):
            a, b = u, qpp
        else:
            a, b = qqq, alt
        roots.append(normalized(line.point(a, b)))
    return roots[0], roots[1], tangent


def fs_metric_square(p, dp) -> float:
    """Squared line element ds^2 for a ray at p moved along dp.

    ds^2 = 4 (<p,p><dp,dp> - |<p,dp>|^2) / <p,p>^2; invariant under the
    gauge shift dp -> dp + lambda*p.
    """
    a = as_spinor(p)
    d = as_spinor(dp)
    if a.shape != d.shape:
        raise ValueError("rank mismatch between point and perturbation")
    npp = np.vdot(a, a).real
    if npp == 0.0:
        raise ValueError("zero spinor has no projective image")
    ndd = np.vdot(d, d).real
    cross = abs(np.vdot(a, d)) ** 2
    return float(4.0 * max(npp * ndd - cross, 0.0) / (npp * npp))


def metric_finite_difference_check(p, dp, h: float) -> float:
    """Relative deviation of fs_distance^2 from h^2 ds^2 at step h.

    The step is taken along the gauge-orthogonal part of dp (components of
    dp along p move the representative, not the ray, and would contaminate
    the one-sided difference at first order in h).  Both sides vanish for
    dp proportional to p, in which case 0 is returned.
    """
    if h == 0.0:
        raise ValueError("step h must be nonzero")
    a = as_spinor(p)
    d = as_spinor(dp)
    dp_perp = d - a * (np.vdot(a, d) / np.vdot(a, a))
    analytic = h * h * fs_metric_square(a, d)
    stepped = fs_distance(a, a + h * dp_perp) ** 2
    top = max(analytic, stepped)
    if top < 1e-30:
        return 0.0
    return float(abs(stepped - analytic) / top)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    u, r = np.linalg.qr(z)
    return u * (np.diagonal(r) / np.abs(np.diagonal(r)))


def apply_unitary(u: np.ndarray, s) -> np.ndarray:
    """Apply a global unitary on the flattened state, preserving the shape."""
    arr = as_spinor(s)
    return (u @ arr.reshape(-1)).reshape(arr.shape)
