"""Report builders shared by the CLI and the HTTP service.

Every report is a plain dict of JSON-serializable values carrying a
``schema_version`` field; given the same inputs and seed the output is
byte-for-byte deterministic.
"""

from __future__ import annotations

import numpy as np

from . import one_qubit, projective, three_qubit, two_qubit
from .spinor import as_spinor, normalized, random_state
from .statefile import state_to_doc
from .three_qubit import SloccClass

SCHEMA_VERSION = 1

CONSTRUCT_NAMES = ("singlet", "triplet", "ghz", "w", "veronese", "asym-line")


def classify_report(psi, tol: float = 1e-10) -> dict:
    """SLOCC class, tangle, local ranks and variety memberships of a 3-qubit state."""
    arr = normalized(as_spinor(psi, rank=3))
    result = three_qubit.slocc_classify(arr)
    r1, r2, r3 = result.local_ranks
    sym, asym = three_qubit.sym_asym_split(arr)
    sym_frac = float(np.linalg.norm(sym))
    memberships = {
        "fully_separable": result.local_ranks == (1, 1, 1),
        "qubit1_separable": r1 == 1,
        "qubit2_separable": r2 == 1,
        "qubit3_separable": r3 == 1,
        "symmetric_hyperplane": float(np.linalg.norm(asym)) <= tol,
        "asymmetric_hyperplane": sym_frac <= tol,
        "twisted_cubic": three_qubit.on_twisted_cubic(arr, tol),
        "tangent_developable": three_qubit.on_tangent_developable(arr, tol),
        "det_zero_quartic": abs(three_qubit.hyperdeterminant(arr)) <= tol,
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "qubits": 3,
        "class": result.slocc_class.value,
        "tau": result.tau,
        "local_ranks": list(result.local_ranks),
        "memberships": memberships,
    }


def invariants_report(psi, tol: float = 1e-10) -> dict:
    """Qubit-count-appropriate invariants of a 1-, 2- or 3-qubit state."""
    arr = as_spinor(psi)
    report = {
        "schema_version": SCHEMA_VERSION,
        "qubits": arr.ndim,
        "norm": float(np.linalg.norm(arr)),
    }
    if arr.ndim == 1:
        d = one_qubit.bloch_from_spinor(arr)
        lam_hi, lam_lo = one_qubit.density_eigenvalues(d)
        report.update(
            bloch=[d.x, d.y, d.z],
            bloch_radius=d.radius,
            eigenvalues=[lam_hi, lam_lo],
        )
    elif arr.ndim == 2:
        qv = two_qubit.quadric_value(normalized(arr))
        report.update(
            concurrence=two_qubit.concurrence(arr),
            quadric_value=[qv.real, qv.imag],
            on_product_quadric=abs(qv) <= tol,
            on_symmetric_conic=two_qubit.on_conic(arr),
        )
    else:
        unit = normalized(arr)
        det = three_qubit.hyperdeterminant(unit)
        report.update(
            tau=three_qubit.three_tangle(unit),
            hyperdeterminant=[det.real, det.imag],
            local_ranks=list(three_qubit.local_ranks(unit)),
        )
    return report


def distance_report(psi_a, psi_b) -> dict:
    """Geodesic angle and transition probability between two same-rank states."""
    angle = projective.fs_distance(psi_a, psi_b)
    return {
        "schema_version": SCHEMA_VERSION,
        "angle": angle,
        "transition_probability": projective.transition_probability(psi_a, psi_b),
    }


def bloch_report(psi) -> dict:
    """Bloch vector, radius, eigenvalues and sphere angles of a 1-qubit state."""
    d = one_qubit.bloch_from_spinor(as_spinor(psi, rank=1))
    lam_hi, lam_lo = one_qubit.density_eigenvalues(d)
    theta, phi = one_qubit.angles_from_spinor(psi)
    return {
        "schema_version": SCHEMA_VERSION,
        "bloch": [d.x, d.y, d.z],
        "radius": d.radius,
        "eigenvalues": [lam_hi, lam_lo],
        "theta": theta,
        "phi": phi,
    }


def factor_report(psi, tol: float = two_qubit.FACTOR_TOL) -> dict:
    """Qubit factors of a 2-qubit product state (raises NotProductStateError)."""
    f1, f2 = two_qubit.segre_factor(as_spinor(psi, rank=2), tol=tol)
    return {
        "schema_version": SCHEMA_VERSION,
        "factor1": state_to_doc(f1),
        "factor2": state_to_doc(f2),
    }


def orbit_report(psi, trials: int, seed: int) -> dict:
    """Class preservation and invariant drift over random local-operation orbits.

    Each trial applies one unit-determinant random invertible local
    operation, so the hyperdeterminant must be numerically preserved; the
    reported tau extrema track the zero set (tau itself is only a
    unitary invariant, not a SLOCC one).  For classes with vanishing
    hyperdeterminant the relative drift divides noise by noise; use
    tau_max there instead.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    arr = normalized(as_spinor(psi, rank=3))
    base = three_qubit.slocc_classify(arr)
    det0 = three_qubit.hyperdeterminant(arr)
    det_scale = max(abs(det0), 1e-300)
    rng = np.random.default_rng(seed)
    preserved = 0
    det_drift = 0.0
    tau_min, tau_max = np.inf, -np.inf
    for _ in range(trials):
        ops = three_qubit.random_slocc(rng, sl_normalize=True)
        moved = three_qubit.apply_slocc(arr, ops)
        result = three_qubit.slocc_classify(moved)
        if result.slocc_class is base.slocc_class:
            preserved += 1
        det_drift = max(
            det_drift, abs(three_qubit.hyperdeterminant(moved) - det0) / det_scale
        )
        tau_min = min(tau_min, result.tau)
        tau_max = max(tau_max, result.tau)
    return {
        "schema_version": SCHEMA_VERSION,
        "class": base.slocc_class.value,
        "tau_initial": base.tau,
        "trials": trials,
        "seed": seed,
        "preserved": preserved,
        "class_preserved": preserved == trials,
        "det_rel_drift_max": float(det_drift),
        "tau_min": float(tau_min),
        "tau_max": float(tau_max),
    }


def construct_state(
    name: str,
    theta: float = 0.0,
    phi: float = 0.0,
    party: int = 1,
    m: int = 0,
) -> np.ndarray:
    """Build one of the canonical states for a given spin axis.

    singlet ignores the direction; triplet takes m in {+1, 0, -1};
    asym-line places the given party against a singlet pair.
    """
    if name == "singlet":
        return two_qubit.singlet()
    direction = one_qubit.spinor_from_angles(theta, phi)
    if name == "triplet":
        return two_qubit.triplet(direction, m)
    if name == "ghz":
        return three_qubit.ghz_state(direction)
    if name == "w":
        return three_qubit.w_state(direction)
    if name == "veronese":
        return three_qubit.veronese3(direction)
    if name == "asym-line":
        return three_qubit.singlet_line_point(party, direction)
    raise ValueError(f"unknown construction {name!r}; choose from {CONSTRUCT_NAMES}")


def random_state_doc(qubits: int, seed: int) -> dict:
    return state_to_doc(random_state(qubits, seed))


SLOCC_LABELS = tuple(c.value for c in SloccClass)
