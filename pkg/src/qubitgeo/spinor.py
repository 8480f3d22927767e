"""Two-spinor algebra on small complex tensors.

States of 1, 2 and 3 qubits are stored as numpy complex arrays of shape
``(2,)``, ``(2, 2)`` and ``(2, 2, 2)``.  All indices are contravariant
("up") unless explicitly lowered.  The antisymmetric spinor is fixed as
``eps[0, 1] = +1`` with numerically identical raised and lowered
components, and lowering acts on the first epsilon index:

    psi_B = psi^A eps_{AB},        psi^A = eps^{AB} psi_B.

With this choice ``eps^{AB} eps_{CB} = delta^A_C``, so raising is the
exact inverse of lowering (no stray signs accumulate).
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

EPSILON = np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)

_VALID_SHAPES = {(2,), (2, 2), (2, 2, 2)}


def as_spinor(values, rank: int | None = None) -> np.ndarray:
    """Coerce input to a complex spinor array of shape (2,)*rank."""
    arr = np.asarray(values, dtype=complex)
    if arr.shape not in _VALID_SHAPES:
        raise ValueError(
            f"spinor shape must be (2,), (2, 2) or (2, 2, 2), got {arr.shape}"
        )
    if rank is not None and arr.ndim != rank:
        raise ValueError(f"expected a rank-{rank} spinor, got rank {arr.ndim}")
    if not np.isfinite(arr).all():
        raise ValueError("spinor components must be finite")
    return arr


def spinor_norm(s) -> float:
    """Euclidean norm of the component array."""
    return float(np.linalg.norm(np.asarray(s, dtype=complex)))


def _require_nonzero(arr: np.ndarray) -> np.ndarray:
    if not arr.any():
        raise ValueError("zero spinor is not a valid state")
    return arr


def lower_index(s, slot: int) -> np.ndarray:
    """Lower one index slot: psi_B = psi^A eps_{AB}."""
    arr = as_spinor(s)
    if not 0 <= slot < arr.ndim:
        raise ValueError(f"slot {slot} invalid for rank-{arr.ndim} spinor")
    out = np.tensordot(arr, EPSILON, axes=([slot], [0]))
    return np.moveaxis(out, -1, slot)


def raise_index(s, slot: int) -> np.ndarray:
    """Raise one index slot: psi^A = eps^{AB} psi_B.  Exact inverse of lower_index."""
    arr = as_spinor(s)
    if not 0 <= slot < arr.ndim:
        raise ValueError(f"slot {slot} invalid for rank-{arr.ndim} spinor")
    out = np.tensordot(arr, EPSILON, axes=([slot], [1]))
    return np.moveaxis(out, -1, slot)


def lower_all(s) -> np.ndarray:
    """Lower every index slot."""
    arr = as_spinor(s)
    for slot in range(arr.ndim):
        arr = lower_index(arr, slot)
    return arr


def contract(s, t, pairs: Sequence[tuple[int, int]]):
    """Einstein-sum two spinors over the given (slot_in_s, slot_in_t) pairs.

    The caller is responsible for pairing an upper index with a lower one;
    the summation itself is plain component contraction.  Returns a complex
    scalar when no free slots remain, otherwise an array with the free
    slots of ``s`` followed by the free slots of ``t``.
    """
    a = np.asarray(s, dtype=complex)
    b = np.asarray(t, dtype=complex)
    pairs = list(pairs)
    s_slots = [p[0] for p in pairs]
    t_slots = [p[1] for p in pairs]
    if len(set(s_slots)) != len(s_slots) or len(set(t_slots)) != len(t_slots):
        raise ValueError("each slot may appear in at most one pairing")
    if any(not 0 <= i < a.ndim for i in s_slots) or any(
        not 0 <= j < b.ndim for j in t_slots
    ):
        raise ValueError("pairing refers to slots beyond the spinor ranks")
    letters = iter("abcdefgh")
    sub_a = [next(letters) for _ in range(a.ndim)]
    sub_b = [next(letters) for _ in range(b.ndim)]
    for i, j in pairs:
        sub_b[j] = sub_a[i]
    free = [c for k, c in enumerate(sub_a) if k not in s_slots]
    free += [c for k, c in enumerate(sub_b) if k not in t_slots]
    spec = f"{''.join(sub_a)},{''.join(sub_b)}->{''.join(free)}"
    out = np.einsum(spec, a, b)
    return complex(out) if out.ndim == 0 else out


def symmetrize(s) -> np.ndarray:
    """Average over all permutations of the index slots (idempotent)."""
    arr = as_spinor(s)
    if arr.ndim == 1:
        return arr.copy()
    perms = list(permutations(range(arr.ndim)))
    return sum(np.transpose(arr, p) for p in perms) / len(perms)


def conjugate_state(s) -> np.ndarray:
    """Antipodal single-qubit state: (a, b) -> (-conj(b), conj(a)).

    Hermitian-orthogonal to the input and projectively involutive
    (applying it twice returns the input up to an overall sign).
    """
    arr = _require_nonzero(as_spinor(s, rank=1))
    return np.array([-np.conj(arr[1]), np.conj(arr[0])])


def inner_product(p, q) -> complex:
    """Hermitian inner product, conjugate-linear in the first argument."""
    a = as_spinor(p)
    b = as_spinor(q)
    if a.shape != b.shape:
        raise ValueError(f"rank mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def overlap_ratio(p, q) -> float:
    """|<p, q>|^2 / (<p, p> <q, q>), clipped into [0, 1]."""
    a = _require_nonzero(as_spinor(p))
    b = _require_nonzero(as_spinor(q))
    if a.shape != b.shape:
        raise ValueError(f"rank mismatch: {a.shape} vs {b.shape}")
    num = abs(np.vdot(a, b)) ** 2
    den = np.vdot(a, a).real * np.vdot(b, b).real
    return float(min(num / den, 1.0))


def projective_equal(p, q, tol: float = 1e-9) -> bool:
    """True when p and q represent the same ray: |<p,q>|^2 >= (1-tol) <p,p><q,q>."""
    return overlap_ratio(p, q) >= 1.0 - tol


def normalized(s) -> np.ndarray:
    """Unit-norm copy of a nonzero spinor."""
    arr = _require_nonzero(as_spinor(s))
    return arr / np.linalg.norm(arr)


def random_state(qubits: int, seed: int) -> np.ndarray:
    """Unit-norm state with independent standard-complex-normal components.

    Deterministic per seed; the distribution is invariant under unitaries.
    """
    if qubits not in (1, 2, 3):
        raise ValueError(f"qubits must be 1, 2 or 3, got {qubits}")
    rng = np.random.default_rng(seed)
    return random_state_from(rng, qubits)


def random_state_from(rng: np.random.Generator, qubits: int) -> np.ndarray:
    """Draw one unit-norm state from an existing generator."""
    if qubits not in (1, 2, 3):
        raise ValueError(f"qubits must be 1, 2 or 3, got {qubits}")
    shape = (2,) * qubits
    v = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return v / np.linalg.norm(v)


class ProjectivePoint:
    """A ray through the origin: a nonzero spinor up to complex rescaling."""

    __slots__ = ("rep", "tol")

    def __init__(self, rep, tol: float = 1e-9):
        self.rep = _require_nonzero(as_spinor(rep))
        self.tol = float(tol)

    @property
    def rank(self) -> int:
        return self.rep.ndim

    def normalized(self) -> np.ndarray:
        return self.rep / np.linalg.norm(self.rep)

    def __eq__(self, other) -> bool:
        rep = other.rep if isinstance(other, ProjectivePoint) else other
        return projective_equal(self.rep, rep, self.tol)

    __hash__ = None  # tolerance-based equality cannot hash consistently

    def __repr__(self) -> str:
        return f"ProjectivePoint({self.normalized().tolist()!r})"
