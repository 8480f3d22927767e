"""Three-qubit state geometry: symmetry split, contact varieties, the Cayley
hyperdeterminant, three-tangle and the six-class SLOCC classifier.

States live in the projectivized space of 2x2x2 complex tensors.  The
fully separable states form a three-fold; the states with one particle
split off form three four-folds; the GHZ class is cut out by a nonzero
hyperdeterminant, and everything else (W class included) lies on the
quartic where it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

import numpy as np

from .spinor import (
    EPSILON,
    as_spinor,
    conjugate_state,
    lower_all,
    lower_index,
    normalized,
    projective_equal,
    raise_index,
    symmetrize,
)

RANK_REL_TOL = 1e-8
TANGLE_TOL = 1e-8
SYMMETRY_REL_TOL = 1e-10
MEMBERSHIP_TOL = 1e-10


class SloccClass(Enum):
    SEPARABLE = "Separable"
    BISEP_A = "BisepA"
    BISEP_B = "BisepB"
    BISEP_C = "BisepC"
    W = "W"
    GHZ = "GHZ"


_BISEP_BY_PARTY = {1: SloccClass.BISEP_A, 2: SloccClass.BISEP_B, 3: SloccClass.BISEP_C}


@dataclass(frozen=True)
class SloccResult:
    slocc_class: SloccClass
    local_ranks: tuple[int, int, int]
    tau: float


class AsymTriple(NamedTuple):
    """Qubit spinors generating a spin-1/2 state, gauge-fixed to sum to zero."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray


def sym_asym_split(psi) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal split into the totally symmetric part and its complement."""
    arr = as_spinor(psi, rank=3)
    sym = symmetrize(arr)
    return sym, arr - sym


def _epsilon_term(v: np.ndarray, party: int) -> np.ndarray:
    """v on the given party tensored with the antisymmetric pair on the rest."""
    if party == 1:
        return np.einsum("a,bc->abc", v, EPSILON)
    if party == 2:
        return np.einsum("b,ca->abc", v, EPSILON)
    if party == 3:
        return np.einsum("c,ab->abc", v, EPSILON)
    raise ValueError(f"party must be 1, 2 or 3, got {party}")


def asym_compose(alpha, beta, gamma) -> np.ndarray:
    """Spin-1/2 state alpha^A eps^{BC} + beta^B eps^{CA} + gamma^C eps^{AB}.

    The map kills (v, v, v) triples identically (the epsilon Jacobi
    identity), so no gauge needs fixing on input.
    """
    a = as_spinor(alpha, rank=1)
    b = as_spinor(beta, rank=1)
    c = as_spinor(gamma, rank=1)
    return _epsilon_term(a, 1) + _epsilon_term(b, 2) + _epsilon_term(c, 3)


_ASYM_BASIS = np.stack(
    [
        (_epsilon_term(e, party) - _epsilon_term(e, 3)).reshape(-1)
        for party in (1, 2)
        for e in (np.array([1.0, 0.0], dtype=complex), np.array([0.0, 1.0], dtype=complex))
    ]
).T


def asym_extract(psi, tol: float = SYMMETRY_REL_TOL) -> AsymTriple:
    """Unique gauge-fixed (alpha, beta, gamma) with alpha+beta+gamma = 0.

    Requires the symmetric part of the input to be negligible; the
    coefficients are recovered by least squares against the gauge-fixed
    generating set (exact on the spin-1/2 subspace).
    """
    arr = as_spinor(psi, rank=3)
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        raise ValueError("zero spinor")
    if np.linalg.norm(symmetrize(arr)) > tol * norm:
        raise ValueError("state has a non-negligible symmetric part")
    coeff, *_ = np.linalg.lstsq(_ASYM_BASIS, arr.reshape(-1), rcond=None)
    alpha = coeff[0:2]
    beta = coeff[2:4]
    return AsymTriple(alpha, beta, -alpha - beta)


def singlet_line_point(party: int, alpha) -> np.ndarray:
    """Unit state with the given party in state alpha and the rest a singlet."""
    v = normalized(as_spinor(alpha, rank=1))
    state = _epsilon_term(v, party)
    return state / np.linalg.norm(state)


def veronese3(psi) -> np.ndarray:
    """Symmetric rank-one cube v v v of a qubit state (unit-normalized)."""
    v = normalized(as_spinor(psi, rank=1))
    return np.einsum("a,b,c->abc", v, v, v)


def quadratic_covariant(psi) -> np.ndarray:
    """Symmetric 2x2 tensor contracting the symmetric part with itself.

    Q_{AB} pairs the two trailing slots of one lowered copy against the
    other; it vanishes exactly on symmetric rank-one cubes.
    """
    sym = symmetrize(as_spinor(psi, rank=3))
    low0 = lower_index(sym, 0)
    low_all = lower_all(sym)
    return np.einsum("acd,bcd->ab", low0, low_all)


def covariant_square(q: np.ndarray) -> complex:
    """Full contraction Q_{AB} Q^{AB} of a 2x2 covariant."""
    raised = raise_index(raise_index(q, 0), 1)
    return complex(np.sum(q * raised))


def _is_symmetric(arr: np.ndarray, tol: float) -> bool:
    norm = np.linalg.norm(arr)
    return norm > 0.0 and np.linalg.norm(arr - symmetrize(arr)) <= tol * norm


def on_twisted_cubic(psi, tol: float = MEMBERSHIP_TOL) -> bool:
    """True for symmetric rank-one cubes: the covariant vanishes identically."""
    arr = as_spinor(psi, rank=3)
    if not _is_symmetric(arr, SYMMETRY_REL_TOL):
        return False
    scale = np.linalg.norm(arr) ** 2
    return bool(np.abs(quadratic_covariant(arr)).max() <= tol * scale)


def on_tangent_developable(psi, tol: float = MEMBERSHIP_TOL) -> bool:
    """True on the surface swept by tangent lines of the rank-one curve."""
    arr = as_spinor(psi, rank=3)
    if not _is_symmetric(arr, SYMMETRY_REL_TOL):
        return False
    q = quadratic_covariant(arr)
    scale = np.linalg.norm(q) ** 2 + np.linalg.norm(arr) ** 4
    return bool(abs(covariant_square(q)) <= tol * scale)


def tangent_line_membership(psi, alpha, tol: float = MEMBERSHIP_TOL) -> bool:
    """Membership of a symmetric state in the tangent line at alpha^3.

    The tangent line at the cube of alpha is annihilated by contracting the
    lowered state with alpha on two slots; both components must vanish.
    """
    arr = as_spinor(psi, rank=3)
    a = as_spinor(alpha, rank=1)
    if not a.any():
        raise ValueError("zero base spinor")
    if not _is_symmetric(arr, SYMMETRY_REL_TOL):
        return False
    resid = np.einsum("abc,b,c->a", lower_all(arr), a, a)
    scale = np.linalg.norm(arr) * np.linalg.norm(a) ** 2
    return bool(np.abs(resid).max() <= tol * scale)


def osculating_plane_membership(psi, alpha, tol: float = MEMBERSHIP_TOL) -> bool:
    """Membership of a symmetric state in the osculating plane at alpha^3."""
    arr = as_spinor(psi, rank=3)
    a = as_spinor(alpha, rank=1)
    if not a.any():
        raise ValueError("zero base spinor")
    if not _is_symmetric(arr, SYMMETRY_REL_TOL):
        return False
    resid = np.einsum("abc,a,b,c->", lower_all(arr), a, a, a)
    scale = np.linalg.norm(arr) * np.linalg.norm(a) ** 3
    return bool(abs(resid) <= tol * scale)


def tangent_osculating_intersection(alpha, beta) -> np.ndarray:
    """The unique symmetric state on tangent(alpha^3) meeting osculating(beta^3).

    For beta the antipode of alpha this is the symmetrized alpha alpha beta
    state.  Projectively equal base points are rejected: there the tangent
    line lies inside the osculating plane and the intersection degenerates
    to the cube point itself.
    """
    a = normalized(as_spinor(alpha, rank=1))
    b = normalized(as_spinor(beta, rank=1))
    if projective_equal(a, b):
        raise ValueError("base points coincide; intersection degenerates to the cube point")
    cube = np.einsum("a,b,c->abc", a, a, a)
    probe = symmetrize(np.einsum("a,b,c->abc", a, a, conjugate_state(a)))
    low_bbb = np.einsum("abc,a,b,c->", lower_all(cube), b, b, b)
    low_probe = np.einsum("abc,a,b,c->", lower_all(probe), b, b, b)
    state = low_probe * cube - low_bbb * probe
    return state / np.linalg.norm(state)


def ghz_state(psi) -> np.ndarray:
    """Unit GHZ-type state (v v v + vbar vbar vbar)/sqrt(2) along the axis of psi."""
    v = normalized(as_spinor(psi, rank=1))
    vb = conjugate_state(v)
    cube = np.einsum("a,b,c->abc", v, v, v)
    cube_bar = np.einsum("a,b,c->abc", vb, vb, vb)
    return (cube + cube_bar) / np.sqrt(2.0)


def w_state(psi) -> np.ndarray:
    """Unit W-type state (v v vbar + v vbar v + vbar v v)/sqrt(3)."""
    v = normalized(as_spinor(psi, rank=1))
    vb = conjugate_state(v)
    state = (
        np.einsum("a,b,c->abc", v, v, vb)
        + np.einsum("a,b,c->abc", v, vb, v)
        + np.einsum("a,b,c->abc", vb, v, v)
    )
    return state / np.sqrt(3.0)


def hyperdeterminant(psi) -> complex:
    """Cayley hyperdeterminant of the 2x2x2 component tensor.

    Written in the monomial grouping d1 - 2 d2 + 4 d3; transforms with
    weight (det A det B det C)^2 under local operations, hence is exactly
    invariant under SL(2)xSL(2)xSL(2).
    """
    a = as_spinor(psi, rank=3)
    d1 = (
        a[0, 0, 0] ** 2 * a[1, 1, 1] ** 2
        + a[0, 0, 1] ** 2 * a[1, 1, 0] ** 2
        + a[0, 1, 0] ** 2 * a[1, 0, 1] ** 2
        + a[0, 1, 1] ** 2 * a[1, 0, 0] ** 2
    )
    d2 = (
        a[0, 0, 0] * a[0, 0, 1] * a[1, 1, 0] * a[1, 1, 1]
        + a[0, 0, 0] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 1]
        + a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 0] * a[1, 1, 1]
        + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 1] * a[1, 1, 0]
        + a[0, 0, 1] * a[0, 1, 1] * a[1, 1, 0] * a[1, 0, 0]
        + a[0, 1, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 0, 0]
    )
    d3 = (
        a[0, 0, 0] * a[0, 1, 1] * a[1, 0, 1] * a[1, 1, 0]
        + a[0, 0, 1] * a[0, 1, 0] * a[1, 0, 0] * a[1, 1, 1]
    )
    return complex(d1 - 2.0 * d2 + 4.0 * d3)


def three_tangle(psi) -> float:
    """4 |Det(psi)| / <psi, psi>^2: 1 on GHZ, 0 outside the GHZ class."""
    arr = as_spinor(psi, rank=3)
    n2 = np.vdot(arr, arr).real
    if n2 == 0.0:
        raise ValueError("zero spinor has no three-tangle")
    return float(4.0 * abs(hyperdeterminant(arr)) / (n2 * n2))


def quartic_invariant(psi) -> complex:
    """Degree-four epsilon contraction whose zero set is the Det = 0 quartic.

    Contracts the lowered state against itself over the second and third
    particle slots, then squares the resulting 2x2 covariant with epsilons.
    Proportional to the hyperdeterminant (the degree-four invariant is
    unique up to scale); the constant is checked by tests, never assumed.
    """
    arr = as_spinor(psi, rank=3)
    low0 = lower_index(arr, 0)
    low_all = lower_all(arr)
    t = np.einsum("abc,dbc->ad", low0, low_all)
    raised = raise_index(raise_index(t, 0), 1)
    return complex(np.sum(t * raised))


def tangent_plane_form(alpha, beta, gamma, x, y, z) -> np.ndarray:
    """Generic point of the tangent 3-plane to the product variety at alpha beta gamma.

    x beta gamma + alpha y gamma + alpha beta z; the hyperdeterminant
    vanishes identically on states of this form.
    """
    a = as_spinor(alpha, rank=1)
    b = as_spinor(beta, rank=1)
    c = as_spinor(gamma, rank=1)
    if not (a.any() and b.any() and c.any()):
        raise ValueError("base spinors must be nonzero")
    xs = as_spinor(x, rank=1)
    ys = as_spinor(y, rank=1)
    zs = as_spinor(z, rank=1)
    return (
        np.einsum("a,b,c->abc", xs, b, c)
        + np.einsum("a,b,c->abc", a, ys, c)
        + np.einsum("a,b,c->abc", a, b, zs)
    )


def local_ranks(psi, rel_tol: float = RANK_REL_TOL) -> tuple[int, int, int]:
    """Rank (1 or 2) of the 2x4 flattening separating each qubit in turn."""
    arr = as_spinor(psi, rank=3)
    if not arr.any():
        raise ValueError("zero spinor has no local ranks")
    ranks = []
    for axis in range(3):
        flat = np.moveaxis(arr, axis, 0).reshape(2, 4)
        s = np.linalg.svd(flat, compute_uv=False)
        ranks.append(1 if s[1] <= rel_tol * s[0] else 2)
    return tuple(ranks)


def slocc_classify(
    psi, rank_tol: float = RANK_REL_TOL, tangle_tol: float = TANGLE_TOL
) -> SloccResult:
    """Classify into Separable / BisepA / BisepB / BisepC / W / GHZ.

    All three local ranks 1 means fully separable; exactly one rank 1
    means that party factors out; full ranks split into GHZ (nonzero
    three-tangle) and W (vanishing).  Two ranks 1 with one rank 2 cannot
    occur and signals numerical breakdown.
    """
    ranks = local_ranks(psi, rank_tol)
    tau = three_tangle(psi)
    ones = [i for i, r in enumerate(ranks) if r == 1]
    if len(ones) == 3:
        label = SloccClass.SEPARABLE
    elif len(ones) == 1:
        label = _BISEP_BY_PARTY[ones[0] + 1]
    elif len(ones) == 0:
        label = SloccClass.GHZ if tau > tangle_tol else SloccClass.W
    else:
        raise RuntimeError(
            f"inconsistent local rank pattern {ranks}: numerical breakdown"
        )
    return SloccResult(label, ranks, tau)


def apply_slocc(psi, ops: Sequence[np.ndarray]) -> np.ndarray:
    """Act with (A (x) B (x) C) on the state; each op must be invertible."""
    arr = as_spinor(psi, rank=3)
    mats = [np.asarray(op, dtype=complex) for op in ops]
    if len(mats) != 3 or any(m.shape != (2, 2) for m in mats):
        raise ValueError("ops must be three 2x2 complex matrices")
    for m in mats:
        scale = np.abs(m).max()
        if scale == 0.0 or abs(np.linalg.det(m)) <= 1e-14 * scale * scale:
            raise ValueError("singular local operation")
    return np.einsum("ai,bj,ck,ijk->abc", mats[0], mats[1], mats[2], arr)


def random_slocc(
    seed: int | np.random.Generator, sl_normalize: bool = False
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Three random invertible 2x2 matrices (complex-normal entries).

    Draws with |det| <= 1e-6 are rejected and resampled; with
    ``sl_normalize`` each matrix is scaled to unit determinant.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    mats = []
    for _ in range(3):
        while True:
            m = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            det = np.linalg.det(m)
            if abs(det) > 1e-6:
                break
        if sl_normalize:
            m = m / np.sqrt(det)
        mats.append(m)
    return tuple(mats)
