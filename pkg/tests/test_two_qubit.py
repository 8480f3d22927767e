import numpy as np
import pytest

from qubitgeo.one_qubit import angles_from_spinor, spinor_from_angles
from qubitgeo.projective import random_unitary
from qubitgeo.spinor import (
    conjugate_state,
    inner_product,
    projective_equal,
    random_state,
    symmetrize,
)
from qubitgeo.two_qubit import (
    NotProductStateError,
    concurrence,
    measurement_outcomes,
    on_conic,
    quadric_form,
    quadric_value,
    segre_embed,
    segre_factor,
    singlet,
    triplet,
)

UP = np.array([1.0, 0.0], dtype=complex)
DOWN = np.array([0.0, 1.0], dtype=complex)


def _concurrence_oracle(psi):
    a = np.asarray(psi, dtype=complex)
    return 2.0 * abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]) / np.vdot(a, a).real


def test_quadric_value_examples():
    assert quadric_value(segre_embed(UP, DOWN)) == 0.0
    assert abs(abs(quadric_value(singlet())) - 1.0) < 1e-15
    rng = np.random.default_rng(1)
    for _ in range(100):
        prod = segre_embed(
            random_state(1, int(rng.integers(1 << 30))),
            random_state(1, int(rng.integers(1 << 30))),
        )
        assert abs(quadric_value(prod)) < 1e-12


def test_quadric_form_symmetric():
    a = random_state(2, 1)
    b = random_state(2, 2)
    assert quadric_form(a, b) == pytest.approx(quadric_form(b, a), abs=1e-15)


def test_concurrence_reference_values():
    assert concurrence(segre_embed(UP, UP)) == 0.0
    bell = np.array([[1.0, 0.0], [0.0, 1.0]]) / np.sqrt(2.0)
    assert concurrence(bell) == pytest.approx(1.0)
    skew = np.array([[1.0, 0.0], [0.0, 0.5]])
    assert concurrence(skew) == pytest.approx(0.8)
    assert concurrence(singlet()) == pytest.approx(1.0)


def test_concurrence_matches_brute_force_oracle():
    for seed in range(200):
        psi = random_state(2, seed)
        assert concurrence(psi) == pytest.approx(_concurrence_oracle(psi), abs=1e-12)


def test_concurrence_local_unitary_invariance():
    rng = np.random.default_rng(2)
    for _ in range(200):
        psi = random_state(2, int(rng.integers(1 << 30)))
        u1 = random_unitary(2, rng)
        u2 = random_unitary(2, rng)
        moved = np.einsum("ai,bj,ij->ab", u1, u2, psi)
        assert abs(concurrence(moved) - concurrence(psi)) < 1e-10


def test_quadric_zero_preserved_by_invertible_locals():
    rng = np.random.default_rng(3)
    for _ in range(50):
        prod = segre_embed(
            random_state(1, int(rng.integers(1 << 30))),
            random_state(1, int(rng.integers(1 << 30))),
        )
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        moved = np.einsum("ai,bj,ij->ab", a, b, prod)
        assert abs(quadric_value(moved)) < 1e-10 * np.linalg.norm(moved) ** 2


def test_segre_embed_basis():
    state = segre_embed(UP, DOWN)
    expected = np.zeros((2, 2), dtype=complex)
    expected[0, 1] = 1.0
    assert np.array_equal(state, expected)
    with pytest.raises(ValueError):
        segre_embed(np.zeros(2), UP)


def test_segre_embed_from_angle_pairs():
    f1 = spinor_from_angles(0.7, 1.1)
    f2 = spinor_from_angles(2.1, 5.3)
    g1, g2 = segre_factor(segre_embed(f1, f2))
    assert angles_from_spinor(g1) == pytest.approx(angles_from_spinor(f1), abs=1e-12)
    assert angles_from_spinor(g2) == pytest.approx(angles_from_spinor(f2), abs=1e-12)


def test_segre_factor_round_trip():
    rng = np.random.default_rng(4)
    for _ in range(1000):
        f1 = random_state(1, int(rng.integers(1 << 30)))
        f2 = random_state(1, int(rng.integers(1 << 30)))
        psi = segre_embed(f1, f2)
        g1, g2 = segre_factor(psi)
        assert projective_equal(segre_embed(g1, g2), psi, 1e-12)
        assert projective_equal(g1, f1)
        assert projective_equal(g2, f2)


def test_segre_factor_refuses_entangled_input():
    with pytest.raises(NotProductStateError):
        segre_factor(singlet())


def test_singlet_components_and_invariance():
    z = singlet()
    s2 = 1.0 / np.sqrt(2.0)
    assert z[0, 1] == pytest.approx(s2)
    assert z[1, 0] == pytest.approx(-s2)
    assert z[0, 0] == z[1, 1] == 0.0
    assert np.abs(symmetrize(z)).max() < 1e-15
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = random_unitary(2, rng)
        moved = np.einsum("ai,bj,ij->ab", u, u, z)
        assert projective_equal(moved, z, 1e-12)


def test_triplet_zero_along_z():
    t0 = triplet(UP, 0)
    expected = np.zeros((2, 2), dtype=complex)
    expected[0, 1] = expected[1, 0] = 1.0 / np.sqrt(2.0)
    assert np.allclose(t0, expected, atol=1e-15)


def test_triplet_extremes_on_conic():
    v = random_state(1, 77)
    assert on_conic(triplet(v, +1))
    assert on_conic(triplet(v, -1))
    assert not on_conic(triplet(v, 0))
    with pytest.raises(ValueError):
        triplet(v, 2)


def test_triplet_zero_on_conjugate_planes():
    # the m=0 state lies on the Hermitian hyperplanes of both m=+1 and m=-1
    for seed in range(20):
        v = random_state(1, seed)
        t0 = triplet(v, 0)
        assert abs(inner_product(triplet(v, +1), t0)) < 1e-12
        assert abs(inner_product(triplet(v, -1), t0)) < 1e-12


def test_measurement_outcomes_z_axis():
    mix = 0.3 * singlet() + (0.6 + 0.2j) * triplet(UP, 0)
    x1, x2 = measurement_outcomes(mix, UP)
    results = {tuple(np.argwhere(np.abs(x) > 0.5)[0]) for x in (x1, x2)}
    assert results == {(0, 1), (1, 0)}


def test_measurement_outcomes_random_directions():
    rng = np.random.default_rng(7)
    for _ in range(100):
        v = random_state(1, int(rng.integers(1 << 30)))
        coeffs = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        state = coeffs[0] * singlet() + coeffs[1] * triplet(v, 0)
        x1, x2 = measurement_outcomes(state, v)
        expected = {
            "up_down": segre_embed(v, conjugate_state(v)),
            "down_up": segre_embed(conjugate_state(v), v),
        }
        matches = {
            name
            for name, target in expected.items()
            if projective_equal(x1, target, 1e-9) or projective_equal(x2, target, 1e-9)
        }
        assert matches == {"up_down", "down_up"}


def test_measurement_outcomes_singlet_endpoint():
    x1, x2 = measurement_outcomes(singlet(), UP)
    results = {tuple(np.argwhere(np.abs(x) > 0.5)[0]) for x in (x1, x2)}
    assert results == {(0, 1), (1, 0)}


def test_measurement_outcomes_rejects_off_line_states():
    with pytest.raises(ValueError):
        measurement_outcomes(segre_embed(UP, UP), UP)


def test_on_conic_classification():
    v = random_state(1, 123)
    assert on_conic(segre_embed(v, v))
    assert not on_conic(singlet())
    assert not on_conic(triplet(v, 0))


def test_conic_membership_means_equal_factors():
    rng = np.random.default_rng(8)
    for _ in range(50):
        v = random_state(1, int(rng.integers(1 << 30)))
        psi = segre_embed(v, v)
        assert on_conic(psi)
        f1, f2 = segre_factor(psi)
        assert projective_equal(f1, f2)
    # products of distinct factors are on the quadric but off the conic
    assert not on_conic(segre_embed(UP, DOWN))
