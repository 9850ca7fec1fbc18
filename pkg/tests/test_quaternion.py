import numpy as np
import pytest

from qdirac.quaternion import (
    BASIS,
    I1,
    I2,
    I3,
    ONE,
    Quat,
    SingularQuaternion,
    conjugate,
    dot,
    from_matrix,
    modulus_inverse,
    temporal_spatial_split,
    to_matrix,
)


def rand_quat(rng):
    return Quat(*(rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)))


def test_basis_multiplication_table():
    assert (I1 * I2 - I3).max_abs() == 0.0
    assert (I2 * I1 + I3).max_abs() == 0.0
    assert (I2 * I3 - I1).max_abs() == 0.0
    assert (I3 * I1 - I2).max_abs() == 0.0
    for basis in (I1, I2, I3):
        assert (basis * basis + ONE).max_abs() == 0.0


def test_identity_element():
    rng = np.random.default_rng(0)
    q = rand_quat(rng)
    assert (ONE * q - q).max_abs() == 0.0
    assert (q * ONE - q).max_abs() == 0.0


def test_associativity():
    rng = np.random.default_rng(1)
    for _ in range(300):
        a, b, c = rand_quat(rng), rand_quat(rng), rand_quat(rng)
        assert ((a * b) * c - a * (b * c)).max_abs() < 1e-12


def test_conjugation_examples():
    assert (Quat(1, 1).quat_conj() - Quat(1, -1)).max_abs() == 0.0
    assert (I2.complex_conj() - I2).max_abs() == 0.0
    # i*i3 is fixed by the hermitian conjugation
    q = Quat(0, 0, 0, 1j)
    assert (q.herm_conj() - q).max_abs() == 0.0


def test_conjugation_dispatch_and_composition():
    rng = np.random.default_rng(2)
    q = rand_quat(rng)
    assert conjugate(q, "quat") == q.quat_conj()
    assert conjugate(q, "complex") == q.complex_conj()
    assert conjugate(q, "herm") == q.herm_conj()
    assert (q.quat_conj().complex_conj() - q.herm_conj()).max_abs() == 0.0
    assert (q.complex_conj().quat_conj() - q.herm_conj()).max_abs() == 0.0
    with pytest.raises(ValueError):
        conjugate(q, "transpose")


def test_conjugation_anti_homomorphisms():
    rng = np.random.default_rng(3)
    for _ in range(200):
        a, b = rand_quat(rng), rand_quat(rng)
        ab = a * b
        assert (ab.quat_conj() - b.quat_conj() * a.quat_conj()).max_abs() < 1e-12
        assert (ab.herm_conj() - b.herm_conj() * a.herm_conj()).max_abs() < 1e-12
        assert (ab.complex_conj() - a.complex_conj() * b.complex_conj()).max_abs() < 1e-12


def test_real_components_conjugations_coincide():
    rng = np.random.default_rng(4)
    q = Quat(*rng.uniform(-1, 1, 4))
    assert (q.quat_conj() - q.herm_conj()).max_abs() == 0.0


def test_dot_examples():
    assert dot(Quat(1, 0, 1), Quat(2, 0, 3)) == 5
    assert dot(I1, I2) == 0


def test_dot_two_routes_agree():
    rng = np.random.default_rng(5)
    for _ in range(300):
        a, b = rand_quat(rng), rand_quat(rng)
        sandwich = (a.quat_conj() * b + b.quat_conj() * a) * 0.5
        assert abs(dot(a, b) - sandwich.temporal) < 1e-12
        assert sandwich.spatial.max_abs() < 1e-12
        assert abs(dot(a, a) - a.modulus()) < 1e-12


def test_modulus_inverse_examples():
    m, inv = modulus_inverse(Quat(1, 1))
    assert m == 2
    assert (inv - Quat(0.5, -0.5)).max_abs() == 0.0
    m, inv = modulus_inverse(ONE)
    assert m == 1
    assert (inv - ONE).max_abs() == 0.0


def test_null_element_raises():
    null = Quat(1, 0, 0, 1j)
    assert null.modulus() == 0
    with pytest.raises(SingularQuaternion):
        null.inverse()


def test_inverse_roundtrip():
    rng = np.random.default_rng(6)
    for _ in range(200):
        q = rand_quat(rng)
        if abs(q.modulus()) < 0.1:
            continue
        assert (q.inverse() * q - ONE).max_abs() < 1e-12
        assert (q * q.inverse() - ONE).max_abs() < 1e-12


def test_temporal_spatial_split():
    s, v = temporal_spatial_split(Quat(2, 3))
    assert s == 2 and (v - Quat(0, 3)).max_abs() == 0.0
    s, v = temporal_spatial_split(I2)
    assert s == 0 and (v - I2).max_abs() == 0.0
    rng = np.random.default_rng(7)
    q = rand_quat(rng)
    s, v = temporal_spatial_split(q)
    assert (Quat(s) + v - q).max_abs() == 0.0


def test_matrix_representation_basis():
    expected_i3 = np.array([[-1j, 0], [0, 1j]])
    assert np.max(np.abs(to_matrix(I3) - expected_i3)) == 0.0
    assert np.max(np.abs(to_matrix(ONE) - np.eye(2))) == 0.0
    expected_i1 = np.array([[0, -1j], [-1j, 0]])
    expected_i2 = np.array([[0, -1.0], [1.0, 0]])
    assert np.max(np.abs(to_matrix(I1) - expected_i1)) == 0.0
    assert np.max(np.abs(to_matrix(I2) - expected_i2)) == 0.0


def test_matrix_roundtrip_and_homomorphism():
    rng = np.random.default_rng(8)
    for _ in range(1000):
        q = rand_quat(rng)
        assert (from_matrix(to_matrix(q)) - q).max_abs() < 1e-14
    for _ in range(200):
        a, b = rand_quat(rng), rand_quat(rng)
        diff = to_matrix(a * b) - to_matrix(a) @ to_matrix(b)
        assert np.max(np.abs(diff)) < 1e-12


def test_matrix_trace_is_twice_temporal():
    rng = np.random.default_rng(9)
    q = rand_quat(rng)
    assert abs(np.trace(to_matrix(q)) - 2 * q.temporal) < 1e-14


def test_nonfinite_components_rejected():
    with pytest.raises(ValueError):
        Quat(float("nan"))
    with pytest.raises(ValueError):
        Quat(0, float("inf"))


def test_scalar_arithmetic():
    q = Quat(1, 2, 3, 4)
    assert ((2 * q) - Quat(2, 4, 6, 8)).max_abs() == 0.0
    assert ((q / 2) - Quat(0.5, 1, 1.5, 2)).max_abs() == 0.0
    assert ((q + 1) - Quat(2, 2, 3, 4)).max_abs() == 0.0
    assert ((1 - q) - Quat(0, -2, -3, -4)).max_abs() == 0.0


def test_basis_tuple():
    assert BASIS == (ONE, I1, I2, I3)
