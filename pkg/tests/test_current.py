import numpy as np
import pytest

from qdirac.blocks import Reflector, Rotator
from qdirac.current import (
    LightlikeMode,
    NotASolution,
    PlaneWaveField,
    RadiationMode,
    block_current,
    current_covariance,
    current_divergence,
    current_quaternion,
    current_sample,
    pair_current,
    radiation_residual,
    solve_potential,
    spinor_current,
)
from qdirac.dirac import (
    FieldData,
    PlaneWaveMode,
    plane_wave_modes,
    spinor_to_pair,
)
from qdirac.harness import _matrix_oracle, quat_to_minkowski
from qdirac.quaternion import ONE, Quat
from qdirac.transforms import TransformSpec, rotor_boost, rotor_spatial


def rand_psi(rng):
    return rng.uniform(-1, 1, 4) + 1j * rng.uniform(-1, 1, 4)


def two_mode_solution(rng, fd):
    out = []
    for _ in range(2):
        modes = plane_wave_modes(rng.uniform(-1.5, 1.5, 3), fd)
        mode = modes[rng.integers(4)]
        out.append((spinor_to_pair(mode.amplitude), mode))
    return out


def test_spinor_current_examples():
    psi = np.array([1, 0, 0, 0], dtype=complex)
    assert np.max(np.abs(spinor_current(psi) - [1, 0, 0, 0])) == 0.0
    assert np.max(np.abs(spinor_current(np.zeros(4)))) == 0.0
    rng = np.random.default_rng(0)
    psi = rand_psi(rng)
    c = 0.3 - 1.1j
    assert np.max(np.abs(spinor_current(c * psi) - abs(c) ** 2 * spinor_current(psi))) < 1e-12
    assert spinor_current(psi)[0] >= 0.0


def test_rest_frame_quaternion_current():
    pair = spinor_to_pair(np.array([1, 0, 0, 0], dtype=complex))
    j = pair_current(pair)
    assert np.max(np.abs(j - np.array([-1j, 0, 0, 0]))) < 1e-15


def test_three_pipelines_agree():
    rng = np.random.default_rng(1)
    for _ in range(1000):
        psi = rand_psi(rng)
        pair = spinor_to_pair(psi)
        sample = current_sample(psi, pair)
        j_pair = pair_current(pair)
        assert np.max(np.abs(j_pair - sample.euclidean)) < 1e-12
        decomposition, j_blocks = block_current(pair)
        assert np.max(np.abs(j_blocks - j_pair)) < 1e-12
        assert len(decomposition) == 4


def test_block_current_structure():
    pair = spinor_to_pair(np.array([0.2 + 0.1j, -0.4, 0.9j, 1.0]))
    decomposition, _ = block_current(pair)
    for piece in decomposition:
        assert isinstance(piece.k, Reflector)
        assert isinstance(piece.phi_s, Reflector)
        assert isinstance(piece.i_mu, Reflector)
        assert isinstance(piece.j_rot, Rotator)
        # the shared coefficient is scalar, so its conjugate is itself
        assert (piece.k.upper - piece.k.lower).max_abs() == 0.0
    zero_pair = spinor_to_pair(np.zeros(4, dtype=complex))
    _, j = block_current(zero_pair)
    assert np.max(np.abs(j)) == 0.0


def test_euclidean_current_structure():
    rng = np.random.default_rng(2)
    j = pair_current(spinor_to_pair(rand_psi(rng)))
    assert abs(j[0].real) < 1e-14
    assert np.max(np.abs(j[1:].imag)) < 1e-14


def test_current_covariance():
    rng = np.random.default_rng(3)
    for _ in range(100):
        pair = spinor_to_pair(rand_psi(rng))
        n = int(rng.integers(-1, 3))
        if rng.integers(2) == 0:
            v = rng.normal(size=3)
            rotor = rotor_spatial(v / np.linalg.norm(v), rng.uniform(0, np.pi))
        else:
            v = rng.normal(size=3)
            rotor = rotor_boost(v / np.linalg.norm(v), rng.uniform(-2, 2))
        spec = TransformSpec(rotor, n)
        report = current_covariance(pair, spec)
        assert report.scalar_residual < 1e-10
        got = quat_to_minkowski(report.j_after)
        want = _matrix_oracle(spec) @ quat_to_minkowski(report.j_before)
        assert np.max(np.abs(got - want)) < 1e-10


def test_divergence_single_and_two_modes():
    rng = np.random.default_rng(4)
    fd = FieldData(1.1)
    modes = plane_wave_modes(np.array([0.4, -0.2, 0.9]), fd)
    single = [(spinor_to_pair(modes[3].amplitude), modes[3])]
    assert current_divergence(single, fd) < 1e-14
    for _ in range(50):
        fd = FieldData(rng.uniform(0.1, 2.0))
        assert current_divergence(two_mode_solution(rng, fd), fd) < 1e-10


def test_divergence_after_transformation():
    rng = np.random.default_rng(5)
    for n in (-1, 0, 1, 2):
        for _ in range(10):
            fd = FieldData(rng.uniform(0.1, 2.0))
            v = rng.normal(size=3)
            rotor = rotor_boost(v / np.linalg.norm(v), rng.uniform(-2, 2))
            spec = TransformSpec(rotor, n)
            worst = current_divergence(two_mode_solution(rng, fd), fd, spec=spec)
            assert worst < 1e-10


def test_divergence_guards():
    fd = FieldData(1.0)
    bad_mode = PlaneWaveMode(0.5, [1.0, 0, 0], np.array([1.0, 0, 0, 0]))
    bad = [(spinor_to_pair(bad_mode.amplitude), bad_mode)]
    with pytest.raises(NotASolution):
        current_divergence(bad, fd)
    charged = FieldData(1.0, [0.3, 0, 0, 0])
    mode = plane_wave_modes(np.zeros(3), charged)[3]
    good = [(spinor_to_pair(mode.amplitude), mode)]
    with pytest.raises(ValueError):
        current_divergence(good, charged)


def test_radiation_solve_example():
    amp = Quat(0.4j, 1.0, -0.3, 0.2)
    source = PlaneWaveField((RadiationMode(amp, 2.0, [1.0, 0, 0]),))
    potential = solve_potential(source)
    assert (potential.modes[0].amplitude - amp / 3.0).max_abs() < 1e-15
    assert radiation_residual(source, potential) < 1e-14


def test_radiation_zero_and_lightlike():
    zero = PlaneWaveField((RadiationMode(Quat(), 2.0, [1.0, 0, 0]),))
    assert solve_potential(zero).modes[0].amplitude.max_abs() == 0.0
    lightlike = PlaneWaveField((RadiationMode(ONE, 1.0, [1.0, 0, 0]),))
    with pytest.raises(LightlikeMode):
        solve_potential(lightlike)


def test_radiation_residual_transformed():
    rng = np.random.default_rng(6)
    for _ in range(50):
        modes = []
        for _ in range(3):
            while True:
                omega = rng.uniform(-2, 2)
                k = rng.uniform(-1.5, 1.5, 3)
                if abs(omega**2 - k @ k) > 0.05:
                    break
            u = rng.uniform(-1, 1, 4)
            modes.append(RadiationMode(Quat(1j * u[0], *u[1:]), omega, k))
        source = PlaneWaveField(tuple(modes))
        potential = solve_potential(source)
        v = rng.normal(size=3)
        axis = v / np.linalg.norm(v)
        if rng.integers(2) == 0:
            spec = TransformSpec(rotor_spatial(axis, rng.uniform(0, np.pi)))
        else:
            spec = TransformSpec(rotor_boost(axis, rng.uniform(-2, 2)))
        assert radiation_residual(source, potential, spec=spec) < 1e-10


def test_radiation_pairing_validation():
    a = PlaneWaveField((RadiationMode(ONE, 2.0, [1.0, 0, 0]),))
    b = PlaneWaveField((RadiationMode(ONE, 2.5, [1.0, 0, 0]),))
    with pytest.raises(ValueError):
        radiation_residual(a, b)
    with pytest.raises(ValueError):
        radiation_residual(a, PlaneWaveField(()))


def test_current_quaternion_assembly():
    j = np.array([-1j, 0.5, 0.0, -0.25])
    q = current_quaternion(j)
    assert q.components == (-1j, 0.5, 0.0, -0.25)
