"""Dense simulator behaviour: gates, sampling, expectations, phase equality."""
import numpy as np
import pytest

from cubeswitch.pauli import PauliString
from cubeswitch.statevec import (
    CapacityError,
    StateVector,
    equal_up_to_global_phase,
    gate_matrix,
)


def test_h_on_zero():
    sv = StateVector(1).apply("H", 0)
    np.testing.assert_allclose(sv.amps, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-12)


def test_ccz_flips_111_only():
    sv = StateVector(3)
    sv.amps[:] = 1 / np.sqrt(8)
    sv.apply("CCZ", 0, 1, 2)
    want = np.full(8, 1 / np.sqrt(8), dtype=complex)
    want[7] *= -1
    np.testing.assert_allclose(sv.amps, want, atol=1e-12)


def test_norm_preserved_by_all_gates():
    rng = np.random.default_rng(9)
    sv = StateVector(4)
    sv.amps = rng.normal(size=16) + 1j * rng.normal(size=16)
    sv.amps /= np.linalg.norm(sv.amps)
    for kind, targets in [
        ("H", (0,)), ("S", (1,)), ("T", (2,)), ("TDG", (3,)), ("SQRTXDG", (0,)),
        ("RX", (1,)), ("CNOT", (0, 3)), ("CZ", (2, 1)), ("SWAP", (3, 0)),
        ("XX", (1, 2)), ("YY", (0, 2)), ("ZZ", (3, 1)), ("CCZ", (0, 1, 3)),
    ]:
        sv.apply(kind, *targets)
        assert abs(sv.norm() - 1.0) < 1e-10


def test_t_eighth_power_is_identity():
    t = gate_matrix("T")
    acc = np.eye(2, dtype=complex)
    for _ in range(8):
        acc = t @ acc
    np.testing.assert_allclose(acc, np.eye(2), atol=1e-12)


def test_rotations_are_plus_minus_i_exponentials():
    X = gate_matrix("X")
    Z = gate_matrix("Z")
    xx = gate_matrix("XX")
    np.testing.assert_allclose(xx, (np.eye(4) + 1j * np.kron(X, X)) / np.sqrt(2), atol=1e-12)
    zz = gate_matrix("ZZ")
    np.testing.assert_allclose(zz, (np.eye(4) - 1j * np.kron(Z, Z)) / np.sqrt(2), atol=1e-12)


def test_apply_pauli_matches_matrix():
    rng = np.random.default_rng(17)
    from tests.test_pauli import pauli_to_matrix

    for _ in range(50):
        n = 3
        p = PauliString(n, int(rng.integers(0, 8)), int(rng.integers(0, 8)),
                        int(rng.integers(0, 4)))
        amps = rng.normal(size=8) + 1j * rng.normal(size=8)
        amps /= np.linalg.norm(amps)
        sv = StateVector(n, amps.copy()).apply_pauli(p)
        np.testing.assert_allclose(sv.amps, pauli_to_matrix(p) @ amps, atol=1e-12)


def test_expectation_on_ghz():
    sv = StateVector(8).apply("H", 0)
    for j in range(1, 8):
        sv.apply("CNOT", 0, j)
    x8 = PauliString.from_support(8, "X", range(8))
    np.testing.assert_allclose(sv.expectation(x8), 1.0, atol=1e-10)
    z0z3 = PauliString.from_label("Z0Z3", n=8)
    np.testing.assert_allclose(sv.expectation(z0z3), 1.0, atol=1e-10)
    z0 = PauliString.from_label("Z0", n=8)
    np.testing.assert_allclose(sv.expectation(z0), 0.0, atol=1e-10)


def test_measure_all_z_statistics():
    rng = np.random.default_rng(31)
    sv = StateVector(3).apply("H", 0)
    sv.apply("CNOT", 0, 1).apply("CNOT", 0, 2)
    counts = {0: 0, 7: 0}
    shots = 10_000
    for _ in range(shots):
        bits = sv.measure_all_z(rng)
        key = bits[0] | bits[1] << 1 | bits[2] << 2
        counts[key] += 1
    # binomial 3-sigma window around 1/2
    sigma = 0.5 / np.sqrt(shots)
    assert abs(counts[0] / shots - 0.5) < 3 * sigma


def test_deterministic_readout():
    sv = StateVector(3)
    sv.apply("X", 0).apply("X", 2)
    rng = np.random.default_rng(0)
    assert sv.measure_all_z(rng) == (1, 0, 1)


def test_measure_qubit_projects():
    rng = np.random.default_rng(5)
    sv = StateVector(2).apply("H", 0).apply("CNOT", 0, 1)
    out = sv.measure_qubit(0, rng)
    # collapsed partner follows
    out2 = sv.measure_qubit(1, rng)
    assert out == out2


def test_equal_up_to_global_phase():
    rng = np.random.default_rng(13)
    amps = rng.normal(size=8) + 1j * rng.normal(size=8)
    amps /= np.linalg.norm(amps)
    a = StateVector(3, amps.copy())
    b = StateVector(3, np.exp(1j * np.pi / 7) * amps)
    assert equal_up_to_global_phase(a, b, 1e-9)
    bad = amps.copy()
    bad[2] *= -1
    assert not equal_up_to_global_phase(StateVector(3, bad), a, 1e-9)


def test_capacity_cap():
    with pytest.raises(CapacityError):
        StateVector(21)
