"""Tableau simulator: gates, measurement, error injection, canonical forms."""
import numpy as np
import pytest

from cubeswitch.pauli import CliffordGate, PauliString, pauli_basis
from cubeswitch.statevec import StateVector
from cubeswitch.tableau import (
    InvalidGroupError,
    StabilizerState,
    canonicalize,
    same_group,
    state_from_generators,
)


def lab(text, n=8):
    return PauliString.from_label(text, n=n)


def ghz_circuit(state: StabilizerState, qubits):
    root = qubits[0]
    state.reset_qubit(root, "+")
    for t in qubits[1:]:
        state.apply_gate(CliffordGate("CNOT", (root, t)))
    return state


def test_h_turns_z_into_x():
    st = StabilizerState(1)
    st.apply_gate(CliffordGate("H", (0,)))
    assert st.stabs[0] == PauliString.from_label("X0", 1)


def test_ghz8_group():
    st = ghz_circuit(StabilizerState(8), list(range(8)))
    want = [PauliString.from_support(8, "X", range(8))]
    want += [lab(f"Z0Z{j}") for j in range(1, 8)]
    assert same_group(st.stabs, want)


def test_swap_cycle_preserves_version2_group():
    # cyclic permutation 0->4->6->2->0, 1->5->7->3->1 realized as SWAPs
    from cubeswitch.codes import permutation_to_swaps, version2

    v2 = version2()
    gens = list(v2.stabilizer_generators) + [p.with_sign(1) for p in v2.logical_z]
    st = state_from_generators(gens, 8)
    before = canonicalize(st.stabs)
    perm = {0: 4, 4: 6, 6: 2, 2: 0, 1: 5, 5: 7, 7: 3, 3: 1}
    for a, b in permutation_to_swaps(perm, 8):
        st.apply_gate(CliffordGate("SWAP", (a, b)))
    assert same_group(before, st.stabs)


def test_measure_deterministic_on_ghz():
    st = ghz_circuit(StabilizerState(8), list(range(8)))
    z8 = PauliString.from_support(8, "Z", range(8))
    rng = np.random.default_rng(0)
    snapshot = canonicalize(st.stabs)
    assert st.measure(z8, rng) == 1
    assert canonicalize(st.stabs) == snapshot


def test_measure_random_then_repeat():
    from cubeswitch.codes import version1

    v1 = version1()
    full = list(v1.stabilizer_generators) + [p.with_sign(1) for p in v1.logical_x]
    st = state_from_generators(full, 8)
    gz4 = lab("Z0Z1Z2Z3")
    # anticommutes with the X7X3 stabilizer, so the outcome is random
    assert any(not s.commutes(gz4) for s in st.stabs)
    rng = np.random.default_rng(123)
    outcomes = set()
    for seed in range(20):
        trial = st.copy()
        out = trial.measure(gz4, np.random.default_rng(seed))
        assert trial.measure(gz4, np.random.default_rng(seed + 1)) == out
        outcomes.add(out)
    assert outcomes == {1, -1}


def test_inject_error_flips_ghz_sign():
    st = ghz_circuit(StabilizerState(8), list(range(8)))
    st.inject_error(lab("Z0"))
    x8 = PauliString.from_support(8, "X", range(8))
    assert st.deterministic_sign(x8) == -1
    for j in range(1, 8):
        assert st.deterministic_sign(lab(f"Z0Z{j}")) == 1


def test_measure_rejects_phase_i():
    st = StabilizerState(2)
    bad = PauliString(2, 1, 1, 0)  # X0Z0 = -iY0, not Hermitian
    with pytest.raises(Exception):
        st.measure(bad, np.random.default_rng(0))


def test_canonicalize_idempotent_and_basis_independent():
    rng = np.random.default_rng(42)
    st = ghz_circuit(StabilizerState(6), list(range(6)))
    gens = list(st.stabs)
    canon = canonicalize(gens)
    assert canonicalize(canon) == canon
    for _ in range(20):
        mixed = list(gens)
        i, j = rng.integers(0, len(mixed), 2)
        if i != j:
            mixed[i] = mixed[i] * mixed[j]
        rng.shuffle(mixed)
        assert canonicalize(mixed) == canon


def test_canonicalize_rejects_bad_input():
    with pytest.raises(InvalidGroupError):
        canonicalize([lab("X0", 2), lab("Z0", 2)])
    with pytest.raises(InvalidGroupError):
        canonicalize([lab("Z0", 2), lab("Z1", 2), lab("Z0Z1", 2)])


def test_same_group_examples():
    assert same_group([lab("Z0", 2), lab("Z1", 2)], [lab("Z0Z1", 2), lab("Z1", 2)])
    assert not same_group([lab("Z0", 1)], [lab("-Z0", 1)])


def test_state_from_generators_with_negative_signs():
    gens = [lab("-Z0", 3), lab("Z1Z2", 3), lab("-X1X2", 3)]
    st = state_from_generators(gens, 3)
    for g in gens:
        assert st.deterministic_sign(g.with_sign(1)) == g.sign()


def random_clifford_ops(rng, n, count):
    kinds1 = ("H", "S", "SDG", "SQRTXDG", "RX", "X", "Y", "Z")
    kinds2 = ("CNOT", "CZ", "SWAP", "XX", "YY", "ZZ")
    ops = []
    for _ in range(count):
        if rng.random() < 0.5:
            ops.append(CliffordGate(kinds1[rng.integers(0, 8)], (int(rng.integers(0, n)),)))
        else:
            a, b = rng.choice(n, 2, replace=False)
            ops.append(CliffordGate(kinds2[rng.integers(0, 6)], (int(a), int(b))))
    return ops


def test_tableau_agrees_with_statevector_on_random_circuits():
    rng = np.random.default_rng(2024)
    for trial in range(200):
        n = int(rng.integers(2, 6))
        ops = random_clifford_ops(rng, n, int(rng.integers(1, 12)))
        st = StabilizerState(n)
        sv = StateVector(n)
        for g in ops:
            st.apply_gate(g)
            sv.apply_gate(g)
        for s in st.stabs:
            val = sv.expectation(s.with_sign(1))
            np.testing.assert_allclose(val, s.sign(), atol=1e-9)


def test_tableau_to_statevector_roundtrip():
    st = ghz_circuit(StabilizerState(3), [0, 1, 2])
    sv = st.to_statevector()
    want = np.zeros(8, dtype=complex)
    want[0] = want[7] = 1 / np.sqrt(2)
    overlap = abs(np.vdot(sv.amps, want))
    np.testing.assert_allclose(overlap, 1.0, atol=1e-9)
