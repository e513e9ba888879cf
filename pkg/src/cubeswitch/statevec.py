"""Dense state-vector simulation for small circuits with non-Clifford gates.

Used as the exact oracle for everything the stabilizer tableau cannot do:
transversal T patterns, CCZ, and end-to-end runs of the encoded search
circuit.  Capacity is capped at 20 qubits.

Qubit q maps to bit (1 << q) of the amplitude index (little-endian), the
same convention as pauli.PauliString.
"""
from __future__ import annotations

import math

import numpy as np

from .pauli import CliffordGate, PauliString, UnsupportedGateError

MAX_QUBITS = 20

_SQ2 = 1.0 / math.sqrt(2.0)
_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = _SQ2 * np.array([[1, 1], [1, -1]], dtype=complex)
_S = np.diag([1, 1j]).astype(complex)
_T = np.diag([1, np.exp(1j * math.pi / 4)]).astype(complex)

MATRICES_1Q: dict[str, np.ndarray] = {
    "X": _X,
    "Y": _Y,
    "Z": _Z,
    "H": _H,
    "S": _S,
    "SDG": _S.conj().T,
    # sqrt(X)^dag and RX=(I-iX)/sqrt2 differ only by a global phase
    "SQRTXDG": 0.5 * np.array([[1 - 1j, 1 + 1j], [1 + 1j, 1 - 1j]], dtype=complex),
    "RX": _SQ2 * (_I2 - 1j * _X),
    "T": _T,
    "TDG": _T.conj().T,
}

MATRICES_2Q: dict[str, np.ndarray] = {
    "CNOT": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "CZ": np.diag([1, 1, 1, -1]).astype(complex),
    "SWAP": np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
    "XX": _SQ2 * (np.eye(4) + 1j * np.kron(_X, _X)),
    "YY": _SQ2 * (np.eye(4) - 1j * np.kron(_Y, _Y)),
    "ZZ": _SQ2 * (np.eye(4) - 1j * np.kron(_Z, _Z)),
}

NON_CLIFFORD_KINDS = ("T", "TDG", "CCZ")


class CapacityError(ValueError):
    """Requested register exceeds the dense-simulation cap."""


class StateVector:
    """Normalized pure state on up to MAX_QUBITS qubits."""

    def __init__(self, n: int, amps: np.ndarray | None = None):
        if n > MAX_QUBITS:
            raise CapacityError(f"{n} qubits exceeds the {MAX_QUBITS}-qubit cap")
        self.n = n
        if amps is None:
            amps = np.zeros(1 << n, dtype=complex)
            amps[0] = 1.0
        self.amps = np.asarray(amps, dtype=complex).reshape(1 << n)

    def copy(self) -> "StateVector":
        return StateVector(self.n, self.amps.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    # -- gates ----------------------------------------------------------

    def apply(self, kind: str, *targets: int) -> "StateVector":
        """Apply a named gate in place and return self."""
        for q in targets:
            if not 0 <= q < self.n:
                raise ValueError(f"target {q} out of range")
        if kind in MATRICES_1Q:
            self._apply_matrix(MATRICES_1Q[kind], targets)
        elif kind in MATRICES_2Q:
            self._apply_matrix(MATRICES_2Q[kind], targets)
        elif kind == "CCZ":
            idx = np.arange(self.amps.size)
            mask = (1 << targets[0]) | (1 << targets[1]) | (1 << targets[2])
            sel = (idx & mask) == mask
            self.amps[sel] *= -1
        else:
            raise UnsupportedGateError(f"unknown gate kind {kind!r}")
        return self

    def apply_gate(self, gate: CliffordGate) -> "StateVector":
        return self.apply(gate.kind, *gate.targets)

    def apply_pauli(self, p: PauliString) -> "StateVector":
        """Multiply the state by a Pauli operator (exact phase)."""
        if p.n != self.n:
            raise ValueError("size mismatch")
        idx = np.arange(self.amps.size)
        src = idx ^ p.x
        # i^phase * X^x Z^z |b> = i^phase (-1)^{|z & b|} |b ^ x>
        signs = 1 - 2 * (_parity(idx & p.z))
        out = np.empty_like(self.amps)
        out[src] = self.amps[idx] * signs
        self.amps = out * (1j) ** p.phase
        return self

    def _apply_matrix(self, mat: np.ndarray, targets: tuple[int, ...]):
        k = len(targets)
        psi = self.amps.reshape([2] * self.n)
        # tensor axes are ordered qubit n-1 .. qubit 0
        axes = [self.n - 1 - q for q in targets]
        psi = np.moveaxis(psi, axes, range(k))
        shape = psi.shape
        psi = psi.reshape(1 << k, -1)
        psi = mat @ psi
        psi = psi.reshape(shape)
        psi = np.moveaxis(psi, range(k), axes)
        self.amps = psi.reshape(-1)

    # -- measurement -----------------------------------------------------

    def prob_of_one(self, qubit: int) -> float:
        idx = np.arange(self.amps.size)
        sel = (idx >> qubit) & 1 == 1
        return float(np.sum(np.abs(self.amps[sel]) ** 2))

    def measure_qubit(self, qubit: int, rng, basis: str = "Z") -> int:
        """Sample a +/-1 outcome and project (renormalized)."""
        if basis == "X":
            self.apply("H", qubit)
        p1 = self.prob_of_one(qubit)
        outcome = -1 if rng.random() < p1 else 1
        idx = np.arange(self.amps.size)
        keep = ((idx >> qubit) & 1) == (1 if outcome < 0 else 0)
        self.amps[~keep] = 0.0
        self.amps /= np.linalg.norm(self.amps)
        if basis == "X":
            self.apply("H", qubit)
        return outcome

    def reset_qubit(self, qubit: int, state: str = "0"):
        """Noiseless reset to |0> or |+> by projective measurement + flip."""
        p1 = self.prob_of_one(qubit)
        idx = np.arange(self.amps.size)
        if p1 > 0.5:
            keep = ((idx >> qubit) & 1) == 1
            self.amps[~keep] = 0.0
            self.apply("X", qubit)
        else:
            keep = ((idx >> qubit) & 1) == 0
            self.amps[~keep] = 0.0
        nrm = np.linalg.norm(self.amps)
        if nrm == 0.0:
            raise RuntimeError("reset projected onto a zero branch")
        self.amps /= nrm
        if state == "+":
            self.apply("H", qubit)
        return self

    def measure_all_z(self, rng) -> tuple[int, ...]:
        """Sample a full computational-basis readout; returns bits per qubit."""
        probs = np.abs(self.amps) ** 2
        probs /= probs.sum()
        k = int(rng.choice(probs.size, p=probs))
        return tuple((k >> q) & 1 for q in range(self.n))

    # -- observables -------------------------------------------------------

    def expectation(self, p: PauliString) -> float:
        if not p.is_hermitian():
            raise ValueError("expectation needs a Hermitian operator")
        phi = self.copy().apply_pauli(p)
        val = np.vdot(self.amps, phi.amps)
        return float(val.real)

    def overlap(self, other: "StateVector") -> complex:
        return complex(np.vdot(self.amps, other.amps))


def _parity(arr: np.ndarray) -> np.ndarray:
    arr = arr.copy()
    out = np.zeros_like(arr)
    while arr.any():
        out ^= arr & 1
        arr >>= 1
    return out


def equal_up_to_global_phase(a: StateVector, b: StateVector, tol: float = 1e-9) -> bool:
    """True when a == e^{i theta} b with theta fixed by b's largest amplitude."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    k = int(np.argmax(np.abs(b.amps)))
    if abs(b.amps[k]) < 1e-12:
        raise ValueError("reference state is numerically zero")
    theta = a.amps[k] / b.amps[k]
    if abs(abs(theta) - 1.0) > tol:
        return False
    return bool(np.max(np.abs(a.amps - theta * b.amps)) < tol)


def gate_matrix(kind: str, num_qubits: int | None = None) -> np.ndarray:
    """Unitary for a named gate (CCZ included), for oracle-style tests."""
    if kind in MATRICES_1Q:
        return MATRICES_1Q[kind].copy()
    if kind in MATRICES_2Q:
        return MATRICES_2Q[kind].copy()
    if kind == "CCZ":
        return np.diag([1, 1, 1, 1, 1, 1, 1, -1]).astype(complex)
    raise UnsupportedGateError(f"unknown gate kind {kind!r}")
