"""Stabilizer tableau simulation with exact sign tracking.

The state is held as n stabilizer and n destabilizer generators
(Aaronson-Gottesman style).  Gates conjugate every row through
pauli.conjugate; measurements use the standard replace-one-anticommuting-
generator update, with outcome signs computed by exact Pauli products.

Also provides canonicalize(), the deterministic Gaussian-elimination form
used to compare stabilizer groups including signs.
"""
from __future__ import annotations

from .pauli import CliffordGate, PauliString, conjugate


class InvalidOperatorError(ValueError):
    """Operator fails the Hermiticity requirement for measurement."""


class InvalidGroupError(ValueError):
    """Generator list is not an independent commuting set."""


class StabilizerState:
    """n-qubit stabilizer state, mutable, cheap to copy."""

    def __init__(self, n: int):
        self.n = n
        self.stabs = [PauliString(n, 0, 1 << q, 0) for q in range(n)]
        self.destabs = [PauliString(n, 1 << q, 0, 0) for q in range(n)]

    def copy(self) -> "StabilizerState":
        st = StabilizerState.__new__(StabilizerState)
        st.n = self.n
        st.stabs = list(self.stabs)
        st.destabs = list(self.destabs)
        return st

    # -- evolution --------------------------------------------------------

    def apply_gate(self, gate: CliffordGate) -> "StabilizerState":
        for q in gate.targets:
            if not 0 <= q < self.n:
                raise ValueError(f"gate target {q} out of range")
        self.stabs = [conjugate(gate, p) for p in self.stabs]
        self.destabs = [conjugate(gate, p) for p in self.destabs]
        return self

    def inject_error(self, e: PauliString) -> "StabilizerState":
        """Left-multiply the state by a Pauli: flips signs of anticommuting rows."""
        if e.n != self.n:
            raise ValueError("size mismatch")
        self.stabs = [p.negate() if not p.commutes(e) else p for p in self.stabs]
        self.destabs = [p.negate() if not p.commutes(e) else p for p in self.destabs]
        return self

    # -- measurement -------------------------------------------------------

    def deterministic_sign(self, p: PauliString) -> int | None:
        """+1/-1 if p is (up to sign) in the stabilizer group, else None."""
        if not p.is_hermitian():
            raise InvalidOperatorError(f"{p} has phase +/-i")
        acc = PauliString(self.n)
        for i in range(self.n):
            if not self.destabs[i].commutes(p):
                acc = acc * self.stabs[i]
        if acc.x != p.x or acc.z != p.z:
            return None
        k = (p.phase - acc.phase) % 4
        return 1 if k == 0 else -1

    def measure(self, p: PauliString, rng=None, force: int | None = None) -> int:
        """Measure Hermitian Pauli p; returns the +/-1 outcome.

        Random outcomes are drawn from rng unless ``force`` pins them
        (used to construct reference states by postselection).
        """
        if not p.is_hermitian():
            raise InvalidOperatorError(f"{p} has phase +/-i")
        pivot = None
        for i in range(self.n):
            if not self.stabs[i].commutes(p):
                pivot = i
                break
        if pivot is None:
            out = self.deterministic_sign(p)
            if out is None:
                raise InvalidGroupError("operator commutes but is outside the group")
            return out
        if force is not None:
            outcome = force
        else:
            outcome = 1 if rng.random() < 0.5 else -1
        old = self.stabs[pivot]
        for i in range(self.n):
            if i != pivot and not self.stabs[i].commutes(p):
                self.stabs[i] = self.stabs[i] * old
            if not self.destabs[i].commutes(p):
                self.destabs[i] = self.destabs[i] * old
        self.destabs[pivot] = old
        self.stabs[pivot] = p.with_sign(outcome)
        return outcome

    def reset_qubit(self, q: int, state: str = "0") -> "StabilizerState":
        """Noiseless reset of one qubit to |0> or |+>."""
        target = (
            PauliString(self.n, 0, 1 << q, 0)
            if state == "0"
            else PauliString(self.n, 1 << q, 0, 0)
        )
        out = self.measure(target, force=1)
        if out < 0:  # force=1 cannot return -1; deterministic -1 needs a flip
            flip = (
                PauliString(self.n, 1 << q, 0, 0)
                if state == "0"
                else PauliString(self.n, 0, 1 << q, 0)
            )
            self.inject_error(flip)
        return self

    # -- diagnostics ---------------------------------------------------------

    def stabilizer_group_generators(self) -> list[PauliString]:
        return list(self.stabs)

    def dump(self) -> str:
        rows = [f"stab  {p.to_label()}" for p in self.stabs]
        rows += [f"destab {p.to_label()}" for p in self.destabs]
        return "\n".join(rows)

    def to_statevector(self):
        """Dense vector for cross-checks (small n only)."""
        import numpy as np

        from .statevec import StateVector

        dim = 1 << self.n
        psi = None
        for k in range(dim):
            v = np.zeros(dim, dtype=complex)
            v[k] = 1.0
            sv = StateVector(self.n, v)
            for s in self.stabs:
                proj = sv.copy().apply_pauli(s)
                sv.amps = 0.5 * (sv.amps + proj.amps)
            if np.linalg.norm(sv.amps) > 1e-8:
                sv.amps /= np.linalg.norm(sv.amps)
                psi = sv
                break
        if psi is None:
            raise RuntimeError("failed to project out the stabilized state")
        return psi


def canonicalize(generators: list[PauliString]) -> list[PauliString]:
    """Deterministic reduced row-echelon form of a commuting generator set.

    X-components are echelonized first by ascending qubit index, then the
    remaining pure-Z rows.  Signs are carried exactly, so two generator
    lists describe the same stabilizer group (including signs) iff their
    canonical forms are identical.
    """
    if not generators:
        return []
    n = generators[0].n
    rows = []
    for g in generators:
        if g.n != n:
            raise InvalidGroupError("mixed qubit counts")
        if not g.is_hermitian():
            raise InvalidGroupError(f"{g} is not Hermitian")
        rows.append(g)
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not rows[a].commutes(rows[b]):
                raise InvalidGroupError(
                    f"{rows[a].to_label()} and {rows[b].to_label()} anticommute"
                )
    done: list[PauliString] = []
    rest = list(rows)
    for q in range(n):
        bit = 1 << q
        piv = next((i for i, r in enumerate(rest) if r.x & bit), None)
        if piv is None:
            continue
        pivot = rest.pop(piv)
        rest = [r * pivot if r.x & bit else r for r in rest]
        done = [r * pivot if r.x & bit else r for r in done]
        done.append(pivot)
    for q in range(n):
        bit = 1 << q
        piv = next((i for i, r in enumerate(rest) if r.z & bit), None)
        if piv is None:
            continue
        pivot = rest.pop(piv)
        rest = [r * pivot if r.z & bit else r for r in rest]
        done = [r * pivot if r.z & bit else r for r in done]
        done.append(pivot)
    if any(not r.is_identity() for r in rest):
        raise InvalidGroupError("generators are dependent or inconsistent")
    if len(done) != len(rows):
        raise InvalidGroupError("generators are dependent")
    return done


def same_group(a: list[PauliString], b: list[PauliString]) -> bool:
    """True iff both lists generate the same signed stabilizer group."""
    ca = canonicalize(a)
    cb = canonicalize(b)
    return ca == cb


def state_from_generators(generators: list[PauliString], n: int) -> StabilizerState:
    """Stabilizer state fixed by the given (signed) commuting generators.

    Unconstrained degrees of freedom are fixed by the |0> tableau start,
    so pass a full set of n generators to pin the state completely.
    """
    canonicalize(generators)  # validates commuting + independent
    st = StabilizerState(n)
    for g in generators:
        st.measure(g.with_sign(1), force=1)
    # One Pauli correction fixes every wrong sign at once.  Decompose each
    # generator over the current stabilizer rows; the product of the matching
    # destabilizer rows anticommutes with exactly the chosen subset.
    rows: list[int] = []  # GF(2) rows: (membership mask << 1) | rhs bit
    for g in generators:
        base = g.with_sign(1)
        members = 0
        for i in range(n):
            if not st.destabs[i].commutes(base):
                members |= 1 << i
        current = st.deterministic_sign(base)
        if current is None:
            raise InvalidGroupError(f"failed to fix {g.to_label()}")
        rows.append((members << 1) | (1 if current != g.sign() else 0))
    solution = _solve_gf2(rows)
    fix = PauliString(n)
    for i in range(n):
        if solution & (1 << i):
            fix = fix * st.destabs[i]
    st.inject_error(fix)
    for g in generators:
        if st.deterministic_sign(g.with_sign(1)) != g.sign():
            raise InvalidGroupError(f"failed to realize generator {g.to_label()}")
    return st


def _solve_gf2(rows: list[int]) -> int:
    """Solve M k = c over GF(2); each row packs (membership mask << 1) | rhs."""
    work = list(rows)
    ncols = max((r.bit_length() for r in work), default=1)
    pivot_of_col: dict[int, int] = {}
    r = 0
    for col in range(1, ncols + 1):
        bit = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for j in range(len(work)):
            if j != r and work[j] & bit:
                work[j] ^= work[r]
        pivot_of_col[col] = r
        r += 1
    if any(row == 1 for row in work):
        raise InvalidGroupError("inconsistent sign constraints")
    solution = 0
    for col, row_idx in pivot_of_col.items():
        if work[row_idx] & 1:
            solution |= 1 << (col - 1)
    return solution
