"""Catalog of the cube-code family used throughout the simulator.

The parent code has stabilizers X^{(8)} and Z^{(8)} with a deliberately
non-canonical logical basis; gauging out three logical qubits gives a
subsystem code, and fixing those gauge qubits in |+> or |0> produces the
two stabilizer-code versions:

  version 1: gauge-X operators promoted, weight-2 logical X representatives,
             single-qubit logical Cliffords via two-qubit rotation gadgets;
  version 2: gauge-Z operators promoted, transversal T/Tdag realizes a
             logical CCZ, plus phase-gate CZs and permutation CNOT/SWAPs.

All operators are PauliStrings on 8 qubits; everything here is immutable
after construction and freely shareable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .pauli import PauliString, pauli_basis

N = 8
X_ANCHOR = 6  # shared qubit of the weight-2 logical X representatives
Z_ANCHOR = 0  # shared qubit of the logical Z representatives
DISTINCT_QUBITS = (4, 2, 1)  # qubit identifying logical 1, 2, 3


def _p(label: str) -> PauliString:
    return PauliString.from_label(label, n=N)


class DirectionError(ValueError):
    """Requested inter-block direction is not codespace-preserving."""


@dataclass(frozen=True)
class CodeDefinition:
    """Stabilizers, logicals and gauge operators of one code version."""

    name: str
    n: int
    stabilizer_generators: tuple[PauliString, ...]
    logical_x: tuple[PauliString, ...]
    logical_z: tuple[PauliString, ...]
    gauge_x: tuple[PauliString, ...]
    gauge_z: tuple[PauliString, ...]

    def validate(self) -> None:
        stabs = self.stabilizer_generators
        for a, b in combinations(stabs, 2):
            assert a.commutes(b), f"{a} vs {b}"
        for i, (lx, lz) in enumerate(zip(self.logical_x, self.logical_z)):
            for s in stabs:
                assert lx.commutes(s) and lz.commutes(s)
            assert not lx.commutes(lz)
            for j in range(len(self.logical_x)):
                if j != i:
                    assert lx.commutes(self.logical_z[j])
                    assert self.logical_x[j].commutes(lz)
        for gx, gz in zip(self.gauge_x, self.gauge_z):
            assert not gx.commutes(gz)
        # distance 2: no weight-1 Pauli commutes with every stabilizer
        for q in range(self.n):
            for fault in pauli_basis(self.n, (q,), self.n):
                assert any(not s.commutes(fault) for s in stabs)

    def logical_y(self, j: int) -> PauliString:
        """i X Z representative for logical qubit j (1-based)."""
        return PauliString(self.n, 0, 0, 1) * self.logical_x[j - 1] * self.logical_z[j - 1]


def subsystem_code() -> CodeDefinition:
    """The parent subsystem code: 3 protected and 3 gauge logical qubits."""
    return CodeDefinition(
        name="subsystem",
        n=N,
        stabilizer_generators=(
            PauliString.from_support(N, "X", range(N)),
            PauliString.from_support(N, "Z", range(N)),
        ),
        logical_x=(_p("X0X1X2X3"), _p("X0X1X4X5"), _p("X0X2X4X6")),
        logical_z=(_p("Z0Z4"), _p("Z0Z2"), _p("Z0Z1")),
        gauge_x=(_p("X7X3"), _p("X7X5"), _p("X7X6")),
        gauge_z=(_p("Z0Z1Z2Z3"), _p("Z0Z1Z4Z5"), _p("Z0Z2Z4Z6")),
    )


def _reduce_to_anchored_pair(op: PauliString, x_stabs: list[PauliString], anchor: int):
    """Weight-2 coset representative of op containing the anchor qubit."""
    found = []
    for r in range(1 << len(x_stabs)):
        cand = op
        for i, s in enumerate(x_stabs):
            if r & (1 << i):
                cand = cand * s
        if cand.weight() == 2 and (cand.x | cand.z) & (1 << anchor):
            found.append(cand.with_sign(cand.sign()))
    uniq = {(c.x, c.z, c.phase) for c in found}
    assert len(uniq) == 1, f"anchored reduction of {op} not unique: {found}"
    return found[0]


def derive_version(fix: str) -> CodeDefinition:
    """Gauge-fix the subsystem code; fix is "plus" (version 1) or "zero" (2).

    Promoting gauge-X operators makes the weight-2 logical X representatives
    available (anchored on the shared qubit); promoting gauge-Z leaves every
    representative as written in the parent code.
    """
    base = subsystem_code()
    if fix == "plus":
        stabs = base.stabilizer_generators + base.gauge_x
        x_stabs = [s for s in stabs if s.z == 0]
        logical_x = tuple(
            _reduce_to_anchored_pair(lx, x_stabs, X_ANCHOR) for lx in base.logical_x
        )
        code = CodeDefinition(
            name="version1",
            n=N,
            stabilizer_generators=stabs,
            logical_x=logical_x,
            logical_z=base.logical_z,
            gauge_x=base.gauge_x,
            gauge_z=base.gauge_z,
        )
    elif fix == "zero":
        stabs = base.stabilizer_generators + base.gauge_z
        code = CodeDefinition(
            name="version2",
            n=N,
            stabilizer_generators=stabs,
            logical_x=base.logical_x,
            logical_z=base.logical_z,
            gauge_x=base.gauge_x,
            gauge_z=base.gauge_z,
        )
    else:
        raise ValueError(f"fix must be 'plus' or 'zero', got {fix!r}")
    code.validate()
    return code


def version1() -> CodeDefinition:
    return derive_version("plus")


def version2() -> CodeDefinition:
    return derive_version("zero")


def weight8(kind: str) -> PauliString:
    return PauliString.from_support(N, kind, range(N))


def complement_of_gauge(gauge: PauliString) -> PauliString:
    """Partner operator whose product with the gauge is the weight-8 stabilizer."""
    kind = "X" if gauge.z == 0 else "Z"
    return weight8(kind) * gauge


def complementary_check(direction: str) -> PauliString:
    """Low-weight check measured alongside the three gauge operators.

    Its product with all three gauge outcomes reproduces the weight-8
    stabilizer syndrome, which is what gates the accept decision.
    """
    base = subsystem_code()
    if direction == "2to1":
        prod = base.gauge_x[0] * base.gauge_x[1] * base.gauge_x[2]
        out = weight8("X") * prod
        assert out == _p("X0X1X2X4")
        return out
    if direction == "1to2":
        prod = base.gauge_z[0] * base.gauge_z[1] * base.gauge_z[2]
        return weight8("Z") * prod
    raise ValueError(f"direction must be '2to1' or '1to2', got {direction!r}")


# -- logical gate catalog ----------------------------------------------------

@dataclass(frozen=True)
class LogicalGateSpec:
    """One way to realize a logical gate on a code version.

    kind is "gates" (list of (gate_kind, targets) pairs), "permutation"
    (tuple perm with perm[q] = destination of qubit q), or "gadgets"
    (two-qubit rotation sequence, applied left to right, after the
    byproduct Pauli when one is present).
    """

    name: str
    version: int
    kind: str
    gates: tuple[tuple[str, tuple[int, ...]], ...] = ()
    permutation: tuple[int, ...] = ()
    gadgets: tuple[tuple[str, tuple[int, int]], ...] = ()
    byproduct: PauliString | None = None


def _perm_from_cycles(cycles: list[list[int]]) -> tuple[int, ...]:
    perm = list(range(N))
    for cyc in cycles:
        for i, q in enumerate(cyc):
            perm[q] = cyc[(i + 1) % len(cyc)]
    return tuple(perm)


# physical-qubit cycles of the version-2 permutation gates
SWAP_CYCLES_V2 = {
    (1, 2): [[0, 4, 6, 2], [1, 5, 7, 3]],
    (1, 3): [[2, 6, 7, 3], [0, 4, 5, 1]],
    (2, 3): [[0, 2, 3, 1], [4, 6, 7, 5]],
}
CNOT_SWAPS_V2 = {
    (1, 2): [[0, 4], [1, 5]],
    (2, 1): [[0, 2], [1, 3]],
    (1, 3): [[0, 4], [2, 6]],
    (3, 1): [[0, 1], [2, 3]],
    (2, 3): [[0, 2], [4, 6]],
    (3, 2): [[0, 1], [4, 5]],
}
CZ_PHASE_PATTERNS_V2 = {
    (1, 2): (("S", 0), ("SDG", 2), ("SDG", 4), ("S", 6)),
    (1, 3): (("S", 0), ("SDG", 1), ("SDG", 4), ("S", 5)),
    (2, 3): (("S", 0), ("SDG", 1), ("SDG", 2), ("S", 3)),
}
CCZ_T_PATTERN = ("T", "TDG", "TDG", "T", "TDG", "T", "T", "TDG")

# Pairing for the transversal inter-block CZ between two version-2 blocks:
# qubit q of the control block couples to qubit CZ_PAIRING[q] of the target.
CZ_PAIRING = (3, 4, 1, 2, 5, 0, 6, 7)


def hadamard_gadget_sequence(j: int):
    """Rotation chain and leading Pauli byproduct of the logical Hadamard."""
    k = DISTINCT_QUBITS[j - 1]
    seq = (("ZZ", (k, Z_ANCHOR)), ("XX", (k, X_ANCHOR)), ("ZZ", (k, Z_ANCHOR)))
    byproduct = (
        PauliString.single(N, k, "Y")
        * PauliString.single(N, X_ANCHOR, "X")
        * PauliString.single(N, Z_ANCHOR, "Z")
    )
    return seq, byproduct


def logical_gate_table(code: CodeDefinition) -> list[LogicalGateSpec]:
    specs: list[LogicalGateSpec] = []
    if code.name == "version1":
        for j, k in zip((1, 2, 3), DISTINCT_QUBITS):
            specs.append(
                LogicalGateSpec(
                    name=f"S_{j}", version=1, kind="gadgets",
                    gadgets=(("ZZ", (k, Z_ANCHOR)),),
                )
            )
            specs.append(
                LogicalGateSpec(
                    name=f"SQRTXDG_{j}", version=1, kind="gadgets",
                    gadgets=(("XX", (k, X_ANCHOR)),),
                )
            )
            seq, byp = hadamard_gadget_sequence(j)
            specs.append(
                LogicalGateSpec(
                    name=f"H_{j}", version=1, kind="gadgets",
                    gadgets=seq, byproduct=byp,
                )
            )
        # swapping the distinguishing qubits swaps the logical labels
        for (i, j) in ((1, 2), (1, 3), (2, 3)):
            a, b = DISTINCT_QUBITS[i - 1], DISTINCT_QUBITS[j - 1]
            perm = list(range(N))
            perm[a], perm[b] = perm[b], perm[a]
            specs.append(
                LogicalGateSpec(
                    name=f"SWAP_{i}{j}", version=1, kind="permutation",
                    permutation=tuple(perm),
                )
            )
        return specs
    if code.name == "version2":
        specs.append(
            LogicalGateSpec(
                name="CCZ", version=2, kind="gates",
                gates=tuple((g, (q,)) for q, g in enumerate(CCZ_T_PATTERN)),
            )
        )
        for (i, j), pattern in CZ_PHASE_PATTERNS_V2.items():
            specs.append(
                LogicalGateSpec(
                    name=f"CZ_{i}{j}", version=2, kind="gates",
                    gates=tuple((g, (q,)) for g, q in pattern),
                )
            )
        for (i, j), cycles in SWAP_CYCLES_V2.items():
            specs.append(
                LogicalGateSpec(
                    name=f"SWAP_{i}{j}", version=2, kind="permutation",
                    permutation=_perm_from_cycles(cycles),
                )
            )
        for (i, j), cycles in CNOT_SWAPS_V2.items():
            specs.append(
                LogicalGateSpec(
                    name=f"CNOT_{i}{j}", version=2, kind="permutation",
                    permutation=_perm_from_cycles(cycles),
                )
            )
        return specs
    raise ValueError(f"no gate table for {code.name}")


def interblock_direction_allowed(control_version: int, target_version: int) -> bool:
    """Transversal block-to-block CNOT only copies compatible stabilizers."""
    if control_version == target_version:
        return True
    return (control_version, target_version) == (2, 1)


# -- permutation utilities ----------------------------------------------------

def apply_permutation(p: PauliString, perm) -> PauliString:
    """Relabel qubits: the operator at q moves to perm[q]."""
    if isinstance(perm, dict):
        perm = tuple(perm.get(q, q) for q in range(p.n))
    x = z = 0
    for q in range(p.n):
        bit = 1 << q
        if p.x & bit:
            x |= 1 << perm[q]
        if p.z & bit:
            z |= 1 << perm[q]
    return PauliString(p.n, x, z, p.phase)


def permutation_to_swaps(perm, n: int) -> list[tuple[int, int]]:
    """Transposition decomposition, for running a permutation as SWAP gates."""
    if isinstance(perm, dict):
        perm = [perm.get(q, q) for q in range(n)]
    perm = list(perm)
    swaps = []
    pos = list(range(n))  # pos[q] = wire currently holding the state born on q
    where = list(range(n))
    for q in range(n):
        target = perm[q]
        cur = pos[q]
        if cur == target:
            continue
        other = where[target]
        swaps.append((cur, target))
        pos[q], pos[other] = target, cur
        where[target], where[cur] = q, other
    return swaps


def catalog_text() -> str:
    """Human-readable dump of both code versions (round-trips the labels)."""
    lines = []
    for code in (subsystem_code(), version1(), version2()):
        lines.append(f"[{code.name}] n={code.n}")
        for tag, ops in (
            ("stabilizer", code.stabilizer_generators),
            ("logical_x", code.logical_x),
            ("logical_z", code.logical_z),
            ("gauge_x", code.gauge_x),
            ("gauge_z", code.gauge_z),
        ):
            for i, op in enumerate(ops):
                lines.append(f"  {tag}[{i}] = {op.to_label()}")
    lines.append("[complementary]")
    lines.append(f"  2to1 = {complementary_check('2to1').to_label()}")
    lines.append(f"  1to2 = {complementary_check('1to2').to_label()}")
    return "\n".join(lines)
