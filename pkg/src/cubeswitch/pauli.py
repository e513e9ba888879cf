"""Signed n-qubit Pauli operators and their conjugation by Clifford gates.

A Pauli is stored as a pair of bit masks (X part, Z part) plus a phase
exponent k with the operator equal to  i^k * X^x * Z^z  (all X factors to
the left of all Z factors).  Phases are tracked exactly over {1, i, -1, -i},
so products of Y-containing operators come out sign-exact.  Hermitian
operators always have k == popcount(x & z) mod 2.

Qubit q corresponds to bit (1 << q) of the masks.  Everything here is a
pure value: operations return new objects and are safe to share.
"""
from __future__ import annotations

from dataclasses import dataclass
import re


class DimensionError(ValueError):
    """Qubit counts of two operands disagree."""


class UnsupportedGateError(ValueError):
    """Gate kind is outside the supported Clifford set."""


_PHASE_LABELS = {0: "", 1: "i", 2: "-", 3: "-i"}
_LABEL_PHASES = {"": 0, "+": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}


class PauliString:
    """Signed Pauli operator on ``n`` qubits, bit-packed."""

    __slots__ = ("n", "x", "z", "phase")

    def __init__(self, n: int, x: int = 0, z: int = 0, phase: int = 0):
        self.n = n
        self.x = x
        self.z = z
        self.phase = phase & 3

    # -- constructors ---------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> "PauliString":
        """One-qubit X/Y/Z at ``qubit``, sign +1."""
        return cls.from_support(n, letter, [qubit])

    @classmethod
    def from_support(cls, n: int, letter: str, qubits) -> "PauliString":
        """Same letter (X, Y or Z) on every listed qubit, sign +1."""
        mask = 0
        for q in qubits:
            if not 0 <= q < n:
                raise DimensionError(f"qubit {q} outside range 0..{n - 1}")
            mask |= 1 << q
        if letter == "X":
            return cls(n, mask, 0, 0)
        if letter == "Z":
            return cls(n, 0, mask, 0)
        if letter == "Y":
            # Y = i XZ per qubit, so the +1-signed operator carries i^weight.
            return cls(n, mask, mask, mask.bit_count())
        raise ValueError(f"unknown Pauli letter {letter!r}")

    @classmethod
    def from_label(cls, label: str, n: int | None = None) -> "PauliString":
        """Parse text like ``"Z0Z1Z2Z3"``, ``"-X0X4"`` or ``"iY2"``.

        ``n`` defaults to (largest index + 1).
        """
        text = label.replace(" ", "")
        m = re.match(r"^(\+i|-i|\+|-|i)?((?:[IXYZ]\d+)*|I)$", text)
        if not m:
            raise ValueError(f"cannot parse Pauli label {label!r}")
        phase = _LABEL_PHASES[m.group(1) or ""]
        body = m.group(2)
        pairs = re.findall(r"([IXYZ])(\d+)", body)
        x = z = 0
        top = -1
        for letter, idx in pairs:
            q = int(idx)
            top = max(top, q)
            bit = 1 << q
            if (x | z) & bit:
                raise ValueError(f"qubit {q} repeated in {label!r}")
            if letter == "X":
                x |= bit
            elif letter == "Z":
                z |= bit
            elif letter == "Y":
                x |= bit
                z |= bit
                phase += 1
        if n is None:
            n = top + 1 if top >= 0 else 1
        elif top >= n:
            raise DimensionError(f"label {label!r} needs at least {top + 1} qubits")
        return cls(n, x, z, phase)

    # -- basic queries ---------------------------------------------------

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0 and self.phase == 0

    def is_hermitian(self) -> bool:
        return (self.phase - (self.x & self.z).bit_count()) % 2 == 0

    def sign(self) -> int:
        """+1 or -1 for a Hermitian operator."""
        k = (self.phase - (self.x & self.z).bit_count()) % 4
        if k == 0:
            return 1
        if k == 2:
            return -1
        raise ValueError(f"{self} is not Hermitian")

    def letter(self, qubit: int) -> str:
        bit = 1 << qubit
        return ("I", "X", "Z", "Y")[(1 if self.x & bit else 0) + (2 if self.z & bit else 0)]

    def support(self) -> list[int]:
        mask = self.x | self.z
        return [q for q in range(self.n) if mask & (1 << q)]

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise DimensionError(f"size mismatch: {self.n} vs {other.n}")
        # moving other's X block left across self's Z block gives (-1) per overlap
        phase = self.phase + other.phase + 2 * (self.z & other.x).bit_count()
        return PauliString(self.n, self.x ^ other.x, self.z ^ other.z, phase)

    def commutes(self, other: "PauliString") -> bool:
        if self.n != other.n:
            raise DimensionError(f"size mismatch: {self.n} vs {other.n}")
        return ((self.x & other.z).bit_count() + (self.z & other.x).bit_count()) % 2 == 0

    def negate(self) -> "PauliString":
        return PauliString(self.n, self.x, self.z, self.phase + 2)

    def with_sign(self, sign: int) -> "PauliString":
        """Copy of self carrying the given +/-1 sign (self must be Hermitian)."""
        p = PauliString(self.n, self.x, self.z, (self.x & self.z).bit_count())
        return p if sign > 0 else p.negate()

    def adjoint(self) -> "PauliString":
        k = (self.x & self.z).bit_count()
        return PauliString(self.n, self.x, self.z, 2 * k - self.phase)

    def embed(self, n: int, positions: list[int]) -> "PauliString":
        """Map qubit i of self to positions[i] of an n-qubit operator."""
        x = z = 0
        for i in range(self.n):
            bit = 1 << i
            if self.x & bit:
                x |= 1 << positions[i]
            if self.z & bit:
                z |= 1 << positions[i]
        return PauliString(n, x, z, self.phase)

    def restrict(self, positions: list[int]) -> "PauliString":
        """Pauli on len(positions) qubits picking out the given wires (phase kept)."""
        x = z = 0
        for i, q in enumerate(positions):
            bit = 1 << q
            if self.x & bit:
                x |= 1 << i
            if self.z & bit:
                z |= 1 << i
        return PauliString(len(positions), x, z, self.phase)

    # -- text ---------------------------------------------------------------

    def to_label(self) -> str:
        k = (self.phase - (self.x & self.z).bit_count()) % 4
        head = _PHASE_LABELS[k]
        body = "".join(
            f"{self.letter(q)}{q}" for q in range(self.n) if (self.x | self.z) & (1 << q)
        )
        return (head + body) if body else (head + "I" if head else "I")

    def __repr__(self) -> str:
        return f"PauliString({self.to_label()!r}, n={self.n})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PauliString)
            and self.n == other.n
            and self.x == other.x
            and self.z == other.z
            and self.phase == other.phase
        )

    def __hash__(self):
        return hash((self.n, self.x, self.z, self.phase))


# -- Clifford gates ---------------------------------------------------------

GATE_KINDS_1Q = ("H", "S", "SDG", "SQRTXDG", "RX", "X", "Y", "Z")
GATE_KINDS_2Q = ("CNOT", "CZ", "SWAP", "XX", "YY", "ZZ")
SELF_INVERSE = {"H", "X", "Y", "Z", "CNOT", "CZ", "SWAP"}


@dataclass(frozen=True)
class CliffordGate:
    """A named Clifford gate acting on one or two qubit indices.

    XX is the rotation (I + iXX)/sqrt(2); YY and ZZ are (I - iPP)/sqrt(2)
    and RX is (I - iX)/sqrt(2).  SQRTXDG is the inverse square root of X.
    """

    kind: str
    targets: tuple[int, ...]

    def __post_init__(self):
        if self.kind in GATE_KINDS_1Q:
            if len(self.targets) != 1:
                raise UnsupportedGateError(f"{self.kind} takes one target")
        elif self.kind in GATE_KINDS_2Q:
            if len(self.targets) != 2 or self.targets[0] == self.targets[1]:
                raise UnsupportedGateError(f"{self.kind} takes two distinct targets")
        else:
            raise UnsupportedGateError(f"unsupported gate kind {self.kind!r}")

    def __repr__(self):
        return f"{self.kind}({', '.join(map(str, self.targets))})"


def _img(phase: int, x_slots: tuple[int, ...], z_slots: tuple[int, ...]):
    x = sum(1 << s for s in x_slots)
    z = sum(1 << s for s in z_slots)
    return (phase, x, z)


# Conjugation images g P g^dagger of the slot-local generators X_s / Z_s.
# Slot 0 is targets[0] (control for CNOT/CZ), slot 1 is targets[1].
# Encoded as (phase exponent, x mask over slots, z mask over slots).
_CONJ_TABLE: dict[str, dict[tuple[str, int], tuple[int, int, int]]] = {
    "H": {("X", 0): _img(0, (), (0,)), ("Z", 0): _img(0, (0,), ())},
    "S": {("X", 0): _img(1, (0,), (0,)), ("Z", 0): _img(0, (), (0,))},
    "SDG": {("X", 0): _img(3, (0,), (0,)), ("Z", 0): _img(0, (), (0,))},
    # sqrt(X)^dag: X -> X, Z -> Y
    "SQRTXDG": {("X", 0): _img(0, (0,), ()), ("Z", 0): _img(1, (0,), (0,))},
    # RX = (I - iX)/sqrt2: X -> X, Z -> -Y
    "RX": {("X", 0): _img(0, (0,), ()), ("Z", 0): _img(3, (0,), (0,))},
    "X": {("X", 0): _img(0, (0,), ()), ("Z", 0): _img(2, (), (0,))},
    "Y": {("X", 0): _img(2, (0,), ()), ("Z", 0): _img(2, (), (0,))},
    "Z": {("X", 0): _img(2, (0,), ()), ("Z", 0): _img(0, (), (0,))},
    "CNOT": {
        ("X", 0): _img(0, (0, 1), ()),
        ("X", 1): _img(0, (1,), ()),
        ("Z", 0): _img(0, (), (0,)),
        ("Z", 1): _img(0, (), (0, 1)),
    },
    "CZ": {
        ("X", 0): _img(0, (0,), (1,)),
        ("X", 1): _img(0, (1,), (0,)),
        ("Z", 0): _img(0, (), (0,)),
        ("Z", 1): _img(0, (), (1,)),
    },
    "SWAP": {
        ("X", 0): _img(0, (1,), ()),
        ("X", 1): _img(0, (0,), ()),
        ("Z", 0): _img(0, (), (1,)),
        ("Z", 1): _img(0, (), (0,)),
    },
    # XX = (I + iXX)/sqrt2: anticommuting P -> +i (XX) P
    "XX": {
        ("X", 0): _img(0, (0,), ()),
        ("X", 1): _img(0, (1,), ()),
        ("Z", 0): _img(1, (0, 1), (0,)),   # Z0 -> Y0 X1
        ("Z", 1): _img(1, (0, 1), (1,)),   # Z1 -> X0 Y1
    },
    # YY = (I - iYY)/sqrt2: anticommuting P -> -i (YY) P
    "YY": {
        ("X", 0): _img(3, (1,), (0, 1)),   # X0 -> -Z0 Y1
        ("X", 1): _img(3, (0,), (0, 1)),   # X1 -> -Y0 Z1
        ("Z", 0): _img(1, (0, 1), (1,)),   # Z0 -> X0 Y1
        ("Z", 1): _img(1, (0, 1), (0,)),   # Z1 -> Y0 X1
    },
    # ZZ = (I - iZZ)/sqrt2: anticommuting P -> -i (ZZ) P
    "ZZ": {
        ("X", 0): _img(1, (0,), (0, 1)),   # X0 -> Y0 Z1
        ("X", 1): _img(1, (1,), (0, 1)),   # X1 -> Z0 Y1
        ("Z", 0): _img(0, (), (0,)),
        ("Z", 1): _img(0, (), (1,)),
    },
}


def conjugate(gate: CliffordGate, p: PauliString) -> PauliString:
    """Return g p g^dagger with the exact sign."""
    table = _CONJ_TABLE.get(gate.kind)
    if table is None:
        raise UnsupportedGateError(f"unsupported gate kind {gate.kind!r}")
    slots = gate.targets
    for q in slots:
        if not 0 <= q < p.n:
            raise DimensionError(f"gate target {q} outside operator range")
    sup_x = sup_z = 0
    for s, q in enumerate(slots):
        bit = 1 << q
        if p.x & bit:
            sup_x |= 1 << s
        if p.z & bit:
            sup_z |= 1 << s
    if sup_x == 0 and sup_z == 0:
        return p
    # Rebuild p as (off-support part) * (image of on-support generators),
    # preserving the canonical X-block / Z-block factor order.
    slot_mask = 0
    for q in slots:
        slot_mask |= 1 << q
    out = PauliString(p.n, p.x & ~slot_mask, 0, p.phase)
    for s in range(len(slots)):
        if sup_x & (1 << s):
            out = out * _local_image(table, ("X", s), slots, p.n)
    out = out * PauliString(p.n, 0, p.z & ~slot_mask, 0)
    for s in range(len(slots)):
        if sup_z & (1 << s):
            out = out * _local_image(table, ("Z", s), slots, p.n)
    return out


def _local_image(table, key, slots, n: int) -> PauliString:
    phase, xs, zs = table[key]
    x = z = 0
    for s, q in enumerate(slots):
        if xs & (1 << s):
            x |= 1 << q
        if zs & (1 << s):
            z |= 1 << q
    return PauliString(n, x, z, phase)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    return a * b


def commutes(a: PauliString, b: PauliString) -> bool:
    return a.commutes(b)


def pauli_basis(n_qubits: int, qubits: tuple[int, ...], n: int):
    """All non-identity +1-signed Paulis supported on the given wires.

    Yields 3 operators for one wire, 15 for two: the fault set of a gate.
    """
    letters = ("I", "X", "Z", "Y")
    k = len(qubits)
    for code in range(1, 4 ** k):
        x = z = extra = 0
        c = code
        for q in qubits:
            l = letters[c & 3]
            c >>= 2
            if l == "X":
                x |= 1 << q
            elif l == "Z":
                z |= 1 << q
            elif l == "Y":
                x |= 1 << q
                z |= 1 << q
                extra += 1
        yield PauliString(n, x, z, extra)
