"""Search for the two-qubit-rotation gadget circuits.

A gadget applies a ZZ or XX rotation to two data qubits using a pair of
ancillas, touching the data only through two-qubit gates that each involve
at least one ancilla.  Constraints searched for:

  * noiseless action = (fixed Pauli recovery) * ideal rotation, with the
    recovery matching the published table exactly
    (rows Bell / |++> input, columns ZZ / XX rotation);
  * ancillas convert Bell -> |++> or |++> -> Bell;
  * weak fault tolerance: every single two-qubit Pauli fault after any
    gate either leaves a weight<=1 data error or disturbs the ancilla
    pair detectably.

Gates are pi/4 rotations exp(s i pi/4 P(x) Q(y)); "dressed" alphabets allow
mixed Pauli types (equivalent to sandwiching native rotations between
single-qubit Cliffords).

Run:  python3 tools/find_gadgets.py <max_len> <alphabet>
  alphabet: native | dressed | dressed+aa
"""
import sys

import numpy as np

sys.path.insert(0, "src")

from cubeswitch.pauli import PauliString, pauli_basis

D1, D2, A1, A2 = 0, 1, 2, 3
N = 4
DATA_ANC_PAIRS = [(D1, A1), (D1, A2), (D2, A1), (D2, A2)]

PAULI_MATS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def pauli_mat(letters):
    mat = np.array([[1.0 + 0j]])
    for l in letters:  # qubit 0 least significant
        mat = np.kron(PAULI_MATS[l], mat)
    return mat


def two_qubit_pauli(p, q, a, b):
    letters = ["I"] * N
    letters[a] = p
    letters[b] = q
    return pauli_mat(letters)


def rotation(p, q, a, b, sign):
    gen = two_qubit_pauli(p, q, a, b)
    return (np.eye(1 << N) + sign * 1j * gen) / np.sqrt(2)


def rotation_pauli(p, q, a, b) -> PauliString:
    out = PauliString.single(N, a, p)
    return out * PauliString.single(N, b, q)


def build_alphabet(which):
    gates = {}
    if which == "native":
        for p in ("X", "Y", "Z"):
            sign = 1 if p == "X" else -1
            for a, b in DATA_ANC_PAIRS:
                gates[(p + p, (a, b), sign)] = (
                    rotation(p, p, a, b, sign), rotation_pauli(p, p, a, b),
                )
        return gates
    pairs = list(DATA_ANC_PAIRS)
    ps = ("X", "Z")
    qs = ("X", "Y", "Z")
    for a, b in pairs:
        for p in ps:
            for q in qs:
                for sign in (1, -1):
                    gates[(p + q, (a, b), sign)] = (
                        rotation(p, q, a, b, sign), rotation_pauli(p, q, a, b),
                    )
    if which == "dressed+aa":
        for p in qs:
            for q in qs:
                for sign in (1, -1):
                    gates[(p + q, (A1, A2), sign)] = (
                        rotation(p, q, A1, A2, sign), rotation_pauli(p, q, A1, A2),
                    )
    return gates


def anc_state(name):
    if name == "bell":
        v = np.zeros(4, dtype=complex)
        v[0] = v[3] = 1 / np.sqrt(2)
        return v
    return np.full(4, 0.5, dtype=complex)


RECOVERY = {  # letters on (d1, d2, a1, a2)
    ("ZZ", "bell"): "ZIZI",
    ("ZZ", "plus"): "XIXI",
    ("XX", "bell"): "IZYI",
    ("XX", "plus"): "YIYI",
}


def target_columns(rot, anc_in):
    anc_out = "plus" if anc_in == "bell" else "bell"
    sign = 1 if rot == "XX" else -1
    letter = rot[0]
    U_data = (np.eye(1 << N) + sign * 1j * two_qubit_pauli(letter, letter, D1, D2)) / np.sqrt(2)
    code = RECOVERY[(rot, anc_in)]
    R = pauli_mat([code[0], code[1], code[2], code[3]])
    a_in = anc_state(anc_in)
    a_out = anc_state(anc_out)
    vin = np.zeros((16, 4), dtype=complex)
    vout = np.zeros((16, 4), dtype=complex)
    for k in range(4):  # k encodes (d1 bit, d2 bit) as bit0, bit1
        for anc_idx in range(4):
            full = k | (anc_idx << 2)
            vin[full, k] += a_in[anc_idx]
            vout[full, k] += a_out[anc_idx]
    vout = R @ (U_data @ vout)
    return vin, vout


def matches(wv, vout):
    P = vout.conj().T @ wv
    lam = P[0, 0]
    if abs(abs(lam) - 1.0) > 1e-9:
        return False
    return np.allclose(P, lam * np.eye(4), atol=1e-9)


def conj_through(pauli, gen_pauli, sign):
    """Conjugate a Pauli through exp(sign*i*pi/4*gen): P -> gen*P*(sign*i) if odd."""
    if pauli.commutes(gen_pauli):
        return pauli
    out = gen_pauli * pauli
    out.phase = (out.phase + (1 if sign > 0 else 3)) & 3
    return out


def ft_filter(seq, gates, anc_out):
    if anc_out == "plus":
        checks = [PauliString.from_label("X2", 4), PauliString.from_label("X3", 4)]
    else:
        checks = [PauliString.from_label("X2X3", 4), PauliString.from_label("Z2Z3", 4)]
    for i, key in enumerate(seq):
        _, targets, _ = key
        for fault in pauli_basis(4, targets, 4):
            e = fault
            for key2 in seq[i + 1:]:
                _, gen = gates[key2]
                e = conj_through(e, gen, key2[2])
            detected = any(not e.commutes(c) for c in checks)
            data_weight = ((e.x | e.z) & 0b0011).bit_count()
            if not detected and data_weight > 1:
                return False
    return True


def search(rot, anc_in, max_len, gates, cap=200000):
    vin, vout = target_columns(rot, anc_in)
    anc_out = "plus" if anc_in == "bell" else "bell"
    hits = []
    items = list(gates.items())

    def dfs(depth, seq, wv):
        if matches(wv, vout):
            hits.append(list(seq))
            if len(hits) > cap:
                raise RuntimeError("too many hits")
            return
        if depth == max_len:
            return
        for key, (mat, _) in items:
            seq.append(key)
            dfs(depth + 1, seq, mat @ wv)
            seq.pop()

    dfs(0, [], vin.copy())
    good = [h for h in hits if ft_filter(h, gates, anc_out)]
    return hits, good


def fmt(seq):
    names = {0: "d1", 1: "d2", 2: "a1", 3: "a2"}
    return " . ".join(
        f"{'+' if s > 0 else '-'}{pq}({names[a]},{names[b]})" for pq, (a, b), s in seq
    )


def main():
    max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    which = sys.argv[2] if len(sys.argv) > 2 else "dressed"
    gates = build_alphabet(which)
    print(f"alphabet {which}: {len(gates)} gates, depth {max_len}")
    for rot in ("ZZ", "XX"):
        for anc_in in ("bell", "plus"):
            hits, good = search(rot, anc_in, max_len, gates)
            print(f"== {rot} rotation, {anc_in} -> "
                  f"{'plus' if anc_in == 'bell' else 'bell'}: "
                  f"{len(hits)} matches, {len(good)} weakly FT")
            for h in good[:8]:
                print("    ", fmt(h))
            sys.stdout.flush()


if __name__ == "__main__":
    main()
