"""Meet-in-the-middle version of the gadget search (depths 5-7).

Split W = W2 W1 and match  W1 Vin == e^{i g} W2^dag Vout  by hashing both
sides up to global phase.  Alphabet: pi/4 rotations exp(s i pi/4 P Q) over
data-ancilla pairs (P, Q any Pauli letters), optionally ancilla-ancilla.

Run: python3 tools/find_gadgets_mitm.py <total_len> <alphabet>
"""
import itertools
import sys
from collections import defaultdict

import numpy as np

sys.path.insert(0, "src")

from find_gadgets import (
    DATA_ANC_PAIRS, A1, A2, RECOVERY, anc_state, ft_filter, fmt,
    pauli_mat, rotation, rotation_pauli, target_columns, matches,
)

LETTERS = ("X", "Y", "Z")


def build_alphabet(which):
    gates = {}
    pair_sets = list(DATA_ANC_PAIRS)
    if which.endswith("+aa"):
        pair_sets = pair_sets + [(A1, A2)]
    for a, b in pair_sets:
        for p in LETTERS:
            for q in LETTERS:
                for sign in (1, -1):
                    gates[(p + q, (a, b), sign)] = (
                        rotation(p, q, a, b, sign),
                        rotation_pauli(p, q, a, b),
                    )
    return gates


def canon_bytes(mat):
    flat = mat.ravel()
    mags = np.round(np.abs(flat), 9)
    idx = int(np.argmax(mags))
    ref = flat[idx]
    normed = flat * (abs(ref) / ref)
    return np.round(normed, 6).tobytes()


def enumerate_products(gates, length, start):
    """Yield (seq, matrix @ start) over all gate sequences of given length."""
    items = list(gates.items())
    stack = [(tuple(), start)]
    for _ in range(length):
        new = []
        for seq, mat in stack:
            for key, (g, _) in items:
                new.append((seq + (key,), g @ mat))
        stack = new
    return stack


def search_mitm(rot, anc_in, total_len, gates, verbose=True):
    vin, vout = target_columns(rot, anc_in)
    anc_out = "plus" if anc_in == "bell" else "bell"
    l2 = total_len // 2
    l1 = total_len - l2
    items = list(gates.items())

    # suffix side: W2^dag Vout for suffix sequences (applied left->right
    # means suffix sequence s1..s_l2 acts as product S = M(s_l2)...M(s1);
    # we need S^dag Vout = M(s1)^dag ... M(s_l2)^dag Vout)
    table = defaultdict(list)
    suffixes = [(tuple(), vout)]
    for _ in range(l2):
        new = []
        for seq, mat in suffixes:
            for key, (g, _) in items:
                new.append(((key,) + seq, g.conj().T @ mat))
        suffixes = new
        for seq, mat in suffixes:
            pass
    for seq, mat in suffixes:
        table[canon_bytes(mat)].append(seq)

    hits = []
    stack = [(tuple(), vin)]
    for depth in range(l1):
        new = []
        for seq, mat in stack:
            for key, (g, _) in items:
                new.append((seq + (key,), g @ mat))
        stack = new
    for seq, mat in stack:
        found = table.get(canon_bytes(mat))
        if found:
            for suf in found:
                hits.append(list(seq + suf))
    # validate + FT filter
    valid = []
    for h in hits:
        acc = vin
        for key in h:
            acc = gates[key][0] @ acc
        if matches(acc, vout):
            valid.append(h)
    good = [h for h in valid if ft_filter(h, gates, anc_out)]
    return valid, good


def main():
    total_len = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    which = sys.argv[2] if len(sys.argv) > 2 else "dressed"
    gates = build_alphabet(which)
    print(f"alphabet {which}: {len(gates)} gates, total depth {total_len}")
    for rot in ("ZZ", "XX"):
        for anc_in in ("bell", "plus"):
            valid, good = search_mitm(rot, anc_in, total_len, gates)
            print(f"== {rot} rotation, {anc_in} -> "
                  f"{'plus' if anc_in == 'bell' else 'bell'}: "
                  f"{len(valid)} matches, {len(good)} weakly FT")
            for h in good[:6]:
                print("    ", fmt(h))
            sys.stdout.flush()


if __name__ == "__main__":
    main()
