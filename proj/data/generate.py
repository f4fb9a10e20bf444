#!/usr/bin/env python3
"""Regenerates the shipped group tables and character tables.

The explicit fusion tables under tables/ are entered by hand and are not
produced here.
"""
import cmath
import itertools
import json
import math
import os

HERE = os.path.dirname(os.path.abspath(__file__))


def write(path, obj):
    with open(os.path.join(HERE, path), "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")


def value(z):
    z = complex(z)
    re = 0.0 if abs(z.real) < 1e-15 else z.real
    im = 0.0 if abs(z.imag) < 1e-15 else z.imag
    if im == 0.0:
        return int(round(re)) if abs(re - round(re)) < 1e-15 else re
    return [re, im]


# --- group tables ----------------------------------------------------------

def cyclic_names(n):
    return ["e" if k == 0 else "g" if k == 1 else "g%d" % k for k in range(n)]


def group_json(name, elements, mul, note):
    idx = {e: i for i, e in enumerate(elements)}
    table = [[mul(a, b) for b in elements] for a in elements]
    return {"kind": "group", "name": name, "note": note, "elements": elements,
            "identity": elements[0], "table": table}


def cyclic(n):
    names = cyclic_names(n)
    return group_json("Z/%d" % n, names, lambda a, b: names[(names.index(a) + names.index(b)) % n],
                      "element gk is the k-th power of the generator g")


def compose(p, q):
    """Permutation product pq: apply q first, then p (tuples on 1..n)."""
    return tuple(p[q[i] - 1] for i in range(len(q)))


def s3():
    perms = {
        "e": (1, 2, 3),
        "(12)": (2, 1, 3),
        "(13)": (3, 2, 1),
        "(23)": (1, 3, 2),
        "(123)": (2, 3, 1),
        "(132)": (3, 1, 2),
    }
    inv = {v: k for k, v in perms.items()}
    names = list(perms)
    return group_json("S3", names, lambda a, b: inv[compose(perms[a], perms[b])],
                      "permutations of {1,2,3}; st means apply t first, then s")


def dihedral4():
    # r = rotation (1234), s = reflection fixing 1 and 3: (24)
    r = (2, 3, 4, 1)
    s = (1, 4, 3, 2)
    e = (1, 2, 3, 4)
    perms = {}
    rk = e
    for k in range(4):
        perms["e" if k == 0 else "r" if k == 1 else "r%d" % k] = rk
        rk = compose(r, rk)
    rk = e
    for k in range(4):
        perms["s" if k == 0 else "sr" if k == 1 else "sr%d" % k] = compose(s, rk)
        rk = compose(r, rk)
    inv = {v: k for k, v in perms.items()}
    names = list(perms)
    return group_json("D4", names, lambda a, b: inv[compose(perms[a], perms[b])],
                      "symmetries of a square: r = (1234), s = (24); srk means s composed after r^k")


def klein4():
    names = ["e", "a", "b", "ab"]
    bits = {"e": 0, "a": 1, "b": 2, "ab": 3}
    inv = {v: k for k, v in bits.items()}
    return group_json("Z/2xZ/2", names, lambda x, y: inv[bits[x] ^ bits[y]], "a and b generate the two Z/2 factors")


def quaternion8():
    # quaternion units as (sign, unit) with i*j = k
    units = {"1": (1, "1"), "-1": (-1, "1"), "i": (1, "i"), "-i": (-1, "i"),
             "j": (1, "j"), "-j": (-1, "j"), "k": (1, "k"), "-k": (-1, "k")}
    table = {("1", u): (1, u) for u in "1ijk"}
    table.update({(u, "1"): (1, u) for u in "1ijk"})
    table.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                  ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                  ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    inv = {v: k for k, v in units.items()}

    def mul(a, b):
        sa, ua = units[a]
        sb, ub = units[b]
        s, u = table[(ua, ub)]
        return inv[(sa * sb * s, u)]

    return group_json("Q8", list(units), mul, "unit quaternions with ij = k")


# --- character tables ------------------------------------------------------

def char_json(name, order, classes, irreps):
    return {"kind": "characters", "name": name, "order": order,
            "classes": [{"name": c, "size": s} for c, s in classes],
            "irreducibles": [{"name": n, "dim": int(round(v[0].real if isinstance(v[0], complex) else v[0])),
                              "values": [value(x) for x in v]} for n, v in irreps]}


def cyclic_characters(n):
    classes = [(c, 1) for c in cyclic_names(n)]
    irreps = []
    for j in range(n):
        label = "e" if j == 0 else "w" if j == 1 else "w%d" % j
        irreps.append((label, [cmath.exp(2j * math.pi * j * k / n) for k in range(n)]))
    return char_json("Z/%d" % n, n, classes, irreps)


def main():
    for n in range(1, 13):
        write("groups/z%d.json" % n, cyclic(n))
        write("characters/rep_z%d.json" % n, cyclic_characters(n))
    write("groups/s3.json", s3())
    write("groups/d4.json", dihedral4())
    write("groups/klein4.json", klein4())
    write("groups/q8.json", quaternion8())

    write("characters/rep_s3.json", char_json("S3", 6, [("1", 1), ("(12)", 3), ("(123)", 2)], [
        ("e", [1, 1, 1]), ("sgn", [1, -1, 1]), ("std", [2, 0, -1])]))
    write("characters/rep_s4.json", char_json("S4", 24,
        [("1", 1), ("(12)", 6), ("(12)(34)", 3), ("(123)", 8), ("(1234)", 6)], [
        ("e", [1, 1, 1, 1, 1]), ("sgn", [1, -1, 1, 1, -1]), ("rho", [2, 0, 2, -1, 0]),
        ("v", [3, 1, -1, 0, -1]), ("vsgn", [3, -1, -1, 0, 1])]))
    w = cmath.exp(2j * math.pi / 3)
    write("characters/rep_a4.json", char_json("A4", 12,
        [("1", 1), ("(12)(34)", 3), ("(123)", 4), ("(132)", 4)], [
        ("e", [1, 1, 1, 1]), ("w", [1, 1, w, w * w]), ("w2", [1, 1, w * w, w]), ("t", [3, -1, 0, 0])]))
    phi = (1 + math.sqrt(5)) / 2
    write("characters/rep_a5.json", char_json("A5", 60,
        [("1", 1), ("(12)(34)", 15), ("(123)", 20), ("(12345)", 12), ("(13524)", 12)], [
        ("e", [1, 1, 1, 1, 1]), ("p3", [3, -1, 0, phi, 1 - phi]), ("p3b", [3, -1, 0, 1 - phi, phi]),
        ("p4", [4, 0, 1, -1, -1]), ("p5", [5, 1, -1, 0, 0])]))
    d4_classes = [("e", 1), ("r2", 1), ("r", 2), ("s", 2), ("sr", 2)]
    write("characters/rep_d4.json", char_json("D4", 8, d4_classes, [
        ("e", [1, 1, 1, 1, 1]), ("chi1", [1, 1, 1, -1, -1]), ("chi2", [1, 1, -1, 1, -1]),
        ("chi3", [1, 1, -1, -1, 1]), ("rho", [2, -2, 0, 0, 0])]))
    q8_classes = [("1", 1), ("-1", 1), ("i", 2), ("j", 2), ("k", 2)]
    write("characters/rep_q8.json", char_json("Q8", 8, q8_classes, [
        ("e", [1, 1, 1, 1, 1]), ("chi_i", [1, 1, 1, -1, -1]), ("chi_j", [1, 1, -1, 1, -1]),
        ("chi_k", [1, 1, -1, -1, 1]), ("rho", [2, -2, 0, 0, 0])]))


if __name__ == "__main__":
    main()
