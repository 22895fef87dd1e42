#!/usr/bin/env python3
"""Independent reference computation for rack-space homology.

Builds boundary matrices straight from the face formulas and reduces them
with a naive Smith normal form over Python integers. Used only to produce
the expected values frozen into the C++ test suites.
"""
import itertools
import sys


def dihedral(n):
    return [[(2 * b - a) % n for b in range(n)] for a in range(n)]


def trivial(n):
    return [[a for _ in range(n)] for a in range(n)]


def op(r, a, b):
    return r[a][b]


def cubes(r, k):
    return list(itertools.product(range(len(r)), repeat=k))


def faces(r, x, i, extended):
    # x is a tuple; i is 1-based face direction; extended shifts by one.
    j = i if extended else i - 1  # 0-based position of the acting entry
    f0 = x[:j] + x[j + 1:]
    f1 = tuple(op(r, y, x[j]) for y in x[:j]) + x[j + 1:]
    return f0, f1


def boundary(r, n, extended):
    """Matrix of d_n as a list of rows, rows = (n-1)-cubes, cols = n-cubes."""
    off = 1 if extended else 0
    src = cubes(r, n + off)
    if n == 0:
        return [], src
    dst = cubes(r, n - 1 + off)
    idx = {c: k for k, c in enumerate(dst)}
    m = [[0] * len(src) for _ in dst]
    for col, x in enumerate(src):
        for i in range(1, n + 1):
            f0, f1 = faces(r, x, i, extended)
            s = -1 if i % 2 else 1
            m[idx[f1]][col] += s
            m[idx[f0]][col] -= s
    return m, src


def snf_diagonal(m):
    """Invariant factors (nonzero) of an integer matrix; naive algorithm."""
    a = [row[:] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best, piv = abs(a[i][j]), (i, j)
        if piv is None:
            break
        i, j = piv
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                # move smallest remaining entry of row/col t to pivot
                cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
                _, i, j = min(cand)
                a[t], a[i] = a[i], a[t]
                for row in a:
                    row[t], row[j] = row[j], row[t]
                continue
            # divisibility: fold any entry not divisible by pivot into row t
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                done = False
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def homology(r, n, extended):
    off = 1 if extended else 0
    ncubes = len(r) ** (n + off)
    dn, _ = boundary(r, n, extended)
    rank_n = len(snf_diagonal(dn)) if n > 0 else 0
    dn1, _ = boundary(r, n + 1, extended)
    d = snf_diagonal(dn1)
    free = ncubes - rank_n - len(d)
    tors = [x for x in d if x > 1]
    return free, tors


def chain_boundary(r, chain, extended):
    out = {}
    for x, k in chain.items():
        n = len(x) - (1 if extended else 0)
        for i in range(1, n + 1):
            f0, f1 = faces(r, x, i, extended)
            s = -1 if i % 2 else 1
            out[f1] = out.get(f1, 0) + s * k
            out[f0] = out.get(f0, 0) - s * k
    return {c: k for c, k in out.items() if k}


def parse_terms(text):
    chain = {}
    for tok in text.split():
        sign = -1 if tok[0] == '-' else 1
        digits = tok.lstrip('+-')
        c = tuple(int(ch) for ch in digits)
        chain[c] = chain.get(c, 0) + sign
    return chain


C = "-012 -202 -122 +121 +102 +110 -021 -101 -211 +212 +201 +220"
B = "-210 -202 -221 +211 +122 +000"
BP = "+221 +202 +210 -122 -000 -211"


def main():
    T = dihedral(3)
    racks = {"trivial:1": trivial(1), "trivial:2": trivial(2),
             "trivial:3": trivial(3), "dihedral:3": T,
             "dihedral:4": dihedral(4)}
    for name, r in racks.items():
        for ext in (False, True):
            top = 4 if len(r) <= 3 else 3
            if ext and len(r) > 3:
                top = 2
            for n in range(0, top + (0 if ext else 0)):
                f, t = homology(r, n, ext)
                print(f"{name} {'BRR' if ext else 'BR '} H_{n} = Z^{f} tors {t}")
    print("dC =", chain_boundary(T, parse_terms(C), False))
    print("dB =", chain_boundary(T, parse_terms(B), True))
    print("dB' =", chain_boundary(T, parse_terms(BP), True))




def automorphisms(r):
    n = len(r)
    return [p for p in itertools.permutations(range(n))
            if all(p[r[a][b]] == r[p[a]][p[b]] for a in range(n) for b in range(n))]


def rack_identity_violations(t):
    n = len(t)
    return [(a, b, c) for a in range(n) for b in range(n) for c in range(n)
            if t[t[a][b]][c] != t[t[a][c]][t[b][c]]]


def extras():
    print("aut(dihedral:4) =", automorphisms(dihedral(4)))
    print("aut(dihedral:5) count =", len(automorphisms(dihedral(5))))
    bad = [[1, 0, 0], [2, 1, 1], [0, 2, 2]]  # column 0 is a 3-cycle, others identity
    print("violations of", bad, rack_identity_violations(bad)[:3])


if __name__ == "__main__":
    main()
    extras()
