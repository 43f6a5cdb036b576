#!/usr/bin/env python3
"""Independent fingerprint oracle for the group catalog.

Builds every catalog group with sympy (permutation groups, finitely presented
groups via coset enumeration, matrix groups via their action on vectors) and
prints the fingerprint blocks frozen into crates/core/data/fingerprints.txt.

This script shares no code with the Rust crate. Run:

    python3 tools/oracle/fingerprints.py > crates/core/data/fingerprints.txt
"""
from collections import Counter
from math import gcd
from itertools import product

from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.free_groups import free_group
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.named_groups import CyclicGroup
from sympy.combinatorics.group_constructs import DirectProduct
from sympy import factorint


def perm(degree, cycles):
    return Permutation([[c - 1 for c in cyc] for cyc in cycles], size=degree)


def pg(degree, gens):
    return PermutationGroup([perm(degree, g) for g in gens])


def matrix_group(p, gens):
    """Permutation representation on the nonzero vectors of F_p^2."""
    vecs = [v for v in product(range(p), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}
    out = []
    for m in gens:
        img = []
        for v in vecs:
            w = ((m[0][0] * v[0] + m[0][1] * v[1]) % p, (m[1][0] * v[0] + m[1][1] * v[1]) % p)
            img.append(index[w])
        out.append(Permutation(img))
    return PermutationGroup(out)


def fp(gen_names, relators):
    F = free_group(gen_names)
    fg = F[0]
    gens = F[1:]
    rels = relators(*gens)
    G = FpGroup(fg, rels)
    P, _ = G._to_perm_group()
    return P


def invariant_factors(primary):
    by_prime = {}
    for q in primary:
        (p, k), = factorint(q).items()
        by_prime.setdefault(p, []).append(q)
    for p in by_prime:
        by_prime[p].sort(reverse=True)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = []
    for i in range(length):
        d = 1
        for v in by_prime.values():
            if i < len(v):
                d *= v[i]
        factors.append(d)
    return sorted(factors)


def fingerprint(G):
    elems = list(G.generate())
    orders = Counter(e.order() for e in elems)
    classes = sorted(len(c) for c in G.conjugacy_classes())
    center = G.center().order()
    derived = G.derived_subgroup().order()
    ab = invariant_factors([q for q in G.abelian_invariants() if q > 1])
    return {
        "order": G.order(),
        "orders": " ".join(f"{k}:{v}" for k, v in sorted(orders.items())),
        "classes": " ".join(str(c) for c in classes),
        "center": center,
        "derived": derived,
        "abelianization": " ".join(str(d) for d in ab),
    }


def cyc(n):
    return CyclicGroup(n)


A4 = pg(4, [[(1, 2, 3)], [(1, 2), (3, 4)]])
S4 = pg(4, [[(1, 2)], [(1, 2, 3, 4)]])
A5 = pg(5, [[(1, 2, 3, 4, 5)], [(1, 2, 3)]])
S5 = pg(5, [[(1, 2, 3, 4, 5)], [(1, 2)]])
S3 = pg(3, [[(1, 2)], [(1, 2, 3)]])
D8 = pg(4, [[(1, 2, 3, 4)], [(1, 3)]])

SL23 = matrix_group(3, [((0, 1), (2, 0)), ((1, 1), (1, 2)), ((1, 1), (0, 1))])
Q8 = matrix_group(3, [((0, 1), (2, 0)), ((1, 1), (1, 2))])
GL23 = matrix_group(3, [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((2, 0), (0, 1))])
BINARY_OCTAHEDRAL = matrix_group(7, [((0, 1), (6, 0)), ((0, 2), (3, 3))])
C4_CENTRAL_SL23 = matrix_group(5, [((0, 1), (4, 0)), ((1, 1), (2, 3)), ((2, 0), (0, 2))])

# A4 : C4 as A4 on {1..4} extended by (1,2)(5,6,7,8)
A4_C4 = pg(8, [[(1, 2, 3)], [(1, 2), (3, 4)], [(1, 2), (5, 6, 7, 8)]])

C2C2_C9 = fp("a, b, t", lambda a, b, t: [a**2, b**2, t**9, a * b * a**-1 * b**-1,
                                         t**-1 * a * t * b**-1, t**-1 * b * t * (a * b)**-1])
C3C3_C4 = fp("a, b, t", lambda a, b, t: [a**3, b**3, t**4, a * b * a**-1 * b**-1,
                                         t**-1 * a * t * (a * b**2)**-1,
                                         t**-1 * b * t * (a**2 * b**2)**-1])
C4C4_C3 = fp("a, b, t", lambda a, b, t: [a**4, b**4, t**3, a * b * a**-1 * b**-1,
                                         t**-1 * a * t * b**-1,
                                         t**-1 * b * t * (a**-1 * b**-1)**-1])
C2_4_C3 = fp("a1, a2, b1, b2, t", lambda a1, a2, b1, b2, t: [
    a1**2, a2**2, b1**2, b2**2, t**3,
    a1 * b1 * a1**-1 * b1**-1, a1 * b2 * a1**-1 * b2**-1,
    a2 * b1 * a2**-1 * b1**-1, a2 * b2 * a2**-1 * b2**-1,
    a1 * a2 * a1**-1 * a2**-1, b1 * b2 * b1**-1 * b2**-1,
    t**-1 * a1 * t * a2**-1, t**-1 * a2 * t * (a1 * a2)**-1,
    t**-1 * b1 * t * b2**-1, t**-1 * b2 * t * (b1 * b2)**-1])
C2_3_C7 = fp("a, b, c, t", lambda a, b, c, t: [
    a**2, b**2, c**2, t**7,
    a * b * a**-1 * b**-1, a * c * a**-1 * c**-1, b * c * b**-1 * c**-1,
    t**-1 * a * t * b**-1, t**-1 * b * t * c**-1, t**-1 * c * t * (a * c)**-1])
C3C3_C2 = fp("a, b, t", lambda a, b, t: [a**3, b**3, t**2, a * b * a**-1 * b**-1,
                                         t**-1 * a * t * a, t**-1 * b * t * b])
C3_C4 = fp("a, t", lambda a, t: [a**3, t**4, t**-1 * a * t * a])

CATALOG = [
    ("A4", A4),
    ("SL(2,3)", SL23),
    ("S4", S4),
    ("C2 x A4", DirectProduct(cyc(2), A4)),
    ("(C2 x C2) : C9", C2C2_C9),
    ("(C3 x C3) : C4", C3C3_C4),
    ("C3 x A4", DirectProduct(cyc(3), A4)),
    ("(C4 x C4) : C3", C4C4_C3),
    ("C2 . S4 = SL(2,3) . C2", BINARY_OCTAHEDRAL),
    ("GL(2,3)", GL23),
    ("A4 : C4", A4_C4),
    ("C4 x A4", DirectProduct(cyc(4), A4)),
    ("C2 x SL(2,3)", DirectProduct(cyc(2), SL23)),
    ("((C4 x C2) : C2) : C3", C4_CENTRAL_SL23),
    ("C2 x S4", DirectProduct(cyc(2), S4)),
    ("C2 x C2 x A4", DirectProduct(cyc(2), cyc(2), A4)),
    ("(C2 x C2 x C2 x C2) : C3", C2_4_C3),
    ("(C2 x C2 x C2) : C7", C2_3_C7),
    ("A5", A5),
    ("C5 x A4", DirectProduct(cyc(5), A4)),
    ("S5", S5),
    ("C24", cyc(24)),
    ("D8", D8),
    ("Q8", Q8),
    ("S3", S3),
    ("C3 : C4", C3_C4),
    ("(C3 x C3) : C2", C3C3_C2),
    ("C6 x C6", DirectProduct(cyc(6), cyc(6))),
    ("C2 x C2", DirectProduct(cyc(2), cyc(2))),
]


def main():
    print("# Frozen fingerprints computed by tools/oracle/fingerprints.py (sympy).")
    print("# Regenerate with: python3 tools/oracle/fingerprints.py > crates/core/data/fingerprints.txt")
    for name, G in CATALOG:
        f = fingerprint(G)
        print()
        print(f"id: {name}")
        for key in ("order", "orders", "classes", "center", "derived", "abelianization"):
            print(f"fingerprint.{key}: {f[key]}".rstrip())


if __name__ == "__main__":
    main()
