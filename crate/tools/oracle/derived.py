#!/usr/bin/env python3
"""Independent oracle for derived values frozen into the Rust tests.

Uses the sympy constructions from fingerprints.py and plain Python search;
nothing here is shared with the Rust crate. Run:

    python3 tools/oracle/derived.py
"""
from itertools import permutations
from math import prod

from sympy import factorint
from sympy.combinatorics import Permutation, PermutationGroup

from fingerprints import CATALOG, S5, perm


def prime_list(n):
    return [p for p, k in sorted(factorint(n).items()) for _ in range(k)]


def shape_counts(n):
    shapes = sorted(set(permutations(prime_list(n))))
    classes = {min(s, tuple(reversed(s))) for s in shapes}
    return len(shapes), len(classes)


def involution_criterion(G):
    """Elementary abelian Sylow 2, one involution class, C(a) = P x H, H odd."""
    P = G.sylow_subgroup(2)
    if P.order() < 4 or any(x.order() > 2 for x in P.generate()):
        return False
    invols = [x for x in G.generate() if x.order() == 2]
    a = next(x for x in P.generate() if x.order() == 2)
    if len(G.conjugacy_class(a)) != len(invols):
        return False
    C = G.centralizer(PermutationGroup([a]))
    odd = [x for x in C.generate() if x.order() % 2 == 1]
    if C.order() != P.order() * len(odd):
        return False
    H = PermutationGroup(odd) if odd else None
    if H is None or H.order() != len(odd):
        return False
    return all(x * y == y * x for x in P.generate() for y in odd)


def exact_cover(universe, blocks):
    """Knuth's algorithm X on dict-of-sets; True if some subfamily partitions universe."""
    X = {u: set() for u in universe}
    for i, b in enumerate(blocks):
        for u in b:
            X[u].add(i)

    def solve():
        if not X:
            return True
        c = min(X, key=lambda u: len(X[u]))
        for r in list(X[c]):
            removed = select(r)
            if solve():
                return True
            deselect(r, removed)
        return False

    def select(r):
        cols = []
        for j in blocks[r]:
            for i in X[j]:
                for k in blocks[i]:
                    if k != j:
                        X[k].discard(i)
            cols.append(X.pop(j))
        return cols

    def deselect(r, cols):
        for j in reversed(blocks[r]):
            X[j] = cols.pop()
            for i in X[j]:
                for k in blocks[i]:
                    if k != j:
                        X[k].add(i)

    return solve()


def has_2m2(G):
    """Whether G = {e,a} M {e,b} for some a, b and |M| = |G|/4."""
    elems = list(G.generate())
    e = G.identity
    index = {x: i for i, x in enumerate(elems)}
    reps = {}
    for a in elems:
        if a == e:
            continue
        key = frozenset(G.conjugacy_class(a))
        reps.setdefault(key, a)
    for a in reps.values():
        for b in elems:
            if b == e:
                continue
            blocks = set()
            for x in elems:
                blk = {index[x], index[a * x], index[x * b], index[a * x * b]}
                if len(blk) == 4:
                    blocks.add(tuple(sorted(blk)))
            if exact_cover(range(len(elems)), [list(b) for b in blocks]):
                return True
    return False


def main():
    for n in (24, 36, 48, 56, 60, 120):
        total, classes = shape_counts(n)
        print(f"shapes {n}: {total} ordered, {classes} up to reversal")
    groups = dict(CATALOG)
    applicable = [name for name, G in CATALOG if involution_criterion(G)]
    print("involution criterion holds:", applicable)
    for name in applicable:
        G = groups[name]
        n = G.order()
        if n <= 60:
            print(f"  {name}: (2,{n // 4},2) exists = {has_2m2(G)}")
    A4 = groups["A4"]
    print("A4 subgroup count:", len(list_subgroups(A4)))
    V = PermutationGroup([perm(5, [(1, 2), (3, 4)]), perm(5, [(1, 3), (2, 4)])])
    S3 = PermutationGroup([perm(5, [(1, 2)]), perm(5, [(1, 2, 3)])])
    sizes = double_coset_sizes(S5, V, S3)
    print("S5 double cosets V x S3:", sorted(sizes))


def list_subgroups(G):
    elems = list(G.generate())
    found = set()
    frontier = {frozenset(PermutationGroup([x]).generate()) for x in elems}
    found |= frontier
    while frontier:
        nxt = set()
        for H in frontier:
            for x in elems:
                if x not in H:
                    K = frozenset(PermutationGroup(list(H) + [x]).generate())
                    if K not in found:
                        nxt.add(K)
        found |= nxt
        frontier = nxt
    return found


def double_coset_sizes(G, A, B):
    seen = set()
    sizes = []
    for x in G.generate():
        if x in seen:
            continue
        d = {a * x * b for a in A.generate() for b in B.generate()}
        seen |= d
        sizes.append(len(d))
    return sizes


if __name__ == "__main__":
    main()
