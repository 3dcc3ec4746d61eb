"""Brute-force reference computations, deliberately naive and independent of
the package's algorithms (no covers, no bitmask tricks)."""

from itertools import combinations, combinations_with_replacement


def in_ideal(s, gens):
    return any(set(g) <= set(s) for g in gens)


def all_subsets(n):
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)


def nonface_faces(n, gens):
    return [s for s in all_subsets(n) if not in_ideal(s, gens)]


def facet_faces(n, gens):
    return [s for s in all_subsets(n) if any(set(s) <= set(g) for g in gens)]


def fvec(faces):
    top = max(len(s) for s in faces)
    counts = [0] * (top + 1)
    for s in faces:
        counts[len(s)] += 1
    return tuple(counts)


def maximal(faces):
    fs = [set(s) for s in faces]
    return {tuple(sorted(s)) for s in fs if not any(s < t for t in fs)}


def min_covers(n, gens):
    hits = [set(s) for s in all_subsets(n) if all(set(s) & set(g) for g in gens)]
    return {tuple(sorted(s)) for s in hits if not any(t < s for t in hits)}


def quasi_type_bf(n, gens):
    """Returns None when dimensions differ."""
    fF = fvec(facet_faces(n, gens))
    fN = fvec(nonface_faces(n, gens))
    if len(fF) != len(fN):
        return None
    return tuple(b - a for a, b in zip(fF, fN))


def hilbert_bf(n, gens, k):
    count = 0
    for combo in combinations_with_replacement(range(1, n + 1), k):
        if not in_ideal(set(combo), gens):
            count += 1
    return count
