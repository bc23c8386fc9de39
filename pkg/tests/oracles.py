"""Slow, independent reference implementations used only by the tests.

Nothing here imports the library's order machinery: orders are plain boolean
matrices, closed by Warshall's algorithm, and everything else is brute force.
"""
from __future__ import annotations

import itertools

import numpy as np


def closure(n, pairs):
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                for j in range(n):
                    if leq[k][j]:
                        leq[i][j] = True
    return leq


def covers(leq):
    n = len(leq)
    out = set()
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b]:
                if not any(c not in (a, b) and leq[a][c] and leq[c][b] for c in range(n)):
                    out.add((a, b))
    return out


def matrix_of(P):
    return [[P.leq(i, j) for j in range(P.n)] for i in range(P.n)]


def meet(leq, x, y):
    lower = [z for z in range(len(leq)) if leq[z][x] and leq[z][y]]
    best = [z for z in lower if all(leq[w][z] for w in lower)]
    return best[0] if best else None


def join(leq, x, y):
    upper = [z for z in range(len(leq)) if leq[x][z] and leq[y][z]]
    best = [z for z in upper if all(leq[z][w] for w in upper)]
    return best[0] if best else None


def is_lattice(leq):
    n = len(leq)
    return all(meet(leq, x, y) is not None and join(leq, x, y) is not None for x in range(n) for y in range(n))


def mobius_by_inversion(leq):
    """Moebius function as the inverse of the zeta matrix."""
    zeta = np.array(leq, dtype=float)
    mu = np.rint(np.linalg.inv(zeta)).astype(int)
    return mu


def isomorphic(leq_a, leq_b):
    n = len(leq_a)
    if n != len(leq_b):
        return False
    for perm in itertools.permutations(range(n)):
        if all(leq_a[i][j] == leq_b[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False


def mcover_tuples(leq, m):
    """All m-tuples that are multichains with at most two distinct values
    above the bottom, those two values forming a cover."""
    n = len(leq)
    z = next(i for i in range(n) if all(leq[i][j] for j in range(n)))
    cov = covers(leq)
    out = set()
    for t in itertools.product(range(n), repeat=m):
        if not all(leq[a][b] for a, b in zip(t, t[1:])):
            continue
        vals = sorted({x for x in t if x != z}, key=lambda x: sum(leq[y][x] for y in range(n)))
        if len(vals) > 2:
            continue
        if len(vals) == 2 and (vals[0], vals[1]) not in cov:
            continue
        out.add(t)
    return out


def cuts(leq):
    """Every set of the form A^{ul}, by running over all subsets."""
    n = len(leq)
    found = set()
    for r in range(n + 1):
        for A in itertools.combinations(range(n), r):
            ub = [u for u in range(n) if all(leq[a][u] for a in A)]
            lb = frozenset(l for l in range(n) if all(leq[l][u] for u in ub))
            found.add(lb)
    return found


# -- Dyck paths as words --------------------------------------------------------


def words_of(n, m):
    """m-Dyck paths as N/E strings, from the lattice-path definition."""
    out = []

    def rec(w, north, east):
        if north == n and east == m * n:
            out.append(w)
            return
        if north < n:
            rec(w + "N", north + 1, east)
        if east < m * north:
            rec(w + "E", north, east + 1)

    rec("", 0, 0)
    return out


def steps_of(word):
    u, east = [], 0
    for c in word:
        if c == "N":
            u.append(east)
        else:
            east += 1
    return tuple(u)


def rotations(word, m):
    """Swap an east step followed by a north step with the shortest
    non-trivial m-Dyck path starting at that north step."""
    out = []
    for i in range(len(word) - 1):
        if word[i] == "E" and word[i + 1] == "N":
            bal = 0
            for j in range(i + 1, len(word)):
                bal += m if word[j] == "N" else -1
                if bal == 0:
                    break
            sub = word[i + 1 : j + 1]
            out.append(word[:i] + sub + "E" + word[j + 1 :])
    return out


def rotation_leq(n, m):
    ws = words_of(n, m)
    idx = {w: k for k, w in enumerate(ws)}
    pairs = [(idx[w], idx[v]) for w in ws for v in rotations(w, m)]
    return [steps_of(w) for w in ws], closure(len(ws), pairs)


def dyck_heights(u):
    """Height of a classical Dyck path at x = k - 1/2, counted directly."""
    return tuple(sum(1 for x in u if x < k) for k in range(1, len(u) + 1))
