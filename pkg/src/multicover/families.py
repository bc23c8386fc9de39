"""Generators for small test families of posets."""
from __future__ import annotations

import itertools
import random
from functools import lru_cache
from typing import Iterator

from .poset import Poset, add_bounds, bits


def _canonical(P: Poset) -> tuple[int, ...]:
    best = None
    n = P.n
    for perm in itertools.permutations(range(n)):
        # perm[i] = new position of old element i
        rows = [0] * n
        for i in range(n):
            row = 0
            for j in bits(P.up[i]):
                row |= 1 << perm[j]
            rows[perm[i]] = row
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best or ()


@lru_cache(maxsize=None)
def _posets_up_to_iso(k: int) -> tuple[tuple[int, ...], ...]:
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    seen: dict[tuple[int, ...], None] = {}
    for mask in range(1 << len(pairs)):
        rel = [pairs[t] for t in range(len(pairs)) if mask >> t & 1]
        P = Poset.from_relations(k, rel)
        # only keep relations that are already transitively reduced, which
        # still reaches every poset (its own Hasse diagram) exactly once per labeling
        if P.cover_count() != len(rel):
            continue
        seen.setdefault(_canonical(P), None)
    return tuple(seen)


def posets(k: int) -> list[Poset]:
    """All posets on ``k`` elements up to isomorphism."""
    return [Poset(k, rows) for rows in _posets_up_to_iso(k)]


def bounded_posets(max_size: int, min_size: int = 1) -> Iterator[Poset]:
    """All bounded posets with ``min_size..max_size`` elements, up to isomorphism."""
    for size in range(max(min_size, 1), max_size + 1):
        if size == 1:
            yield Poset(1, (1,))
            continue
        for Q in posets(size - 2):
            yield add_bounds(Q)


def random_bounded_poset(size: int, rng: random.Random, density: float = 0.4) -> Poset:
    """Seeded random DAG on ``size - 2`` inner points plus forced bounds."""
    k = max(size - 2, 0)
    rel = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < density]
    return add_bounds(Poset.from_relations(k, rel))


def random_lattice(size: int, rng: random.Random, tries: int = 200) -> Poset:
    """Rejection-sample a lattice; falls back to a chain."""
    for _ in range(tries):
        P = random_bounded_poset(size, rng, density=rng.uniform(0.2, 0.7))
        if P.is_lattice():
            return P
    return Poset.from_relations(size, [(i, i + 1) for i in range(size - 1)])


def rooted_trees(nodes: int) -> Iterator[list[int]]:
    """Parent arrays of rooted unordered trees on ``nodes`` vertices (root 0).

    Duplicates up to isomorphism may appear; callers dedupe if they care.
    """
    if nodes == 1:
        yield [-1]
        return
    # level sequences in canonical (non-increasing subtree) form
    def gen(seq: list[int]) -> Iterator[list[int]]:
        if len(seq) == nodes:
            yield seq
            return
        for lev in range(1, seq[-1] + 2):
            yield from gen(seq + [lev])

    seen = set()
    for seq in gen([0]):
        parent = [-1] * nodes
        stack: list[int] = []
        for v, lev in enumerate(seq):
            del stack[lev:]
            if stack:
                parent[v] = stack[-1]
            stack.append(v)
        key = _tree_key(parent, 0)
        if key in seen:
            continue
        seen.add(key)
        yield parent


def _tree_key(parent: list[int], v: int) -> str:
    kids = [c for c, p in enumerate(parent) if p == v]
    return "(" + "".join(sorted(_tree_key(parent, c) for c in kids)) + ")"


def tree_poset(parent: list[int]) -> Poset:
    """Bounded poset whose Hasse diagram minus the bottom is the given tree
    (root = top); the bottom sits below every leaf."""
    t = len(parent)
    leaves = [v for v in range(t) if v not in parent]
    pairs = [(v + 1, p + 1) for v, p in enumerate(parent) if p >= 0]
    pairs += [(0, v + 1) for v in leaves]
    return Poset.from_relations(t + 1, pairs)
