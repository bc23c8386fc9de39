"""Finite posets stored as bitset rows of a dense order relation.

Element ``i`` owns two integers: ``up[i]`` has bit ``j`` set iff ``i <= j`` and
``down[i]`` has bit ``j`` set iff ``j <= i``.  Everything else (covers, meets,
irreducibles, Moebius values) is derived from those rows.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Iterator, Optional, Sequence


class PosetError(ValueError):
    """Raised when an input relation does not describe a poset."""


class PreconditionError(ValueError):
    """Raised when an operation is called on a poset outside its domain."""


class BudgetExceeded(RuntimeError):
    """Raised when a backtracking search runs out of steps."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _transpose(rows: Sequence[int], n: int) -> tuple[int, ...]:
    cols = [0] * n
    for i, row in enumerate(rows):
        b = 1 << i
        for j in bits(row):
            cols[j] |= b
    return tuple(cols)


@dataclass(frozen=True, eq=False)
class Poset:
    n: int
    up: tuple[int, ...]
    labels: Optional[tuple[str, ...]] = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_relations(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ) -> "Poset":
        """Close an acyclic relation ``a < b`` (given as pairs) into a poset.

        The pairs need not be covers; redundant pairs are absorbed and the
        covers are recomputed from the closure.
        """
        succ: list[set[int]] = [set() for _ in range(n)]
        for a, b in pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise PosetError(f"index out of range in pair ({a}, {b}) for n={n}")
            if a == b:
                continue
            succ[a].add(b)
        graph = {i: succ[i] for i in range(n)}
        try:
            # predecessors-first order of the reversed graph = successors first
            order = list(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise PosetError(f"relation has a cycle: {exc.args[1]}") from None
        up = [0] * n
        for i in order:
            row = 1 << i
            for j in succ[i]:
                row |= up[j]
            up[i] = row
        return cls(n, tuple(up), _labels(labels, n))

    @classmethod
    def from_leq(
        cls, n: int, leq, labels: Optional[Sequence[str]] = None, check: bool = True
    ) -> "Poset":
        """Build from a predicate ``leq(i, j)`` that is already a partial order."""
        up = []
        for i in range(n):
            row = 0
            for j in range(n):
                if i == j or leq(i, j):
                    row |= 1 << j
            up.append(row)
        P = cls(n, tuple(up), _labels(labels, n))
        if check:
            P.check_order()
        return P

    @classmethod
    def from_upsets(cls, up: Sequence[int], labels=None, check: bool = True) -> "Poset":
        P = cls(len(up), tuple(up), _labels(labels, len(up)))
        if check:
            P.check_order()
        return P

    def check_order(self) -> None:
        n, up, down = self.n, self.up, self.down
        for i in range(n):
            if not up[i] >> i & 1:
                raise PosetError(f"relation not reflexive at {i}")
            if up[i] & down[i] != 1 << i:
                raise PosetError(f"relation not antisymmetric at {i}")
            for j in bits(up[i]):
                if up[j] & ~up[i]:
                    raise PosetError(f"relation not transitive at {i} <= {j}")

    def relabel(self, labels: Optional[Sequence[str]]) -> "Poset":
        return Poset(self.n, self.up, _labels(labels, self.n))

    # -- derived relation data --------------------------------------------

    @cached_property
    def down(self) -> tuple[int, ...]:
        return _transpose(self.up, self.n)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self.up[i] >> j & 1)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        # fewer strict lower bounds first
        return tuple(sorted(range(self.n), key=lambda i: (popcount(self.down[i]), i)))

    @cached_property
    def upper_covers(self) -> tuple[int, ...]:
        """Bitmask of upper covers for every element (the transitive reduction)."""
        out = []
        for i in range(self.n):
            strict = self.up[i] & ~(1 << i)
            cov = strict
            for j in bits(strict):
                if cov >> j & 1:
                    cov &= ~(self.up[j] & ~(1 << j))
            out.append(cov)
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[int, ...]:
        return _transpose(self.upper_covers, self.n)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)`` sorted by index."""
        return [(i, j) for i in range(self.n) for j in bits(self.upper_covers[i])]

    def cover_count(self) -> int:
        return sum(popcount(c) for c in self.upper_covers)

    def is_cover(self, i: int, j: int) -> bool:
        return bool(self.upper_covers[i] >> j & 1)

    def dual(self) -> "Poset":
        return Poset(self.n, self.down, self.labels)

    def leq_matrix(self):
        import numpy as np

        M = np.zeros((self.n, self.n), dtype=bool)
        for i in range(self.n):
            for j in bits(self.up[i]):
                M[i, j] = True
        return M

    # -- bounds -----------------------------------------------------------

    def minimal(self) -> list[int]:
        return [i for i in range(self.n) if self.down[i] == 1 << i]

    def maximal(self) -> list[int]:
        return [i for i in range(self.n) if self.up[i] == 1 << i]

    def is_bounded(self) -> bool:
        return self.n > 0 and len(self.minimal()) == 1 and len(self.maximal()) == 1

    def bottom(self) -> int:
        mins = self.minimal()
        if len(mins) != 1:
            raise PreconditionError("poset has no least element")
        return mins[0]

    def top(self) -> int:
        maxs = self.maximal()
        if len(maxs) != 1:
            raise PreconditionError("poset has no greatest element")
        return maxs[0]

    def atoms(self) -> list[int]:
        return list(bits(self.upper_covers[self.bottom()]))

    def coatoms(self) -> list[int]:
        return list(bits(self.lower_covers[self.top()]))

    def length(self) -> int:
        """Number of edges of a longest chain."""
        if not self.is_bounded():
            raise PreconditionError("length is defined for bounded posets")
        return max(self.ranks)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """Longest-chain distance from a minimal element."""
        r = [0] * self.n
        for i in self.linear_extension:
            for j in bits(self.upper_covers[i]):
                if r[i] + 1 > r[j]:
                    r[j] = r[i] + 1
        return tuple(r)

    # -- lattice operations -----------------------------------------------

    @cached_property
    def _down_index(self) -> dict[int, int]:
        return {d: i for i, d in enumerate(self.down)}

    @cached_property
    def _up_index(self) -> dict[int, int]:
        return {u: i for i, u in enumerate(self.up)}

    def meet(self, x: int, y: int) -> Optional[int]:
        common = self.down[x] & self.down[y]
        return self._down_index.get(common)

    def join(self, x: int, y: int) -> Optional[int]:
        common = self.up[x] & self.up[y]
        return self._up_index.get(common)

    def meet_of(self, elems: Iterable[int]) -> Optional[int]:
        common = (1 << self.n) - 1
        for e in elems:
            common &= self.down[e]
        return self._down_index.get(common)

    def join_of(self, elems: Iterable[int]) -> Optional[int]:
        common = (1 << self.n) - 1
        for e in elems:
            common &= self.up[e]
        return self._up_index.get(common)

    @cached_property
    def _is_lattice(self) -> bool:
        if self.n == 0:
            return False
        if len(self.maximal()) != 1:
            return False
        idx = self._down_index
        down = self.down
        # with a top element, pairwise meets suffice
        for x in range(self.n):
            dx = down[x]
            for y in range(x + 1, self.n):
                if dx & down[y] not in idx:
                    return False
        return True

    def is_lattice(self) -> bool:
        return self._is_lattice

    def require_lattice(self, what: str) -> None:
        if not self.is_lattice():
            raise PreconditionError(f"{what} requires a lattice")

    # -- irreducibles -----------------------------------------------------

    def join_irreducibles(self) -> list[int]:
        return [i for i in range(self.n) if popcount(self.lower_covers[i]) == 1]

    def meet_irreducibles(self) -> list[int]:
        return [i for i in range(self.n) if popcount(self.upper_covers[i]) == 1]

    # -- subposets and products -------------------------------------------

    def induced(self, elems: Sequence[int]) -> "Poset":
        elems = list(elems)
        pos = {e: k for k, e in enumerate(elems)}
        up = []
        for e in elems:
            row = 0
            for f in bits(self.up[e]):
                k = pos.get(f)
                if k is not None:
                    row |= 1 << k
            up.append(row)
        labels = [self.label(e) for e in elems] if self.labels is not None else None
        return Poset(len(elems), tuple(up), _labels(labels, len(elems)))

    def interval_elements(self, x: int, y: int) -> list[int]:
        if not self.leq(x, y):
            raise PreconditionError(f"{x} is not below {y}")
        return list(bits(self.up[x] & self.down[y]))

    def interval(self, x: int, y: int) -> "Poset":
        return self.induced(self.interval_elements(x, y))

    def proper_part(self) -> "Poset":
        b, t = self.bottom(), self.top()
        return self.induced([i for i in range(self.n) if i not in (b, t)])

    def direct_product(self, other: "Poset") -> "Poset":
        n, m = self.n, other.n

        def leq(a: int, b: int) -> bool:
            return self.leq(a // m, b // m) and other.leq(a % m, b % m)

        labels = [f"({self.label(i)},{other.label(j)})" for i in range(n) for j in range(m)]
        return Poset.from_leq(n * m, leq, labels, check=False)

    # -- predicates -------------------------------------------------------

    def is_two_plus_two_free(self) -> bool:
        n = self.n
        comparable = [self.up[i] | self.down[i] for i in range(n)]
        pairs = [(x, y) for x in range(n) for y in bits(self.up[x]) if y != x]
        for a, (x, y) in enumerate(pairs):
            # elements incomparable to both x and y
            free = ~(comparable[x] | comparable[y])
            if not free:
                continue
            for xp, yp in pairs[a + 1:]:
                if free >> xp & 1 and free >> yp & 1:
                    return False
        return True

    def is_left_modular_element(self, x: int) -> bool:
        """Cover-pair test: for every y covered by z exactly one of
        ``x^y == x^z`` and ``xvy == xvz`` holds."""
        self.require_lattice("left-modularity")
        for y in range(self.n):
            my, jy = self.meet(x, y), self.join(x, y)
            for z in bits(self.upper_covers[y]):
                same_meet = my == self.meet(x, z)
                same_join = jy == self.join(x, z)
                if same_meet == same_join:
                    return False
        return True

    def is_left_modular_element_direct(self, x: int) -> bool:
        """``(q v x) ^ q' == q v (x ^ q')`` for all ``q < q'``."""
        self.require_lattice("left-modularity")
        for q in range(self.n):
            qx = self.join(q, x)
            for qq in bits(self.up[q]):
                if self.meet(qx, qq) != self.join(q, self.meet(x, qq)):
                    return False
        return True

    def left_modular_chain(self) -> Optional[list[int]]:
        """A longest saturated bottom-to-top chain of left-modular elements."""
        self.require_lattice("left-modular chain")
        good = [self.is_left_modular_element(i) for i in range(self.n)]
        b, t = self.bottom(), self.top()
        if not (good[b] and good[t]):
            return None
        best: dict[int, tuple[int, Optional[int]]] = {b: (0, None)}
        for i in self.linear_extension:
            if i not in best:
                continue
            for j in bits(self.upper_covers[i]):
                if good[j] and (j not in best or best[i][0] + 1 > best[j][0]):
                    best[j] = (best[i][0] + 1, i)
        if t not in best:
            return None
        chain = [t]
        while best[chain[-1]][1] is not None:
            chain.append(best[chain[-1]][1])
        return chain[::-1]

    def is_left_modular(self) -> bool:
        return self.left_modular_chain() is not None

    def is_extremal(self) -> bool:
        if not self.is_bounded():
            raise PreconditionError("extremality requires a bounded poset")
        ell = self.length()
        return len(self.join_irreducibles()) == ell == len(self.meet_irreducibles())

    def is_trim(self) -> bool:
        self.require_lattice("trimness")
        return self.is_extremal() and self.is_left_modular()

    def is_join_dense(self, subset: Iterable[int]) -> bool:
        self.require_lattice("join-density")
        mask = 0
        for s in subset:
            mask |= 1 << s
        bot = self.bottom()
        for x in range(self.n):
            below = list(bits(self.down[x] & mask))
            j = self.join_of(below) if below else bot
            if j != x:
                return False
        return True

    def is_meet_dense(self, subset: Iterable[int]) -> bool:
        self.require_lattice("meet-density")
        return self.dual().is_join_dense(subset)

    # -- Moebius ----------------------------------------------------------

    def mobius(self) -> dict[tuple[int, int], int]:
        """Moebius values for all pairs ``x <= y``."""
        order = self.linear_extension
        pos = {e: k for k, e in enumerate(order)}
        mu: dict[tuple[int, int], int] = {}
        for x in range(self.n):
            row: dict[int, int] = {x: 1}
            above = sorted(bits(self.up[x] & ~(1 << x)), key=pos.__getitem__)
            for y in above:
                row[y] = -sum(row[z] for z in bits(self.up[x] & self.down[y]) if z != y)
            for y, v in row.items():
                mu[(x, y)] = v
        return mu

    # -- isomorphism ------------------------------------------------------

    def _colors(self) -> list[int]:
        base = [
            (
                popcount(self.upper_covers[i]),
                popcount(self.lower_covers[i]),
                popcount(self.up[i]),
                popcount(self.down[i]),
                self.ranks[i],
            )
            for i in range(self.n)
        ]
        return _refine(base, self.upper_covers, self.lower_covers)

    def isomorphism(self, other: "Poset", budget: int = 10**7) -> Optional[list[int]]:
        """An order isomorphism ``self -> other`` as a list, or ``None``."""
        if self.n != other.n or self.cover_count() != other.cover_count():
            return None
        if self.n == 0:
            return []
        joint = _joint_colors(self, other)
        ca, cb = joint[: self.n], joint[self.n:]
        if sorted(ca) != sorted(cb):
            return None
        classes: dict[int, list[int]] = {}
        for j, c in enumerate(cb):
            classes.setdefault(c, []).append(j)
        order = _search_order(self, ca)
        return _backtrack(self, other, order, ca, classes, budget)

    def is_isomorphic(self, other: "Poset", budget: int = 10**7) -> bool:
        return self.isomorphism(other, budget) is not None

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        d: dict = {"n": self.n, "covers": [list(c) for c in self.covers()]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Poset":
        try:
            n = int(d["n"])
            covers = [(int(a), int(b)) for a, b in d["covers"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise PosetError(f"malformed poset record: {exc}") from None
        return cls.from_relations(n, covers, d.get("labels"))

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PosetError(f"invalid JSON: {exc}") from None
        if not isinstance(d, dict):
            raise PosetError("poset JSON must be an object")
        return cls.from_dict(d)

    def to_dot(self, name: str = "P") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for i in range(self.n):
            lab = self.label(i).replace('"', '\\"')
            lines.append(f'  n{i} [label="{lab}"];')
        for a, b in self.covers():
            lines.append(f"  n{a} -> n{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={self.cover_count()})"


def _labels(labels, n: int) -> Optional[tuple[str, ...]]:
    if labels is None:
        return None
    labels = tuple(str(s) for s in labels)
    if len(labels) != n:
        raise PosetError(f"expected {n} labels, got {len(labels)}")
    return labels


def _refine(base: list, upc: Sequence[int], lowc: Sequence[int]) -> list[int]:
    """Colour refinement along Hasse edges; returns integer colours."""
    colors = _compress(base)
    while True:
        sig = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in bits(upc[i]))),
                tuple(sorted(colors[j] for j in bits(lowc[i]))),
            )
            for i in range(len(colors))
        ]
        new = _compress(sig)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _compress(items: list) -> list[int]:
    table = {v: k for k, v in enumerate(sorted(set(items)))}
    return [table[v] for v in items]


def _joint_colors(A: Poset, B: Poset) -> list[int]:
    """Refine colours on the disjoint union so that classes are comparable."""
    n = A.n
    base = []
    for P in (A, B):
        base += [
            (
                popcount(P.upper_covers[i]),
                popcount(P.lower_covers[i]),
                popcount(P.up[i]),
                popcount(P.down[i]),
                P.ranks[i],
            )
            for i in range(P.n)
        ]
    upc = list(A.upper_covers) + [c << n for c in B.upper_covers]
    lowc = list(A.lower_covers) + [c << n for c in B.lower_covers]
    return _refine(base, upc, lowc)


def _search_order(P: Poset, colors: list[int]) -> list[int]:
    """Rare colours first, then grow along Hasse edges."""
    freq: dict[int, int] = {}
    for c in colors:
        freq[c] = freq.get(c, 0) + 1
    remaining = set(range(P.n))
    order: list[int] = []
    placed = 0
    while remaining:
        touching = [i for i in remaining if (P.upper_covers[i] | P.lower_covers[i]) & placed]
        pool = touching or list(remaining)
        nxt = min(pool, key=lambda i: (freq[colors[i]], i))
        order.append(nxt)
        placed |= 1 << nxt
        remaining.discard(nxt)
    return order


def _backtrack(A: Poset, B: Poset, order, ca, classes, budget: int) -> Optional[list[int]]:
    image = [-1] * A.n
    used = 0
    steps = 0

    def consistent(x: int, fx: int) -> bool:
        for y in order:
            fy = image[y]
            if fy < 0:
                continue
            if A.leq(x, y) != B.leq(fx, fy) or A.leq(y, x) != B.leq(fy, fx):
                return False
        return True

    def rec(k: int) -> bool:
        nonlocal used, steps
        if k == len(order):
            return True
        x = order[k]
        for fx in classes[ca[x]]:
            if used >> fx & 1:
                continue
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"isomorphism search exceeded {budget} steps")
            if not consistent(x, fx):
                continue
            image[x] = fx
            used |= 1 << fx
            if rec(k + 1):
                return True
            image[x] = -1
            used &= ~(1 << fx)
        return False

    import sys

    limit = sys.getrecursionlimit()
    if A.n + 100 > limit:
        sys.setrecursionlimit(A.n + 100)
    return list(image) if rec(0) else None


# -- small named posets --------------------------------------------------------


def chain(n: int) -> Poset:
    return Poset.from_relations(n, [(i, i + 1) for i in range(n - 1)])


def antichain(n: int) -> Poset:
    return Poset.from_relations(n, [])


def boolean_lattice(rank: int) -> Poset:
    n = 1 << rank
    return Poset.from_leq(n, lambda a, b: a & b == a, check=False)


def pentagon() -> Poset:
    """N5 with 0 < 2 < 3 < 4 and 0 < 1 < 4."""
    return Poset.from_relations(5, [(0, 2), (2, 3), (3, 4), (0, 1), (1, 4)])


def add_bounds(P: Poset) -> Poset:
    """Adjoin a new least and greatest element (indices 0 and n+1)."""
    n = P.n
    pairs = [(0, n + 1)]
    for i in range(n):
        pairs += [(0, i + 1), (i + 1, n + 1)]
        for j in bits(P.upper_covers[i]):
            pairs.append((i + 1, j + 1))
    labels = None
    if P.labels is not None:
        labels = ["0"] + list(P.labels) + ["1"]
    return Poset.from_relations(n + 2, pairs, labels)
