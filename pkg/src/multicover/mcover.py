"""The m-cover poset of a bounded poset, path posets and the structural checks
that go with them."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .poset import Poset, PreconditionError, bits, popcount

Tuple = tuple[int, ...]


# -- construction --------------------------------------------------------------


def mcover_elements(P: Poset, m: int) -> list[Tuple]:
    """All weakly increasing m-tuples (0^l0, p^l1, q^l2) with p covered by q."""
    if m < 1:
        raise PreconditionError("m must be positive")
    if not P.is_bounded():
        raise PreconditionError("m-cover poset needs a bounded poset")
    z = P.bottom()
    out = {(z,) * m}
    for p, q in P.covers():
        for l0 in range(m + 1):
            for l1 in range(m - l0 + 1):
                out.add((z,) * l0 + (p,) * l1 + (q,) * (m - l0 - l1))
    return sorted(out, key=lambda t: (sum(P.ranks[e] for e in t), t))


@dataclass(frozen=True)
class MCover:
    """P<m> together with the tuple carried by each element."""

    base: Poset
    m: int
    elements: tuple[Tuple, ...]
    poset: Poset

    def index(self, t: Sequence[int]) -> int:
        return self._index[tuple(t)]

    @property
    def _index(self) -> dict[Tuple, int]:
        d = self.__dict__.get("_idx")
        if d is None:
            d = {t: i for i, t in enumerate(self.elements)}
            object.__setattr__(self, "_idx", d)
        return d

    def __contains__(self, t) -> bool:
        return tuple(t) in self._index


def tuple_label(P: Poset, t: Sequence[int]) -> str:
    return ",".join(P.label(e) for e in t)


def mcover(P: Poset, m: int) -> MCover:
    elems = mcover_elements(P, m)
    up = []
    for a in elems:
        row = 0
        for j, b in enumerate(elems):
            if all(P.leq(x, y) for x, y in zip(a, b)):
                row |= 1 << j
        up.append(row)
    labels = [tuple_label(P, t) for t in elems]
    Q = Poset(len(elems), tuple(up), tuple(labels))
    return MCover(P, m, tuple(elems), Q)


# -- counting formulas ---------------------------------------------------------


def mcover_size_formula(n: int, c: int, k: int, m: int) -> int:
    return (c - k) * comb(m, 2) + m * (n - 1) + 1


def mcover_size_for(P: Poset, m: int) -> int:
    return mcover_size_formula(P.n, P.cover_count(), len(P.atoms()), m)


def mcover_length(P: Poset, m: int) -> int:
    return m * P.length()


def mcover_lattice_size_formula(n: int, m: int) -> int:
    if n <= 1:
        raise PreconditionError("formula needs more than one element")
    return n * comb(m + 1, 2) - m * m + 1


# -- irreducibles --------------------------------------------------------------


def mcover_irreducibles_predicted(
    P: Poset, m: int, literal: bool = False
) -> tuple[set[Tuple], set[Tuple]]:
    """Predicted join- and meet-irreducible tuples of P<m>.

    The tuples (0^l, 1^(m-l)) coming from a join-irreducible top use
    ``0 < l < m``; ``literal=True`` lets ``l`` reach ``m``, which also
    predicts (0^m) whenever the top is join-irreducible.
    """
    z, t = P.bottom(), P.top()
    J = set(P.join_irreducibles())
    M = set(P.meet_irreducibles())
    joins = {(z,) * l + (p,) * (m - l) for p in J for l in range(m)}
    meets: set[Tuple] = set()
    for p in M - {z}:
        # p is meet-irreducible, so it has exactly one upper cover p*
        (ps,) = bits(P.upper_covers[p])
        meets |= {(p,) * l + (ps,) * (m - l) for l in range(1, m + 1)}
    if t in J:
        hi = m + 1 if literal else m
        meets |= {(z,) * l + (t,) * (m - l) for l in range(1, hi)}
    if z in M:
        meets.add((z,) * m)
    return joins, meets


def mcover_extremal_condition(P: Poset) -> bool:
    """Whether P<m> is extremal for every m, for an extremal P.

    The pairing used is bottom-meet-irreducible with top-join-irreducible.
    """
    if not P.is_extremal():
        raise PreconditionError("condition is stated for extremal posets")
    z, t = P.bottom(), P.top()
    zm = z in P.meet_irreducibles()
    tj = t in P.join_irreducibles()
    return zm == tj


# -- lattice criteria -----------------------------------------------------------


def meet_condition_holds(P: Poset) -> bool:
    """P is a lattice and every meet p^q lies in {0, p, q}."""
    if not P.is_lattice():
        return False
    z = P.bottom()
    for p in range(P.n):
        for q in range(p + 1, P.n):
            if P.meet(p, q) not in (z, p, q):
                return False
    return True


def tree_above_bottom(P: Poset) -> Optional[dict[int, int]]:
    """Parent map of the Hasse diagram with the bottom removed, if that
    diagram is a tree rooted at the top (every non-top element has exactly one
    upper cover)."""
    if P.n < 2:
        raise PreconditionError("tree criterion needs at least two elements")
    if not P.is_bounded():
        return None
    z, t = P.bottom(), P.top()
    parent = {}
    for v in range(P.n):
        if v in (z, t):
            continue
        if popcount(P.upper_covers[v]) != 1:
            return None
        parent[v] = next(bits(P.upper_covers[v]))
    # n-2 edges on n-1 vertices, every vertex reaches the top -> a tree
    return parent


def hasse_minus_bottom_is_rooted_tree(P: Poset) -> bool:
    return tree_above_bottom(P) is not None


def _children(parent: dict[int, int]) -> dict[int, list[int]]:
    kids: dict[int, list[int]] = {}
    for v, p in parent.items():
        kids.setdefault(p, []).append(v)
    return kids


def _subtree_size(kids: dict[int, list[int]], v: int) -> int:
    return 1 + sum(_subtree_size(kids, c) for c in kids.get(v, []))


def satisfies_condition_S(P: Poset) -> bool:
    parent = tree_above_bottom(P)
    if parent is None:
        raise PreconditionError("condition (S) needs the tree criterion")
    return tree_satisfies_S(_children(parent), P.top())


def tree_satisfies_S(kids: dict[int, list[int]], root: int) -> bool:
    v = root
    while True:
        big = [c for c in kids.get(v, []) if _subtree_size(kids, c) > 1]
        if len(big) > 1:
            return False
        if not big:
            return True
        v = big[0]


def is_path_poset_shape(P: Poset) -> bool:
    if P.n < 2:
        raise PreconditionError("path-poset shape needs at least two elements")
    return hasse_minus_bottom_is_rooted_tree(P) and satisfies_condition_S(P)


# -- path posets ----------------------------------------------------------------


def _check_word(word: str) -> str:
    word = word.upper()
    if set(word) - {"N", "E"}:
        raise PreconditionError(f"path word must use N and E only: {word!r}")
    return word


def path_order_covers(word: str) -> list[tuple[int, int]]:
    """Covers (lower, upper) among letter positions 0..len-1."""
    word = _check_word(word)
    covers = []
    last_n = None
    h = None
    for j, w in enumerate(word):
        if w == "N":
            if last_n is not None:
                covers.append((last_n, j))
            last_n = j
        else:
            # 1-based: h_j = j if j = 1 or previous letter N, else h_{j-1}
            if j == 0 or word[j - 1] == "N":
                h = j
            if h > 0:
                # N letter at 1-based position h_j - 1, i.e. 0-based h - 1
                covers.append((j, h - 1))
    return covers


def path_order(word: str) -> Poset:
    word = _check_word(word)
    labels = [f"w{j + 1}" for j in range(len(word))]
    return Poset.from_relations(len(word), path_order_covers(word), labels)


def path_poset(P: Poset, word: str, allow_unbounded: bool = False) -> Poset:
    """Adjoin the letters of ``word`` to P (letters get indices n, n+1, ...)."""
    word = _check_word(word)
    if P.n == 0:
        raise PreconditionError("path poset needs a non-empty base")
    if word and word[0] == "E" and not allow_unbounded:
        raise PreconditionError("a path starting with E gives an unbounded poset")
    n = P.n
    z = P.bottom()
    pairs = list(P.covers())
    pairs += [(n + a, n + b) for a, b in path_order_covers(word)]
    for j, w in enumerate(word):
        if w == "E":
            pairs.append((z, n + j))
        else:
            pairs += [(p, n + j) for p in range(n)]
    labels = [P.label(i) for i in range(n)] + [f"w{j + 1}" for j in range(len(word))]
    return Poset.from_relations(n + len(word), pairs, labels)


def add_step(P: Poset, step: str) -> Poset:
    """One step of the iterated construction: N puts a new element on top,
    E puts a new element between the bottom and the top."""
    step = _check_word(step)
    if len(step) != 1:
        raise PreconditionError("add exactly one step")
    n = P.n
    z, t = P.bottom(), P.top()
    pairs = list(P.covers())
    if step == "N":
        pairs.append((t, n))
    else:
        pairs += [(z, n), (n, t)]
    labels = [P.label(i) for i in range(n)] + [step]
    return Poset.from_relations(n + 1, pairs, labels)


def p_kl(k: int, l: int) -> Poset:
    """0, a chain c1..ck, an antichain a1..al, 1 (indices in that order)."""
    n = k + l + 2
    top = n - 1
    pairs = []
    chain = [0] + list(range(1, k + 1)) + [top]
    pairs += list(zip(chain, chain[1:]))
    for a in range(k + 1, k + l + 1):
        pairs += [(0, a), (a, top)]
    labels = ["0"] + [f"c{i}" for i in range(1, k + 1)] + [f"a{i}" for i in range(1, l + 1)] + ["1"]
    return Poset.from_relations(n, pairs, labels)


def p_klw(k: int, l: int, word: str = "") -> Poset:
    return path_poset(p_kl(k, l), word)


# -- single-step extension oracle --------------------------------------------


def mcover_extend_step(Pm: MCover, step: str) -> MCover:
    """Build (P_step)<m> from P<m> by attaching the grid of new tuples.

    New tuples are ordered componentwise in grid coordinates.  They are
    anchored to old tuples through the diagonal ``(0^(m-b), 1^b)``: for a
    north step the diagonal sits below the grid, for an east step the grid
    squeezes in between consecutive diagonal elements.
    """
    step = _check_word(step)
    if len(step) != 1:
        raise PreconditionError("extend by exactly one step")
    P, m, old = Pm.base, Pm.m, Pm.elements
    z, t = P.bottom(), P.top()
    new = P.n  # index of the new base element in P_step

    def diag(b: int) -> Tuple:
        return (z,) * (m - b) + (t,) * b

    if step == "N":
        grid = [(a, b) for b in range(1, m + 1) for a in range(1, b + 1)]

        def phi(a: int, b: int) -> Tuple:
            if a == 0:
                return diag(b)
            return (z,) * (m - b) + (t,) * (b - a) + (new,) * a

        anchors = [((0, b), (1, b)) for b in range(1, m + 1)]
    else:
        grid = [(a, b) for b in range(1, m + 1) for a in range(0, b)]

        def phi(a: int, b: int) -> Tuple:
            if a == b:
                return diag(b)
            return (z,) * (m - b) + (new,) * (b - a) + (t,) * a

        anchors = [((b, b), (b, b + 1)) for b in range(m)]
        anchors += [((b - 1, b), (b, b)) for b in range(1, m + 1)]

    elems = list(old) + [phi(a, b) for a, b in grid]
    index = {e: i for i, e in enumerate(elems)}
    pairs = list(Pm.poset.covers())
    for (a1, b1) in grid:
        for (a2, b2) in grid:
            if (a1, b1) != (a2, b2) and a1 <= a2 and b1 <= b2:
                pairs.append((index[phi(a1, b1)], index[phi(a2, b2)]))
    for lo, hi in anchors:
        pairs.append((index[phi(*lo)], index[phi(*hi)]))
    base = add_step(P, step)
    labels = [tuple_label(base, e) for e in elems]
    Q = Poset.from_relations(len(elems), pairs, labels)
    return MCover(base, m, tuple(elems), Q)


# -- cover statistics ------------------------------------------------------------


@dataclass(frozen=True)
class CoverStatistic:
    uf: tuple[int, ...]
    lf: tuple[int, ...]


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def cover_statistics(P: Poset) -> CoverStatistic:
    uf = [0] * (P.n + 1)
    lf = [0] * (P.n + 1)
    for i in range(P.n):
        uf[popcount(P.upper_covers[i])] += 1
        lf[popcount(P.lower_covers[i])] += 1
    return CoverStatistic(_trim(uf), _trim(lf))


def predicted_cover_statistic(k: int, l: int, m: int) -> CoverStatistic:
    coeffs = [0] * (max(l + 1, 2) + 1)
    coeffs[0] += 1
    coeffs[1] += (k + l) * m
    coeffs[2] += (k + l) * comb(m, 2)
    coeffs[l + 1] += m
    c = _trim(coeffs)
    return CoverStatistic(c, c)


# -- trim instances and Moebius -------------------------------------------------


def is_trim_family_member(P: Poset) -> bool:
    """Whether P is isomorphic to some P_{k,1;N^s}, or is the 2-chain."""
    n = P.n
    if n == 2:
        return True
    for k in range(0, n - 2):
        s = n - 3 - k
        if P.is_isomorphic(p_klw(k, 1, "N" * s)):
            return True
    return False


def mobius_rule(Q: Poset, x: int, y: int) -> int:
    """1 on nuclear two-atom intervals, -1 on covers, 0 otherwise (1 if x=y)."""
    if x == y:
        return 1
    if Q.is_cover(x, y):
        return -1
    atoms = list(bits(Q.upper_covers[x] & Q.down[y]))
    if len(atoms) == 2 and Q.join_of(atoms) == y:
        return 1
    return 0


def trim_mobius_check(Q: Poset) -> bool:
    if not Q.is_trim():
        raise PreconditionError("Moebius rule is stated for trim lattices")
    mu = Q.mobius()
    return all(v == mobius_rule(Q, x, y) for (x, y), v in mu.items())


def standard_left_modular_chain(k: int, l: int, m: int) -> list[Tuple]:
    """The chain x_{i,j} = (c_{i-1}^(m-j), c_i^j) of P_{k,l}<m> as tuples,
    in the element indexing of :func:`p_kl`."""
    top = k + l + 1
    c = [0] + list(range(1, k + 1)) + [top]
    out = [(0,) * m]
    for i in range(1, k + 2):
        for j in range(1, m + 1):
            out.append((c[i - 1],) * (m - j) + (c[i],) * j)
    return out
