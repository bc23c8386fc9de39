"""Per-instance checks of the structural claims about m-cover posets.

Each function returns a small record instead of asserting, so the same code
drives the test-suite and the command-line verifier.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .families import bounded_posets
from .mcover import (
    hasse_minus_bottom_is_rooted_tree,
    is_path_poset_shape,
    is_trim_family_member,
    mcover,
    mcover_irreducibles_predicted,
    mcover_length,
    mcover_size_for,
    meet_condition_holds,
    p_klw,
    trim_mobius_check,
)
from .poset import Poset


@dataclass
class Outcome:
    ok: bool
    detail: str = ""


def check_size_and_length(P: Poset, m: int) -> Outcome:
    Q = mcover(P, m)
    size_ok = Q.poset.n == mcover_size_for(P, m)
    len_ok = Q.poset.length() == mcover_length(P, m)
    return Outcome(size_ok and len_ok, f"size {Q.poset.n}, length {Q.poset.length()}")


def check_irreducibles(P: Poset, m: int) -> Outcome:
    Q = mcover(P, m)
    J, M = mcover_irreducibles_predicted(P, m)
    J_seen = {Q.elements[i] for i in Q.poset.join_irreducibles()}
    M_seen = {Q.elements[i] for i in Q.poset.meet_irreducibles()}
    return Outcome(J == J_seen and M == M_seen, f"|J|={len(J_seen)} |M|={len(M_seen)}")


def check_lattice_equivalence(P: Poset, ms: Sequence[int] = (2, 3)) -> Outcome:
    lattice_all = all(mcover(P, m).poset.is_lattice() for m in ms)
    tree = hasse_minus_bottom_is_rooted_tree(P)
    meet = meet_condition_holds(P)
    return Outcome(lattice_all == tree == meet, f"lattice={lattice_all} tree={tree} meet={meet}")


def check_componentwise_meets(P: Poset, m: int) -> Outcome:
    """When P<m> is a lattice, its meets are componentwise meets in P."""
    Q = mcover(P, m)
    if not Q.poset.is_lattice():
        return Outcome(True, "not a lattice")
    for a in range(Q.poset.n):
        for b in range(a + 1, Q.poset.n):
            got = Q.elements[Q.poset.meet(a, b)]
            want = tuple(P.meet(x, y) for x, y in zip(Q.elements[a], Q.elements[b]))
            if got != want:
                return Outcome(False, f"meet of {Q.elements[a]}, {Q.elements[b]}")
    return Outcome(True)


def check_left_modular_equivalence(P: Poset, ms: Sequence[int] = (2, 3)) -> Outcome:
    """On posets meeting the tree criterion: path shape, (2+2)-freeness and
    left-modularity of P<m> agree."""
    shape = P.n == 1 or is_path_poset_shape(P)
    free = P.is_two_plus_two_free()
    lm = [mcover(P, m).poset.is_left_modular() for m in ms]
    ok = shape == free and all(x == shape for x in lm)
    return Outcome(ok, f"shape={shape} free={free} left_modular={lm}")


def check_trim(P: Poset, ms: Sequence[int] = (2, 3)) -> Outcome:
    member = is_trim_family_member(P)
    trims = []
    mobius_ok = True
    for m in ms:
        Q = mcover(P, m).poset
        t = Q.is_trim()
        trims.append(t)
        if t:
            mobius_ok = mobius_ok and trim_mobius_check(Q)
    ok = all(t == member for t in trims) and mobius_ok
    return Outcome(ok, f"member={member} trim={trims} mobius={mobius_ok}")


# -- families ---------------------------------------------------------------


def words(max_len: int) -> Iterator[str]:
    """Words over {N, E} that start with N (plus the empty word)."""
    yield ""
    for length in range(1, max_len + 1):
        for rest in itertools.product("NE", repeat=length - 1):
            yield "N" + "".join(rest)


def path_poset_family(max_k: int = 3, max_l: int = 3, max_word: int = 3) -> Iterator[tuple[str, Poset]]:
    for k in range(max_k + 1):
        for l in range(max_l + 1):
            for w in words(max_word):
                yield f"P_{k},{l};{w or '-'}", p_klw(k, l, w)


def tree_criterion_posets(max_size: int) -> Iterator[Poset]:
    for P in bounded_posets(max_size, min_size=2):
        if hasse_minus_bottom_is_rooted_tree(P):
            yield P
