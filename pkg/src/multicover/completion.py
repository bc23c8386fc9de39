"""Dedekind-MacNeille completion by cuts, plus the T_n<m> -> T_n^(m) check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .dyck import RotationPoset, Steps, fuss_catalan, mtamari, tamari
from .mcover import MCover, mcover
from .poset import Poset, bits


def _mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def up_set(P: Poset, A: int) -> int:
    """Common upper bounds of the bitmask A."""
    out = (1 << P.n) - 1
    for a in bits(A):
        out &= P.up[a]
    return out


def down_set(P: Poset, A: int) -> int:
    """Common lower bounds of the bitmask A."""
    out = (1 << P.n) - 1
    for a in bits(A):
        out &= P.down[a]
    return out


def closure(P: Poset, A: int) -> int:
    return down_set(P, up_set(P, A))


def enumerate_cuts(P: Poset) -> list[int]:
    """All A with A^{ul} = A, as the intersection closure of principal ideals."""
    full = (1 << P.n) - 1
    cuts = {full}
    for g in P.down:
        cuts |= {c & g for c in cuts}
    return sorted(cuts, key=lambda c: (bin(c).count("1"), c))


@dataclass(frozen=True)
class Completion:
    source: Poset
    cuts: tuple[int, ...]
    poset: Poset
    embedding: tuple[int, ...]  # source element -> index of its principal ideal

    def added(self) -> list[int]:
        image = set(self.embedding)
        return [i for i in range(len(self.cuts)) if i not in image]


def dm_completion(P: Poset) -> Completion:
    cuts = enumerate_cuts(P)
    index = {c: i for i, c in enumerate(cuts)}
    up = []
    for a in cuts:
        up.append(_mask(j for j, b in enumerate(cuts) if a & b == a))
    embedding = tuple(index[P.down[p]] for p in range(P.n))
    labels = [""] * len(cuts)
    for p, i in enumerate(embedding):
        labels[i] = P.label(p)
    for i, c in enumerate(cuts):
        if not labels[i]:
            labels[i] = "{" + ",".join(P.label(e) for e in bits(c)) + "}"
    L = Poset(len(cuts), tuple(up), tuple(labels))
    return Completion(P, tuple(cuts), L, embedding)


# -- the m-Tamari comparison ---------------------------------------------------


@dataclass
class TamariCompletionReport:
    n: int
    m: int
    input_size: int
    completed_size: int
    target_size: int
    isomorphic: bool
    irreducibles_isomorphic: bool
    join_dense: bool
    meet_dense: bool
    added_cuts: list[tuple[Steps, ...]] = field(default_factory=list)

    def ok(self) -> bool:
        return (
            self.isomorphic
            and self.completed_size == self.target_size
            and self.irreducibles_isomorphic
            and self.join_dense
            and self.meet_dense
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "input_size": self.input_size,
            "completed_size": self.completed_size,
            "isomorphic": self.isomorphic,
            "added_cuts": [[list(u) for u in cut] for cut in self.added_cuts],
        }


def cut_label(T: RotationPoset, M: MCover, cut: int) -> tuple[Steps, ...]:
    """Name a cut by the componentwise meet (in the Tamari lattice) of its
    upper bounds inside the m-cover poset."""
    ub = up_set(M.poset, cut)
    comps = []
    for pos in range(M.m):
        idx = T.poset.meet_of(M.elements[e][pos] for e in bits(ub))
        comps.append(T.paths[idx])
    return tuple(comps)


def irreducible_subposet(P: Poset) -> Poset:
    elems = sorted(set(P.join_irreducibles()) | set(P.meet_irreducibles()))
    return P.induced(elems)


def completion_matches_mtamari(n: int, m: int, budget: int = 10**7) -> TamariCompletionReport:
    T1 = tamari(n)
    M = mcover(T1.poset, m)
    C = dm_completion(M.poset)
    Tm = mtamari(n, m)
    iso = C.poset.isomorphism(Tm.poset, budget) is not None
    irr = irreducible_subposet(M.poset).is_isomorphic(irreducible_subposet(Tm.poset), budget)
    L = C.poset
    image = [C.embedding[i] for i in set(M.poset.join_irreducibles()) | set(M.poset.meet_irreducibles())]
    jd = L.is_join_dense(image)
    md = L.is_meet_dense(image)
    added = [cut_label(T1, M, C.cuts[i]) for i in C.added()]
    return TamariCompletionReport(
        n=n,
        m=m,
        input_size=M.poset.n,
        completed_size=L.n,
        target_size=fuss_catalan(n, m),
        isomorphic=iso,
        irreducibles_isomorphic=irr,
        join_dense=jd,
        meet_dense=md,
        added_cuts=sorted(added),
    )
