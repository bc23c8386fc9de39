"""Strip decomposition of m-Dyck paths into fans of Dyck paths, the bouncing
map, and the harness comparing rotation order with its fan image."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .dyck import Steps, enumerate_mdyck, height_to_step, mtamari, step_to_height, tamari
from .poset import PreconditionError

Fan = tuple[Steps, ...]


def heights(q: Sequence[int]) -> tuple[int, ...]:
    """Height sequence of a classical Dyck path given by step sequence."""
    return step_to_height(q, 1)


def dominance_leq(q: Sequence[int], qq: Sequence[int]) -> bool:
    """Componentwise comparison of height sequences (paths as step sequences)."""
    if len(q) != len(qq):
        raise PreconditionError("paths of different length")
    return all(a <= b for a, b in zip(heights(q), heights(qq)))


def is_increasing_fan(f: Fan) -> bool:
    return all(dominance_leq(a, b) for a, b in zip(f, f[1:]))


def strip_decompose(u: Sequence[int], m: int) -> Fan:
    h = step_to_height(u, m)
    return tuple(height_to_step(h[i::m], 1) for i in range(m))


def is_valid_delta_fan(f: Fan) -> bool:
    """Interleaving condition h^(k)_i <= h^(j)_(i+1) for k > j, i = 1..n-2."""
    hs = [heights(q) for q in f]
    n = len(f[0])
    for j, k in itertools.combinations(range(len(f)), 2):
        for i in range(n - 2):
            if hs[k][i] > hs[j][i + 1]:
                return False
    return True


def strip_compose(f: Fan) -> Optional[Steps]:
    """Inverse of :func:`strip_decompose`; ``None`` if the fan is not an image."""
    m = len(f)
    if not is_increasing_fan(f) or not is_valid_delta_fan(f):
        return None
    hs = [heights(q) for q in f]
    n = len(f[0])
    h = [hs[i][r] for r in range(n) for i in range(m)]
    try:
        return height_to_step(h, m)
    except PreconditionError:
        return None


def count_increasing_fans_formula(n: int, m: int) -> int:
    value = Fraction(1)
    for i in range(1, n):
        for j in range(i, n):
            value *= Fraction(i + j + 2 * m, i + j)
    if value.denominator != 1:
        raise ArithmeticError(f"product formula not integral at n={n}, m={m}")
    return int(value)


def enumerate_increasing_fans(n: int, m: int) -> list[Fan]:
    """Brute force: weakly dominance-increasing m-tuples of Dyck paths."""
    paths = enumerate_mdyck(n, 1)
    hs = {q: heights(q) for q in paths}
    above = {q: [r for r in paths if all(a <= b for a, b in zip(hs[q], hs[r]))] for q in paths}
    out: list[Fan] = []

    def rec(prefix: list[Steps]) -> None:
        if len(prefix) == m:
            out.append(tuple(prefix))
            return
        for r in above[prefix[-1]]:
            prefix.append(r)
            rec(prefix)
            prefix.pop()

    for q in paths:
        rec([q])
    return out


# -- bouncing ---------------------------------------------------------------------


def bounce_pair(f: Fan, i: int, j: int) -> Fan:
    """Replace positions i < j (0-based) by their Tamari meet and join."""
    if not i < j:
        raise PreconditionError("bounce_pair needs i < j")
    T = tamari(len(f[0]))
    out = list(f)
    out[i], out[j] = T.meet(f[i], f[j]), T.join(f[i], f[j])
    return tuple(out)


def bounce_schedule(m: int, reverse: bool = False) -> list[tuple[int, int]]:
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    return pairs[::-1] if reverse else pairs


def bounce(f: Fan, reverse: bool = False) -> Fan:
    """Apply the pair moves (1,2), (1,3), ..., (m-1,m) in that order."""
    for i, j in bounce_schedule(len(f), reverse):
        f = bounce_pair(f, i, j)
    return f


def zeta(u: Sequence[int], m: int, reverse: bool = False) -> Fan:
    return bounce(strip_decompose(u, m), reverse)


# -- the order comparison harness -------------------------------------------------


@dataclass
class ConjectureReport:
    n: int
    m: int
    path_count: int
    injective: bool
    order_iso: bool
    elapsed_ms: int
    multichains: bool = True
    valid_delta_images: int = 0
    first_failure: Optional[tuple[Steps, Steps]] = None

    @property
    def verdict(self) -> str:
        return "isomorphic" if self.injective and self.order_iso else "not isomorphic"

    def row(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "path_count": self.path_count,
            "injective": self.injective,
            "order_iso": self.order_iso,
            "elapsed_ms": self.elapsed_ms,
        }


def verify_conjecture(n: int, m: int, reverse: bool = False) -> ConjectureReport:
    """Compare rotation order on m-Dyck paths with componentwise rotation
    order on their bounced strip decompositions, over all pairs."""
    start = time.perf_counter()
    Tm = mtamari(n, m)
    T1 = tamari(n)
    paths = Tm.paths
    images = [zeta(u, m, reverse) for u in paths]
    injective = len(set(images)) == len(images)
    multichains = all(T1.leq(a, b) for f in images for a, b in zip(f, f[1:]))
    valid = sum(1 for f in images if is_valid_delta_fan(f))

    L1 = T1.poset.leq_matrix()
    idx = np.array([[T1.index(q) for q in f] for f in images], dtype=np.intp)
    image_leq = np.ones((len(paths), len(paths)), dtype=bool)
    for k in range(m):
        col = idx[:, k]
        image_leq &= L1[np.ix_(col, col)]
    rot_leq = Tm.poset.leq_matrix()
    diff = np.argwhere(image_leq != rot_leq)
    order_iso = diff.size == 0
    failure = None
    if not order_iso:
        a, b = diff[0]
        failure = (paths[a], paths[b])
    elapsed = int((time.perf_counter() - start) * 1000)
    return ConjectureReport(
        n, m, len(paths), injective, order_iso, elapsed, multichains, valid, failure
    )


# -- counterexamples -------------------------------------------------------------


@dataclass
class CounterexampleCheck:
    name: str
    confirmed: bool
    detail: str


def counterexample_checks() -> list[CounterexampleCheck]:
    out = []
    T3 = tamari(3)
    T32 = mtamari(3, 2)

    # dominance on fans does not pull back to rotation order
    q, q2 = (0, 1, 1), (0, 0, 1)
    p, p2 = strip_compose((q, q)), strip_compose((q, q2))
    ok = (
        p == (0, 2, 2)
        and p2 == (0, 1, 2)
        and dominance_leq(q, q)
        and dominance_leq(q, q2)
        and not T32.leq(p, p2)
    )
    out.append(CounterexampleCheck("strip inverse vs dominance", ok, f"{p} vs {p2}"))

    # strips do not map rotation order to componentwise rotation order
    p, p2 = (0, 1, 2), (0, 0, 1)
    f, f2 = strip_decompose(p, 2), strip_decompose(p2, 2)
    ok = T32.leq(p, p2) and f[0] == (0, 1, 1) and f2[0] == (0, 0, 1) and not T3.leq(f[0], f2[0])
    out.append(CounterexampleCheck("strips vs rotation", ok, f"{f} vs {f2}"))

    # bouncing does not preserve order
    T5 = tamari(5)
    hq1, hq2 = (1, 3, 3, 4, 5), (2, 3, 4, 4, 5)
    hr1, hr2 = (2, 3, 3, 5, 5), (2, 3, 4, 5, 5)
    q1, q2, r1, r2 = (height_to_step(h, 1) for h in (hq1, hq2, hr1, hr2))
    u, uu = strip_compose((q1, q2)), strip_compose((r1, r2))
    b, bb = bounce((q1, q2)), bounce((r1, r2))
    ok = (
        u == (0, 1, 2, 5, 8)
        and uu == (0, 0, 2, 5, 6)
        and heights(b[0]) == (1, 2, 3, 4, 5)
        and heights(b[1]) == (3, 3, 4, 4, 5)
        and dominance_leq(q1, r1)
        and dominance_leq(q2, r2)
        and not (T5.leq(b[0], bb[0]) and T5.leq(b[1], bb[1]))
        and not mtamari(5, 2).leq(u, uu)
    )
    out.append(
        CounterexampleCheck(
            "bouncing vs order",
            ok,
            f"bounce{(q1, q2)}={b}, bounce{(r1, r2)}={bb}",
        )
    )
    return out
