"""m-Dyck paths as step sequences and the m-Tamari lattices under rotation."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .poset import Poset, PreconditionError

Steps = tuple[int, ...]


def fuss_catalan(n: int, m: int) -> int:
    return comb((m + 1) * n, n) // (m * n + 1)


def catalan(n: int) -> int:
    return fuss_catalan(n, 1)


def is_step_sequence(u: Sequence[int], m: int) -> bool:
    if not u or u[0] != 0:
        return False
    return all(u[k] <= u[k + 1] for k in range(len(u) - 1)) and all(
        0 <= u[k] <= m * k for k in range(len(u))
    )


def _gen(n: int, m: int) -> Iterator[Steps]:
    def rec(prefix: list[int]) -> Iterator[Steps]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        for v in range(prefix[-1], m * k + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    yield from rec([0])


@lru_cache(maxsize=None)
def enumerate_mdyck(n: int, m: int) -> tuple[Steps, ...]:
    """All step sequences of m-Dyck paths with n north steps, lexicographic."""
    if n < 1 or m < 1:
        raise PreconditionError("n and m must be positive")
    return tuple(_gen(n, m))


def step_to_height(u: Sequence[int], m: int) -> tuple[int, ...]:
    n = len(u)
    if not is_step_sequence(u, m):
        raise PreconditionError(f"not an {m}-Dyck step sequence: {tuple(u)}")
    h = []
    j = 0
    for k in range(1, m * n + 1):
        while j < n and u[j] < k:
            j += 1
        h.append(j)
    return tuple(h)


def is_height_sequence(h: Sequence[int], n: int, m: int) -> bool:
    if len(h) != m * n:
        return False
    if any(h[k] > h[k + 1] for k in range(len(h) - 1)):
        return False
    return all(-(-(k + 1) // m) <= h[k] <= n for k in range(len(h)))


def height_to_step(h: Sequence[int], m: int) -> Steps:
    if m < 1 or len(h) % m:
        raise PreconditionError("height sequence length must be a multiple of m")
    n = len(h) // m
    if not is_height_sequence(h, n, m):
        raise PreconditionError(f"not an {m}-Dyck height sequence: {tuple(h)}")
    # u_j counts the columns whose height is below j
    u = [sum(1 for hk in h if hk < j) for j in range(1, n + 1)]
    return tuple(u)


def primitive_end(u: Sequence[int], i: int, m: int) -> int:
    """End k (1-based) of the primitive subsequence starting at 1-based i."""
    n = len(u)
    k = i
    while k < n and u[k] - u[i - 1] < m * (k + 1 - i):
        k += 1
    return k


def rotation_covers(u: Sequence[int], m: int) -> list[Steps]:
    """Upper covers in rotation order (decrement a primitive subsequence)."""
    u = tuple(u)
    out = []
    for i in range(2, len(u) + 1):
        if u[i - 2] < u[i - 1]:
            k = primitive_end(u, i, m)
            v = list(u)
            for j in range(i - 1, k):
                v[j] -= 1
            out.append(tuple(v))
    return out


@dataclass(frozen=True)
class RotationPoset:
    n: int
    m: int
    paths: tuple[Steps, ...]
    poset: Poset

    def index(self, u: Sequence[int]) -> int:
        return self._index[tuple(u)]

    @property
    def _index(self) -> dict[Steps, int]:
        d = self.__dict__.get("_idx")
        if d is None:
            d = {p: i for i, p in enumerate(self.paths)}
            object.__setattr__(self, "_idx", d)
        return d

    def leq(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.poset.leq(self.index(u), self.index(v))

    def meet(self, u: Sequence[int], v: Sequence[int]) -> Steps:
        return self.paths[self.poset.meet(self.index(u), self.index(v))]

    def join(self, u: Sequence[int], v: Sequence[int]) -> Steps:
        return self.paths[self.poset.join(self.index(u), self.index(v))]


def path_label(u: Sequence[int]) -> str:
    return "".join(map(str, u)) if max(u, default=0) < 10 else "/".join(map(str, u))


@lru_cache(maxsize=None)
def mtamari(n: int, m: int) -> RotationPoset:
    paths = enumerate_mdyck(n, m)
    index = {p: i for i, p in enumerate(paths)}
    # rotation lowers the sum of the step sequence, so process by increasing sum
    order = sorted(range(len(paths)), key=lambda i: sum(paths[i]))
    up = [0] * len(paths)
    for i in order:
        row = 1 << i
        for v in rotation_covers(paths[i], m):
            row |= up[index[v]]
        up[i] = row
    labels = [path_label(p) for p in paths]
    return RotationPoset(n, m, paths, Poset(len(paths), tuple(up), tuple(labels)))


def tamari(n: int) -> RotationPoset:
    return mtamari(n, 1)


def tamari_meet_irreducibles_predicted(n: int, m: int) -> list[Steps]:
    if n < 2:
        raise PreconditionError("n must be at least 2")
    return [(0,) * i + (a,) * (n - i) for i in range(1, n) for a in range(1, m * i + 1)]


def tamari_join_irreducibles_predicted(n: int, m: int) -> list[Steps]:
    """Bottom path with one run of positions i..k lowered by s (i >= 2)."""
    if n < 2:
        raise PreconditionError("n must be at least 2")
    out = []
    for i in range(2, n + 1):
        for k in range(i, n + 1):
            for s in range(1, m + 1):
                out.append(
                    tuple(m * (j - 1) - (s if i <= j <= k else 0) for j in range(1, n + 1))
                )
    return out


def tmn_size_formula(n: int, m: int) -> int:
    num = (n - 1) * (catalan(n) - 2) * comb(m, 2)
    return num // 2 + m * catalan(n) - m + 1
