"""Hypothesis strategies for small posets."""
from hypothesis import strategies as st

from multicover.poset import Poset, add_bounds


@st.composite
def posets(draw, max_size=8, min_size=1):
    n = draw(st.integers(min_size, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Poset.from_relations(n, [(perm[a], perm[b]) for a, b in chosen])


@st.composite
def bounded_posets(draw, max_inner=6):
    return add_bounds(draw(posets(max_size=max_inner, min_size=0 if max_inner == 0 else 1)))


@st.composite
def lattices(draw, max_size=6):
    """The completion of a random poset is always a lattice."""
    from multicover.completion import dm_completion

    return dm_completion(draw(posets(max_size=max_size))).poset
