from hypothesis import given

import oracles
from multicover.completion import (
    closure,
    dm_completion,
    enumerate_cuts,
    irreducible_subposet,
    completion_matches_mtamari,
)
from multicover.dyck import mtamari, tamari
from multicover.mcover import mcover
from multicover.poset import Poset, antichain, bits, boolean_lattice, pentagon
from strategies import posets

# cuts added when completing the 2-cover of the Tamari lattice of parameter 4
ADDED_AT_4_2 = [
    ("0012", "0000"), ("0012", "0001"), ("0013", "0002"), ("0023", "0011"), ("0023", "0012"),
    ("0112", "0000"), ("0113", "0001"), ("0113", "0002"), ("0122", "0000"), ("0122", "0011"),
]


def _as_paths(pairs):
    return sorted(tuple(tuple(int(c) for c in s) for s in pair) for pair in pairs)


@given(posets(max_size=8))
def test_cuts_match_brute_force(P):
    got = {frozenset(bits(c)) for c in enumerate_cuts(P)}
    assert got == oracles.cuts(oracles.matrix_of(P))


@given(posets(max_size=7))
def test_closure_operator_laws(P):
    full = 1 << P.n
    for A in range(0, full, max(1, full // 40)):
        c = closure(P, A)
        assert A & ~c == 0  # extensive
        assert closure(P, c) == c  # idempotent
        for B in (A | 1, A | (full >> 1)):
            if B < full:
                assert c & ~closure(P, B) == 0  # monotone


@given(posets(max_size=7))
def test_completion_is_lattice_with_dense_image(P):
    C = dm_completion(P)
    L = C.poset
    assert L.is_lattice()
    image = set(C.embedding)
    # every irreducible of the completion comes from the poset
    assert set(L.join_irreducibles()) <= image
    assert set(L.meet_irreducibles()) <= image
    assert L.is_join_dense(image) and L.is_meet_dense(image)
    # the embedding is an order embedding
    for a in range(P.n):
        for b in range(P.n):
            assert P.leq(a, b) == L.leq(C.embedding[a], C.embedding[b])


def test_completion_of_lattice_adds_nothing():
    for L in (pentagon(), boolean_lattice(3), tamari(4).poset):
        C = dm_completion(L)
        assert C.poset.n == L.n and not C.added()


def test_completion_of_antichain():
    C = dm_completion(antichain(3))
    assert C.poset.n == 5
    assert len(C.added()) == 2


def test_completion_of_crown_adds_middle():
    # 2+2 crown: two minima below two maxima
    P = Poset.from_relations(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    C = dm_completion(P)
    assert C.poset.n == 7


def test_added_cuts_at_4_2():
    r = completion_matches_mtamari(4, 2)
    assert r.input_size == 45
    assert r.completed_size == 55
    assert r.added_cuts == _as_paths(ADDED_AT_4_2)
    assert r.ok()


def test_small_cases_need_no_completion():
    for m in (2, 3):
        r = completion_matches_mtamari(3, m)
        assert r.input_size == r.completed_size
        assert r.ok()


def test_irreducible_subposets_agree():
    M = mcover(tamari(4).poset, 2).poset
    assert irreducible_subposet(M).is_isomorphic(irreducible_subposet(mtamari(4, 2).poset))


def test_report_serialises():
    d = completion_matches_mtamari(3, 2).to_dict()
    assert d == {"n": 3, "m": 2, "input_size": 12, "completed_size": 12, "isomorphic": True, "added_cuts": []}
