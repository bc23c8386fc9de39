import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from multicover.dyck import enumerate_mdyck, mtamari, tamari
from multicover.strip import (
    bounce,
    bounce_schedule,
    count_increasing_fans_formula,
    counterexample_checks,
    dominance_leq,
    enumerate_increasing_fans,
    heights,
    is_increasing_fan,
    is_valid_delta_fan,
    strip_compose,
    strip_decompose,
    verify_conjecture,
    zeta,
)


def _p(s):
    return tuple(int(c) for c in s)


# 2-Dyck paths with three north steps and their strip decompositions
DELTA_TABLE = {
    "024": ("012", "012"), "014": ("012", "002"), "004": ("002", "002"),
    "023": ("012", "011"), "013": ("012", "001"), "003": ("002", "001"),
    "022": ("011", "011"), "012": ("011", "001"), "002": ("001", "001"),
    "011": ("011", "000"), "001": ("001", "000"), "000": ("000", "000"),
}

INVALID_FANS = {("012", "000"), ("002", "000")}

# bouncing on all fourteen increasing 2-fans; only one row moves
BOUNCE_TABLE = [
    (("012", "012"), ("012", "012")), (("012", "002"), ("012", "002")),
    (("012", "011"), ("012", "011")), (("012", "001"), ("012", "001")),
    (("002", "002"), ("002", "002")), (("002", "001"), ("002", "001")),
    (("011", "011"), ("011", "011")), (("011", "001"), ("012", "000")),
    (("011", "000"), ("011", "000")), (("001", "001"), ("001", "001")),
    (("001", "000"), ("001", "000")), (("000", "000"), ("000", "000")),
    (("012", "000"), ("012", "000")), (("002", "000"), ("002", "000")),
]


def _fan(pair):
    return tuple(_p(s) for s in pair)


def test_delta_table():
    for u, f in DELTA_TABLE.items():
        assert strip_decompose(_p(u), 2) == _fan(f)


def test_invalid_fans():
    fans = set(enumerate_increasing_fans(3, 2))
    image = {strip_decompose(u, 2) for u in enumerate_mdyck(3, 2)}
    assert fans - image == {_fan(f) for f in INVALID_FANS}
    for f in INVALID_FANS:
        assert strip_compose(_fan(f)) is None


def test_bounce_table():
    moved = 0
    for before, after in BOUNCE_TABLE:
        assert bounce(_fan(before)) == _fan(after)
        moved += before != after
    assert moved == 1
    assert {_fan(b) for b, _ in BOUNCE_TABLE} == set(enumerate_increasing_fans(3, 2))


def test_zeta_example():
    assert zeta((0, 1, 2), 2) == ((0, 1, 2), (0, 0, 0))
    fixed = [u for u in enumerate_mdyck(3, 2) if zeta(u, 2) == strip_decompose(u, 2)]
    assert len(fixed) == 11


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 5))
def test_delta_round_trip(n, m):
    for u in enumerate_mdyck(n, m):
        f = strip_decompose(u, m)
        assert is_increasing_fan(f)
        assert is_valid_delta_fan(f)
        assert strip_compose(f) == u


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (3, 3), (4, 3), (5, 2)])
def test_valid_increasing_fans_are_exactly_the_image(n, m):
    image = {strip_decompose(u, m) for u in enumerate_mdyck(n, m)}
    valid = {f for f in enumerate_increasing_fans(n, m) if is_valid_delta_fan(f)}
    assert valid == image


def test_fan_counts():
    assert count_increasing_fans_formula(3, 2) == 14
    assert count_increasing_fans_formula(4, 2) == 84
    assert len(enumerate_increasing_fans(4, 2)) == 84


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 4))
def test_fan_formula_matches_enumeration(n, m):
    assert count_increasing_fans_formula(n, m) == len(enumerate_increasing_fans(n, m))


@given(st.integers(1, 6), st.data())
def test_heights_and_dominance(n, data):
    paths = enumerate_mdyck(n, 1)
    q = data.draw(st.sampled_from(paths))
    r = data.draw(st.sampled_from(paths))
    assert heights(q) == oracles.dyck_heights(q)
    assert dominance_leq(q, r) == all(a <= b for a, b in zip(oracles.dyck_heights(q), oracles.dyck_heights(r)))


@given(st.integers(2, 5), st.integers(2, 4), st.data())
def test_bounce_gives_rotation_multichain(n, m, data):
    u = data.draw(st.sampled_from(enumerate_mdyck(n, m)))
    f = zeta(u, m)
    T = tamari(n)
    assert all(T.leq(a, b) for a, b in zip(f, f[1:]))


def test_schedule_order():
    assert bounce_schedule(3) == [(0, 1), (0, 2), (1, 2)]
    assert bounce_schedule(3, reverse=True) == [(1, 2), (0, 2), (0, 1)]


@pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (4, 3), (5, 2)])
def test_conjecture_small(n, m):
    r = verify_conjecture(n, m)
    assert r.verdict == "isomorphic"
    assert r.path_count == mtamari(n, m).poset.n
    assert r.multichains


def test_conjecture_report_row():
    row = verify_conjecture(3, 2).row()
    assert list(row) == ["n", "m", "path_count", "injective", "order_iso", "elapsed_ms"]
    assert row["path_count"] == 12


def test_counterexamples_confirmed():
    checks = counterexample_checks()
    assert len(checks) == 3
    assert all(c.confirmed for c in checks), [c for c in checks if not c.confirmed]
