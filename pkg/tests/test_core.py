import pytest
from hypothesis import given, strategies as st

from permdec.core import (
    Exhausted,
    Found,
    Fuel,
    FuelExhausted,
    delta,
    delta_inv,
    mu_search,
    pack3,
    pair,
    unpack3,
    unpair,
    xi_search,
)


def test_delta_pinned_values():
    assert [delta(k) for k in (0, -1, 1, -2, 2, -3, 3)] == [0, 1, 2, 3, 4, 5, 6]
    assert [delta_inv(j) for j in range(7)] == [0, -1, 1, -2, 2, -3, 3]


@given(st.integers(min_value=-10**9, max_value=10**9))
def test_delta_left_inverse(k):
    assert delta_inv(delta(k)) == k


@given(st.integers(min_value=0, max_value=10**9))
def test_delta_right_inverse(j):
    assert delta(delta_inv(j)) == j


def test_delta_inv_rejects_negatives():
    with pytest.raises(ValueError):
        delta_inv(-1)


def test_pair_pinned_values():
    assert pair(0, 0) == 0
    assert pair(0, 1) == 1
    assert pair(1, 0) == 2


@given(st.integers(min_value=0, max_value=10**8),
       st.integers(min_value=0, max_value=10**8))
def test_pair_roundtrip(x, y):
    assert unpair(pair(x, y)) == (x, y)


@given(st.integers(min_value=0, max_value=10**12))
def test_unpair_roundtrip(z):
    assert pair(*unpair(z)) == z


@given(st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=0, max_value=10**6),
       st.integers(min_value=0, max_value=10**6))
def test_pack3_roundtrip(x, y, z):
    assert unpack3(pack3(x, y, z)) == (x, y, z)


def test_mu_search_counts_probes():
    out = mu_search(lambda x: x == 7, Fuel.unbounded())
    assert out == Found(7, 8)


def test_xi_search_signed_order():
    out = xi_search(lambda k: k == -2, Fuel.unbounded())
    assert out == Found(-2, 4)  # probed 0, -1, 1, -2


@given(st.sets(st.integers(min_value=-40, max_value=40), min_size=1))
def test_xi_equals_mu_through_delta(targets):
    pred = lambda k: k in targets
    xi = xi_search(pred, Fuel.unbounded())
    mu = mu_search(lambda i: pred(delta_inv(i)), Fuel.unbounded())
    assert isinstance(xi, Found) and isinstance(mu, Found)
    assert xi.value == delta_inv(mu.value)
    assert xi.probes == mu.probes


def test_search_exhaustion_is_a_value():
    out = mu_search(lambda x: False, Fuel(9))
    assert out == Exhausted(9)


def test_fuel_is_shared_state():
    f = Fuel(5)
    assert isinstance(mu_search(lambda x: x == 2, f), Found)
    assert f.remaining == 2
    assert mu_search(lambda x: False, f) == Exhausted(2)
    with pytest.raises(FuelExhausted):
        f.spend()


def test_unbounded_fuel_never_runs_out():
    f = Fuel.unbounded()
    for _ in range(1000):
        f.spend()
    assert f.remaining is None
    assert f.used == 1000
