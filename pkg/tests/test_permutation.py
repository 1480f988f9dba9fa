import pytest
from hypothesis import given, strategies as st

from permdec import (
    Compose,
    DeltaSucc,
    FinitaryProduct,
    FromRho,
    Identity,
    Inverse,
    Modulo,
    NormalFromSet,
    OpaqueEq,
    OrbitCache,
    PiecewiseResidue,
    PreconditionViolation,
    Rule,
    SeminormalFromRho,
    Transposition,
    TranspositionTimes,
    eta_decode,
    eta_encode,
    even_zigzag,
    orbit_window,
    perm_eval,
    perm_eval_inv,
    perm_power,
    window_bijection_check,
)


def test_even_zigzag_pinned_values():
    g = even_zigzag()
    assert perm_eval(g, 2) == 0
    assert perm_eval(g, 0) == 4
    assert perm_eval(g, 6) == 2
    assert perm_eval(g, 4) == 8
    assert all(perm_eval(g, x) == x for x in range(1, 40, 2))


def test_even_zigzag_orbit_rows():
    g = even_zigzag()
    assert orbit_window(g, 0, 5) == [(0, 0), (-1, 2), (1, 4), (-2, 6), (2, 8)]


def test_delta_succ_single_cycle():
    d = DeltaSucc()
    # one cycle visiting ..., 5, 3, 1, 0, 2, 4, 6, ...
    assert [perm_eval(d, x) for x in (1, 3, 5, 0, 2, 4)] == [0, 1, 3, 2, 4, 6]
    assert perm_eval_inv(d, 0) == 1
    assert perm_eval_inv(d, 3) == 5
    assert window_bijection_check(d, 500)


def test_perm_power_both_directions():
    g = even_zigzag()
    assert perm_power(g, 0, 2) == 8
    assert perm_power(g, 0, -2) == 6


def test_finitary_product_rightmost_first():
    p = FinitaryProduct([(0, 1), (1, 2)])
    # apply (1 2) then (0 1): 1 -> 2, 2 -> 1 -> 0, 0 -> 1... check pointwise
    assert perm_eval(p, 1) == 2
    assert perm_eval(p, 2) == 0
    assert perm_eval(p, 0) == 1
    assert perm_eval_inv(p, perm_eval(p, 5)) == 5


@given(st.lists(st.tuples(st.integers(0, 30), st.integers(0, 30)), max_size=8),
       st.integers(0, 60))
def test_finitary_product_is_a_bijection(ts, x):
    p = FinitaryProduct(ts)
    assert perm_eval_inv(p, perm_eval(p, x)) == x


@given(st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50)), max_size=10))
def test_eta_roundtrip(ts):
    z = eta_encode(ts)
    assert eta_decode(z).transpositions == ts


def test_piecewise_rejects_visible_non_bijection():
    with pytest.raises((ValueError, PreconditionViolation)):
        # evens shift onto the odds, colliding with the identity default
        p = PiecewiseResidue([Rule(2, 0, "affine", 1, 1)])
        perm_eval(p, 0)


def test_piecewise_const_needs_point_match():
    with pytest.raises(ValueError):
        PiecewiseResidue([Rule(2, 0, "const", 0, 7)])


def test_compose_and_inverse():
    g = even_zigzag()
    c = Compose(g, Inverse(g))
    assert all(perm_eval(c, x) == x for x in range(50))
    t = TranspositionTimes(0, 4, g)
    assert perm_eval(t, 0) == 0  # g sends 0 to 4, the swap sends it back
    assert perm_eval(t, 2) == 4


def test_normal_from_set_zigzags_over_the_evens():
    evens = OpaqueEq(lambda x, y: x == y or (x % 2 == 0 and y % 2 == 0))
    p = NormalFromSet(evens, 0)
    assert perm_eval(p, 0) == 4
    assert perm_eval(p, 2) == 0
    assert perm_eval(p, 4) == 8
    assert perm_eval(p, 3) == 3
    assert perm_eval_inv(p, 0) == 2


def test_from_rho_infinite_block_matches_even_zigzag():
    evens = OpaqueEq(lambda x, y: x == y or (x % 2 == 0 and y % 2 == 0))
    p = FromRho(evens, lambda y: y % 2 == 0)
    g = even_zigzag()
    assert all(perm_eval(p, x) == perm_eval(g, x) for x in range(100))
    assert all(perm_eval_inv(p, x) == perm_eval_inv(g, x) for x in range(100))


def test_from_rho_three_element_block():
    block = (1, 3, 5)
    eq = OpaqueEq(lambda x, y: x == y or (x in block and y in block))
    p = FromRho(eq, lambda y: y in (1, 3))
    assert perm_eval(p, 1) == 5
    assert perm_eval(p, 5) == 3
    assert perm_eval(p, 3) == 1
    assert perm_eval(p, 7) == 7
    assert perm_eval_inv(p, 5) == 1


def test_from_rho_pairs_become_transpositions():
    eq = OpaqueEq(lambda x, y: x // 2 == y // 2)
    p = FromRho(eq, lambda y: y % 2 == 0)
    for k in range(0, 20, 2):
        assert perm_eval(p, k) == k + 1
        assert perm_eval(p, k + 1) == k
    assert window_bijection_check(p, 200)


def test_seminormal_from_rho_finite_blocks_increase():
    eq = OpaqueEq(lambda x, y: x // 3 == y // 3)
    p = SeminormalFromRho(eq, lambda x: 3)
    assert perm_eval(p, 0) == 1
    assert perm_eval(p, 1) == 2
    assert perm_eval(p, 2) == 0
    assert window_bijection_check(p, 120)


def test_seminormal_from_rho_infinite_block_is_normal():
    eq = Modulo(2)
    p = SeminormalFromRho(eq, lambda x: 0)
    evens = OpaqueEq(lambda x, y: x == y or (x % 2 == 0 and y % 2 == 0))
    q = FromRho(evens, lambda y: y % 2 == 0)
    assert all(perm_eval(p, x) == perm_eval(q, x) for x in range(0, 60, 2))


def test_orbit_cache_find_k():
    g = even_zigzag()
    oc = OrbitCache(g)
    assert oc.find_k(0, 8) == 2
    assert oc.find_k(0, 6) == -2
    with pytest.raises(PreconditionViolation):
        OrbitCache(Identity()).find_k(0, 1, cap=50)


def test_window_bijection_check_flags_bad_maps():
    class Broken(Identity):
        def fwd(self, x, fuel):
            return 0
    assert not window_bijection_check(Broken(), 10)
