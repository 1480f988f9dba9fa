from permdec import (
    FinitaryProduct,
    Identity,
    Transposition,
    TranspositionTimes,
    eta_encode,
    even_zigzag,
    perm_eval,
    perm_eval_inv,
)
from permdec import cycles as cyc
from permdec import products as pr


def _truth_decider(p, steps=400):
    memo = {}

    def related(u, v):
        if u == v:
            return True
        if u not in memo:
            seen = {u}
            a = b = u
            for _ in range(steps):
                a = perm_eval(p, a)
                b = perm_eval_inv(p, b)
                seen.add(a)
                seen.add(b)
                if a == u:
                    break
            memo[u] = seen
        return v in memo[u]

    return related


def _zig_witness():
    return cyc.decider_one_infinite(even_zigzag())


def _zig_cf(x):
    return x % 2 == 1  # odds are fixed points, evens share the infinite cycle


def test_split_same_infinite_cycle():
    # (0 8) after the even cycle cuts out the finite segment between 0 and 8
    g = even_zigzag()
    w, cf = pr.transposition_times_cf(0, 8, g, _zig_witness(), _zig_cf)
    p = TranspositionTimes(0, 8, g)
    truth = _truth_decider(p)
    for u in range(0, 18):
        for v in range(0, 18):
            assert w.payload(u, v) == truth(u, v), (u, v)
    # the carved-out segment is finite, the remainder is not
    seg = {u for u in range(0, 200, 2) if w.payload(u, 4)}
    assert all(cf(u) for u in seg)
    assert not cf(0) or 0 in seg  # exactly one of the two pieces is infinite


def test_fuse_two_finite_cycles():
    f = FinitaryProduct([(0, 1), (1, 2), (5, 6)])  # 3-cycle and a 2-cycle
    base = cyc.decider_one_infinite(f)
    w, cf = pr.transposition_times_cf(0, 5, f, base, lambda x: True)
    p = TranspositionTimes(0, 5, f)
    truth = _truth_decider(p)
    for u in range(10):
        for v in range(10):
            assert w.payload(u, v) == truth(u, v), (u, v)
    assert all(cf(u) for u in range(10))


def test_fuse_fixed_point_into_infinite_cycle():
    g = even_zigzag()
    w, cf = pr.transposition_times_cf(0, 3, g, _zig_witness(), _zig_cf)
    p = TranspositionTimes(0, 3, g)
    truth = _truth_decider(p)
    for u in range(14):
        for v in range(14):
            assert w.payload(u, v) == truth(u, v), (u, v)
    assert not cf(3)   # 3 now rides the infinite cycle
    assert cf(5)


def test_finitary_product_identity_codes():
    g = even_zigzag()
    expr, w, cf = pr.finitary_product(
        eta_encode([]), g, eta_encode([]), _zig_witness(), _zig_cf)
    assert all(perm_eval(expr, x) == perm_eval(g, x) for x in range(30))
    assert w.payload(0, 8) and not w.payload(0, 3)
    assert cf(3) and not cf(0)


def test_finitary_product_cancelling_codes():
    code = eta_encode([(0, 1), (2, 3)])
    base = cyc.decider_one_infinite(Identity())
    expr, w, cf = pr.finitary_product(
        code, Identity(), code, base, lambda x: True)
    # a * id * a = id, so the cycle partition is all singletons
    for u in range(8):
        for v in range(8):
            assert w.payload(u, v) == (u == v), (u, v)
    assert all(cf(u) for u in range(8))
    assert all(perm_eval(expr, x) == x for x in range(20))


def test_finitary_product_general():
    g = even_zigzag()
    a = eta_encode([(0, 3)])
    b = eta_encode([(1, 2)])
    expr, w, cf = pr.finitary_product(a, g, b, _zig_witness(), _zig_cf)
    p_truth = _truth_decider(expr)
    for u in range(12):
        for v in range(12):
            assert w.payload(u, v) == p_truth(u, v), (u, v)


def test_cf_from_product_deciders():
    g = even_zigzag()

    def uniform(x, y):
        return pr.transposition_times_cf(x, y, g, _zig_witness(), _zig_cf)[0].payload

    cf = pr.cf_from_product_deciders(g, _zig_witness(), uniform, 0)
    assert cf(3) and cf(7)
    assert not cf(0) and not cf(8)
    cf_all = pr.cf_from_product_deciders(Identity(), _zig_witness(), uniform, None)
    assert cf_all(123)
