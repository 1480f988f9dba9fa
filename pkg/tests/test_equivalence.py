import pytest
from hypothesis import given, strategies as st

from permdec import (
    BlockCache,
    CycleEqOf,
    Exhausted,
    FibersOf,
    FinitaryProduct,
    Full,
    Fuel,
    HaltingBlocks,
    ImageEq,
    ModFun,
    Modulo,
    OpaqueEq,
    PreconditionViolation,
    Singletons,
    TableThenIdentity,
    block_decider,
    block_index,
    coproduct,
    enumerate_block,
    eq_decide,
    eq_image,
    even_zigzag,
    is_isomorphism_on_window,
    least_representative,
    nth_block_decider,
    pair,
)
from permdec.equivalence import ConstantFamily


def test_modulo_blocks():
    eq = Modulo(3)
    assert eq_decide(eq, 4, 10)
    assert not eq_decide(eq, 4, 9)
    assert least_representative(eq, 14) == 2
    assert block_index(eq, 14) == 2


def test_fibers_of_table():
    eq = FibersOf(TableThenIdentity({0: 9, 1: 9}))
    assert eq_decide(eq, 0, 1)
    assert eq_decide(eq, 0, 9)
    assert not eq_decide(eq, 0, 2)


def test_block_decider_matches_pair_decider():
    eq = Modulo(5)
    bd = block_decider(eq, 7)
    assert [y for y in range(15) if bd(y)] == [2, 7, 12]


def test_nth_block_decider_in_least_representative_order():
    eq = Modulo(4)
    found = []
    for i in range(4):
        bd = nth_block_decider(eq, i, Fuel(1000))
        assert not isinstance(bd, Exhausted)
        found.append(min(y for y in range(8) if bd(y)))
    assert found == [0, 1, 2, 3]


def test_nth_block_decider_exhausts_past_last_block():
    eq = Modulo(2)
    out = nth_block_decider(eq, 5, Fuel(2000))
    assert isinstance(out, Exhausted)


def test_enumerate_block():
    eq = Modulo(3)
    assert enumerate_block(eq, 1, 4, Fuel(1000)) == [1, 4, 7, 10]


def test_full_and_singletons():
    assert eq_decide(Full(), 3, 1000)
    assert not eq_decide(Singletons(), 3, 4)
    assert block_index(Singletons(), 9) == 9


def test_image_relabels_blocks():
    h = FinitaryProduct([(0, 5)])
    eq = eq_image(Modulo(2), h)
    # 0's block member status travels through h: 5 now sits where 0 was
    assert eq_decide(eq, 5, 2)
    assert not eq_decide(eq, 0, 2)


def test_coproduct_relates_only_matching_indices():
    eq = coproduct(ConstantFamily(Modulo(2)))
    assert eq_decide(eq, pair(3, 0), pair(3, 2))
    assert not eq_decide(eq, pair(3, 0), pair(4, 0))
    assert not eq_decide(eq, pair(3, 0), pair(3, 1))


def test_cycle_eq_of_even_cycle():
    eq = CycleEqOf(even_zigzag(), "one_infinite")
    assert eq_decide(eq, 0, 8)
    assert not eq_decide(eq, 0, 3)
    assert not eq_decide(eq, 3, 5)


def test_cycle_eq_few_infinite_strategy():
    eq = CycleEqOf(even_zigzag(), "few_infinite", reps=[0])
    assert eq_decide(eq, 2, 6)
    assert not eq_decide(eq, 2, 7)


def test_halting_blocks_ground_truth():
    from permdec import machine
    from permdec.machine import DECJZ, HALT, program
    eq = HaltingBlocks("cf")
    halting = machine.encode_program(program((HALT,)))   # halts at step 1
    spin = machine.encode_program(program((DECJZ, 1, 0)))
    # before/after the halting step are different blocks
    assert not eq_decide(eq, pair(halting, 0), pair(halting, 1))
    assert eq_decide(eq, pair(halting, 1), pair(halting, 5))
    # a looping program keeps every step index in one block
    assert eq_decide(eq, pair(spin, 0), pair(spin, 17))


def test_is_isomorphism_on_window():
    from permdec import Identity, Transposition
    assert is_isomorphism_on_window(Identity(), Modulo(2), Modulo(2), 40)
    assert not is_isomorphism_on_window(Transposition(0, 1), Modulo(2),
                                        Modulo(2), 40)


def test_block_cache_enumeration():
    bc = BlockCache(Modulo(3))
    assert bc.least_rep(7) == 1
    assert bc.members_le(7) == [1, 4, 7]
    assert bc.next_greater(7) == 10
    assert bc.member_index(10) == 3
    assert bc.nth_member(1, 5) == 16


def test_block_cache_cap_on_missing_greater():
    bc = BlockCache(OpaqueEq(lambda x, y: x == y))
    with pytest.raises(PreconditionViolation):
        bc.next_greater(3)


@given(st.integers(min_value=1, max_value=12),
       st.integers(min_value=0, max_value=300),
       st.integers(min_value=0, max_value=300))
def test_modulo_is_an_equivalence(m, x, y):
    eq = Modulo(m)
    assert eq_decide(eq, x, x)
    assert eq_decide(eq, x, y) == eq_decide(eq, y, x)
