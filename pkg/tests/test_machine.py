from hypothesis import given, strategies as st

from permdec import machine
from permdec.machine import DECJZ, HALT, INC, program


def test_every_natural_decodes():
    for z in range(500):
        p = machine.decode_program(z)
        for ins in p.instrs:
            assert ins.op in (INC, DECJZ, HALT)
            assert ins.reg in (0, 1)
            assert 0 <= ins.target <= len(p)


@given(st.lists(st.one_of(
    st.tuples(st.just(INC), st.integers(0, 1)),
    st.tuples(st.just(DECJZ), st.integers(0, 1), st.integers(0, 6)),
    st.tuples(st.just(HALT))), max_size=6))
def test_encode_decode_roundtrip(instrs):
    # clamp targets into the decodable range before comparing
    p = program(*instrs)
    z = machine.encode_program(p)
    q = machine.decode_program(z)
    assert len(q) == len(p)
    for a, b in zip(p.instrs, q.instrs):
        assert b.op == a.op
        if a.op != HALT:
            assert b.reg == a.reg
        if a.op == DECJZ:
            assert b.target == a.target % (len(p) + 1)


def test_countdown_halts_in_exactly_code_plus_one_steps():
    # a single in-place drain counts register 0 (its own code) to zero,
    # then the zero test jumps off the end
    code = machine.encode_program(program((DECJZ, 0, 1)))
    assert machine.halting_step(code, code + 5) == code + 1
    assert not machine.halts_within(code, code)
    assert machine.halts_within(code, code + 1)


def test_nothing_halts_within_zero_steps():
    code = machine.encode_program(program((HALT,)))
    assert not machine.halts_within(code, 0)
    assert machine.halts_within(code, 1)


def test_empty_program_halts_immediately():
    code = machine.encode_program(program())
    assert machine.halting_step(code, 5) == 1


def test_halts_within_is_monotone():
    for z in range(120):
        prev = False
        for n in range(25):
            cur = machine.halts_within(z, n)
            assert cur or not prev
            prev = cur


def test_loop_certificate_requires_a_loop():
    spin = machine.encode_program(program((DECJZ, 1, 0)))
    halt = machine.encode_program(program((HALT,)))
    assert machine.certify_loops_forever(spin)
    assert not machine.certify_loops_forever(halt)


def test_halting_step_none_when_capped():
    spin = machine.encode_program(program((DECJZ, 1, 0)))
    assert machine.halting_step(spin, 500) is None
