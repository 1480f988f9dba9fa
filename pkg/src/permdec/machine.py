"""A tiny deterministic two-register machine with a total program numbering.

Instruction set:
  INC(r)        increment register r, advance the instruction pointer
  DECJZ(r, t)   if register r is zero jump to label t, otherwise decrement r
                (the pointer stays put while draining, so a single DECJZ
                counts a register down to zero by itself)
  HALT          self-loop; a machine resting on HALT is halted

Every natural number decodes to a program: the opcode is read modulo 3,
registers modulo 2 and jump targets modulo (program length + 1), so invalid
tails normalize instead of failing.  Position len(program) acts as a virtual
HALT, which also gives the empty program well-defined behaviour.

Runs always start from the program's own code in register 0 and zero in
register 1.  A run "halts within n steps" if some transition t with
1 <= t <= n lands on (or stays on) a HALT position; in particular nothing
halts within 0 steps, since even a HALT at the entry point costs the one
transition that observes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import pair, unpair

INC = "INC"
DECJZ = "DECJZ"
HALT = "HALT"


@dataclass(frozen=True)
class Instr:
    op: str
    reg: int = 0
    target: int = 0


@dataclass(frozen=True)
class ToyProgram:
    instrs: tuple[Instr, ...]

    def __len__(self) -> int:
        return len(self.instrs)


@dataclass(frozen=True)
class MachineConfig:
    ip: int
    r0: int
    r1: int
    steps: int


def _encode_instr(ins: Instr) -> int:
    if ins.op == INC:
        return pair(0, ins.reg)
    if ins.op == DECJZ:
        return pair(1, pair(ins.reg, ins.target))
    return pair(2, 0)


def _decode_instr(code: int, length: int) -> Instr:
    op, arg = unpair(code)
    op %= 3
    if op == 0:
        return Instr(INC, arg % 2)
    if op == 1:
        r, t = unpair(arg)
        return Instr(DECJZ, r % 2, t % (length + 1))
    return Instr(HALT)


def encode_program(p: ToyProgram) -> int:
    codes = [_encode_instr(i) for i in p.instrs]
    payload = 0
    if codes:
        payload = codes[-1]
        for c in reversed(codes[:-1]):
            payload = pair(c, payload)
    return pair(len(codes), payload)


def decode_program(z: int) -> ToyProgram:
    n, payload = unpair(z)
    raw: list[int] = []
    for _ in range(max(n - 1, 0)):
        c, payload = unpair(payload)
        raw.append(c)
    if n > 0:
        raw.append(payload)
    return ToyProgram(tuple(_decode_instr(c, n) for c in raw))


def program(*instrs: Union[Instr, tuple]) -> ToyProgram:
    """Convenience builder accepting Instr values or ("INC", r)-style tuples."""
    out = []
    for i in instrs:
        if isinstance(i, Instr):
            out.append(i)
        else:
            op = i[0]
            if op == INC:
                out.append(Instr(INC, i[1]))
            elif op == DECJZ:
                out.append(Instr(DECJZ, i[1], i[2]))
            else:
                out.append(Instr(HALT))
    return ToyProgram(tuple(out))


def initial_config(code: int) -> MachineConfig:
    return MachineConfig(ip=0, r0=code, r1=0, steps=0)


def _is_halt_position(p: ToyProgram, ip: int) -> bool:
    return ip >= len(p) or p.instrs[ip].op == HALT


def step(p: ToyProgram, c: MachineConfig) -> MachineConfig:
    """One deterministic transition; HALT positions transition to themselves."""
    if _is_halt_position(p, c.ip):
        return MachineConfig(c.ip, c.r0, c.r1, c.steps + 1)
    ins = p.instrs[c.ip]
    r0, r1, ip = c.r0, c.r1, c.ip
    if ins.op == INC:
        if ins.reg == 0:
            r0 += 1
        else:
            r1 += 1
        ip += 1
    else:  # DECJZ
        val = r0 if ins.reg == 0 else r1
        if val == 0:
            ip = ins.target
        elif ins.reg == 0:
            r0 -= 1
        else:
            r1 -= 1
    return MachineConfig(ip, r0, r1, c.steps + 1)


def halts_within(x: int, n: int) -> bool:
    """Does program x, run on its own code, halt within n transitions?"""
    p = decode_program(x)
    c = initial_config(x)
    for _ in range(n):
        c = step(p, c)
        if _is_halt_position(p, c.ip):
            return True
    return False


def halting_step(x: int, cap: int) -> int | None:
    """Exact number of transitions to halt, or None if still running after cap."""
    p = decode_program(x)
    c = initial_config(x)
    for t in range(1, cap + 1):
        c = step(p, c)
        if _is_halt_position(p, c.ip):
            return t
    return None


def certify_loops_forever(x: int, state_cap: int = 100_000) -> bool:
    """True when the run provably never halts: the reachable configuration set
    is exhausted by a revisit without touching a HALT position."""
    p = decode_program(x)
    c = initial_config(x)
    seen = set()
    for _ in range(state_cap):
        key = (c.ip, c.r0, c.r1)
        if _is_halt_position(p, c.ip):
            return False
        if key in seen:
            return True
        seen.add(key)
        c = step(p, c)
    return False
