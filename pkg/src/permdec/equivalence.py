"""Decidable equivalence relations on N as a closed expression algebra.

An EqExpr is a serializable constructor tree; deciding x ~ x' is total for
every constructor except CycleEqOf, whose decider comes from an attached
cycle witness and may therefore consume fuel.

Four interchangeable views of the same relation are offered: the pair
decider itself, per-block membership deciders, the enumeration of blocks in
least-representative order, and the least-representative labeling.
"""

from __future__ import annotations

import bisect
from typing import Callable, Optional, Union

from .core import (
    Exhausted,
    Fuel,
    PreconditionViolation,
    unpair,
)
from . import machine

# Absolute cap on linear scans whose termination rests on caller obligations
# (e.g. "this block is infinite").  Hitting it means the obligation failed.
SCAN_CAP = 10_000_000


# ---------------------------------------------------------------------------
# total computable functions N -> N


class FunExpr:
    kind = "fun"

    def __call__(self, x: int) -> int:
        raise NotImplementedError


class ConstFun(FunExpr):
    kind = "const"

    def __init__(self, c: int):
        self.c = c

    def __call__(self, x: int) -> int:
        return self.c


class IdentityFun(FunExpr):
    kind = "identity_fun"

    def __call__(self, x: int) -> int:
        return x


class ModFun(FunExpr):
    kind = "mod"

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("modulus must be >= 1")
        self.m = m

    def __call__(self, x: int) -> int:
        return x % self.m


class TableThenIdentity(FunExpr):
    """Finite override table; identity outside its domain."""

    kind = "table_then_identity"

    def __init__(self, table: dict[int, int]):
        self.table = dict(table)

    def __call__(self, x: int) -> int:
        return self.table.get(x, x)


class HaltingLabel(FunExpr):
    """Step-indexed halting labels for one toy program.

    variant "cf": label(n) = [program halts within n steps].
    variant "nonpermutable": the same labels shifted by one, with label(0)
    pinned true, so that 0 is always alone or grouped differently; this is
    the variant whose coproduct admits no permutation with matching cycles.
    """

    kind = "halting_label"

    def __init__(self, variant: str, code: int):
        if variant not in ("cf", "nonpermutable"):
            raise ValueError("variant must be 'cf' or 'nonpermutable'")
        self.variant = variant
        self.code = code
        self._memo: dict[int, bool] = {}

    def _halts(self, n: int) -> bool:
        if n not in self._memo:
            self._memo[n] = machine.halts_within(self.code, n)
        return self._memo[n]

    def __call__(self, n: int) -> int:
        if self.variant == "cf":
            return 1 if self._halts(n) else 0
        if n == 0:
            return 1
        return 1 if self._halts(n - 1) else 0


class ComposeFun(FunExpr):
    kind = "compose_fun"

    def __init__(self, outer: FunExpr, inner: FunExpr):
        self.outer = outer
        self.inner = inner

    def __call__(self, x: int) -> int:
        return self.outer(self.inner(x))


class PairLeft(FunExpr):
    kind = "pair_left"

    def __call__(self, x: int) -> int:
        return unpair(x)[0]


class PairRight(FunExpr):
    kind = "pair_right"

    def __call__(self, x: int) -> int:
        return unpair(x)[1]


def fun_eval(f: FunExpr, x: int) -> int:
    return f(x)


# ---------------------------------------------------------------------------
# equivalence expressions


class EqExpr:
    kind = "eq"

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        raise NotImplementedError


class Singletons(EqExpr):
    kind = "singletons"

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return x == y


class Full(EqExpr):
    kind = "full"

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return True


class Modulo(EqExpr):
    kind = "modulo"

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("modulus must be >= 1")
        self.m = m

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return x % self.m == y % self.m


class FibersOf(EqExpr):
    kind = "fibers_of"

    def __init__(self, fun: FunExpr):
        self.fun = fun

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return self.fun(x) == self.fun(y)


class OpaqueEq(EqExpr):
    """Escape hatch wrapping an arbitrary total decider; not serializable."""

    kind = "opaque"

    def __init__(self, fn: Callable[[int, int], bool], label: str = "opaque"):
        self.fn = fn
        self.label = label

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return bool(self.fn(x, y))


class CycleEqOf(EqExpr):
    """The cycle partition of a permutation; decidable only through a witness.

    strategy selects how the decider is recovered when the expression is
    rebuilt from serialized form:
      "one_infinite"        at most one infinite cycle (caller obligation)
      "few_infinite"        finitely many infinite cycles, reps supplied
      "normal"              the subject is in normal form
      "attached"            a runtime CycleWitness was attached directly
    """

    kind = "cycle_eq_of"

    def __init__(self, perm, strategy: str = "one_infinite",
                 reps: Optional[list[int]] = None, witness=None):
        self.perm = perm
        self.strategy = strategy
        self.reps = list(reps) if reps else []
        self.witness = witness
        self._decider = None

    def _get_decider(self):
        if self._decider is None:
            from . import cycles as cyc
            if self.strategy == "attached":
                w = self.witness
                if w is None:
                    raise PreconditionViolation("CycleEqOf needs an attached witness")
                w = cyc.witness_convert(w, cyc.DECIDER, Fuel(SCAN_CAP))
                self._decider = w.payload
            elif self.strategy == "one_infinite":
                self._decider = cyc.decider_one_infinite(self.perm).payload
            elif self.strategy == "few_infinite":
                self._decider = cyc.decider_few_infinite(self.perm, self.reps).payload
            elif self.strategy == "normal":
                from . import normalform as nf

                def decider(x, y, fu=None, _p=self.perm):
                    return nf.normal_min(_p, x, fu) == nf.normal_min(_p, y, fu)
                self._decider = decider
            else:
                raise ValueError(f"unknown strategy {self.strategy!r}")
        return self._decider

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return self._get_decider()(x, y, fuel)


class ImageEq(EqExpr):
    """The pushforward of a relation along a permutation h."""

    kind = "image"

    def __init__(self, base: EqExpr, h):
        self.base = base
        self.h = h

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        from .permutation import perm_eval_inv
        return self.base._decide(perm_eval_inv(self.h, x, fuel),
                                 perm_eval_inv(self.h, y, fuel), fuel)


class CoproductEq(EqExpr):
    """Pair codes related iff indices match and components relate at the index."""

    kind = "coproduct"

    def __init__(self, family: "FamilyExpr"):
        self.family = family

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        z, a = unpair(x)
        z2, b = unpair(y)
        if z != z2:
            return False
        return self.family.member(z)._decide(a, b, fuel)


class HaltingBlocks(EqExpr):
    kind = "halting_blocks"

    def __init__(self, variant: str):
        self.variant = variant
        self._co = CoproductEq(HaltingFamily(variant))

    def _decide(self, x: int, y: int, fuel: Fuel) -> bool:
        return self._co._decide(x, y, fuel)


class PiXY(EqExpr):
    """i ~ j iff i = j or no power f^k with |k| <= max(i,j) maps x to y."""

    kind = "pi_xy"

    def __init__(self, f, x: int, y: int):
        self.f = f
        self.x = x
        self.y = y
        self._fwd = [x]   # f^0(x), f^1(x), ...
        self._bwd = [x]   # f^0(x), f^-1(x), ...
        self._hit: Optional[int] = None  # least |k| with f^k(x) = y, once known
        self._checked = 0                # bound up to which absence is known

    def _reaches_within(self, bound: int, fuel: Fuel) -> bool:
        from .permutation import perm_eval, perm_eval_inv
        if self._hit is not None:
            return self._hit <= bound
        while self._checked < bound:
            k = self._checked + 1
            while len(self._fwd) <= k:
                self._fwd.append(perm_eval(self.f, self._fwd[-1], fuel))
            while len(self._bwd) <= k:
                self._bwd.append(perm_eval_inv(self.f, self._bwd[-1], fuel))
            if self._fwd[k] == self.y or self._bwd[k] == self.y:
                self._hit = k
                return True
            self._checked = k
        return False

    def _decide(self, i: int, j: int, fuel: Fuel) -> bool:
        if i == j:
            return True
        if self.x == self.y:
            return False  # k = 0 already maps x to y
        return not self._reaches_within(max(i, j), fuel)


# ---------------------------------------------------------------------------
# uniformly decidable families


class FamilyExpr:
    kind = "family"

    def member(self, z: int) -> EqExpr:
        raise NotImplementedError


class ConstantFamily(FamilyExpr):
    kind = "constant_family"

    def __init__(self, eq: EqExpr):
        self.eq = eq

    def member(self, z: int) -> EqExpr:
        return self.eq


class HaltingFamily(FamilyExpr):
    kind = "halting_family"

    def __init__(self, variant: str):
        self.variant = variant
        self._memo: dict[int, EqExpr] = {}

    def member(self, z: int) -> EqExpr:
        if z not in self._memo:
            self._memo[z] = FibersOf(HaltingLabel(self.variant, z))
        return self._memo[z]


class PiXYFamily(FamilyExpr):
    kind = "pi_xy_family"

    def __init__(self, f):
        self.f = f
        self._memo: dict[int, EqExpr] = {}

    def member(self, z: int) -> EqExpr:
        if z not in self._memo:
            x, y = unpair(z)
            self._memo[z] = PiXY(self.f, x, y)
        return self._memo[z]


# ---------------------------------------------------------------------------
# operations


class BlockDecider:
    """Membership test for one block, tagged with where it came from."""

    __slots__ = ("fn", "source", "eq")

    def __init__(self, fn: Callable[[int], bool], source: int, eq: Optional[EqExpr]):
        self.fn = fn
        self.source = source
        self.eq = eq

    def __call__(self, y: int) -> bool:
        return self.fn(y)


def eq_decide(eq: EqExpr, x: int, y: int, fuel: Optional[Fuel] = None) -> bool:
    return eq._decide(x, y, fuel if fuel is not None else Fuel.unbounded())


def block_decider(eq: EqExpr, x: int, fuel: Optional[Fuel] = None) -> BlockDecider:
    f = fuel if fuel is not None else Fuel.unbounded()
    return BlockDecider(lambda y: eq._decide(x, y, f), x, eq)


def least_representative(eq: EqExpr, x: int, fuel: Optional[Fuel] = None) -> int:
    f = fuel if fuel is not None else Fuel.unbounded()
    for y in range(x + 1):
        if eq._decide(y, x, f):
            return y
    raise AssertionError("relation not reflexive")  # pragma: no cover


def nth_block_decider(eq: EqExpr, i: int, fuel: Fuel) -> Union[BlockDecider, Exhausted]:
    """Decider of the i-th block in least-representative order, or Exhausted
    when the search runs past the last block (it would otherwise diverge)."""
    reps: list[int] = []
    candidate = 0
    while len(reps) <= i:
        if not fuel.try_spend():
            return Exhausted(fuel.used)
        if all(not eq._decide(r, candidate, fuel) for r in reps):
            reps.append(candidate)
        candidate += 1
    return block_decider(eq, reps[i])


def block_index(eq: EqExpr, x: int, fuel: Optional[Fuel] = None) -> int:
    """Position of x's block in least-representative enumeration order."""
    f = fuel if fuel is not None else Fuel.unbounded()
    r = least_representative(eq, x, f)
    count = 0
    for y in range(r):
        f.spend()
        if least_representative(eq, y, f) == y:
            count += 1
    return count


def enumerate_block(eq: EqExpr, i: int, count: int, fuel: Fuel) -> Union[list[int], Exhausted]:
    bd = nth_block_decider(eq, i, fuel)
    if isinstance(bd, Exhausted):
        return bd
    out: list[int] = []
    y = 0
    while len(out) < count:
        if not fuel.try_spend():
            return Exhausted(fuel.used)
        if bd(y):
            out.append(y)
        y += 1
    return out


def eq_image(eq: EqExpr, h) -> EqExpr:
    return ImageEq(eq, h)


def coproduct(family: FamilyExpr) -> EqExpr:
    return CoproductEq(family)


def is_isomorphism_on_window(theta, a: EqExpr, b: EqExpr, window: int,
                             fuel: Optional[Fuel] = None) -> bool:
    from .permutation import perm_eval
    f = fuel if fuel is not None else Fuel.unbounded()
    image = [perm_eval(theta, x, f) for x in range(window)]
    for x in range(window):
        for y in range(x + 1, window):
            if a._decide(x, y, f) != b._decide(image[x], image[y], f):
                return False
    return True


# ---------------------------------------------------------------------------
# shared incremental block enumeration used by the normal-form machinery


class BlockCache:
    """Per-relation cache of block members discovered by linear scanning.

    Blocks are keyed by their least representative.  All methods are total
    as long as the requested elements exist; scans that would only terminate
    under a violated caller obligation stop at SCAN_CAP.
    """

    def __init__(self, eq: EqExpr, fuel: Optional[Fuel] = None):
        self.eq = eq
        self.fuel = fuel if fuel is not None else Fuel.unbounded()
        self._members: dict[int, list[int]] = {}
        self._scanned: dict[int, int] = {}  # first natural not yet tested
        self._reps: list[int] = []

    def least_rep(self, x: int) -> int:
        for r in self._reps:
            if self.eq._decide(r, x, self.fuel):
                return r
        for y in range(x + 1):
            if self.eq._decide(y, x, self.fuel):
                self._reps.append(y)
                self._members.setdefault(y, [y])
                self._scanned.setdefault(y, y + 1)
                return y
        raise AssertionError("relation not reflexive")  # pragma: no cover

    def _extend_to(self, lr: int, bound: int) -> None:
        mem = self._members[lr]
        start = self._scanned[lr]
        for y in range(start, bound + 1):
            if self.eq._decide(lr, y, self.fuel):
                mem.append(y)
        self._scanned[lr] = max(start, bound + 1)

    def members_le(self, x: int) -> list[int]:
        """Sorted members of x's block that are <= x."""
        lr = self.least_rep(x)
        self._extend_to(lr, x)
        mem = self._members[lr]
        return mem[: bisect.bisect_right(mem, x)]

    def next_greater(self, x: int) -> int:
        """Least block member strictly above x; the caller must know one exists."""
        lr = self.least_rep(x)
        self._extend_to(lr, x)
        mem = self._members[lr]
        idx = bisect.bisect_right(mem, x)
        if idx < len(mem):
            return mem[idx]
        y = self._scanned[lr]
        while y <= SCAN_CAP:
            if self.eq._decide(lr, y, self.fuel):
                mem.append(y)
                self._scanned[lr] = y + 1
                return y
            y += 1
        self._scanned[lr] = y
        raise PreconditionViolation(
            "no greater block member found below the scan cap")

    def member_index(self, x: int) -> int:
        """Index of x in the increasing enumeration of its block."""
        return len(self.members_le(x)) - 1

    def nth_member(self, lr: int, j: int) -> int:
        """j-th member (0-based, increasing) of the block with least rep lr."""
        self.least_rep(lr)
        mem = self._members[lr]
        while len(mem) <= j:
            self.next_greater(mem[-1])
            mem = self._members[lr]
        return mem[j]
