"""Hardness gadgets over the bundled register machine, plus the structural
reductions between cycle decidability and cycle finiteness.

The halting-label coproducts turn "program x halts on its own code" into
block-finiteness questions; the odd-length gadget and its square transfer
hardness between the two cycle problems; the parity-block construction
turns a cycle decider into a conjugacy question.
"""

from __future__ import annotations

from typing import Callable, Optional

from .core import Fuel, pack3, pair, unpack3, unpair
from . import machine
from .equivalence import (
    BlockCache,
    EqExpr,
    FamilyExpr,
    HaltingBlocks,
    HaltingFamily,
    OpaqueEq,
    PiXYFamily,
    eq_decide,
)
from .permutation import (
    CoproductPerm,
    FromRho,
    OrbitCache,
    PermExpr,
    perm_eval,
)
from .normalform import RhoClosure, RhoExpr
from . import cycles as cyc


# ---------------------------------------------------------------------------
# halting equivalences and the cycle-finiteness-hard permutation


def halting_family(variant: str = "cf") -> FamilyExpr:
    return HaltingFamily(variant)


def halting_equivalence(variant: str = "cf") -> EqExpr:
    return HaltingBlocks(variant)


class RhoHaltingCF(RhoExpr):
    """Greater-element predicate for the step-label coproduct, decided by
    simulating one step past the queried index: the not-yet-halted block of
    a halting program is exactly {0, ..., h-1}, so index n has a larger
    blockmate iff the run is still going at n+1."""

    kind = "rho_halting_cf"
    rho_kind = "coproduct_greater"

    def __call__(self, n: int) -> bool:
        x, i = unpair(n)
        if machine.halts_within(x, i):
            return True          # halted block is the infinite tail
        return not machine.halts_within(x, i + 1)


def cf_hard_perm() -> PermExpr:
    """Permutation whose cycles are the step-label blocks; the cycle of
    <x, 0> is finite exactly when program x halts on its own code."""
    return CoproductPerm(HaltingFamily("cf"), RhoHaltingCF())


def halting_pair(x: int, n: int) -> int:
    return pair(x, n)


# ---------------------------------------------------------------------------
# labeled fixture programs

_P = machine.program
_I, _D, _H = machine.INC, machine.DECJZ, machine.HALT


def halting_fixtures() -> list[tuple[str, int]]:
    """Ten programs that provably halt on their own code."""
    progs = [
        ("halt-first", _P((_H,))),
        ("empty", _P()),
        ("inc-falls-off", _P((_I, 0))),
        ("inc-then-halt", _P((_I, 1), (_H,))),
        ("drain-own-code", _P((_D, 0, 1))),
        ("jump-off-end", _P((_D, 1, 1))),
        ("pulse-then-drain", _P((_I, 1), (_D, 1, 2))),
        ("two-incs-halt", _P((_I, 0), (_I, 0), (_H,))),
        ("jump-over-inc", _P((_D, 1, 2), (_I, 0))),
        ("double-pulse-drain", _P((_I, 1), (_I, 1), (_D, 1, 3))),
    ]
    return [(label, machine.encode_program(p)) for label, p in progs]


def looping_fixtures() -> list[tuple[str, int]]:
    """Ten programs that provably loop forever: none of them ever drains
    register 0, so the reachable configuration set is tiny and a revisit
    certifies divergence."""
    progs = [
        ("spin", _P((_D, 1, 0))),
        ("pulse-spin", _P((_I, 1), (_D, 1, 0))),
        ("pingpong", _P((_D, 1, 1), (_D, 1, 0))),
        ("pulse-selfjump", _P((_I, 1), (_D, 1, 1))),
        ("spin-before-halt", _P((_D, 1, 0), (_H,))),
        ("double-pulse-spin", _P((_I, 1), (_I, 1), (_D, 1, 0))),
        ("spin-shadowed-inc", _P((_D, 1, 0), (_I, 0))),
        ("selfjump-before-halt", _P((_I, 1), (_D, 1, 1), (_H,))),
        ("jump-to-selfjump", _P((_D, 1, 1), (_D, 1, 1))),
        ("pulse-spin-dead-halt", _P((_I, 1), (_D, 1, 0), (_H,))),
    ]
    return [(label, machine.encode_program(p)) for label, p in progs]


# ---------------------------------------------------------------------------
# odd-length gadget


class OddLengthGadget(PermExpr):
    """Stretch every cycle of g through triple codes: a finite cycle of
    length n becomes one of length 2n+1 through <x,x,0>, an infinite cycle
    stays infinite, and triples matching no pattern are fixed."""

    kind = "odd_length_gadget"

    def __init__(self, g: PermExpr):
        self.g = g

    def fwd(self, z: int, fuel: Fuel) -> int:
        x, y, c = unpack3(z)
        if y == x:
            if c == 0:
                return pack3(x, x, 1)
            if c == 1:
                return pack3(x, x, 2)
            if c == 2:
                return pack3(x, self.g.fwd(x, fuel), 0)
            return z
        if c == 0:
            return pack3(x, y, 1)
        if c == 1:
            return pack3(x, self.g.fwd(y, fuel), 0)
        return z

    def bwd(self, z: int, fuel: Fuel) -> int:
        x, y, c = unpack3(z)
        if c == 1:
            return pack3(x, x, 0) if y == x else pack3(x, y, 0)
        if c == 2:
            return pack3(x, x, 1) if y == x else z
        if c == 0:
            w = self.g.bwd(y, fuel)
            return pack3(x, x, 2) if w == x else pack3(x, w, 1)
        return z


def odd_length_embed(x: int) -> int:
    return pack3(x, x, 0)


def odd_length_gadget(g: PermExpr) -> tuple[PermExpr, Callable[[int], int]]:
    return OddLengthGadget(g), odd_length_embed


# ---------------------------------------------------------------------------
# reductions between cycle decidability and cycle finiteness


class RhoPiXY(RhoExpr):
    """Coproduct greater-element rule for the power-window family: index i
    of the (x, y) component has a larger blockmate iff i+1 is still related
    to i, i.e. no power within the widened window maps x to y."""

    kind = "rho_pi_xy"
    rho_kind = "coproduct_greater"

    def __init__(self, f: PermExpr, family: Optional[PiXYFamily] = None):
        self.f = f
        self.family = family if family is not None else PiXYFamily(f)

    def __call__(self, n: int) -> bool:
        z, i = unpair(n)
        return self.family.member(z)._decide(i + 1, i, Fuel.unbounded())


class InterredCFPerm(PermExpr):
    """The coproduct permutation whose cycle at <<x,y>, 0> is finite exactly
    when some power of f maps x to y."""

    kind = "interred_cf"

    def __init__(self, f: PermExpr):
        self.f = f
        self.family = PiXYFamily(f)
        self._inner = CoproductPerm(self.family, RhoPiXY(f, self.family))

    def fwd(self, n: int, fuel: Fuel) -> int:
        return self._inner.fwd(n, fuel)

    def bwd(self, n: int, fuel: Fuel) -> int:
        return self._inner.bwd(n, fuel)


def cd_embed(x: int, y: int) -> int:
    return pair(pair(x, y), 0)


def reduce_cd_to_cf(f: PermExpr) -> tuple[PermExpr, Callable[[int, int], int]]:
    """Map cycle-decidability questions about f to cycle-finiteness
    questions: x and y share an f-cycle iff the cycle of cd_embed(x, y) in
    the returned permutation is finite."""
    return InterredCFPerm(f), cd_embed


def reduce_cf_to_cd(g: PermExpr) -> tuple[PermExpr, Callable[[int, int], int] | Callable[[int], int], Callable[[int], int]]:
    """Map cycle-finiteness questions about g to cycle-decidability ones:
    the gadget's odd cycle lengths make its square a single generator on
    each finite cycle, so [x]_g is finite iff j(x) and j'(x) share a cycle
    of the square."""
    gp, j = odd_length_gadget(g)
    from .permutation import Compose
    f = Compose(gp, gp)

    def jprime(x: int) -> int:
        return perm_eval(gp, j(x))

    return f, j, jprime


# ---------------------------------------------------------------------------
# the conjugacy-hardness reduction


class ConjReductionPerm(PermExpr):
    """From a cycle decider for f and a base point x, build the permutation
    whose partition keeps the even-power orbit points of x together and
    isolates everything else.  Its cycle type collapses the cycle
    finiteness of [x]_f: all cycles finite iff [x]_f is finite, otherwise
    one infinite cycle plus fixed points."""

    kind = "conj_reduction"

    def __init__(self, f: PermExpr, eq: EqExpr, x: int):
        self.f = f
        self.eq = eq
        self.x = x
        self._cache = BlockCache(eq)
        self._rho_f = RhoClosure(f, eq)
        self._forb = OrbitCache(f)
        self._kmemo: dict[int, int] = {}

    def _related(self, u: int) -> bool:
        return eq_decide(self.eq, self.x, u)

    def _k(self, u: int) -> int:
        if u not in self._kmemo:
            self._kmemo[u] = self._forb.find_k(self.x, u)
        return self._kmemo[u]

    def pi_prime(self, u: int, v: int, fuel: Optional[Fuel] = None) -> bool:
        if u == v:
            return True
        return (self._related(u) and self._related(v)
                and self._k(u) % 2 == 0 and self._k(v) % 2 == 0)

    def rho_prime(self, y: int) -> bool:
        if not self._related(y) or self._k(y) % 2 != 0:
            return False
        cur = y
        while True:
            if not self._rho_f(cur):
                return False
            cur = self._cache.next_greater(cur)
            if self._k(cur) % 2 == 0:
                return True

    @property
    def _inner(self) -> FromRho:
        inner = getattr(self, "_inner_node", None)
        if inner is None:
            inner = FromRho(
                OpaqueEq(lambda u, v: self.pi_prime(u, v), label="parity-blocks"),
                self.rho_prime)
            self._inner_node = inner
        return inner

    def fwd(self, n: int, fuel: Fuel) -> int:
        return self._inner.fwd(n, fuel)

    def bwd(self, n: int, fuel: Fuel) -> int:
        return self._inner.bwd(n, fuel)


def conj_reduction_perm(f: PermExpr, w: cyc.CycleWitness, x: int,
                        eq: Optional[EqExpr] = None) -> tuple[PermExpr, cyc.CycleWitness]:
    from .normalform import witness_to_eq
    if eq is None:
        eq = witness_to_eq(w)
    node = ConjReductionPerm(f, eq, x)
    witness = cyc.CycleWitness(cyc.DECIDER,
                               lambda u, v, fu=None: node.pi_prime(u, v, fu),
                               node)
    return node, witness
