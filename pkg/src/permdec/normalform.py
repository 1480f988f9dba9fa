"""Normal and semi-normal forms of computable permutations.

A cycle with least element a0 and increasing member enumeration a0 < a1 < ...
is normal when the delta-indexed powers of a0 walk the members in increasing
order: f^{delta_inv(j)}(a0) = a_j.  A permutation is normal when every cycle
is; semi-normal relaxes finite cycles to plain increasing order
a0 -> a1 -> ... -> a_{n-1} -> a0.  Cycles of length at most 2 count as
normal (the two definitions coincide there).

The rho functions ("does my block hold a larger element" and "how big is my
block, 0 meaning infinite") are what make normal members of Perm(eq)
constructible; both directions of that correspondence live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .core import Fuel, PreconditionViolation, delta, delta_inv
from .equivalence import (
    SCAN_CAP,
    BlockCache,
    BlockDecider,
    EqExpr,
    OpaqueEq,
    eq_decide,
)
from .permutation import (
    CoproductPerm,
    FromRho,
    NormalFromSet,
    OrbitCache,
    PermExpr,
    SeminormalFromRho,
    perm_eval,
    perm_eval_inv,
)
from . import cycles as cyc


# ---------------------------------------------------------------------------
# rho expressions


class RhoExpr:
    kind = "rho"
    rho_kind = "greater"  # or "cardinality", "coproduct_greater"

    def __call__(self, x: int) -> int:
        raise NotImplementedError


class RhoConst(RhoExpr):
    """Constant greater-element predicate: every block infinite (true) or
    every block a singleton (false)."""

    kind = "rho_const"
    rho_kind = "greater"

    def __init__(self, value: bool):
        self.value = bool(value)

    def __call__(self, x: int) -> int:
        return self.value


class RhoClosure(RhoExpr):
    """Greater-element predicate computed from a member permutation f of
    Perm(eq): the block members <= x are closed under f exactly when they
    already form a whole cycle, i.e. when nothing larger is related.

    Closure is maintained incrementally per block (one image evaluation per
    member, ever): a prefix is closed iff no processed member's image still
    waits outside the prefix."""

    kind = "rho_closure"
    rho_kind = "greater"

    def __init__(self, f: PermExpr, eq: EqExpr):
        self.f = f
        self.eq = eq
        self._cache = BlockCache(eq)
        self._state: dict[int, dict] = {}
        self._memo: dict[int, bool] = {}

    def __call__(self, x: int) -> bool:
        if x in self._memo:
            return self._memo[x]
        members = self._cache.members_le(x)
        lr = members[0]
        st = self._state.setdefault(
            lr, {"n": 0, "seen": set(), "escapes": 0, "waiting": {}})
        while st["n"] < len(members):
            m = members[st["n"]]
            st["seen"].add(m)
            fm = perm_eval(self.f, m)
            if fm not in st["seen"]:
                st["escapes"] += 1
                st["waiting"][fm] = st["waiting"].get(fm, 0) + 1
            st["escapes"] -= st["waiting"].pop(m, 0)
            st["n"] += 1
            self._memo[m] = st["escapes"] != 0
        return self._memo[x]


class RhoFromNormal(RhoExpr):
    """Greater-element predicate read off a normal member: x has a larger
    blockmate iff the next delta-indexed power after x's position still
    increases."""

    kind = "rho_from_normal"
    rho_kind = "greater"

    def __init__(self, fprime: PermExpr):
        self.fprime = fprime
        self._orbits = OrbitCache(fprime)

    def __call__(self, x: int) -> bool:
        m = normal_min(self.fprime, x)
        for j in range(SCAN_CAP):
            if self._orbits.value(m, delta_inv(j)) == x:
                return self._orbits.value(m, delta_inv(j + 1)) > x
        raise PreconditionViolation("subject not normal: x unreachable from its minimum")


class RhoCardConst(RhoExpr):
    kind = "rho_card_const"
    rho_kind = "cardinality"

    def __init__(self, c: int):
        self.c = int(c)

    def __call__(self, x: int) -> int:
        return self.c


class RhoCardForBlocks(RhoExpr):
    """Cardinality function for a relation with finitely many blocks, given
    one representative and the cardinality (0 = infinite) of each."""

    kind = "rho_card_for_blocks"
    rho_kind = "cardinality"

    def __init__(self, eq: EqExpr, reps_with_cards: list[tuple[int, int]]):
        self.eq = eq
        self.reps_with_cards = [(int(r), int(c)) for r, c in reps_with_cards]

    def __call__(self, x: int) -> int:
        for rep, card in self.reps_with_cards:
            if eq_decide(self.eq, rep, x):
                return card
        raise PreconditionViolation("representative table does not cover all blocks")


def rho_for_finitely_many_blocks(eq: EqExpr,
                                 reps_with_cards: list[tuple[int, int]]) -> RhoExpr:
    return RhoCardForBlocks(eq, reps_with_cards)


def rho_for_constant_cardinality(c: int) -> RhoExpr:
    return RhoCardConst(c)


# ---------------------------------------------------------------------------
# building cycles


def build_cycle_from_set(member: BlockDecider) -> PermExpr:
    """One normal cycle supported on the infinite decidable set described by
    a block decider; identity elsewhere."""
    eq = member.eq
    if eq is None:
        eq = OpaqueEq(lambda a, b: a == b or (member(a) and member(b)),
                      label="block-decider")
    return NormalFromSet(eq, member.source)


@dataclass(frozen=True)
class Closed:
    pass


@dataclass(frozen=True)
class Escape:
    witness: int


def finite_union_check(f: PermExpr, A: list[int]) -> Union[Closed, Escape]:
    """Is the finite set A a union of cycles of f?  If not, return the least
    image point that escapes A."""
    base = set(A)
    if len(base) != len(A):
        raise ValueError("A must be duplicate-free")
    escapes = sorted(perm_eval(f, a) for a in A if perm_eval(f, a) not in base)
    if escapes:
        return Escape(escapes[0])
    return Closed()


# ---------------------------------------------------------------------------
# normalization


def witness_to_eq(w: cyc.CycleWitness) -> EqExpr:
    """View a cycle witness as an equivalence expression (opaque decider)."""
    d = cyc.witness_convert(w, cyc.DECIDER)
    return OpaqueEq(lambda x, y: d.payload(x, y), label="cycle-witness")


def normalize(f: PermExpr, w: cyc.CycleWitness, eq: Optional[EqExpr] = None) -> PermExpr:
    """The unique normal permutation with the same cycle partition as f."""
    if eq is None:
        eq = witness_to_eq(w)
    return FromRho(eq, RhoClosure(f, eq))


def perm_from_rho(eq: EqExpr, rho) -> PermExpr:
    if isinstance(rho, RhoExpr) and rho.rho_kind != "greater":
        raise ValueError("perm_from_rho needs a greater-element rho")
    return FromRho(eq, rho)


def coproduct_perm_from_rho(family, rho) -> PermExpr:
    return CoproductPerm(family, rho)


def seminormal_from_rho(eq: EqExpr, rho) -> PermExpr:
    if isinstance(rho, RhoExpr) and rho.rho_kind != "cardinality":
        raise ValueError("seminormal_from_rho needs a cardinality rho")
    return SeminormalFromRho(eq, rho)


def rho_from_perm(f: PermExpr, w: cyc.CycleWitness) -> RhoExpr:
    """Greater-element predicate for Part f, routed through the normal form."""
    return RhoFromNormal(normalize(f, w))


# ---------------------------------------------------------------------------
# minimum finding on normal permutations


class _Wrapped(Exception):
    def __init__(self, length: int):
        self.length = length


def normal_min_with_probes(fprime: PermExpr, x: int,
                           fuel: Optional[Fuel] = None) -> tuple[int, int]:
    """Least element of x's cycle, assuming fprime is normal.

    Returns (minimum, probes).  A probe is one value inspection of the
    search: the two initial neighbour looks, one per galloping step, one per
    bisection step.  Walking the orbit to reach an inspected offset is
    cached and not itself counted, so the probe count is the length of the
    derivation, logarithmic in the distance to the minimum.
    """
    f = fuel if fuel is not None else Fuel.unbounded()
    xp = fprime.fwd(x, f)
    xm = fprime.bwd(x, f)
    probes = 2
    if x <= xp and x <= xm:
        return x, probes
    direction = 1 if xp <= xm else -1

    vals = [x]

    def v(j: int) -> int:
        while len(vals) <= j:
            nxt = fprime.fwd(vals[-1], f) if direction > 0 else fprime.bwd(vals[-1], f)
            if nxt == x:
                raise _Wrapped(len(vals))
            vals.append(nxt)
        return vals[j]

    try:
        prev, cur = 1, 2
        v(1)
        while True:
            probes += 1
            if v(cur) >= v(prev):
                break
            prev, cur = cur, cur * 2
        lo, hi = prev // 2, cur - 1
        # least offset m in (lo, hi] where the value stops decreasing
        while hi - lo > 1:
            mid = (lo + hi) // 2
            probes += 1
            if v(mid) < v(mid + 1):
                hi = mid
            else:
                lo = mid
        return v(hi), probes
    except _Wrapped as wrap:
        # finite cycle: the whole orbit is cached, take the minimum directly
        return min(vals[:wrap.length]), probes + wrap.length


def normal_min(fprime: PermExpr, x: int, fuel: Optional[Fuel] = None) -> int:
    return normal_min_with_probes(fprime, x, fuel)[0]


def decider_from_normal(fprime: PermExpr) -> cyc.CycleWitness:
    def min_rep(x: int, fu: Optional[Fuel] = None) -> int:
        return normal_min(fprime, x, fu)

    return cyc.CycleWitness(cyc.MIN_REP, min_rep, fprime)


# ---------------------------------------------------------------------------
# semi-normal recognition and repair


def _cycle_min_seminormal(f: PermExpr, x: int, orbits: OrbitCache,
                          cap: int = SCAN_CAP) -> int:
    """Least element of x's cycle for semi-normal f, by alternating search
    for the unique local minimum."""
    for j in range(cap):
        c = orbits.value(x, delta_inv(j))
        if c <= perm_eval(f, c) and c <= perm_eval_inv(f, c):
            return c
    raise PreconditionViolation("no local minimum found: subject not semi-normal?")


def seminormal_cf_decider(f: PermExpr) -> Callable[[int], bool]:
    """Cycle-finiteness decider valid for semi-normal f."""
    orbits = OrbitCache(f)

    def finite(x: int) -> bool:
        x0 = _cycle_min_seminormal(f, x, orbits)
        up = perm_eval(f, x0)
        if up == x0 or perm_eval(f, up) == x0:
            return True
        down = perm_eval_inv(f, x0)
        if x0 < down < up:
            return False
        if x0 < up < down:
            return True
        raise PreconditionViolation("minimum neighbourhood malformed: not semi-normal?")

    return finite


def _normal_fwd_index(k: int, n: int) -> int:
    """Image index inside a normal finite cycle of length n."""
    if k % 2 == 0:
        if k + 2 <= n - 1:
            return k + 2
        if k + 1 <= n - 1:
            return k + 1
        return 0 if k == 0 else k - 1
    return 0 if k == 1 else k - 2


def _normal_bwd_index(t: int, n: int) -> int:
    if t % 2 == 0:
        if t >= 2:
            return t - 2
        return 1 if n >= 2 else 0
    if t + 2 <= n - 1:
        return t + 2
    if t + 1 <= n - 1:
        return t + 1
    return t - 1


class SeminormalToNormal(PermExpr):
    """Rearrange every finite cycle of a semi-normal permutation into its
    normal zig-zag order; infinite cycles pass through unchanged."""

    kind = "seminormal_to_normal"

    def __init__(self, f: PermExpr):
        self.f = f
        self._orbits = OrbitCache(f)
        self._finite = seminormal_cf_decider(f)

    def _cycle_sorted(self, x: int, fuel: Fuel) -> list[int]:
        out = [x]
        v = perm_eval(self.f, x, fuel)
        while v != x:
            out.append(v)
            v = perm_eval(self.f, v, fuel)
        return sorted(out)

    def fwd(self, x: int, fuel: Fuel) -> int:
        if not self._finite(x):
            return self.f.fwd(x, fuel)
        members = self._cycle_sorted(x, fuel)
        return members[_normal_fwd_index(members.index(x), len(members))]

    def bwd(self, x: int, fuel: Fuel) -> int:
        if not self._finite(x):
            return self.f.bwd(x, fuel)
        members = self._cycle_sorted(x, fuel)
        return members[_normal_bwd_index(members.index(x), len(members))]


def seminormal_to_normal(f: PermExpr) -> PermExpr:
    return SeminormalToNormal(f)


# ---------------------------------------------------------------------------
# recognition report


@dataclass(frozen=True)
class CycleVerdict:
    minimum: int
    verdict: str                      # "normal" | "seminormal-finite" | "violation"
    witness: Optional[tuple] = None   # (start, delta_index, value, prev_value)


@dataclass(frozen=True)
class NormalityReport:
    window: int
    entries: tuple[CycleVerdict, ...]

    @property
    def clean(self) -> bool:
        return all(e.verdict != "violation" for e in self.entries)

    @property
    def all_normal(self) -> bool:
        return all(e.verdict == "normal" for e in self.entries)


def normality_report(f: PermExpr, window: int) -> NormalityReport:
    """Inspect every cycle whose minimum lies in the window.

    Cycle minima are spotted by the local test x <= min(x+, x-); from each
    one the delta-indexed power sequence is checked for increase as far as
    the window allows.  Finite cycles that fail the zig-zag order but list
    their members in plain increasing order are reported seminormal-finite.
    """
    fuel = Fuel.unbounded()
    orbits = OrbitCache(f)
    entries: list[CycleVerdict] = []
    cap = 2 * window + 4
    for x in range(window):
        if not (x <= perm_eval(f, x, fuel) and x <= perm_eval_inv(f, x, fuel)):
            continue
        # finite? walk forward looking for a return
        members = [x]
        v = perm_eval(f, x, fuel)
        while v != x and len(members) <= cap:
            members.append(v)
            v = perm_eval(f, v, fuel)
        if v == x:
            n = len(members)
            srt = sorted(members)
            if srt[0] != x:
                # x is not actually its cycle's minimum: skip, the true
                # minimum reports this cycle (or lies outside the window)
                continue
            zig = [orbits.value(x, delta_inv(j)) for j in range(n)]
            if zig == srt or n <= 2:
                entries.append(CycleVerdict(x, "normal"))
            elif members == srt:
                entries.append(CycleVerdict(x, "seminormal-finite"))
            else:
                bad = next(j for j in range(n) if zig[j] != srt[j])
                entries.append(CycleVerdict(
                    x, "violation", (x, bad, zig[bad], srt[bad])))
        else:
            # treated as infinite within this window
            prev = x
            verdict: Optional[CycleVerdict] = None
            for j in range(1, cap):
                b = orbits.value(x, delta_inv(j))
                if b <= prev:
                    verdict = CycleVerdict(x, "violation", (x, j, b, prev))
                    break
                prev = b
                if b >= window:
                    break
            entries.append(verdict or CycleVerdict(x, "normal"))
    return NormalityReport(window, tuple(entries))
