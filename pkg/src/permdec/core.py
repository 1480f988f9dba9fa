"""Integer plumbing: the signed/natural bijection, pair coding, bounded searches.

Everything here is exact big-integer arithmetic; nothing wraps or rounds.
Searches carry an explicit probe budget so that semi-decidable questions
surface "ran out of budget" as a value instead of hanging or lying.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union


class FuelExhausted(Exception):
    """Raised by evaluation paths that cannot return a partial answer."""


class PreconditionViolation(Exception):
    """A documented caller obligation was provably not met."""


class Fuel:
    """Budget of predicate probes. budget=None means unbounded.

    The counter is shared: nested searches fed the same Fuel draw from one
    budget. A Fuel is cheap, single-use state; create one per top-level call.
    """

    __slots__ = ("budget", "used")

    def __init__(self, budget: Optional[int] = None):
        if budget is not None and budget < 0:
            raise ValueError("fuel budget must be >= 0")
        self.budget = budget
        self.used = 0

    @classmethod
    def unbounded(cls) -> "Fuel":
        return cls(None)

    def try_spend(self) -> bool:
        """Consume one probe; False when the budget is gone (nothing consumed)."""
        if self.budget is not None and self.used >= self.budget:
            return False
        self.used += 1
        return True

    def spend(self) -> None:
        if not self.try_spend():
            raise FuelExhausted(f"probe budget of {self.budget} exhausted")

    @property
    def remaining(self) -> Optional[int]:
        return None if self.budget is None else self.budget - self.used


@dataclass(frozen=True)
class Found:
    value: int
    probes: int


@dataclass(frozen=True)
class Exhausted:
    probes: int


SearchOutcome = Union[Found, Exhausted]


def delta(k: int) -> int:
    """Bijection from signed integers onto naturals: 0,-1,1,-2,2,... -> 0,1,2,3,4,..."""
    if k == 0:
        return 0
    if k < 0:
        return -2 * k - 1
    return 2 * k


def delta_inv(j: int) -> int:
    if j < 0:
        raise ValueError("delta_inv takes a natural number")
    if j % 2 == 0:
        return j // 2
    return -((j + 1) // 2)


def pair(x: int, y: int) -> int:
    """Quadratic pair coding, a bijection N x N -> N increasing in y for fixed x."""
    if x < 0 or y < 0:
        raise ValueError("pair takes naturals")
    return (x * x + 2 * x * y + y * y + 3 * x + y) // 2


def unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("unpair takes a natural")
    # z = w(w+1)/2 + x with w = x + y
    w = (math.isqrt(8 * z + 1) - 1) // 2
    t = w * (w + 1) // 2
    x = z - t
    y = w - x
    return x, y


def pack3(x: int, y: int, z: int) -> int:
    return pair(x, pair(y, z))


def unpack3(n: int) -> tuple[int, int, int]:
    x, rest = unpair(n)
    y, z = unpair(rest)
    return x, y, z


def mu_search(pred: Callable[[int], bool], fuel: Fuel) -> SearchOutcome:
    """Least natural satisfying pred, probing 0,1,2,... One fuel unit per probe."""
    probes = 0
    x = 0
    while True:
        if not fuel.try_spend():
            return Exhausted(probes)
        probes += 1
        if pred(x):
            return Found(x, probes)
        x += 1


def xi_search(pred: Callable[[int], bool], fuel: Fuel) -> SearchOutcome:
    """Least (in the order 0,-1,1,-2,2,...) integer satisfying pred."""
    probes = 0
    j = 0
    while True:
        if not fuel.try_spend():
            return Exhausted(probes)
        probes += 1
        k = delta_inv(j)
        if pred(k):
            return Found(k, probes)
        j += 1
