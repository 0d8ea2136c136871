"""Exact integer helpers and finite abelian groups in invariant-factor form.

Everything here is integer arithmetic on Python ints; nothing touches floats.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput

__all__ = [
    "lcm_list",
    "divisors",
    "factorize",
    "partitions",
    "FiniteAbelianGroup",
    "GroupElement",
    "abelian_groups_of_order",
    "element_order",
]


def lcm_list(ms: Iterable[int]) -> int:
    ms = list(ms)
    if not ms:
        raise InvalidInput("lcm of an empty list")
    for m in ms:
        if m < 1:
            raise InvalidInput(f"lcm entries must be positive, got {m}")
    return reduce(lambda a, b: a * b // math.gcd(a, b), ms, 1)


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in ascending order."""
    if n < 1:
        raise InvalidInput(f"divisors need n >= 1, got {n}")
    return list(_divisors(n))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (inputs stay small)."""
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def partitions(a: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``a`` as non-increasing tuples."""
    if largest is None:
        largest = a
    if a == 0:
        yield ()
        return
    for first in range(min(a, largest), 0, -1):
        for rest in partitions(a - first, first):
            yield (first,) + rest


def _canonical_factors(cyclic_orders: Iterable[int]) -> tuple[int, ...]:
    # regroup prime powers: the i-th largest p-power of every prime goes into
    # the i-th largest invariant factor
    by_prime: dict[int, list[int]] = {}
    for m in cyclic_orders:
        if m < 1:
            raise InvalidInput(f"cyclic factor orders must be positive, got {m}")
        for p, e in factorize(m).items():
            by_prime.setdefault(p, []).append(p**e)
    if not by_prime:
        return ()
    width = max(len(v) for v in by_prime.values())
    factors = [1] * width
    for powers in by_prime.values():
        powers.sort(reverse=True)
        for i, q in enumerate(powers):
            factors[i] *= q
    return tuple(sorted(factors))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{d_1} + ... + Z_{d_r} with d_1 | d_2 | ... | d_r and every d_i >= 2.

    The trivial group has no invariant factors.
    """

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        for d in fs:
            if d < 2:
                raise InvalidInput(f"invariant factors must be >= 2, got {fs}")
        for a, b in zip(fs, fs[1:]):
            if b % a:
                raise InvalidInput(f"invariant factors must form a divisor chain, got {fs}")

    @classmethod
    def from_cyclic(cls, orders: Iterable[int]) -> FiniteAbelianGroup:
        """Canonical form of a direct sum of cyclic groups of the given orders."""
        return cls(_canonical_factors(orders))

    @classmethod
    def cyclic(cls, n: int) -> FiniteAbelianGroup:
        return cls.from_cyclic([n])

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def is_cyclic(self) -> bool:
        return self.rank <= 1

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def element(self, coords: Sequence[int]) -> GroupElement:
        if len(coords) != self.rank:
            raise InvalidInput(f"element {tuple(coords)} has wrong length for {self}")
        return GroupElement(tuple(c % d for c, d in zip(coords, self.invariant_factors)))

    def elements(self) -> Iterator[GroupElement]:
        """All elements in lexicographic coordinate order."""
        for coords in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield GroupElement(coords)

    def standard_generators(self) -> list[GroupElement]:
        gens = []
        for i in range(self.rank):
            c = [0] * self.rank
            c[i] = 1
            gens.append(GroupElement(tuple(c)))
        return gens

    def add(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return GroupElement(
            tuple((a + b) % d for a, b, d in zip(x.coords, y.coords, self.invariant_factors))
        )

    def neg(self, x: GroupElement) -> GroupElement:
        return GroupElement(tuple((-a) % d for a, d in zip(x.coords, self.invariant_factors)))

    def mul(self, t: int, x: GroupElement) -> GroupElement:
        return GroupElement(tuple((t * a) % d for a, d in zip(x.coords, self.invariant_factors)))

    def sum(self, xs: Iterable[GroupElement]) -> GroupElement:
        acc = [0] * self.rank
        for x in xs:
            for i, c in enumerate(x.coords):
                acc[i] += c
        return self.element(acc)

    def elements_of_order(self, m: int) -> list[GroupElement]:
        return [x for x in self.elements() if element_order(self, x) == m]

    def subgroup(self, gens: Iterable[GroupElement]) -> frozenset[GroupElement]:
        """Subgroup generated by ``gens``, by breadth-first closure under addition."""
        gens = [g for g in gens if any(g.coords)]
        seen = {self.zero()}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.add(x, g)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def generated_by(self, gens: Iterable[GroupElement]) -> bool:
        return len(self.subgroup(gens)) == self.order

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return "+".join(f"Z{d}" for d in self.invariant_factors)


@dataclass(frozen=True, order=True)
class GroupElement:
    coords: tuple[int, ...]

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


def element_order(G: FiniteAbelianGroup, x: GroupElement) -> int:
    if len(x.coords) != G.rank:
        raise InvalidInput(f"element {x} does not belong to {G}")
    t = 1
    for c, d in zip(x.coords, G.invariant_factors):
        o = d // math.gcd(d, c % d)
        t = t * o // math.gcd(t, o)
    return t


def abelian_groups_of_order(n: int) -> list[FiniteAbelianGroup]:
    """One representative per isomorphism class of abelian groups of order ``n``.

    Sorted by invariant factors so the output is deterministic.
    """
    if n < 1:
        raise InvalidInput(f"group order must be >= 1, got {n}")
    per_prime = [
        [[p**e for e in part] for part in partitions(a)] for p, a in sorted(factorize(n).items())
    ]
    groups = {
        FiniteAbelianGroup.from_cyclic(itertools.chain.from_iterable(choice))
        for choice in itertools.product(*per_prime)
    }
    return sorted(groups, key=lambda G: (len(G.invariant_factors), G.invariant_factors))
