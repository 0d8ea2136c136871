"""Finitely injective surjections onto finite abelian groups.

Injectivity is tested on the cyclic subgroups generated by the torsion
generators of the source (every finite subgroup of these sources is
conjugate into one of them, and conjugation is invisible in an abelian
target), so a homomorphism qualifies when each torsion generator of order
m goes to an element of order exactly m and the images generate the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidInput, SearchTooLarge
from .numtheory import (
    FiniteAbelianGroup,
    GroupElement,
    element_order,
    factorize,
    lcm_list,
)
from .orbifolds import (
    FreeProduct,
    OrbClass,
    OrbifoldGroup,
    SourcePresentation,
    class_euler_char,
    class_fundamental_group,
)

__all__ = [
    "HomWitness",
    "fis_to_cyclic_exists",
    "fis_exists_bruteforce",
    "validate_witness",
    "realize_handlebody",
    "pairing_criterion",
    "DEFAULT_ORDER_BOUND",
    "MAX_TORSION_GENERATORS",
]

DEFAULT_ORDER_BOUND = 256
MAX_TORSION_GENERATORS = 12


@dataclass(frozen=True)
class HomWitness:
    """Images of the torsion generators followed by the free generators."""

    images: tuple[GroupElement, ...]
    n_torsion: int

    @property
    def torsion_images(self) -> tuple[GroupElement, ...]:
        return self.images[: self.n_torsion]

    @property
    def free_images(self) -> tuple[GroupElement, ...]:
        return self.images[self.n_torsion :]


def fis_to_cyclic_exists(src: FreeProduct, n: int) -> bool:
    """Closed-form existence of a finitely injective surjection onto Z_n."""
    if n < 1:
        raise InvalidInput("target order must be >= 1")
    if not isinstance(src, FreeProduct):
        raise InvalidInput("closed form covers free products only")
    orders = src.torsion_orders()
    L = lcm_list(orders) if orders else 1
    if src.free_generators() == 0:
        return n == L
    return n % L == 0


def _quotient_rank(A: FiniteAbelianGroup, H: frozenset) -> int:
    # minimal number of generators of A/H: max over primes p of the F_p-rank
    # of (A/H)[p], counted as #{a : p*a in H} / |H| = p^rank
    q = A.order // len(H)
    if q == 1:
        return 0
    best = 0
    elems = list(A.elements())
    for p in factorize(q):
        count = sum(1 for a in elems if A.mul(p, a) in H)
        ratio, r = count // len(H), 0
        while ratio > 1:
            ratio //= p
            r += 1
        best = max(best, r)
    return best


def _complete_free_images(
    A: FiniteAbelianGroup, gens: Sequence[GroupElement], f: int
) -> Optional[tuple[GroupElement, ...]]:
    """Choose ``f`` elements that together with ``gens`` generate ``A``, if possible.

    Each pick keeps the quotient generable by the picks still to come, so the
    greedy pass succeeds whenever the initial rank test passes.
    """
    gens = list(gens)
    H = A.subgroup(gens)
    if _quotient_rank(A, H) > f:
        return None
    chosen: list[GroupElement] = []
    for remaining in range(f - 1, -1, -1):
        if len(H) == A.order:
            chosen.append(A.zero())
            continue
        for y in A.elements():
            if y in H:
                continue
            H2 = A.subgroup(gens + chosen + [y])
            if _quotient_rank(A, H2) <= remaining:
                chosen.append(y)
                H = H2
                break
    return tuple(chosen)


def _torsion_candidates(A: FiniteAbelianGroup, orders: Sequence[int]) -> Optional[dict[int, list]]:
    by_order: dict[int, list] = {}
    for m in set(orders):
        if A.exponent % m:
            return None
        by_order[m] = A.elements_of_order(m)
        if not by_order[m]:
            return None
    return by_order


def fis_exists_bruteforce(
    src: SourcePresentation,
    A: FiniteAbelianGroup,
    *,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> Optional[HomWitness]:
    """Search for a finitely injective surjection ``src -> A``.

    Torsion images are enumerated lexicographically; images for generators of
    equal order are kept non-decreasing, which loses nothing because the
    relation and the generation test are symmetric in them.  For an orbifold
    group the last torsion image is forced by the abelianised relation.  Free
    and handle generators are then filled in only if they can complete the
    torsion images to a generating set.
    """
    if A.order > order_bound:
        raise SearchTooLarge(f"target order {A.order} exceeds bound {order_bound}")
    orders = list(src.torsion_orders())
    if len(orders) > MAX_TORSION_GENERATORS:
        raise SearchTooLarge(f"{len(orders)} torsion generators exceed {MAX_TORSION_GENERATORS}")
    relation = isinstance(src, OrbifoldGroup)
    f = src.free_generators()
    n = len(orders)

    if n == 0:
        free = _complete_free_images(A, [], f)
        return None if free is None else HomWitness(free, 0)

    by_order = _torsion_candidates(A, orders)
    if by_order is None:
        return None
    position = {m: {x: i for i, x in enumerate(by_order[m])} for m in by_order}
    images: list[GroupElement] = []

    def lower_index(i: int) -> int:
        if i > 0 and orders[i - 1] == orders[i]:
            return position[orders[i]][images[i - 1]]
        return 0

    def finish() -> Optional[HomWitness]:
        free = _complete_free_images(A, images, f)
        if free is None:
            return None
        return HomWitness(tuple(images) + free, n)

    def search(i: int) -> Optional[HomWitness]:
        if relation and i == n - 1:
            last = A.neg(A.sum(images))
            m = orders[i]
            idx = position[m].get(last)
            if idx is None or idx < lower_index(i):
                return None
            images.append(last)
            out = finish()
            images.pop()
            return out
        if i == n:
            return finish()
        cands = by_order[orders[i]]
        for x in cands[lower_index(i) :]:
            images.append(x)
            out = search(i + 1)
            images.pop()
            if out is not None:
                return out
        return None

    return search(0)


def validate_witness(src: SourcePresentation, A: FiniteAbelianGroup, w: HomWitness) -> bool:
    orders = src.torsion_orders()
    if w.n_torsion != len(orders) or len(w.free_images) != src.free_generators():
        return False
    if any(element_order(A, x) != m for x, m in zip(w.torsion_images, orders)):
        return False
    if isinstance(src, OrbifoldGroup) and A.sum(w.torsion_images) != A.zero():
        return False
    return A.generated_by(w.images)


def realize_handlebody(
    c: OrbClass, A: FiniteAbelianGroup, *, order_bound: int = DEFAULT_ORDER_BOUND
) -> Optional[int]:
    """Genus of the handlebody on which ``A`` acts with quotient in class ``c``.

    Requires a finitely injective surjection from the class's fundamental
    group onto ``A`` and an integral genus 1 - chi * |A| greater than one.
    """
    g = 1 - class_euler_char(c) * A.order
    if g.denominator != 1 or g <= 1:
        return None
    src = class_fundamental_group(c)
    if A.is_cyclic():
        ok = fis_to_cyclic_exists(src, A.order)
    else:
        ok = fis_exists_bruteforce(src, A, order_bound=order_bound) is not None
    return int(g) if ok else None


def pairing_criterion(
    A: FiniteAbelianGroup, images: Sequence[GroupElement], orders: Sequence[int]
) -> bool:
    """Whether the images split into pairs (v, -v)."""
    if len(images) != len(orders):
        raise InvalidInput("images and orders differ in length")
    if any(m <= 2 for m in orders):
        raise InvalidInput("pairing applies to generators of order > 2")
    counts: dict[GroupElement, int] = {}
    for x in images:
        counts[x] = counts.get(x, 0) + 1
    for x, c in counts.items():
        inv = A.neg(x)
        if inv == x:
            if c % 2:
                return False
        elif counts.get(inv, 0) != c:
            return False
    return True

