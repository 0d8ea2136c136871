"""Graphs of finite cyclic groups, handlebody orbifold classes, 2-orbifold signatures.

All Euler characteristics are :class:`fractions.Fraction`; comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterator, Optional, Union

from .errors import InvalidInput
from .numtheory import divisors

__all__ = [
    "GraphOfGroups",
    "ClassA",
    "ClassB",
    "ClassC",
    "ClassD",
    "OrbClass",
    "OrbSignature",
    "SourcePresentation",
    "FreeProduct",
    "OrbifoldGroup",
    "euler_char_graph",
    "reduce_graph",
    "classify",
    "class_euler_char",
    "class_fundamental_group",
    "representative_graph",
    "orb_euler_char_2d",
    "rh_covered_genus",
    "enumerate_equal_cone_solutions",
    "enumerate_signatures",
]


# --------------------------------------------------------------------------
# graphs of groups


@dataclass(frozen=True)
class GraphOfGroups:
    """Finite graph labelled by orders of cyclic groups.

    ``vertices`` holds ``(id, order)`` pairs and ``edges`` holds
    ``(u, v, order)`` triples; loops and multi-edges are allowed.  An edge
    order must divide the orders of both its endpoints.
    """

    vertices: tuple[tuple[Hashable, int], ...]
    edges: tuple[tuple[Hashable, Hashable, int], ...] = ()

    def __post_init__(self):
        vs = tuple((v, int(o)) for v, o in self.vertices)
        es = tuple((u, v, int(o)) for u, v, o in self.edges)
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)
        orders = dict(vs)
        if len(orders) != len(vs):
            raise InvalidInput("duplicate vertex id")
        if any(o < 1 for o in orders.values()):
            raise InvalidInput("vertex group orders must be >= 1")
        for u, v, o in es:
            if u not in orders or v not in orders:
                raise InvalidInput(f"edge ({u}, {v}) has an unknown endpoint")
            if o < 1 or orders[u] % o or orders[v] % o:
                raise InvalidInput(f"edge group of order {o} cannot inject into its endpoints")

    def order(self, v) -> int:
        return dict(self.vertices)[v]

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        parent = {v: v for v, _ in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v, _ in self.vertices}) == 1

    def betti_number(self) -> int:
        """First Betti number of the underlying graph (connected graphs only)."""
        return len(self.edges) - len(self.vertices) + 1


def euler_char_graph(G: GraphOfGroups) -> Fraction:
    return sum((Fraction(1, o) for _, o in G.vertices), Fraction(0)) - sum(
        (Fraction(1, o) for _, _, o in G.edges), Fraction(0)
    )


def reduce_graph(G: GraphOfGroups) -> GraphOfGroups:
    """Apply the discal merge moves until none applies.

    A non-loop edge is contracted when one endpoint is trivial (the edge is
    then trivial too) or when the edge order equals both endpoint orders.
    The merged vertex keeps the larger order.  Euler characteristic is
    unchanged by either move.
    """
    vertices = dict(G.vertices)
    edges = list(G.edges)
    changed = True
    while changed:
        changed = False
        for i, (u, v, o) in enumerate(edges):
            if u == v:
                continue
            ou, ov = vertices[u], vertices[v]
            if ou == 1 or ov == 1 or (o == ou == ov):
                keep, drop = (v, u) if ou == 1 else (u, v)
                del edges[i]
                vertices.pop(drop)
                edges = [
                    (keep if a == drop else a, keep if b == drop else b, e) for a, b, e in edges
                ]
                changed = True
                break
    return GraphOfGroups(tuple(vertices.items()), tuple(edges))


@dataclass(frozen=True)
class ClassA:
    """Path Z_l - Z_m - Z_n with trivial edges and 1/l + 1/m + 1/n > 1.

    Parameters are stored sorted; the free product does not see the path order.
    """

    l: int
    m: int
    n: int

    def __post_init__(self):
        l, m, n = sorted((self.l, self.m, self.n))
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        if l < 2 or Fraction(1, l) + Fraction(1, m) + Fraction(1, n) <= 1:
            raise InvalidInput(f"A({l},{m},{n}) needs l,m,n > 1 and 1/l+1/m+1/n > 1")

    def __str__(self):
        return f"A({self.l},{self.m},{self.n})"


@dataclass(frozen=True)
class ClassB:
    """Edge Z_m - Z_n with trivial edge group and 0 < 1/m + 1/n < 1 (sorted)."""

    m: int
    n: int

    def __post_init__(self):
        m, n = sorted((self.m, self.n))
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        if m < 2 or Fraction(1, m) + Fraction(1, n) >= 1:
            raise InvalidInput(f"B({m},{n}) needs m,n > 1 and 1/m+1/n < 1")

    def __str__(self):
        return f"B({self.m},{self.n})"


@dataclass(frozen=True)
class ClassC:
    """One vertex Z_n with a trivial loop."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput(f"C({self.n}) needs n > 1")

    def __str__(self):
        return f"C({self.n})"


@dataclass(frozen=True)
class ClassD:
    """Vertex Z_n joined by a trivial edge to vertex Z_m, which carries a Z_m loop."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 2 or self.n < 2:
            raise InvalidInput(f"D({self.m},{self.n}) needs m,n > 1")

    def __str__(self):
        return f"D({self.m},{self.n})"


OrbClass = Union[ClassA, ClassB, ClassC, ClassD]


def representative_graph(c: OrbClass) -> GraphOfGroups:
    """A graph of groups of the given class, in its reduced shape."""
    if isinstance(c, ClassA):
        return GraphOfGroups(((0, c.l), (1, c.m), (2, c.n)), ((0, 1, 1), (1, 2, 1)))
    if isinstance(c, ClassB):
        return GraphOfGroups(((0, c.m), (1, c.n)), ((0, 1, 1),))
    if isinstance(c, ClassC):
        return GraphOfGroups(((0, c.n),), ((0, 0, 1),))
    if isinstance(c, ClassD):
        return GraphOfGroups(((0, c.n), (1, c.m)), ((0, 1, 1), (1, 1, c.m)))
    raise InvalidInput(f"not an orbifold class: {c!r}")


def classify(G: GraphOfGroups) -> Optional[OrbClass]:
    """Class (A)-(D) of a graph of groups after merge moves, or ``None`` for any other shape."""
    if not G.is_connected():
        raise InvalidInput("graph of groups is disconnected")
    R = reduce_graph(G)
    orders = dict(R.vertices)
    nv, ne = len(orders), len(R.edges)
    if any(o == 1 for o in orders.values()):
        return None
    try:
        if ne == nv - 1:  # tree
            if any(o != 1 for _, _, o in R.edges):
                return None
            if nv == 2:
                return ClassB(*orders.values())
            if nv == 3:
                degree = {v: 0 for v in orders}
                for u, v, _ in R.edges:
                    degree[u] += 1
                    degree[v] += 1
                if sorted(degree.values()) != [1, 1, 2]:
                    return None
                return ClassA(*orders.values())
            return None
        if ne == nv:  # one cycle
            loops = [(u, o) for u, v, o in R.edges if u == v]
            if nv == 1 and loops and loops[0][1] == 1:
                return ClassC(next(iter(orders.values())))
            if nv == 2 and len(loops) == 1:
                (w, lo), (bridge,) = loops[0], [e for e in R.edges if e[0] != e[1]]
                if bridge[2] != 1 or lo != orders[w]:
                    return None
                other = bridge[0] if bridge[1] == w else bridge[1]
                return ClassD(m=orders[w], n=orders[other])
    except InvalidInput:
        # shape matched but parameters violate the class inequalities
        return None
    return None


def class_euler_char(c: OrbClass) -> Fraction:
    if isinstance(c, ClassA):
        return Fraction(1, c.l) + Fraction(1, c.m) + Fraction(1, c.n) - 2
    if isinstance(c, ClassB):
        return Fraction(1, c.m) + Fraction(1, c.n) - 1
    if isinstance(c, (ClassC, ClassD)):
        return Fraction(1, c.n) - 1
    raise InvalidInput(f"not an orbifold class: {c!r}")


# --------------------------------------------------------------------------
# source groups


@dataclass(frozen=True)
class OrbSignature:
    """Orientable 2-orbifold: quotient genus and sorted cone indices."""

    genus: int
    cones: tuple[int, ...] = ()

    def __post_init__(self):
        cones = tuple(sorted(int(n) for n in self.cones))
        object.__setattr__(self, "cones", cones)
        if self.genus < 0:
            raise InvalidInput(f"quotient genus must be >= 0, got {self.genus}")
        if any(n < 2 for n in cones):
            raise InvalidInput(f"cone indices must be >= 2, got {cones}")

    def __str__(self):
        return f"({self.genus};{','.join(map(str, self.cones))})"


@dataclass(frozen=True)
class FreeProduct:
    """Z_{m_1} * ... * Z_{m_l} * F_r, optionally with one extra factor Z_m + Z."""

    cyclic_orders: tuple[int, ...] = ()
    free_rank: int = 0
    mixed_factor: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(m) for m in self.cyclic_orders))
        if any(m < 2 for m in self.cyclic_orders):
            raise InvalidInput("cyclic factor orders must be >= 2")
        if self.free_rank < 0:
            raise InvalidInput("free rank must be >= 0")
        if self.mixed_factor is not None and self.mixed_factor < 2:
            raise InvalidInput("mixed factor order must be >= 2")

    def torsion_orders(self) -> tuple[int, ...]:
        extra = (self.mixed_factor,) if self.mixed_factor is not None else ()
        return self.cyclic_orders + extra

    def free_generators(self) -> int:
        return self.free_rank + (1 if self.mixed_factor is not None else 0)


@dataclass(frozen=True)
class OrbifoldGroup:
    """Fundamental group of an orientable closed 2-orbifold.

    Generators a_i, b_i (2 * genus) and x_j of order cones[j], with the single
    relation prod [a_i, b_i] * prod x_j = 1.
    """

    signature: OrbSignature

    def torsion_orders(self) -> tuple[int, ...]:
        return self.signature.cones

    def free_generators(self) -> int:
        return 2 * self.signature.genus


SourcePresentation = Union[FreeProduct, OrbifoldGroup]


def class_fundamental_group(c: OrbClass) -> FreeProduct:
    if isinstance(c, ClassA):
        return FreeProduct((c.l, c.m, c.n))
    if isinstance(c, ClassB):
        return FreeProduct((c.m, c.n))
    if isinstance(c, ClassC):
        return FreeProduct((c.n,), free_rank=1)
    if isinstance(c, ClassD):
        return FreeProduct((c.n,), mixed_factor=c.m)
    raise InvalidInput(f"not an orbifold class: {c!r}")


# --------------------------------------------------------------------------
# Riemann-Hurwitz


def orb_euler_char_2d(s: OrbSignature) -> Fraction:
    return 2 - 2 * s.genus - sum((1 - Fraction(1, n) for n in s.cones), Fraction(0))


def rh_covered_genus(order: int, s: OrbSignature) -> Optional[int]:
    """Genus of a regular cover of degree ``order`` over ``s``, if it is an integer >= 0."""
    if order < 1:
        raise InvalidInput("covering degree must be >= 1")
    if any(order % n for n in s.cones):
        raise InvalidInput(f"cone indices {s.cones} must divide {order}")
    two_minus_2g = order * orb_euler_char_2d(s)
    if two_minus_2g.denominator != 1 or (2 - two_minus_2g.numerator) % 2:
        return None
    g = (2 - two_minus_2g.numerator) // 2
    return g if g >= 0 else None


def enumerate_equal_cone_solutions(g: int, min_order: int) -> list[tuple[int, int, int]]:
    """All (g', k, n) with 2 - 2g = n(2 - 2g' - k(1 - 1/n)), k even, n >= min_order.

    The equation is linear in n: n(2g' + k - 2) = 2g - 2 + k, so for each
    (g', k) there is at most one n; n >= 2 bounds k + 4g' <= 2g + 2.
    """
    if isinstance(g, bool) or not isinstance(g, int) or g <= 1 or g % 2:
        raise InvalidInput("genus must be even and exceed 1")
    if min_order < 2:
        raise InvalidInput("min_order must be >= 2")
    out = []
    for gp in range((g + 1) // 2 + 1):
        for k in range(0, 2 * g + 3 - 4 * gp, 2):
            den = 2 * gp + k - 2
            num = 2 * g - 2 + k
            if den > 0 and num % den == 0 and num // den >= min_order:
                out.append((gp, k, num // den))
    out.sort(key=lambda t: (-t[0], t[1]))
    return out


def _cone_multisets(
    target: Fraction, choices: list[int], start: int, max_count: int
) -> Iterator[tuple[int, ...]]:
    # non-decreasing tuples from choices[start:] whose (1 - 1/n) sum to target
    if target == 0:
        yield ()
        return
    if max_count == 0 or target < Fraction(1, 2):
        return
    heaviest = 1 - Fraction(1, choices[-1])
    for i in range(start, len(choices)):
        n = choices[i]
        w = 1 - Fraction(1, n)
        if w > target:
            break
        if w + heaviest * (max_count - 1) < target:
            continue
        for rest in _cone_multisets(target - w, choices, i, max_count - 1):
            yield (n,) + rest


def enumerate_signatures(g: int, order: int, orientable_quotient_genus_max: int) -> list[OrbSignature]:
    """Signatures over which a degree-``order`` regular cover has genus ``g``.

    Cone indices range over divisors of ``order`` that are >= 2.
    """
    if g <= 1:
        raise InvalidInput("genus must exceed 1")
    if order < 2:
        raise InvalidInput("order must be >= 2")
    choices = [d for d in divisors(order) if d >= 2]
    max_cones = (4 * g - 4) // order + 4
    out = []
    for gamma in range(min(g, orientable_quotient_genus_max) + 1):
        # sum (1 - 1/n_i) = 2 - 2*gamma + (2g - 2)/order
        target = 2 - 2 * gamma + Fraction(2 * g - 2, order)
        if target < 0:
            break
        for cones in _cone_multisets(target, choices, 0, max_cones):
            out.append(OrbSignature(gamma, cones))
    return out

