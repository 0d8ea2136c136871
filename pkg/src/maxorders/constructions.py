"""Exact checks of the explicit symmetric Heegaard splittings: cage, wheel, fork, square.

Points of S^3 in C^2 are stored as a squared modulus of the first coordinate
plus two angles, all as exact rationals.  Angles are turns (fractions of a
full revolution), so rotation orders are denominators.  Isometries act
coordinatewise by a rotation, optionally preceded by complex conjugation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property, reduce
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import GroupTooLarge, InvalidGenus, InvalidInput, NotInvariant
from .quantities import ExtType, check_genus

__all__ = [
    "RationalTurn",
    "S3Point",
    "S3Isometry",
    "Chord",
    "TorusArc",
    "GeodesicGraph",
    "GraphImage",
    "TorusAffineMap",
    "GridEdge",
    "GridGraph",
    "ElementFlags",
    "Check",
    "IDENTITY",
    "tau",
    "rho",
    "sigma",
    "phi",
    "compose",
    "word",
    "power",
    "apply",
    "iso_order",
    "orientation_sign",
    "generate_group",
    "build_cage",
    "build_cage_odd_variant",
    "build_wheel",
    "build_fork",
    "build_square",
    "graph_image",
    "element_flags",
    "action_flags",
    "classify_action",
    "graph_genus",
    "verify_example",
    "EXAMPLES",
]

DEFAULT_GROUP_CAP = 10000


class RationalTurn:
    """The angle 2*pi*num/den, reduced into [0, 1) and to lowest terms."""

    __slots__ = ("num", "den")

    def __init__(self, num: int = 0, den: int = 1):
        if den < 1:
            raise InvalidInput(f"turn denominator must be positive, got {den}")
        d = math.gcd(num, den)
        den //= d
        self.num = (num // d) % den
        self.den = den

    @classmethod
    def of(cls, x: Union[int, Fraction]) -> RationalTurn:
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    @property
    def denominator(self) -> int:
        return self.den

    @classmethod
    def _reduced(cls, num: int, den: int) -> RationalTurn:
        # hot path: den is already known to be positive
        d = math.gcd(num, den)
        t = cls.__new__(cls)
        t.den = den // d
        t.num = (num // d) % t.den
        return t

    def __add__(self, other: RationalTurn) -> RationalTurn:
        if self.den == other.den:
            return RationalTurn._reduced(self.num + other.num, self.den)
        return RationalTurn._reduced(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalTurn:
        t = RationalTurn.__new__(RationalTurn)
        t.den = self.den
        t.num = -self.num % self.den
        return t

    def __eq__(self, other):
        return isinstance(other, RationalTurn) and self.num == other.num and self.den == other.den

    def __lt__(self, other: RationalTurn) -> bool:
        return self.num * other.den < other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalTurn({self.num}, {self.den})"

    def __str__(self):
        return f"{self.num}/{self.den}" if self.num else "0"


def _turn(x: Union[int, Fraction, RationalTurn]) -> RationalTurn:
    return x if isinstance(x, RationalTurn) else RationalTurn.of(x)


_ZERO_TURN = RationalTurn()


class S3Point:
    """(sqrt(r1_sq) e^{2 pi i theta1}, sqrt(1 - r1_sq) e^{2 pi i theta2})."""

    __slots__ = ("r1_sq", "theta1", "theta2", "_key", "_hash", "_pole")

    def __init__(self, r1_sq, theta1, theta2):
        r = Fraction(r1_sq)
        if not 0 <= r <= 1:
            raise InvalidInput(f"squared modulus {r} outside [0, 1]")
        # 1 when the second coordinate vanishes, 0 when the first does
        self._init(r, _turn(theta1), _turn(theta2), 0 if r == 0 else 1 if r == 1 else None)

    def _init(self, r: Fraction, t1: RationalTurn, t2: RationalTurn, pole: Optional[int]) -> None:
        # the angle of a vanishing coordinate carries no information
        if pole == 0:
            t1 = _ZERO_TURN
        elif pole == 1:
            t2 = _ZERO_TURN
        self.r1_sq, self.theta1, self.theta2, self._pole = r, t1, t2, pole
        self._key = (r.numerator, r.denominator, t1.num, t1.den, t2.num, t2.den)
        self._hash = hash(self._key)

    @classmethod
    def _moved(cls, p: S3Point, t1: RationalTurn, t2: RationalTurn) -> S3Point:
        q = cls.__new__(cls)
        q._init(p.r1_sq, t1, t2, p._pole)
        return q

    @classmethod
    def make(cls, r1_sq, theta1, theta2) -> S3Point:
        return cls(r1_sq, theta1, theta2)

    def __eq__(self, other):
        return isinstance(other, S3Point) and self._key == other._key

    def __lt__(self, other: S3Point) -> bool:
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"S3Point({self.r1_sq}, {self.theta1}, {self.theta2})"

    def antipode(self) -> S3Point:
        half = RationalTurn(1, 2)
        return S3Point._moved(self, self.theta1 + half, self.theta2 + half)


@dataclass(frozen=True, order=True)
class S3Isometry:
    """(z1, z2) -> (e^{2 pi i u} z1', e^{2 pi i v} z2'), zk' = conj(zk) when the flag is set."""

    u: RationalTurn = RationalTurn()
    conj1: bool = False
    v: RationalTurn = RationalTurn()
    conj2: bool = False

    def __str__(self):
        c1 = "conj" if self.conj1 else ""
        c2 = "conj" if self.conj2 else ""
        return f"[{self.u}{'*' + c1 if c1 else ''}, {self.v}{'*' + c2 if c2 else ''}]"


IDENTITY = S3Isometry()


def tau(g: int) -> S3Isometry:
    return S3Isometry(_turn(Fraction(1, 4)), False, _turn(Fraction(1, 2 * g + 2)), False)


def rho() -> S3Isometry:
    return S3Isometry(_turn(Fraction(1, 2)), False, RationalTurn(), False)


def sigma() -> S3Isometry:
    return S3Isometry(RationalTurn(), True, RationalTurn(), False)


def phi(g: int) -> S3Isometry:
    return S3Isometry(
        _turn(Fraction(1, 2 * g - 2)), False, _turn(Fraction(1, 4) + Fraction(1, 4 * g - 4)), False
    )


def _compose_coord(u: RationalTurn, c: bool, u2: RationalTurn, c2: bool) -> tuple[RationalTurn, bool]:
    return (u + (-u2 if c else u2), c != c2)


def compose(a: S3Isometry, b: S3Isometry) -> S3Isometry:
    """The map p -> a(b(p))."""
    u, c1 = _compose_coord(a.u, a.conj1, b.u, b.conj1)
    v, c2 = _compose_coord(a.v, a.conj2, b.v, b.conj2)
    return S3Isometry(u, c1, v, c2)


def word(*isos: S3Isometry) -> S3Isometry:
    """Product read left to right as composition, so word(a, b) = a o b."""
    return reduce(compose, isos, IDENTITY)


def power(a: S3Isometry, t: int) -> S3Isometry:
    if t < 0:
        raise InvalidInput("negative powers are not needed here")
    return word(*([a] * t))


def apply(a: S3Isometry, p: S3Point) -> S3Point:
    t1 = a.u + (-p.theta1 if a.conj1 else p.theta1)
    t2 = a.v + (-p.theta2 if a.conj2 else p.theta2)
    return S3Point._moved(p, t1, t2)


def iso_order(a: S3Isometry) -> int:
    # a conjugating coordinate squares to the identity; a rotation has the
    # order of its turn
    orders = [2 if c else t.denominator for t, c in ((a.u, a.conj1), (a.v, a.conj2))]
    return math.lcm(*orders)


def orientation_sign(a: S3Isometry) -> int:
    return -1 if a.conj1 != a.conj2 else 1


def generate_group(
    gens: Sequence[S3Isometry], cap: int = DEFAULT_GROUP_CAP
) -> tuple[frozenset[S3Isometry], bool]:
    """Closure of ``gens`` under composition and whether the generators commute."""
    if cap < 1:
        raise InvalidInput("group cap must be positive")
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(x, s)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise GroupTooLarge(f"closure exceeds {cap} elements")
                    nxt.append(y)
        frontier = nxt
    abelian = all(compose(a, b) == compose(b, a) for a, b in itertools.combinations(gens, 2))
    return frozenset(seen), abelian


@dataclass(frozen=True)
class Chord:
    """Shortest geodesic between two non-antipodal vertices."""

    i: int
    j: int


@dataclass(frozen=True)
class TorusArc:
    """Arc of a torus circle between consecutive vertices, pinned by its midpoint."""

    i: int
    j: int
    circle: str
    midpoint: S3Point


Edge = Union[Chord, TorusArc]


@dataclass(frozen=True)
class GeodesicGraph:
    vertices: tuple[S3Point, ...]
    edges: tuple[Edge, ...]
    labels: tuple[str, ...] = ()
    # cyclic vertex order of each torus circle, used to validate arcs
    circles: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise InvalidInput("duplicate vertices")
        order = {name: idx for name, idx in self.circles}
        for e in self.edges:
            if not (0 <= e.i < n and 0 <= e.j < n) or e.i == e.j:
                raise InvalidInput(f"bad edge endpoints {e}")
            if isinstance(e, Chord):
                if self.vertices[e.i].antipode() == self.vertices[e.j]:
                    raise InvalidInput(f"chord {e} joins antipodal points")
            else:
                cyc = order.get(e.circle)
                if cyc is None or e.i not in cyc or e.j not in cyc:
                    raise InvalidInput(f"arc {e} is not on a known circle")
                k = len(cyc)
                pi, pj = cyc.index(e.i), cyc.index(e.j)
                if (pi - pj) % k not in (1, k - 1):
                    raise InvalidInput(f"arc {e} joins non-adjacent vertices")
        if len(self.edge_keys) != len(self.edges):
            raise InvalidInput("duplicate edges")

    @cached_property
    def point_index(self) -> dict[S3Point, int]:
        return {p: k for k, p in enumerate(self.vertices)}

    @cached_property
    def edge_keys(self) -> frozenset[tuple]:
        return frozenset(self._edge_key(e, range(len(self.vertices)), lambda p: p) for e in self.edges)

    @staticmethod
    def _edge_key(e: Edge, index: Sequence[int], f: Callable[[S3Point], S3Point]) -> tuple:
        ends = frozenset((index[e.i], index[e.j]))
        if isinstance(e, Chord):
            return ("chord", ends)
        return ("arc", ends, f(e.midpoint))

    def maps_onto(self, a: S3Isometry, target: GeodesicGraph) -> bool:
        """Whether ``a`` carries this graph's vertices and edges exactly onto ``target``."""
        if len(self.vertices) != len(target.vertices) or len(self.edges) != len(target.edges):
            return False
        where = target.point_index
        index = []
        for p in self.vertices:
            k = where.get(apply(a, p))
            if k is None:
                return False
            index.append(k)
        f = lambda p: apply(a, p)  # noqa: E731
        return frozenset(self._edge_key(e, index, f) for e in self.edges) == target.edge_keys


def _check_parity(g: int, parity: Optional[int], what: str) -> None:
    check_genus(g)
    if parity is not None and g % 2 != parity:
        raise InvalidGenus(f"{what} needs {'even' if parity == 0 else 'odd'} genus, got {g}")


def _cage_points(g: int) -> tuple[list[S3Point], list[S3Point]]:
    a = [S3Point.make(1, Fraction(m, 4), 0) for m in range(4)]
    b = [S3Point.make(0, 0, Fraction(n, 2 * g + 2)) for n in range(2 * g + 2)]
    return a, b


def _cage_graph(g: int, parity: int) -> GeodesicGraph:
    a, b = _cage_points(g)
    ai = [m for m in range(4) if m % 2 == parity]
    bi = [n for n in range(2 * g + 2) if n % 2 == parity]
    verts = [a[m] for m in ai] + [b[n] for n in bi]
    labels = [f"a{m}" for m in ai] + [f"b{n}" for n in bi]
    edges = [Chord(x, len(ai) + y) for x in range(len(ai)) for y in range(len(bi))]
    return GeodesicGraph(tuple(verts), tuple(edges), tuple(labels))


def build_cage(g: int) -> tuple[GeodesicGraph, GeodesicGraph, dict[str, S3Isometry]]:
    """Two cages, each joining two of the a_m to every other b_n, swapped by tau_g."""
    _check_parity(g, None, "cage")
    gens = {"tau": tau(g), "rho": rho(), "sigma": sigma()}
    return _cage_graph(g, 0), _cage_graph(g, 1), gens


def build_cage_odd_variant(g: int) -> tuple[GeodesicGraph, dict[str, S3Isometry]]:
    """Odd genus: the odd cage of genus g - 1 plus a_0 joined to a_1 and a_3."""
    _check_parity(g, 1, "odd cage variant")
    a, _ = _cage_points(g - 1)
    base = _cage_graph(g - 1, 1)
    verts = base.vertices + (a[0],)
    i0 = len(verts) - 1
    edges = base.edges + (Chord(i0, 0), Chord(i0, 1))
    graph = GeodesicGraph(verts, edges, base.labels + ("a0",))
    h = word(power(tau(g - 1), 2), rho(), sigma())
    return graph, {"tau2 rho sigma": h}


def build_wheel(g: int) -> tuple[GeodesicGraph, GeodesicGraph, dict[str, S3Isometry]]:
    """Two (2,4) torus link components, each with g - 1 chords across, swapped by phi_g."""
    _check_parity(g, 1, "wheel")
    k = 2 * g - 2
    half = Fraction(1, 2)

    def on_l1(t: Fraction) -> S3Point:
        return S3Point.make(half, 2 * t, t)

    def on_l2(t: Fraction) -> S3Point:
        return S3Point.make(half, 2 * t, Fraction(1, 4) + t)

    def graph(name: str, point_at: Callable[[Fraction], S3Point], offset: Fraction, prefix: str):
        verts = tuple(point_at((m + offset) / k) for m in range(k))
        arcs = tuple(
            TorusArc(m, (m + 1) % k, name, point_at((m + offset + half) / k)) for m in range(k)
        )
        chords = tuple(Chord(i, i + g - 1) for i in range(g - 1))
        labels = tuple(f"{prefix}{m}" for m in range(k))
        return GeodesicGraph(verts, arcs + chords, labels, ((name, tuple(range(k))),))

    # a_m sits at parameter m/(2g-2) on L1, b_n at (2n+1)/(4g-4) on L2
    return graph("L1", on_l1, Fraction(0), "a"), graph("L2", on_l2, half, "b"), {"phi": phi(g)}


def build_fork(g: int) -> tuple[GeodesicGraph, GeodesicGraph, dict[str, S3Isometry]]:
    """Two stars: a_0 joined to the even b_n and a_1 to the odd b_n."""
    _check_parity(g, 0, "fork")
    a = [S3Point.make(1, Fraction(2 * m + 1, 4), 0) for m in range(2)]
    b = [S3Point.make(0, 0, Fraction(n, g + 2)) for n in range(g + 2)]

    def star(parity: int) -> GeodesicGraph:
        leaves = [n for n in range(g + 2) if n % 2 == parity]
        verts = (a[parity],) + tuple(b[n] for n in leaves)
        labels = (f"a{parity}",) + tuple(f"b{n}" for n in leaves)
        return GeodesicGraph(verts, tuple(Chord(0, y + 1) for y in range(len(leaves))), labels)

    gens = {"tau2": power(tau(g + 1), 2), "rho sigma": word(rho(), sigma())}
    return star(0), star(1), gens


class GraphImage(Enum):
    PRESERVES_EACH = "PreservesEach"
    SWAPS = "Swaps"
    NEITHER = "Neither"


def graph_image(
    a: S3Isometry, graph: GeodesicGraph, dual: Optional[GeodesicGraph] = None
) -> GraphImage:
    """How ``a`` moves a graph pair; with no dual only invariance can be detected."""
    if graph.maps_onto(a, graph):
        if dual is None or dual.maps_onto(a, dual):
            return GraphImage.PRESERVES_EACH
    elif dual is not None and graph.maps_onto(a, dual) and dual.maps_onto(a, graph):
        return GraphImage.SWAPS
    return GraphImage.NEITHER


@dataclass(frozen=True)
class ElementFlags:
    """The ambient, surface and side-swap behaviour of one element."""

    element: S3Isometry
    reverses_s3: bool
    swaps_sides: bool
    reverses_surface: bool

    def parity_ok(self) -> bool:
        # of the three conditions, none or exactly two hold
        return (self.reverses_s3 + self.swaps_sides + self.reverses_surface) in (0, 2)


def element_flags(
    elements: Iterable[S3Isometry], graph: GeodesicGraph, dual: Optional[GeodesicGraph]
) -> list[ElementFlags]:
    """Flags of each element, computing every graph image geometrically."""
    out = []
    for e in sorted(elements):
        im = graph_image(e, graph, dual)
        if im is GraphImage.NEITHER:
            raise NotInvariant(f"{e} does not preserve the graph pair")
        rev = orientation_sign(e) < 0
        swap = im is GraphImage.SWAPS
        out.append(ElementFlags(e, rev, swap, rev != swap))
    return out


def action_flags(
    gens: Sequence[S3Isometry],
    graph: GeodesicGraph,
    dual: Optional[GeodesicGraph] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> list[ElementFlags]:
    """Flags of every element of the group generated by ``gens``.

    Generators are checked geometrically.  Every other element acts on the
    vertices through the composite of generator permutations, which is
    tracked alongside the closure; two words reaching the same isometry must
    induce the same permutation.
    """
    pts = graph.vertices + (dual.vertices if dual is not None else ())
    n_own = len(graph.vertices)
    where = {p: k for k, p in enumerate(pts)}
    perms = []
    for s in gens:
        if graph_image(s, graph, dual) is GraphImage.NEITHER:
            raise NotInvariant(f"generator {s} does not preserve the graph pair")
        perms.append(tuple(where[apply(s, p)] for p in pts))
    seen = {IDENTITY: tuple(range(len(pts)))}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            px = seen[x]
            for s, ps in zip(gens, perms):
                y = compose(x, s)
                py = tuple(px[k] for k in ps)
                known = seen.get(y)
                if known is None:
                    seen[y] = py
                    if len(seen) > cap:
                        raise GroupTooLarge(f"closure exceeds {cap} elements")
                    nxt.append(y)
                elif known != py:
                    raise AssertionError(f"{y} acts inconsistently on the vertices")
        frontier = nxt
    out = []
    for e in sorted(seen):
        swap = seen[e][0] >= n_own
        rev = orientation_sign(e) < 0
        out.append(ElementFlags(e, rev, swap, rev != swap))
    return out


def _type_from_flags(flags: Sequence[ElementFlags]) -> ExtType:
    kinds = {(f.reverses_surface, f.reverses_s3) for f in flags}
    if (False, True) in kinds and (True, False) in kinds:
        return ExtType.MIX
    surf = any(s for s, _ in kinds)
    amb = any(a for _, a in kinds)
    if not surf and not amb:
        return ExtType.PP
    if not surf:
        return ExtType.PM
    if not amb:
        return ExtType.MP
    if kinds <= {(False, False), (True, True)}:
        return ExtType.MM
    raise AssertionError(f"flag combination {kinds} cannot come from a group")


def classify_action(
    gens: Sequence[S3Isometry],
    graph: GeodesicGraph,
    dual: Optional[GeodesicGraph] = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> ExtType:
    return _type_from_flags(action_flags(gens, graph, dual, cap))


def _connected(n: int, pairs: Iterable[tuple[int, int]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in pairs:
        parent[find(i)] = find(j)
    return len({find(x) for x in range(n)}) <= 1


def graph_genus(graph: Union[GeodesicGraph, GridGraph]) -> int:
    """Genus of the boundary of a regular neighbourhood: E - V + 1."""
    n = len(graph.vertices)
    if n == 0 or not _connected(n, ((e.i, e.j) for e in graph.edges)):
        raise InvalidInput("graph is not connected")
    return len(graph.edges) - n + 1


_TORUS_PERIODS = (2, 2, 1)


def _mod_periods(t: Iterable[Fraction]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) % p for x, p in zip(t, _TORUS_PERIODS))


@dataclass(frozen=True, order=True)
class TorusAffineMap:
    """x -> signs * x + translation on R^3 modulo the lattice 2Z + 2Z + Z."""

    signs: tuple[int, int, int] = (1, 1, 1)
    translation: tuple[Fraction, Fraction, Fraction] = (Fraction(0), Fraction(0), Fraction(0))

    def __post_init__(self):
        if len(self.signs) != 3 or any(s not in (1, -1) for s in self.signs):
            raise InvalidInput(f"signs must be +-1, got {self.signs}")
        object.__setattr__(self, "translation", _mod_periods(self.translation))

    def compose(self, other: TorusAffineMap) -> TorusAffineMap:
        s = tuple(a * b for a, b in zip(self.signs, other.signs))
        t = tuple(e * t2 + t1 for e, t1, t2 in zip(self.signs, self.translation, other.translation))
        return TorusAffineMap(s, t)

    def apply(self, p: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return _mod_periods(e * x + t for e, x, t in zip(self.signs, p, self.translation))


@dataclass(frozen=True)
class GridEdge:
    i: int
    j: int
    midpoint: tuple[Fraction, ...]


@dataclass(frozen=True)
class GridGraph:
    vertices: tuple[tuple[Fraction, ...], ...]
    edges: tuple[GridEdge, ...]

    def vertex_set(self, f=lambda p: p) -> frozenset:
        return frozenset(f(p) for p in self.vertices)

    def edge_set(self, f=lambda p: p) -> frozenset:
        # a unit segment on the lattice is determined by its midpoint
        return frozenset(f(e.midpoint) for e in self.edges)


def build_square() -> tuple[GridGraph, frozenset[TorusAffineMap], bool]:
    """Translates of the unit square's boundary in the 3-torus, and the symmetry group.

    Returns the graph, the closure of the reflections and unit translations,
    and whether that closure is abelian.
    """
    F = Fraction
    verts = tuple(_mod_periods((F(x), F(y), F(0))) for y in (0, 1) for x in (0, 1))
    index = {p: k for k, p in enumerate(verts)}
    edges = []
    for x, y in itertools.product((0, 1), repeat=2):
        for dx, dy in ((1, 0), (0, 1)):
            p, q = (F(x), F(y), F(0)), _mod_periods((F(x + dx), F(y + dy), F(0)))
            mid = _mod_periods((F(x) + F(dx, 2), F(y) + F(dy, 2), F(0)))
            edges.append(GridEdge(index[_mod_periods(p)], index[q], mid))
    graph = GridGraph(verts, tuple(edges))

    one, zero = F(1), F(0)
    gens = [
        TorusAffineMap((1, -1, -1)),
        TorusAffineMap((-1, 1, -1)),
        TorusAffineMap((1, 1, -1)),
        TorusAffineMap((1, 1, 1), (one, zero, zero)),
        TorusAffineMap((1, 1, 1), (zero, one, zero)),
        TorusAffineMap((1, 1, 1), (zero, zero, one)),
    ]
    seen = {TorusAffineMap()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = x.compose(s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    group = frozenset(seen)
    abelian = all(a.compose(b) == b.compose(a) for a, b in itertools.combinations(gens, 2))
    return graph, group, abelian


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object

    @property
    def passed(self) -> bool:
        return self.expected == self.got


def _group_checks(label: str, gens, order: int, ext: ExtType, graph, dual) -> list[Check]:
    elements, abelian = generate_group(gens)
    flags = action_flags(gens, graph, dual)
    return [
        Check(f"{label} order", order, len(elements)),
        Check(f"{label} abelian", True, abelian),
        Check(f"{label} type", ext, _type_from_flags(flags)),
        Check(f"{label} side/orientation parity", True, all(f.parity_ok() for f in flags)),
    ]


def _graph_checks(label: str, graph: GeodesicGraph, nv: int, ne: int) -> list[Check]:
    return [
        Check(f"{label} vertices", nv, len(graph.vertices)),
        Check(f"{label} edges", ne, len(graph.edges)),
    ]


def _verify_cage(g: int) -> list[Check]:
    G, Gd, gens = build_cage(g)
    t, r, s = gens["tau"], gens["rho"], gens["sigma"]
    out = _graph_checks("cage", G, g + 3, 2 * g + 2) + _graph_checks("dual cage", Gd, g + 3, 2 * g + 2)
    out.append(Check("cage genus", g, graph_genus(G)))
    out += [
        Check("tau swaps sides", GraphImage.SWAPS, graph_image(t, G, Gd)),
        Check("rho preserves each", GraphImage.PRESERVES_EACH, graph_image(r, G, Gd)),
        Check("sigma preserves each", GraphImage.PRESERVES_EACH, graph_image(s, G, Gd)),
        Check("tau keeps S3 orientation", 1, orientation_sign(t)),
        Check("rho keeps S3 orientation", 1, orientation_sign(r)),
        Check("sigma reverses S3 orientation", -1, orientation_sign(s)),
        Check("tau sigma element order", 2 * g + 2, iso_order(compose(t, s))),
    ]
    t2 = power(t, 2)
    if g % 2 == 0:
        out.append(Check("tau element order", 4 * g + 4, iso_order(t)))
        out.append(Check("tau^2 rho sigma element order", 2 * g + 2, iso_order(word(t2, r, s))))
        out += _group_checks("<tau>", [t], 4 * g + 4, ExtType.MP, G, Gd)
        out += _group_checks("<tau^2 rho sigma>", [word(t2, r, s)], 2 * g + 2, ExtType.MM, G, Gd)
    else:
        V, vg = build_cage_odd_variant(g)
        h = vg["tau2 rho sigma"]
        out.append(Check("odd variant genus", g, graph_genus(V)))
        out.append(Check("odd variant invariant", GraphImage.PRESERVES_EACH, graph_image(h, V)))
        out += _group_checks("odd variant <tau^2 rho sigma>", [h], 2 * g, ExtType.MM, V, None)
    out += _group_checks("<tau sigma>", [compose(t, s)], 2 * g + 2, ExtType.PM, G, Gd)
    out += _group_checks("<tau sigma, rho>", [compose(t, s), r], 4 * g + 4, ExtType.PM, G, Gd)
    out += _group_checks("<tau, rho>", [t, r], 4 * g + 4, ExtType.MP, G, Gd)
    out += _group_checks("<tau^2, rho, sigma>", [t2, r, s], 4 * g + 4, ExtType.MM, G, Gd)
    return out


def _verify_wheel(g: int) -> list[Check]:
    W, Wd, gens = build_wheel(g)
    f = gens["phi"]
    out = _graph_checks("wheel", W, 2 * g - 2, 3 * g - 3) + _graph_checks("dual wheel", Wd, 2 * g - 2, 3 * g - 3)
    out += [
        Check("wheel genus", g, graph_genus(W)),
        Check("phi element order", 4 * g - 4, iso_order(f)),
        Check("phi keeps S3 orientation", 1, orientation_sign(f)),
        Check("phi swaps sides", GraphImage.SWAPS, graph_image(f, W, Wd)),
    ]
    out += _group_checks("<phi>", [f], 4 * g - 4, ExtType.MP, W, Wd)
    return out


def _verify_fork(g: int) -> list[Check]:
    Fk, Fd, gens = build_fork(g)
    t2, rs = gens["tau2"], gens["rho sigma"]
    out = _graph_checks("fork", Fk, g // 2 + 2, g // 2 + 1) + _graph_checks("dual fork", Fd, g // 2 + 2, g // 2 + 1)
    out += [
        Check("tau^2 swaps sides", GraphImage.SWAPS, graph_image(t2, Fk, Fd)),
        Check("rho sigma preserves each", GraphImage.PRESERVES_EACH, graph_image(rs, Fk, Fd)),
        Check("tau^2 keeps S3 orientation", 1, orientation_sign(t2)),
        Check("rho sigma reverses S3 orientation", -1, orientation_sign(rs)),
    ]
    out += _group_checks("<tau^2, rho sigma>", [t2, rs], 2 * g + 4, ExtType.MIX, Fk, Fd)
    return out


def _verify_square(g: Optional[int] = None) -> list[Check]:
    if g is not None and g != 5:
        raise InvalidInput("the square example lives in genus 5 only")
    graph, group, abelian = build_square()
    invariant = all(
        graph.vertex_set(e.apply) == graph.vertex_set() and graph.edge_set(e.apply) == graph.edge_set()
        for e in group
    )
    return [
        Check("square vertices", 4, len(graph.vertices)),
        Check("square edges", 8, len(graph.edges)),
        Check("square genus", 5, graph_genus(graph)),
        Check("square group order", 32, len(group)),
        Check("square group abelian", True, abelian),
        Check("square group exponent 2", True, all(e.compose(e) == TorusAffineMap() for e in group)),
        Check("square graph invariant", True, invariant),
    ]


EXAMPLES: dict[str, Callable[..., list[Check]]] = {
    "cage": _verify_cage,
    "wheel": _verify_wheel,
    "fork": _verify_fork,
    "square": _verify_square,
}


def verify_example(name: str, g: Optional[int] = None) -> list[Check]:
    """Run every check for one construction; genus is required except for the square."""
    try:
        fn = EXAMPLES[name]
    except KeyError:
        raise InvalidInput(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None
    if name == "square":
        return fn(g)
    if g is None:
        raise InvalidInput(f"example {name!r} needs a genus")
    return fn(g)
