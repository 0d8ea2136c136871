"""Maximum orders of cyclic and abelian actions on surfaces and handlebodies.

Closed-form table entries plus the two integer optimisation problems that
determine the maximum order of a cyclic action on a handlebody containing an
orientation-reversing element.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import Infeasible, InvalidGenus, InvalidInput
from .numtheory import divisors

__all__ = [
    "ExtType",
    "Kind",
    "Quantity",
    "EvenPair",
    "OddPair",
    "ChMinusWitness",
    "MaxOrderResult",
    "check_genus",
    "classical_order",
    "extendable_type_max",
    "extendable_max",
    "ch_minus",
    "ch_minus_scan",
    "ch_minus_scan_table",
    "ah_minus",
    "a_minus_surface",
    "full_handlebody_max",
    "max_order",
    "all_quantities",
    "consistency_check",
]


class ExtType(enum.Enum):
    """Orientation behaviour of an extendable action: (surface, sphere)."""

    PP = "(+,+)"
    PM = "(+,-)"
    MP = "(-,+)"
    MM = "(-,-)"
    MIX = "(Mix)"

    def __str__(self):
        return self.value


class Kind(enum.Enum):
    CYCLIC = "cyclic"
    ABELIAN = "abelian"


class Tag(enum.Enum):
    C = "C"
    A = "A"
    CH = "CH"
    AH = "AH"
    CE = "CE"
    AE = "AE"
    C_MINUS = "C-minus"
    C_FULL = "C-full"
    CH_MINUS = "CH-minus"
    AH_MINUS = "AH-minus"
    A_MINUS = "A-minus"
    CH_FULL = "CH-full"
    AH_FULL = "AH-full"
    CE_TYPE = "CE-type"
    AE_TYPE = "AE-type"


@dataclass(frozen=True)
class Quantity:
    tag: Tag
    ext_type: Optional[ExtType] = None

    def __post_init__(self):
        typed = self.tag in (Tag.CE_TYPE, Tag.AE_TYPE) and self.ext_type is not None
        if self.ext_type is not None and not typed:
            raise InvalidInput(f"{self.tag} does not take an action type")

    @property
    def name(self) -> str:
        if self.ext_type is not None:
            return f"{self.tag.value[:2]}{self.ext_type.value}"
        return self.tag.value

    def __str__(self):
        return self.name

    @classmethod
    def parse(cls, name: str) -> Quantity:
        name = name.strip().replace("−", "-")
        for q in all_quantities():
            if q.name.lower() == name.lower():
                return q
        raise InvalidInput(f"unknown quantity {name!r}")


# Short aliases for the fixed quantities.
C = Quantity(Tag.C)
A = Quantity(Tag.A)
CH = Quantity(Tag.CH)
AH = Quantity(Tag.AH)
CE = Quantity(Tag.CE)
AE = Quantity(Tag.AE)
C_MINUS = Quantity(Tag.C_MINUS)
C_FULL = Quantity(Tag.C_FULL)
CH_MINUS = Quantity(Tag.CH_MINUS)
AH_MINUS = Quantity(Tag.AH_MINUS)
A_MINUS = Quantity(Tag.A_MINUS)
CH_FULL = Quantity(Tag.CH_FULL)
AH_FULL = Quantity(Tag.AH_FULL)


def CE_type(t: ExtType) -> Quantity:
    return Quantity(Tag.CE_TYPE, t)


def AE_type(t: ExtType) -> Quantity:
    return Quantity(Tag.AE_TYPE, t)


def all_quantities() -> list[Quantity]:
    """Every quantity in a fixed reporting order."""
    fixed = [C, A, CH, AH, CE, AE, C_MINUS, C_FULL, CH_MINUS, AH_MINUS, A_MINUS, CH_FULL, AH_FULL]
    typed = [CE_type(t) for t in ExtType] + [AE_type(t) for t in ExtType]
    return fixed + typed


@dataclass(frozen=True, order=True)
class EvenPair:
    """Odd m, n with g = [m,n] - (m+n)/(m,n) + 1; realises order 2[m,n]."""

    m: int
    n: int

    def genus(self) -> int:
        d = math.gcd(self.m, self.n)
        return self.m * self.n // d - (self.m + self.n) // d + 1

    def order(self) -> int:
        return 2 * (self.m * self.n // math.gcd(self.m, self.n))

    def as_tuple(self) -> tuple[int, int]:
        return (self.m, self.n)


@dataclass(frozen=True, order=True)
class OddPair:
    """Odd k, n with g = kn - k + 1; realises order 2kn."""

    k: int
    n: int

    def genus(self) -> int:
        return self.k * self.n - self.k + 1

    def order(self) -> int:
        return 2 * self.k * self.n

    def as_tuple(self) -> tuple[int, int]:
        return (self.k, self.n)


ChMinusWitness = Union[EvenPair, OddPair]


@dataclass(frozen=True)
class MaxOrderResult:
    quantity: Quantity
    genus: int
    value: Optional[int]
    witnesses: tuple = field(default_factory=tuple)


def check_genus(g: int) -> None:
    if isinstance(g, bool) or not isinstance(g, int):
        raise InvalidGenus(f"genus must be an integer, got {g!r}")
    if g <= 1:
        raise InvalidGenus("genus must exceed 1")


def _even(g: int) -> bool:
    return g % 2 == 0


def classical_order(q: Quantity, g: int) -> int:
    """Table entries for orientation-preserving maxima and the two surface extras."""
    check_genus(g)
    even = _even(g)
    if q == C:
        return 4 * g + 2
    if q == A:
        return 4 * g + 4
    if q == CH:
        return 2 * g + 2 if even else 2 * g
    if q == AH:
        return 16 if g == 5 else 2 * g + 2
    if q == CE:
        return 2 * g + 2 if even else 2 * g - 2
    if q == AE:
        return 2 * g + 2
    if q == C_MINUS:
        return 4 * g + 4 if even else 4 * g - 4
    if q == C_FULL:
        return 4 * g + 4 if even else 4 * g + 2
    raise InvalidInput(f"{q} is not a classical quantity")


def extendable_type_max(kind: Kind, t: ExtType, g: int) -> Optional[int]:
    """Maximum order of a type-``t`` extendable action; ``None`` if none exists."""
    check_genus(g)
    kind = Kind(kind)
    t = ExtType(t)
    even = _even(g)
    if kind is Kind.CYCLIC:
        if t is ExtType.PP:
            return classical_order(CE, g)
        if t is ExtType.PM:
            return 2 * g + 2
        if t is ExtType.MP:
            return 4 * g + 4 if even else 4 * g - 4
        if t is ExtType.MM:
            return 2 * g + 2 if even else 2 * g
        return None
    if t is ExtType.PP:
        return classical_order(AE, g)
    if t in (ExtType.PM, ExtType.MP, ExtType.MM):
        return 4 * g + 4
    return 2 * g + 4 if even else None


def extendable_max(kind: Kind, g: int) -> int:
    check_genus(g)
    if Kind(kind) is Kind.CYCLIC:
        return 4 * g + 4 if _even(g) else 4 * g - 4
    return 4 * g + 4


def _even_pairs(g: int) -> list[EvenPair]:
    # m = d*m', n = d*n' with (m',n') = 1 turns the genus equation into
    # d*m'*n' = g - 1 + m' + n'; all of d, m', n' are odd.
    pairs = []
    for mp in divisors(g):
        if mp % 2 == 0:
            continue
        d = 1 + g // mp  # n' = 1
        if d % 2 == 1:
            pairs.append(EvenPair(d * mp, d))
            if mp != 1:
                pairs.append(EvenPair(d, d * mp))
    np_ = 3
    while (np_ - 1) * (np_ - 1) <= g:
        # m' >= n' >= 3 and (m'-1)(n'-1) <= g
        mp = np_
        while (mp - 1) * (np_ - 1) <= g:
            if math.gcd(mp, np_) == 1:
                num = g - 1 + mp + np_
                if num % (mp * np_) == 0:
                    d = num // (mp * np_)
                    if d % 2 == 1:
                        pairs.append(EvenPair(d * mp, d * np_))
                        if mp != np_:
                            pairs.append(EvenPair(d * np_, d * mp))
            mp += 2
        np_ += 2
    return pairs


def _odd_pairs(g: int) -> list[OddPair]:
    # k(n - 1) = g - 1 with k, n odd
    out = []
    for k in divisors(g - 1):
        n = (g - 1) // k + 1
        if k % 2 == 1 and n % 2 == 1:
            out.append(OddPair(k, n))
    return out


def _best(pairs: list) -> tuple[int, list]:
    if not pairs:
        raise Infeasible("no feasible witness pair")
    value = max(p.order() for p in pairs)
    return value, sorted({p for p in pairs if p.order() == value}, key=lambda p: p.as_tuple())


def ch_minus(g: int) -> tuple[int, list[ChMinusWitness]]:
    """Value and all optimal witness pairs of the handlebody cyclic maximum.

    Even g maximises 2[m,n] over odd m, n with g = [m,n] - (m+n)/(m,n) + 1;
    odd g maximises 2kn over odd k, n with g = kn - k + 1.
    """
    check_genus(g)
    pairs = _even_pairs(g) if _even(g) else _odd_pairs(g)
    value, witnesses = _best(pairs)
    floor = 2 * g + 2 if _even(g) else 2 * g
    assert value >= floor, (g, value)
    return value, witnesses


def ch_minus_scan(g: int) -> tuple[int, list[ChMinusWitness]]:
    """Same optimisation as :func:`ch_minus` by brute-force scanning.

    Even g: every odd pair m, n <= 2g + 2. Odd g: every odd k below g.
    """
    check_genus(g)
    if _even(g):
        pairs = [
            EvenPair(m, n)
            for m in range(1, 2 * g + 3, 2)
            for n in range(1, 2 * g + 3, 2)
            if EvenPair(m, n).genus() == g
        ]
    else:
        # every odd k < g; n is forced by k(n - 1) = g - 1
        pairs = [
            OddPair(k, (g - 1) // k + 1)
            for k in range(1, g, 2)
            if (g - 1) % k == 0 and ((g - 1) // k + 1) % 2 == 1
        ]
    return _best(pairs)


def ch_minus_scan_table(g_max: int) -> dict[int, tuple[int, list[EvenPair]]]:
    """Direct scan for every even 2 <= g <= g_max at once.

    Each odd pair m, n <= 2*g_max + 2 is visited once and filed under the
    genus it solves, honouring the per-genus bound max(m, n) <= 2g + 2.
    """
    bound = 2 * g_max + 2
    found: dict[int, list[EvenPair]] = {}
    for m in range(1, bound + 1, 2):
        for n in range(m, bound + 1, 2):
            d = math.gcd(m, n)
            g = m * n // d - (m + n) // d + 1
            if g < 2 or g > g_max or g % 2 or n > 2 * g + 2:
                continue
            found.setdefault(g, []).append(EvenPair(m, n))
            if m != n:
                found[g].append(EvenPair(n, m))
    return {g: _best(found.get(g, [])) for g in range(2, g_max + 1, 2)}


def ah_minus(g: int) -> int:
    check_genus(g)
    return 32 if g == 5 else 4 * g + 4


def a_minus_surface(g: int) -> int:
    """Maximum abelian order on the closed surface with an orientation-reversing element.

    Lower bound from the doubled handlebody examples, upper bound from the
    pairing criterion; both give 2*AH_g.
    """
    return 2 * classical_order(AH, g)


def full_handlebody_max(kind: Kind, g: int) -> int:
    check_genus(g)
    if Kind(kind) is Kind.CYCLIC:
        value, _ = ch_minus(g)
        return max(value, classical_order(CH, g))
    return max(ah_minus(g), classical_order(AH, g))


def max_order(q: Quantity, g: int) -> MaxOrderResult:
    """Value of any quantity at genus ``g``, with witnesses where they exist."""
    check_genus(g)
    witnesses: tuple = ()
    if q.tag is Tag.CE_TYPE and q.ext_type is not None:
        value = extendable_type_max(Kind.CYCLIC, q.ext_type, g)
    elif q.tag is Tag.AE_TYPE and q.ext_type is not None:
        value = extendable_type_max(Kind.ABELIAN, q.ext_type, g)
    elif q in (CH_MINUS, CH_FULL):
        value, ws = ch_minus(g)
        if q == CH_FULL:
            value = full_handlebody_max(Kind.CYCLIC, g)
        witnesses = tuple(ws)
    elif q == AH_MINUS:
        value = ah_minus(g)
    elif q == A_MINUS:
        value = a_minus_surface(g)
    elif q == AH_FULL:
        value = full_handlebody_max(Kind.ABELIAN, g)
    else:
        value = classical_order(q, g)
    return MaxOrderResult(q, g, value, witnesses)


def consistency_check(g: int) -> list[tuple[str, bool]]:
    """Evaluate the cross-table identities at genus ``g``."""
    check_genus(g)
    cyc = lambda t: extendable_type_max(Kind.CYCLIC, t, g)  # noqa: E731
    ab = lambda t: extendable_type_max(Kind.ABELIAN, t, g)  # noqa: E731
    AE_g = classical_order(AE, g)
    results = [
        ("AH-minus = 2*AH", ah_minus(g) == 2 * classical_order(AH, g)),
        ("A-minus = AH-minus", a_minus_surface(g) == ah_minus(g)),
        ("CE(-,+) = C-minus", cyc(ExtType.MP) == classical_order(C_MINUS, g)),
        ("CE(+,-) = 2g+2", cyc(ExtType.PM) == 2 * g + 2),
        ("CE(-,-) = 2g+1+(-1)^g", cyc(ExtType.MM) == 2 * g + 1 + (-1) ** g),
        (
            "AE(+,-) = AE(-,+) = AE(-,-) = 2*AE",
            ab(ExtType.PM) == ab(ExtType.MP) == ab(ExtType.MM) == 2 * AE_g,
        ),
        (
            "cyclic extendable max = max over types",
            extendable_max(Kind.CYCLIC, g) == max(v for t in ExtType if (v := cyc(t)) is not None),
        ),
        (
            "abelian extendable max = max over types",
            extendable_max(Kind.ABELIAN, g) == max(v for t in ExtType if (v := ab(t)) is not None),
        ),
        ("AE(+,-) = A", ab(ExtType.PM) == classical_order(A, g)),
        (
            "AH-full = max(A, A-minus)",
            full_handlebody_max(Kind.ABELIAN, g)
            == max(classical_order(A, g), a_minus_surface(g)),
        ),
    ]
    return results
