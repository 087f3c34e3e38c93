"""Finite abelian groups given as explicit direct products of cyclic factors.

Elements are residue tuples. Element tuples, assignment vectors, group
matrices and reports all share one ordering convention: mixed radix over the
factor list with the last coordinate varying fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm, prod
from typing import Iterable

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    """Z/n1 x ... x Z/nt with the factor list kept exactly as given."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.orders, tuple):
            object.__setattr__(self, "orders", tuple(self.orders))
        if not self.orders:
            raise ValueError("a group needs at least one cyclic factor; the trivial group is (1,)")
        for n in self.orders:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"invalid cyclic factor order {n!r}")

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def exponent(self) -> int:
        return lcm(*self.orders)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.orders)

    def __str__(self) -> str:
        return format_group_spec(self)


def make_group(orders: int | Iterable[int]) -> AbelianGroup:
    """Build a group from a single cyclic order or a list of factor orders."""
    if isinstance(orders, int):
        return AbelianGroup((orders,))
    return AbelianGroup(tuple(int(n) for n in orders))


def parse_group_spec(spec: str) -> AbelianGroup:
    """Parse a factor list like "4x2" (meaning Z/4Z x Z/2Z, in that order)."""
    parts = spec.strip().split("x")
    try:
        orders = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(
            f"bad group spec {spec!r}; expected cyclic orders joined by 'x', e.g. '4x2'"
        ) from None
    return AbelianGroup(orders)


def format_group_spec(group: AbelianGroup) -> str:
    return "x".join(str(n) for n in group.orders)


def check_element(group: AbelianGroup, g: Element) -> None:
    """Raise unless g is a residue tuple of the group."""
    if len(g) != len(group.orders) or any(
        not 0 <= gi < ni for gi, ni in zip(g, group.orders)
    ):
        raise ValueError(f"element {g!r} is not valid in {group}")


def enumerate_elements(group: AbelianGroup) -> list[Element]:
    """All |G| elements in mixed-radix order, last coordinate fastest."""
    return list(product(*(range(n) for n in group.orders)))


def index_of(group: AbelianGroup, g: Element) -> int:
    """Position of g in enumerate_elements(group)."""
    check_element(group, g)
    i = 0
    for gi, ni in zip(g, group.orders):
        i = i * ni + gi
    return i


def element_at(group: AbelianGroup, index: int) -> Element:
    """Inverse of index_of."""
    if not 0 <= index < group.order:
        raise ValueError(f"element index {index} out of range for {group}")
    digits = []
    for ni in reversed(group.orders):
        index, r = divmod(index, ni)
        digits.append(r)
    return tuple(reversed(digits))


def group_op(group: AbelianGroup, g: Element, h: Element) -> Element:
    check_element(group, g)
    check_element(group, h)
    return tuple((gi + hi) % ni for gi, hi, ni in zip(g, h, group.orders))


def group_inv(group: AbelianGroup, g: Element) -> Element:
    check_element(group, g)
    return tuple(-gi % ni for gi, ni in zip(g, group.orders))


def split_factors(group: AbelianGroup, cut: int) -> tuple[AbelianGroup, AbelianGroup]:
    """Split the factor list positionally into the first `cut` factors and the rest."""
    t = len(group.orders)
    if not 1 <= cut < t:
        raise ValueError(f"cut {cut} out of range for a group with {t} factors")
    return AbelianGroup(group.orders[:cut]), AbelianGroup(group.orders[cut:])


def direct_product(left: AbelianGroup, right: AbelianGroup) -> AbelianGroup:
    return AbelianGroup(left.orders + right.orders)


def crt_decompose(n: int, r: int, s: int, x: int) -> tuple[int, int]:
    """Write x mod n = r*s (with gcd(r, s) = 1) as a*s + b*r, 0 <= a < r, 0 <= b < s.

    The map x -> (a, b) is the residue isomorphism Z/nZ -> Z/rZ x Z/sZ used to
    carry circulant assignments to the product group.
    """
    if r < 1 or s < 1 or r * s != n or gcd(r, s) != 1:
        raise ValueError(f"invalid coprime split {n} = {r} * {s}")
    x %= n
    a = x * pow(s, -1, r) % r
    b = x * pow(r, -1, s) % s
    return a, b
