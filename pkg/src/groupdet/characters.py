"""Characters of finite abelian groups, evaluated exactly as roots of unity."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .cyclotomic import CyclotomicInt, root_power
from .groups import AbelianGroup, Element, check_element


@dataclass(frozen=True)
class Character:
    """chi(g) = zeta_N^(sum_i (N/n_i) a_i g_i), N the group exponent, a the exponent tuple."""

    group: AbelianGroup
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        check_element(self.group, self.exponents)

    @property
    def is_trivial(self) -> bool:
        return not any(self.exponents)


def enumerate_characters(group: AbelianGroup) -> list[Character]:
    """All |G| characters, exponent tuples enumerated like elements; trivial character first."""
    return [Character(group, exps) for exps in product(*(range(n) for n in group.orders))]


def char_exponent(chi: Character, g: Element) -> int:
    """The k with chi(g) = zeta_N^k, where N is the group exponent."""
    group = chi.group
    check_element(group, g)
    N = group.exponent
    total = 0
    for ai, gi, ni in zip(chi.exponents, g, group.orders):
        total += (N // ni) * ai * gi
    return total % N


def char_value(chi: Character, g: Element) -> CyclotomicInt:
    """chi(g) as an exact cyclotomic integer at the group-exponent level."""
    return root_power(chi.group.exponent, char_exponent(chi, g))


def char_sign(chi: Character, g: Element) -> int:
    """chi(g) as a plain +1/-1; requires every cyclic factor order to divide 2."""
    group = chi.group
    if group.exponent > 2:
        raise ValueError(f"char_sign needs a group of exponent dividing 2, got {group}")
    check_element(group, g)
    return -1 if sum(a * b for a, b in zip(chi.exponents, g)) % 2 else 1
