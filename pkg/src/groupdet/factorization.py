"""Character-product evaluation and factorizations of integer group determinants.

The determinant of a finite abelian group factors over its characters into
linear forms. Grouping those forms along a direct-product component yields one
factor per character of that component; the coprime circulant split of Laquer
is the cyclic special case, and sign characters of (Z/2Z)^l give all-integer
factors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, lcm

from .characters import char_exponent, char_sign, enumerate_characters
from .cyclotomic import CyclotomicInt, NotRationalError, root_power
from .determinant import check_assignment, circulant_det, group_determinant
from .groups import AbelianGroup, direct_product, enumerate_elements


@dataclass(frozen=True)
class FactorizationReport:
    """One factor per character of the split-off component, with a cross-check
    of the factor product against the directly computed determinant."""

    split: str
    factors: tuple[CyclotomicInt, ...]
    product: int
    direct_det: int
    match: bool

    def as_json_dict(self) -> dict:
        rendered = []
        for f in self.factors:
            try:
                rendered.append(str(f.to_integer()))
            except NotRationalError:
                rendered.append(f.render())
        return {
            "split": self.split,
            "factors": rendered,
            "product": str(self.product),
            "direct_det": str(self.direct_det),
            "match": self.match,
        }


def character_sums(group: AbelianGroup, values) -> list[CyclotomicInt]:
    """The linear forms sum_g chi(g) x_g, one per character, in character order."""
    vals = check_assignment(group, values)
    N = group.exponent
    elems = enumerate_elements(group)
    sums = []
    for chi in enumerate_characters(group):
        buckets = [0] * N
        for i, g in enumerate(elems):
            buckets[char_exponent(chi, g)] += vals[i]
        sums.append(CyclotomicInt.from_polynomial(N, buckets))
    return sums


def _product(forms, level: int) -> CyclotomicInt:
    acc = CyclotomicInt.one(level)
    for f in forms:
        acc = acc * f
    return acc


def dedekind_product(group: AbelianGroup, values) -> int:
    """The determinant as the exact product of all character sums.

    The product is always a rational integer; a non-integer result would mean
    the arithmetic itself is broken, so that error is never caught here.
    """
    return _product(character_sums(group, values), group.exponent).to_integer()


def split_character_sums(H: AbelianGroup, K: AbelianGroup, values) -> list[list[CyclotomicInt]]:
    """Character sums of H x K grouped by the K-character, all at level lcm(N_H, N_K).

    Entry [i][j] is the form sum_h psi_j(h) * (sum_k chi_i(k) x_(h,k)).
    """
    vals = check_assignment(direct_product(H, K), values)
    L = lcm(H.exponent, K.exponent)
    wh = L // H.exponent
    wk = L // K.exponent
    elems_H = enumerate_elements(H)
    elems_K = enumerate_elements(K)
    nK = K.order
    grouped = []
    for chi in enumerate_characters(K):
        k_exps = [wk * char_exponent(chi, k) % L for k in elems_K]
        inner = []
        for psi in enumerate_characters(H):
            h_exps = [wh * char_exponent(psi, h) % L for h in elems_H]
            buckets = [0] * L
            for hi, he in enumerate(h_exps):
                base = hi * nK
                for ki, ke in enumerate(k_exps):
                    buckets[(he + ke) % L] += vals[base + ki]
            inner.append(CyclotomicInt.from_polynomial(L, buckets))
        grouped.append(inner)
    return grouped


def direct_product_factors(H: AbelianGroup, K: AbelianGroup, values) -> FactorizationReport:
    """Factor the determinant of H x K into one factor per character of K.

    Factor i is the H-determinant of the chi_i-twisted assignment
    y_h = sum_k chi_i(k) x_(h,k), evaluated as a character product at the
    common level; the factor product is cross-checked against the direct
    determinant of H x K.
    """
    grouped = split_character_sums(H, K, values)
    L = lcm(H.exponent, K.exponent)
    factors = tuple(_product(forms, L) for forms in grouped)
    product = _product(factors, L).to_integer()
    direct = group_determinant(direct_product(H, K), values)
    return FactorizationReport(
        split=f"H={H}, K={K}",
        factors=factors,
        product=product,
        direct_det=direct,
        match=product == direct,
    )


def integer_split_factors(H: AbelianGroup, l: int, values) -> list[int]:
    """All-integer factors of the determinant of H x (Z/2Z)^l, one per sign character.

    Factor i is the H-determinant of y_h = sum_k chi_i(k) x_(h,k) with
    chi_i(k) in {+1,-1}; the trivial character comes first.
    """
    if l < 1:
        raise ValueError("need at least one Z/2Z factor to split off")
    K = AbelianGroup((2,) * l)
    vals = check_assignment(direct_product(H, K), values)
    elems_K = enumerate_elements(K)
    nK = K.order
    factors = []
    for chi in enumerate_characters(K):
        signs = [char_sign(chi, k) for k in elems_K]
        ys = [
            sum(s * vals[base + ki] for ki, s in enumerate(signs))
            for base in range(0, len(vals), nK)
        ]
        factors.append(group_determinant(H, ys))
    return factors


def laquer_factors(r: int, s: int, xs) -> FactorizationReport:
    """Coprime circulant split C_(r*s) = prod over i < s of C_r(y^i).

    y_j^i = sum_k zeta_s^(i*(k*r + j - 1)) x_(k*r + j) in the classical 1-based
    indexing, i.e. xs[t] is x_(t+1), the value at residue t. The y forms live at
    level s and are embedded into level lcm(r, s) only when the C_r factors are
    evaluated as character products.
    """
    if r < 1 or s < 1 or gcd(r, s) != 1:
        raise ValueError(f"need coprime positive sizes, got r={r}, s={s}")
    n = r * s
    xs = tuple(xs)
    if len(xs) != n:
        raise ValueError(f"assignment length {len(xs)} does not match r*s = {n}")
    L = lcm(r, s)
    factors = []
    for i in range(s):
        ys = []
        for j in range(1, r + 1):
            buckets = [0] * s
            for k in range(s):
                buckets[i * (k * r + j - 1) % s] += xs[k * r + j - 1]
            ys.append(CyclotomicInt.from_polynomial(s, buckets).embed(L))
        factor = CyclotomicInt.one(L)
        for m in range(r):
            form = CyclotomicInt.zero(L)
            for j, y in enumerate(ys):
                form = form + root_power(L, (L // r) * m * j) * y
            factor = factor * form
        factors.append(factor)
    product = _product(factors, L).to_integer()
    direct = circulant_det(n, xs)
    return FactorizationReport(
        split=f"C{n} = C{r} * C{s} (coprime)",
        factors=tuple(factors),
        product=product,
        direct_det=direct,
        match=product == direct,
    )


def crt_transport(r: int, s: int, xs) -> tuple[int, ...]:
    """Carry a circulant assignment of Z/(r*s)Z to Z/rZ x Z/sZ.

    The residue x = a*s + b*r mod r*s lands at element (a, b), so the value at
    product index a*s + b is xs[(a*s + b*r) % (r*s)].
    """
    if r < 1 or s < 1 or gcd(r, s) != 1:
        raise ValueError(f"need coprime positive sizes, got r={r}, s={s}")
    n = r * s
    xs = tuple(xs)
    if len(xs) != n:
        raise ValueError(f"assignment length {len(xs)} does not match r*s = {n}")
    out = [0] * n
    for a in range(r):
        for b in range(s):
            out[a * s + b] = xs[(a * s + b * r) % n]
    return tuple(out)


def laquer_agrees_with_split(r: int, s: int, xs) -> bool:
    """Laquer's split must equal the transported direct-product split: same factor
    multiset, and both products equal to the circulant determinant."""
    lap = laquer_factors(r, s, xs)
    split = direct_product_factors(
        AbelianGroup((r,)), AbelianGroup((s,)), crt_transport(r, s, xs)
    )
    expected = lap.direct_det
    return (
        Counter(lap.factors) == Counter(split.factors)
        and lap.match
        and split.match
        and lap.product == expected
        and split.product == expected
    )
