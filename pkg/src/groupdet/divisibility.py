"""2-adic divisibility checks for determinants of groups H x (Z/2Z)^l.

Checked per assignment: every split factor has the parity of the trivial
factor, and an even determinant is divisible by 2^(e * 2^l), where e is the
largest exponent such that 2^e divides every even determinant value of H. The
exponents e come from a provenance-tagged table of known value sets, never
from finite search (a box can only certify an upper bound on e).
"""

from __future__ import annotations

import multiprocessing
import os
from dataclasses import dataclass
from math import prod

from .boxes import DEFAULT_BUDGET, ensure_budget, iter_box, shard_ranges
from .characters import char_sign, enumerate_characters
from .determinant import _index_table, bareiss_det, check_assignment
from .factorization import integer_split_factors
from .groups import AbelianGroup, direct_product, enumerate_elements

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"


def two_adic_valuation(v: int) -> int:
    """Largest e with 2^e dividing v; undefined for 0."""
    if v == 0:
        raise ValueError("the 2-adic valuation of 0 is undefined (0 is divisible by every 2^e)")
    return (v & -v).bit_length() - 1


@dataclass(frozen=True)
class ExponentFact:
    """A known largest exponent e with 2^e dividing every even determinant value."""

    orders: tuple[int, ...]
    exponent: int
    source: str


_EXACT_FACTS = {
    (): ExponentFact((1,), 1, "trivial group: the determinant is x_e itself, so the even values are exactly 2Z"),
    (2,): ExponentFact((2,), 2, "classical: the even circulant values of Z/2Z are exactly 4Z"),
    (2, 2): ExponentFact((2, 2), 4, "determined value set {4m+1, 2^4 (2m+1), 2^6 m} of (Z/2Z)^2"),
    (2, 2, 2): ExponentFact((2, 2, 2), 8, "determined value set {8m+1, 2^8 (4m+1), 2^12 m} of (Z/2Z)^3"),
    (2, 4): ExponentFact((4, 2), 8, "determined value set {8m+1, 2^8 m} of Z/4Z x Z/2Z"),
}


def known_even_exponent(H: AbelianGroup) -> ExponentFact | None:
    """Table lookup, insensitive to factor order and trivial factors; None if unknown."""
    key = tuple(sorted(n for n in H.orders if n > 1))
    fact = _EXACT_FACTS.get(key)
    if fact is not None:
        return fact
    if len(key) == 1:
        n = key[0]
        if n >= 4 and n & (n - 1) == 0:
            power = n.bit_length() - 1
            return ExponentFact(
                (n,),
                power + 2,
                f"Kaiblinger: the even circulant values of Z/{n}Z lie in 2^{power + 2} Z "
                f"and in no smaller power's complement 2^{power + 3} Z",
            )
    return None


def bound_exponent(H: AbelianGroup, l: int, exponent: int | None = None) -> int:
    """The exponent e * 2^l of the divisibility bound for H x (Z/2Z)^l."""
    if l < 1:
        raise ValueError("need at least one Z/2Z factor (l >= 1)")
    if exponent is None:
        fact = known_even_exponent(H)
        if fact is None:
            raise ValueError(f"no known even-value exponent for {H}; pass exponent=")
        exponent = fact.exponent
    return exponent * (1 << l)


def even_divisibility_bound(H: AbelianGroup, l: int, exponent: int | None = None) -> int:
    """2^(e * 2^l): the divisor every even determinant value of H x (Z/2Z)^l carries."""
    return 1 << bound_exponent(H, l, exponent)


@dataclass(frozen=True)
class BoundCheck:
    """Divisibility verdict for one assignment; valuation is None only for det 0."""

    status: str
    det: int
    valuation: int | None
    bound_exponent: int


def check_even_bound(H: AbelianGroup, l: int, values, exponent: int | None = None) -> BoundCheck:
    """Check one assignment of H x (Z/2Z)^l: an even determinant must be divisible
    by the bound; odd determinants are out of scope (not-applicable)."""
    exp = bound_exponent(H, l, exponent)
    det = prod(integer_split_factors(H, l, values))
    if det % 2:
        return BoundCheck(NOT_APPLICABLE, det, 0, exp)
    if det == 0:
        return BoundCheck(PASS, det, None, exp)
    v = two_adic_valuation(det)
    return BoundCheck(PASS if v >= exp else FAIL, det, v, exp)


@dataclass(frozen=True)
class CongruenceCheck:
    """Parity verdict for one assignment's split factors."""

    status: str
    factors: tuple[int, ...]


def check_factor_congruence(H: AbelianGroup, l: int, values) -> CongruenceCheck:
    """Every split factor of one assignment must have the trivial factor's parity."""
    factors = tuple(integer_split_factors(H, l, values))
    lead = factors[0]
    ok = all((f - lead) % 2 == 0 for f in factors)
    return CongruenceCheck(PASS if ok else FAIL, factors)


def _suite_shard(args) -> dict:
    h_orders, l, box, exp, start, stop = args
    H = AbelianGroup(h_orders)
    K = AbelianGroup((2,) * l)
    G = direct_product(H, K)
    sign_rows = [
        [char_sign(chi, k) for k in enumerate_elements(K)] for chi in enumerate_characters(K)
    ]
    table = _index_table(H.orders)
    nH, nK = H.order, K.order
    checked = 0
    even_count = 0
    min_even_val = None
    failures = []
    for vals in iter_box(G.order, box, start, stop):
        checked += 1
        factors = []
        for signs in sign_rows:
            ys = [
                sum(s * vals[base + ki] for ki, s in enumerate(signs))
                for base in range(0, nH * nK, nK)
            ]
            factors.append(bareiss_det([[ys[j] for j in row] for row in table]))
        lead = factors[0]
        if any((f - lead) % 2 for f in factors):
            failures.append(
                {"kind": "congruence", "factors": [str(f) for f in factors], "witness": list(vals)}
            )
        det = prod(factors)
        if det % 2 == 0:
            even_count += 1
            if det:
                v = two_adic_valuation(det)
                if min_even_val is None or v < min_even_val:
                    min_even_val = v
                if v < exp:
                    failures.append({"kind": "bound", "det": str(det), "witness": list(vals)})
    return {
        "checked": checked,
        "even_count": even_count,
        "min_even_valuation": min_even_val,
        "failures": failures,
    }


def run_divisibility_suite(
    H: AbelianGroup,
    l: int,
    box: int,
    exponent: int | None = None,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
    jobs: int | None = None,
) -> dict:
    """Exhaustively check the parity congruence and the divisibility bound over
    the box [-box, box]^(|H| * 2^l); the summary is identical for any job count.
    """
    exp = bound_exponent(H, l, exponent)
    G = direct_product(H, AbelianGroup((2,) * l))
    total = ensure_budget(G.order, box, budget, force)
    jobs = jobs if jobs and jobs > 0 else (os.cpu_count() or 1)
    shards = shard_ranges(total, jobs)
    args = [(H.orders, l, box, exp, start, stop) for start, stop in shards]
    if len(args) == 1:
        parts = [_suite_shard(args[0])]
    else:
        with multiprocessing.Pool(len(args)) as pool:
            parts = pool.map(_suite_shard, args)
    evens = [p["min_even_valuation"] for p in parts if p["min_even_valuation"] is not None]
    failures = [f for p in parts for f in p["failures"]]
    return {
        "suite": "theorem2",
        "group": str(G),
        "H": str(H),
        "l": l,
        "box": box,
        "assignments_checked": sum(p["checked"] for p in parts),
        "even_count": sum(p["even_count"] for p in parts),
        "min_even_valuation": min(evens) if evens else None,
        "bound_exponent": exp,
        "failures": failures,
        "status": PASS if not failures else FAIL,
    }
