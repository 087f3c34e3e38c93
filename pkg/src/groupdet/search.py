"""Exhaustive search for achieved integer group determinant values over boxes.

Results are deterministic regardless of how the box is sharded: every achieved
value keeps the lexicographically first assignment that produced it.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import re
from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from .boxes import DEFAULT_BUDGET, BudgetExceededError, ensure_budget, iter_box, shard_ranges
from .determinant import group_determinant
from .divisibility import two_adic_valuation
from .groups import (
    AbelianGroup,
    enumerate_elements,
    format_group_spec,
    group_op,
    index_of,
    parse_group_spec,
)

__all__ = [
    "SearchReport",
    "search_values",
    "find_witness",
    "CheckResult",
    "check_even_divisibility",
    "check_membership",
    "MembershipSpec",
    "membership_spec",
    "BudgetExceededError",
]


@dataclass
class SearchReport:
    """Achieved determinant values over a box, each with its first witness."""

    orders: tuple[int, ...]
    box: int
    evaluated: int
    achieved: dict[int, tuple[int, ...]]
    pruned: bool = False

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(self.orders)

    @property
    def distinct(self) -> int:
        return len(self.achieved)

    @property
    def min_even_valuation(self) -> int | None:
        """Smallest 2-adic valuation among the achieved even nonzero values."""
        vals = [two_adic_valuation(v) for v in self.achieved if v and v % 2 == 0]
        return min(vals) if vals else None

    def as_json_dict(self) -> dict:
        values = [
            {
                "v": str(v),
                "witness": list(self.achieved[v]),
                "val2": two_adic_valuation(v) if v else None,
            }
            for v in sorted(self.achieved)
        ]
        return {
            "group": format_group_spec(self.group),
            "box": self.box,
            "pruned": self.pruned,
            "counts": {"evaluated": self.evaluated, "distinct": self.distinct},
            "values": values,
        }

    def save(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.as_json_dict(), fh, indent=1)
            fh.write("\n")

    @staticmethod
    def from_json_dict(data: dict) -> "SearchReport":
        achieved = {int(row["v"]): tuple(row["witness"]) for row in data["values"]}
        return SearchReport(
            orders=parse_group_spec(data["group"]).orders,
            box=int(data["box"]),
            evaluated=int(data["counts"]["evaluated"]),
            achieved=achieved,
            pruned=bool(data.get("pruned", False)),
        )

    @staticmethod
    def load(path) -> "SearchReport":
        with open(path) as fh:
            return SearchReport.from_json_dict(json.load(fh))


def _parity_even(perm: tuple[int, ...]) -> bool:
    seen = [False] * len(perm)
    transpositions = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        transpositions += length - 1
    return transpositions % 2 == 0


def _even_translations(group: AbelianGroup) -> tuple[tuple[int, ...], ...]:
    """Index permutations of the non-identity translations whose row permutation is
    even; translating an assignment by one of these preserves the determinant."""
    elems = enumerate_elements(group)
    perms = []
    for a in elems[1:]:
        perm = tuple(index_of(group, group_op(group, g, a)) for g in elems)
        if _parity_even(perm):
            perms.append(perm)
    return tuple(perms)


def _search_shard(args) -> tuple[int, dict[int, tuple[int, ...]]]:
    orders, box, start, stop, cap, perms = args
    group = AbelianGroup(orders)
    found: dict[int, tuple[int, ...]] = {}
    evaluated = 0
    for vals in iter_box(group.order, box, start, stop):
        if perms and any(tuple(vals[p] for p in perm) < vals for perm in perms):
            continue
        evaluated += 1
        d = group_determinant(group, vals)
        if cap is not None and abs(d) > cap:
            continue
        if d not in found:
            found[d] = vals
    return evaluated, found


def search_values(
    group: AbelianGroup,
    box: int,
    value_cap: int | None = None,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
    jobs: int | None = None,
    prune: bool = False,
) -> SearchReport:
    """Evaluate the determinant on every assignment in [-box, box]^|G|.

    value_cap drops values with |v| > cap from the report (they still count as
    evaluated). prune=True skips assignments that are not lexicographically
    minimal under determinant-preserving translations; the achieved value set
    is unchanged and witnesses stay the lexicographically first ones.
    """
    total = ensure_budget(group.order, box, budget, force)
    jobs = jobs if jobs and jobs > 0 else (os.cpu_count() or 1)
    perms = _even_translations(group) if prune else ()
    shards = shard_ranges(total, jobs)
    args = [(group.orders, box, start, stop, value_cap, perms) for start, stop in shards]
    if len(args) == 1:
        parts = [_search_shard(args[0])]
    else:
        with multiprocessing.Pool(len(args)) as pool:
            parts = pool.map(_search_shard, args)
    achieved: dict[int, tuple[int, ...]] = {}
    evaluated = 0
    for count, part in parts:
        evaluated += count
        for v, w in part.items():
            cur = achieved.get(v)
            if cur is None or w < cur:
                achieved[v] = w
    return SearchReport(group.orders, box, evaluated, achieved, pruned=prune)


def find_witness(
    group: AbelianGroup,
    box: int,
    target: int,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
) -> tuple[int, ...] | None:
    """Lexicographically first assignment in the box whose determinant is target,
    or None when the box does not achieve it."""
    ensure_budget(group.order, box, budget, force)
    for vals in iter_box(group.order, box):
        if group_determinant(group, vals) == target:
            return vals
    return None


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a one-sided containment check over a report's values."""

    name: str
    status: str
    violations: tuple[tuple[int, tuple[int, ...]], ...]

    def as_json_dict(self) -> dict:
        return {
            "check": self.name,
            "status": self.status,
            "violations": [
                {"v": str(v), "witness": list(w)} for v, w in self.violations
            ],
        }


def check_even_divisibility(report: SearchReport, exponent: int) -> CheckResult:
    """Every even achieved value (0 included) must be divisible by 2^exponent."""
    modulus = 1 << exponent
    bad = tuple(
        (v, report.achieved[v])
        for v in sorted(report.achieved)
        if v % 2 == 0 and v % modulus
    )
    return CheckResult(f"2^{exponent} divides even values", "pass" if not bad else "fail", bad)


@dataclass(frozen=True)
class MembershipSpec:
    """A named total predicate over Z describing a known determinant value set."""

    name: str
    predicate: Callable[[int], bool] = field(compare=False)


def _member_z2z2(v: int) -> bool:
    # {4m+1} u {2^4 (2m+1)} u {2^6 m}
    return v % 4 == 1 or (v % 16 == 0 and (v // 16) % 2 == 1) or v % 64 == 0


def _member_z2z2z2(v: int) -> bool:
    # {8m+1} u {2^8 (4m+1)} u {2^12 m}
    return v % 8 == 1 or (v % 256 == 0 and (v // 256) % 4 == 1) or v % 4096 == 0


def _member_z4z2(v: int) -> bool:
    # {8m+1} u {2^8 m}
    return v % 8 == 1 or v % 256 == 0


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def membership_spec(name: str) -> MembershipSpec:
    """Built-in value-set characterizations: "Z2Z2", "Z2Z2Z2", "Z4Z2", "S2p(<p>)".

    S2p(p), for an odd prime p, is the value set of the circulant of size 2p:
    integers that are odd or divisible by 4, and coprime to p or divisible by p^2.
    """
    fixed = {
        "Z2Z2": _member_z2z2,
        "Z2Z2Z2": _member_z2z2z2,
        "Z4Z2": _member_z4z2,
    }
    if name in fixed:
        return MembershipSpec(name, fixed[name])
    m = re.fullmatch(r"S2p\((\d+)\)", name)
    if m:
        p = int(m.group(1))
        if not _is_odd_prime(p):
            raise ValueError(f"S2p needs an odd prime, got {p}")

        def member(v: int, p: int = p) -> bool:
            return (v % 2 != 0 or v % 4 == 0) and (gcd(v, p) == 1 or v % (p * p) == 0)

        return MembershipSpec(name, member)
    raise ValueError(f"unknown membership spec {name!r}")


def check_membership(report: SearchReport, spec: MembershipSpec) -> CheckResult:
    """Every achieved value must satisfy the predicate (containment, one-sided)."""
    bad = tuple(
        (v, report.achieved[v]) for v in sorted(report.achieved) if not spec.predicate(v)
    )
    return CheckResult(f"membership in {spec.name}", "pass" if not bad else "fail", bad)
