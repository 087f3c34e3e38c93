"""Group matrices and exact fraction-free determinants.

Entries may be Python ints or CyclotomicInt values at one fixed level; the
elimination is Bareiss (fraction-free), so every internal division is exact
in the entry domain and is checked.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .cyclotomic import CyclotomicInt
from .groups import (
    AbelianGroup,
    enumerate_elements,
    group_inv,
    group_op,
    index_of,
)


@lru_cache(maxsize=None)
def _index_table(orders: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    # entry (i, j) of the group matrix reads the assignment at index_of(g_i * g_j^-1)
    group = AbelianGroup(orders)
    elems = enumerate_elements(group)
    inverses = [group_inv(group, h) for h in elems]
    return tuple(
        tuple(index_of(group, group_op(group, g, hinv)) for hinv in inverses) for g in elems
    )


def check_assignment(group: AbelianGroup, values: Sequence) -> tuple:
    """An assignment has exactly one entry per group element."""
    vals = tuple(values)
    if len(vals) != group.order:
        raise ValueError(
            f"assignment length {len(vals)} does not match |G| = {group.order} for {group}"
        )
    return vals


def build_group_matrix(group: AbelianGroup, values: Sequence) -> list[list]:
    """The matrix with entry (i, j) = values[index of g_i * g_j^-1].

    Rows and columns follow enumerate_elements; entry (0, 0) is the identity's
    value, and the first row of a cyclic group reads x_0, x_{n-1}, ..., x_1.
    """
    vals = check_assignment(group, values)
    return [[vals[j] for j in row] for row in _index_table(group.orders)]


def bareiss_det(matrix: Sequence[Sequence]):
    """Exact determinant by fraction-free elimination.

    Zero pivots are repaired by row swaps (sign tracked); a pivot column that
    is entirely zero short-circuits to 0. Entries must be all int or all
    CyclotomicInt at one level.
    """
    n = len(matrix)
    if n == 0:
        return 1
    rows = [list(r) for r in matrix]
    for r in rows:
        if len(r) != n:
            raise ValueError("matrix is not square")
    first = rows[0][0]
    if isinstance(first, int):
        if all(isinstance(e, int) for r in rows for e in r):
            return _eliminate_int(rows, n)
    elif isinstance(first, CyclotomicInt):
        level = first.level
        if all(isinstance(e, CyclotomicInt) and e.level == level for r in rows for e in r):
            return _eliminate_domain(rows, n)
    raise ValueError("matrix entries must be all int or all CyclotomicInt at one level")


def _eliminate_int(rows: list[list[int]], n: int) -> int:
    sign = 1
    prev = 1
    for k in range(n - 1):
        rk = rows[k]
        pivot = rk[k]
        if not pivot:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rk
                    rk = rows[k]
                    pivot = rk[k]
                    sign = -sign
                    break
            else:
                return 0
        if prev == 1:
            for i in range(k + 1, n):
                ri = rows[i]
                a = ri[k]
                if a:
                    for j in range(k + 1, n):
                        ri[j] = ri[j] * pivot - a * rk[j]
                elif pivot != 1:
                    for j in range(k + 1, n):
                        ri[j] *= pivot
        else:
            for i in range(k + 1, n):
                ri = rows[i]
                a = ri[k]
                if a:
                    for j in range(k + 1, n):
                        num = ri[j] * pivot - a * rk[j]
                        q = num // prev
                        assert q * prev == num, "fraction-free elimination: inexact division"
                        ri[j] = q
                else:
                    for j in range(k + 1, n):
                        num = ri[j] * pivot
                        q = num // prev
                        assert q * prev == num, "fraction-free elimination: inexact division"
                        ri[j] = q
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _eliminate_domain(rows: list[list[CyclotomicInt]], n: int) -> CyclotomicInt:
    sign = 1
    prev = None
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return rows[0][0] * 0
        rk = rows[k]
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                num = ri[j] * pivot - a * rk[j]
                ri[j] = num if prev is None else num.exact_div(prev)
        prev = pivot
    det = rows[n - 1][n - 1]
    return det if sign == 1 else -det


def group_determinant(group: AbelianGroup, values: Sequence):
    """Determinant of the group matrix; an exact integer for integer assignments."""
    return bareiss_det(build_group_matrix(group, values))


def circulant_det(n: int, xs: Sequence):
    """Circulant determinant of Z/nZ; xs[i] is the value at residue i.

    In the classical 1-based notation x_1, ..., x_n this means x_(i+1) = xs[i].
    """
    if n < 1:
        raise ValueError(f"circulant size must be positive, got {n}")
    return group_determinant(AbelianGroup((n,)), xs)


def convolve(group: AbelianGroup, x: Sequence, y: Sequence) -> tuple:
    """(x * y)_g = sum_h x_h y_(h^-1 g), the product in the group algebra."""
    xv = check_assignment(group, x)
    yv = check_assignment(group, y)
    elems = enumerate_elements(group)
    out = []
    for g in elems:
        acc = 0
        for hi, h in enumerate(elems):
            acc += xv[hi] * yv[index_of(group, group_op(group, group_inv(group, h), g))]
        out.append(acc)
    return tuple(out)
