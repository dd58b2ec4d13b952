"""Counting helpers for elementary Abelian groups."""

from typing import Optional

from ..groups.abelian import GroupSpec, is_prime
from ..utils.validators import ValidationError


def p_binomial(n: int, i: int, p: int) -> int:
    """Number of subgroups of order p^i in (C_p)^n: prod_{j<i} (p^{n-j} - 1) / (p^{j+1} - 1)."""
    if not is_prime(p):
        raise ValidationError(f"{p} is not prime", "p")
    if i < 0 or i > n:
        return 0
    numerator = denominator = 1
    for j in range(i):
        numerator *= p ** (n - j) - 1
        denominator *= p ** (j + 1) - 1
    return numerator // denominator


def saturated_lower_bound(p: int, n: int) -> int:
    """max_i 2^{binom(n, i)_p}: saturated systems on (C_p)^n are at least this many.

    Every subset of one layer gives a distinct interior operator f_S.
    """
    return max(2 ** p_binomial(n, i, p) for i in range(n + 1))


def elementary_abelian_shape(group: GroupSpec) -> Optional[tuple]:
    """(p, n) when G = (C_p)^n, else None."""
    orders = set(group.orders)
    if len(orders) == 1:
        p = orders.pop()
        if is_prime(p):
            return p, len(group.orders)
    return None
