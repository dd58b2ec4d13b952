"""Constant schedules b_{n,i}, c_n and d_n of the rank-two existence theorem.

All three quantities are astronomically small (or large), so each one is kept
as M = -ln x in a short exponential tower: level 0 stores M itself, level 1
stores ln M, level 2 stores ln ln M. Arithmetic at level >= 1 is exact up to
the working precision of the Decimal context.
"""

from dataclasses import dataclass
from decimal import MAX_EMAX, MIN_EMIN, Context, Decimal, localcontext
from typing import List

from ..utils.logger import get_logger
from ..utils.validators import ValidationError

logger = get_logger(__name__)

PRECISION = 50
EXP_LIMIT = Decimal(10) ** 6


def _context() -> Context:
    return Context(prec=PRECISION, Emax=MAX_EMAX, Emin=MIN_EMIN)


@dataclass(frozen=True, order=True)
class Tower:
    """A positive magnitude M given by its level and the value of the innermost logarithm."""

    level: int
    value: Decimal

    def exp(self) -> "Tower":
        """exp(M)."""
        if self.level == 0 and self.value < EXP_LIMIT:
            return Tower(0, self.value.exp())
        return Tower(self.level + 1, self.value)

    def scale(self, factor: Decimal) -> "Tower":
        """factor * M for factor > 0."""
        if self.level == 0:
            return Tower(0, self.value * factor)
        if self.level == 1:
            return Tower(1, self.value + factor.ln())
        return self

    def shift(self, amount: Decimal) -> "Tower":
        """M + amount; below working precision once M is past level 0."""
        if self.level == 0:
            return Tower(0, self.value + amount)
        return self

    def __add__(self, other: "Tower") -> "Tower":
        if self.level == 0 and other.level == 0:
            return Tower(0, self.value + other.value)
        return max(self, other)

    def describe(self, name: str) -> str:
        """Human-readable form of ln(name) = -M."""
        inner = f"{self.value:.6E}" if abs(self.value) >= 10 ** 6 else f"{self.value:.12f}"
        if self.level == 0:
            return f"ln {name} = -{inner}"
        return f"ln {name} = -" + "exp(" * self.level + inner + ")" * self.level


@dataclass(frozen=True)
class BoundsReport:
    """b_{n,0..n}, c_n and d_n as towers for -ln b, -ln c and ln d."""

    n: int
    b: List[Tower]
    c: Tower
    ln_d: Tower

    def rows(self) -> List[tuple]:
        out = [(f"b[{self.n},{i}]", t.describe("b")) for i, t in enumerate(self.b)]
        out.append((f"c[{self.n}]", self.c.describe("c")))
        ln_d = self.ln_d
        out.append((f"d[{self.n}]", ("ln d = " + "exp(" * ln_d.level + f"{ln_d.value:.6E}" + ")" * ln_d.level)))
        return out


def _ln_d(k: Tower, n: int) -> Tower:
    """Smallest y = ln x with y - 4 ln(ln 2 + (3n + 3/4) y) > K, by bisection when K is small enough."""
    if k.level > 0:
        return k
    slope = Decimal(3 * n) + Decimal("0.75")
    ln2 = Decimal(2).ln()

    def excess(y: Decimal) -> Decimal:
        return y - 4 * (ln2 + slope * y).ln() - k.value

    lo, hi = Decimal(1), max(Decimal(2), 2 * k.value)
    while excess(hi) <= 0:
        hi *= 2
    for _ in range(400):
        mid = (lo + hi) / 2
        if excess(mid) > 0:
            hi = mid
        else:
            lo = mid
        if hi - lo <= hi * Decimal(10) ** (-PRECISION + 5):
            break
    return Tower(0, hi)


def rank_two_bounds(n: int) -> BoundsReport:
    """Tabulate the constant schedules for rank-two p-groups of order p^n.

    Raises:
        ValidationError: If n < 1
    """
    if not isinstance(n, int) or n < 1:
        raise ValidationError(f"n must be a positive integer, got {n!r}", "n")
    with localcontext(_context()):
        ln2 = Decimal(2).ln()
        power = Decimal(n + 1)
        b = [Tower(0, Decimal(0))]
        for _ in range(n):
            current = b[-1]
            growth = current.scale(power).exp().scale(Decimal(90))
            nxt = current.shift(ln2) + growth
            if not nxt > current:
                raise ValidationError("b schedule failed to decrease", "n")
            b.append(nxt)
        last = b[-1]
        blowup = last.scale(power).exp().scale(Decimal(30 * (2 * n + 1)))
        c = last.shift(ln2) + blowup
        # b x > (5 ln(2 x^{3n+3/4}) e^{blowup})^4  <=>  ln x - 4 ln ln(...) > 4 (ln 5 + blowup) - ln b
        k = blowup.scale(Decimal(4)).shift(4 * Decimal(5).ln()) + last
        ln_d = _ln_d(k, n)
    logger.debug(f"rank_two_bounds(n={n}): b levels {[t.level for t in b]}, c level {c.level}")
    return BoundsReport(n, b, c, ln_d)
