"""Closed-form upper bounds and composition formulas."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

FAMILIES = ("2deg", "bipplanar")


def bound_2degenerate(n: int) -> Fraction:
    """Upper bound for signed 2-degenerate simple graphs on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return 4 - Fraction(2, (n + 1) // 2)


def bound_2degenerate_cases(n: int) -> Fraction:
    if n % 2:
        return 4 - Fraction(4, n + 1)
    return 4 - Fraction(4, n)


def bound_bipartite_planar(n: int) -> Fraction:
    """Upper bound for signed bipartite planar simple graphs on ``n`` vertices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return 4 - Fraction(4, (n + 2) // 2)


def bound_bipartite_planar_cases(n: int) -> Fraction:
    if n % 2:
        return 4 - Fraction(8, n + 1)
    return 4 - Fraction(8, n + 2)


def bound(family: str, n: int) -> Fraction:
    if family == "2deg":
        return bound_2degenerate(n)
    if family == "bipplanar":
        return bound_bipartite_planar(n)
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class MaxMinResult:
    family: str
    n: int
    optimizer: int  # q for 2deg, k (cycle half-length) for bipplanar
    value: Fraction

    @property
    def closed_form(self) -> Fraction:
        return bound(self.family, self.n)

    @property
    def agrees(self) -> bool:
        return self.value == self.closed_form


def maxmin_verify(n: int, family: str) -> MaxMinResult:
    """Brute-force the worst value the rationality argument allows.

    ``2deg``: max over ``q`` of ``min(2n/q, 4 - 2/q)``.
    ``bipplanar``: max of ``4k/q`` over ``2k <= n`` and ``k < q``.
    Ties go to the smallest optimizer.
    """
    if family == "2deg":
        if n < 1:
            raise ValueError("n must be at least 1")
        best_q, best = None, None
        for q in range(1, 2 * n + 1):
            val = min(Fraction(2 * n, q), 4 - Fraction(2, q))
            if best is None or val > best:
                best_q, best = q, val
        return MaxMinResult(family, n, best_q, best)
    if family == "bipplanar":
        if n < 2:
            raise ValueError("n must be at least 2")
        best_k, num, den = None, 0, 1
        for k in range(1, n // 2 + 1):
            for q in range(k + 1, 2 * n + 1):
                if 4 * k * den > num * q:
                    best_k, num, den = k, 4 * k, q
        return MaxMinResult(family, n, best_k, Fraction(num, den))
    raise ValueError(f"unknown family {family!r}")


def sg_formula(x) -> Fraction:
    """Circular chromatic number of S(G) from that of G."""
    x = Fraction(x)
    if x < 1:
        raise ValueError("x must be at least 1")
    return 4 - 4 / (x + 1)


def t2_formula(x) -> Fraction:
    """Circular chromatic number of the negated full subdivision."""
    x = Fraction(x)
    if x < 1:
        raise ValueError("x must be at least 1")
    return 4 * x / (2 + x)
