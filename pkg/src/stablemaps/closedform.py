"""Closed-form Poincare polynomials and Betti numbers.

Covers ``Mbar_{0,2}(P^r, 2)`` and ``Mbar_{0,1}(P^r, 2)``.  The Betti number
``beta_j`` is by definition the coefficient of ``q**j`` in the closed form;
the five-case piecewise formula in terms of flag-variety Betti numbers is
evaluated alongside it as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BranchMismatch
from .qalgebra import QPoly

__all__ = [
    "BettiTable",
    "serre_m02_closed",
    "serre_m01_closed",
    "euler_m02",
    "alpha",
    "betti",
    "betti_branches",
    "betti_stable",
    "betti_table",
]


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def _s(lo: int, hi: int, step: int = 1) -> QPoly:
    return QPoly.sum_range(lo, hi, step)


def _third_factor(r: int, weight: int) -> QPoly:
    return _s(0, r + 2) + weight * _s(1, r + 1) + weight * _s(2, r)


def serre_m02_closed(r: int) -> QPoly:
    _check_r(r)
    return _s(0, r) * _s(0, r - 1) * _third_factor(r, 2)


def serre_m01_closed(r: int) -> QPoly:
    _check_r(r)
    if r % 2 == 0:
        head = _s(0, r) * _s(0, r - 2, 2)
    else:
        head = _s(0, r - 1) * _s(0, r - 1, 2)
    return head * _third_factor(r, 1)


def euler_m02(r: int) -> int:
    _check_r(r)
    return r * (r + 1) * (5 * r + 3)


def alpha(r: int, i: int) -> int:
    """Betti number ``i`` of the point-line flag variety of P^r.

    ``r + 1/2 - |r - 1/2 - i|`` on ``0 <= i <= 2r - 1``, else zero; computed
    with doubled integers.
    """
    _check_r(r)
    if i < 0 or i > 2 * r - 1:
        return 0
    return (2 * r + 1 - abs(2 * r - 1 - 2 * i)) // 2


def _asum(r: int, lo: int, hi: int) -> int:
    return sum(alpha(r, i) for i in range(lo, hi + 1))


def betti_branches(r: int, j: int) -> dict[str, int]:
    """Every piecewise branch whose condition holds at ``(r, j)``, by name."""
    _check_r(r)
    out = {}
    if 0 <= j <= r:
        out["j<=r"] = _asum(r, 0, j) + 2 * _asum(r, 0, j - 1) + 2 * _asum(r, 0, j - 2)
    if j == r + 1:
        out["j=r+1"] = _asum(r, 0, r + 1) + 2 * _asum(r, 0, r) + 2 * _asum(r, 1, r - 1)
    if r + 2 <= j <= 2 * r - 1:
        out["r+2<=j<=2r-1"] = (
            _asum(r, j - r - 2, j) + 2 * _asum(r, j - r - 1, j - 1) + 2 * _asum(r, j - r, j - 2)
        )
    if j == 2 * r:
        out["j=2r"] = (
            _asum(r, r - 2, 2 * r - 1) + 2 * _asum(r, r - 1, 2 * r - 1) + 2 * _asum(r, r, 2 * r - 2)
        )
    if 2 * r + 1 <= j <= 3 * r + 1:
        out["2r+1<=j<=3r+1"] = (
            _asum(r, j - r - 2, 2 * r - 1)
            + 2 * _asum(r, j - r - 1, 2 * r - 1)
            + 2 * _asum(r, j - r, 2 * r - 1)
        )
    return out


def betti(r: int, j: int) -> int:
    """``beta_j`` of ``Mbar_{0,2}(P^r, 2)``.

    Raises :class:`BranchMismatch` if an applicable piecewise branch
    disagrees with the coefficient.
    """
    value = serre_m02_closed(r)[j]
    for name, v in betti_branches(r, j).items():
        if v != value:
            raise BranchMismatch(f"r={r}, j={j}: branch {name} gives {v}, coefficient is {value}")
    return value


def betti_stable(j: int) -> int:
    """Limiting value of ``beta_j`` for ``r > j``: ``(5j^2 + 3j + 2) / 2``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    num = 5 * j * j + 3 * j + 2
    assert num % 2 == 0
    return num // 2


@dataclass(frozen=True)
class BettiTable:
    r: int
    betti: tuple[int, ...]
    euler: int

    def to_dict(self) -> dict:
        return {"r": self.r, "grading": "dimension", "betti": list(self.betti), "euler": self.euler}


def betti_table(r: int) -> BettiTable:
    values = tuple(betti(r, j) for j in range(3 * r + 2))
    return BettiTable(r, values, sum(values))
