"""The ring R(S2)[q] of S2-equivariant Serre polynomials.

An element ``a*1 + b*eps`` is stored as the pair ``(triv, sign) = (a, b)``,
with ``eps`` the sign representation and ``eps**2 = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NegativeInput
from .qalgebra import ONE, ZERO, QPoly, exact_div, lambda_k, sigma_k

__all__ = [
    "EquivPoly2",
    "TRIVIAL",
    "SIGN",
    "equiv_mul",
    "augment",
    "rank",
    "equivariant_square",
    "equiv_exact_div_scalar",
]


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return QPoly.const(x)
    raise TypeError(f"expected QPoly or int, got {type(x).__name__}")


@dataclass(frozen=True)
class EquivPoly2:
    triv: QPoly = ZERO
    sign: QPoly = ZERO

    def __post_init__(self):
        object.__setattr__(self, "triv", _as_qpoly(self.triv))
        object.__setattr__(self, "sign", _as_qpoly(self.sign))

    @classmethod
    def scalar(cls, p) -> EquivPoly2:
        """``p`` times the trivial representation."""
        return cls(_as_qpoly(p), ZERO)

    def _lift(self, other) -> EquivPoly2 | None:
        if isinstance(other, EquivPoly2):
            return other
        try:
            return EquivPoly2.scalar(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return EquivPoly2(self.triv + o.triv, self.sign + o.sign)

    __radd__ = __add__

    def __neg__(self):
        return EquivPoly2(-self.triv, -self.sign)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return equiv_mul(self, o)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"({self.triv})*1 + ({self.sign})*eps"


TRIVIAL = EquivPoly2(ONE, ZERO)
SIGN = EquivPoly2(ZERO, ONE)


def equiv_mul(x: EquivPoly2, y: EquivPoly2) -> EquivPoly2:
    a, b = x.triv, x.sign
    c, d = y.triv, y.sign
    return EquivPoly2(a * c + b * d, a * d + b * c)


def augment(x: EquivPoly2) -> QPoly:
    """Coefficient of the trivial representation (invariant part)."""
    return x.triv


def rank(x: EquivPoly2) -> QPoly:
    """Forget the action: ``1 -> 1`` and ``eps -> 1``."""
    return x.triv + x.sign


def equivariant_square(p: QPoly) -> EquivPoly2:
    """Serre polynomial of ``X**2`` with S2 swapping the factors, given ``Serre(X) = p``.

    Symmetric square on the trivial part, exterior square on the sign part.
    """
    p = _as_qpoly(p)
    if not p.is_nonnegative():
        raise NegativeInput(f"{p} has a negative coefficient")
    return EquivPoly2(sigma_k(p, 2), lambda_k(p, 2))


def equiv_exact_div_scalar(num: EquivPoly2, den) -> EquivPoly2:
    den = _as_qpoly(den)
    return EquivPoly2(exact_div(num.triv, den), exact_div(num.sign, den))
