"""Exact polynomial arithmetic in Z[q] and its lambda-ring structure.

A :class:`QPoly` stores a dense, little-endian tuple of Python integers, so
coefficient ``i`` is the coefficient of ``q**i``.  Trailing zeros are always
stripped, which makes equality structural: the zero polynomial is ``()``.

The lambda-operations follow the unique lambda-ring structure on Z[q] in
which ``lambda_k(m * q**n) = lambda_k(m) * q**(n*k)`` and ``lambda_t`` is
multiplicative over sums.  For an integer ``m`` one has
``lambda_t(m) = (1 + t)**m``, read as a power series in ``t`` when ``m < 0``.

>>> q_int(3)
QPoly(1 + q + q^2)
>>> sigma_k(q_int(2), 2)
QPoly(1 + q + q^2)
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Sequence, Union

from .errors import DivisionByZero, DivisionNotExact

__all__ = [
    "QPoly",
    "Q",
    "ONE",
    "ZERO",
    "q_int",
    "q_factorial",
    "q_binomial",
    "exact_div",
    "lambda_k",
    "sigma_k",
    "generalized_binomial",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Immutable univariate polynomial with integer coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(coeffs)
        for x in c:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"coefficients must be int, got {type(x).__name__}")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> QPoly:
        if n < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * n + (c,))

    @classmethod
    def sum_range(cls, lo: int, hi: int, step: int = 1) -> QPoly:
        """``q**lo + q**(lo+step) + ... `` up to ``q**hi``; empty (zero) when hi < lo."""
        if hi < lo:
            return ZERO
        if lo < 0:
            raise ValueError("negative exponent in sum_range")
        c = [0] * (hi + 1)
        for i in range(lo, hi + 1, step):
            c[i] += 1
        return cls(c)

    # -- basic accessors ----------------------------------------------
    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self._c) - 1

    def __getitem__(self, i: int) -> int:
        if i < 0 or i >= len(self._c):
            return 0
        return self._c[i]

    def __len__(self) -> int:
        return len(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __iter__(self):
        return iter(self._c)

    def __call__(self, x):
        acc = 0
        for a in reversed(self._c):
            acc = acc * x + a
        return acc

    def is_palindromic(self) -> bool:
        return self._c == self._c[::-1]

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self._c)

    def shift(self, n: int) -> QPoly:
        """Multiply by ``q**n``."""
        if not self._c:
            return self
        return QPoly((0,) * n + self._c)

    def reversed(self, top: int) -> QPoly:
        """``q**top * p(1/q)``; requires ``top >= degree``."""
        if top < self.degree:
            raise ValueError("top must be at least the degree")
        return QPoly(self[top - i] for i in range(top + 1))

    # -- ring operations ----------------------------------------------
    @staticmethod
    def _coerce(other) -> QPoly | None:
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] += x
        return QPoly(res)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly(-x for x in self._c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return ZERO
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return QPoly(res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, den: QPoly) -> tuple[QPoly, QPoly]:
        """Long division over Z.

        Raises :class:`DivisionNotExact` when a quotient coefficient is not
        an integer (the leading coefficient of ``den`` does not divide).
        """
        den = self._coerce(den)
        if not den:
            raise DivisionByZero("division by the zero polynomial")
        rem = list(self._c)
        dd = den.degree
        lead = den._c[-1]
        if len(rem) <= dd:
            return ZERO, self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc, r = divmod(c, lead)
            if r:
                raise DivisionNotExact(f"leading coefficient {lead} does not divide {c}")
            quot[i - dd] = qc
            for j, y in enumerate(den._c):
                rem[i - dd + j] -= qc * y
        return QPoly(quot), QPoly(rem)

    # -- comparison / display -----------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        return hash(("QPoly", self._c))

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(a)
            body = str(mag) if (mag != 1 or i == 0) else ""
            body += mono
            if not terms:
                terms.append(("-" if a < 0 else "") + body)
            else:
                terms.append(("- " if a < 0 else "+ ") + body)
        return " ".join(terms)

    def __repr__(self) -> str:
        return f"QPoly({self})"


Polyish = Union[QPoly, int]

ZERO = QPoly()
ONE = QPoly((1,))
Q = QPoly((0, 1))


def q_int(n: int) -> QPoly:
    """The q-integer ``[n] = 1 + q + ... + q**(n-1)``; ``[0] = 0``."""
    if n < 0:
        raise ValueError("q_int requires n >= 0")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    if n < 0:
        raise ValueError("q_factorial requires n >= 0")
    out = ONE
    for k in range(2, n + 1):
        out = out * q_int(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial ``[n]! / ([k]! [n-k]!)``, zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("q_binomial requires n >= 0")
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    quot, rem = num.divmod(den)
    # a remainder here is a bug in QPoly, not a user error
    assert not rem, f"[{n}]!/([{k}]![{n - k}]!) left a remainder"
    return quot


def exact_div(num: Polyish, den: Polyish) -> QPoly:
    """Divide, requiring a zero remainder."""
    num = QPoly._coerce(num)
    den = QPoly._coerce(den)
    if not den:
        raise DivisionByZero("division by the zero polynomial")
    quot, rem = num.divmod(den)
    if rem:
        raise DivisionNotExact(f"({num}) / ({den}) leaves remainder {rem}")
    return quot


def generalized_binomial(m: int, j: int) -> int:
    """Coefficient of ``t**j`` in ``(1 + t)**m`` for any integer ``m``."""
    if j < 0:
        return 0
    if m >= 0:
        return comb(m, j)
    return (-1) ** j * comb(-m + j - 1, j)


def _series_mul(a: Sequence[QPoly], b: Sequence[QPoly], k: int) -> list[QPoly]:
    out = [ZERO] * (k + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(0, k + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + x * b[j]
    return out


def lambda_series(p: Polyish, k: int) -> list[QPoly]:
    """Coefficients ``[lambda_0(p), ..., lambda_k(p)]`` of ``lambda_t(p)`` mod ``t**(k+1)``."""
    p = QPoly._coerce(p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    series = [ONE] + [ZERO] * k
    for n, m in enumerate(p.coeffs):
        if m == 0:
            continue
        # lambda_t(m q^n) = sum_j binom(m, j) q^(n j) t^j
        factor = [QPoly.monomial(n * j, generalized_binomial(m, j)) for j in range(k + 1)]
        series = _series_mul(series, factor, k)
    return series


def lambda_k(p: Polyish, k: int) -> QPoly:
    """The k-th exterior-power operation on Z[q]."""
    return lambda_series(p, k)[k]


def sigma_k(p: Polyish, k: int) -> QPoly:
    """The k-th symmetric-power operation ``(-1)**k lambda_k(-p)``."""
    p = QPoly._coerce(p)
    v = lambda_k(-p, k)
    return v if k % 2 == 0 else -v
