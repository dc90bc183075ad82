"""Additive basis of the Chow ring of ``Mbar_{0,2}(P^r, 2)`` from excision.

The space is cut into

* ``U``: the open locus with a degree-two component, a ``P^1 x P^1``-bundle
  over ``M_{0,0}(P^r, 2)``;
* ``V1``, ``V2``: two ``P^1 x A^1``-bundles over a divisor ``D``, itself a
  ``P^{r-1} x P^1``-bundle over ``M_{0,0}(P^r, 1)``;
* ``Y``: the locus with no marks on the lines, whose classes come from the
  S2-invariant part of a ``(P^{r-1})^2``-bundle over ``P^r`` (plus a
  ``P^1`` fibre).

Each summand below is one ``A^m`` of a base space, placed in codegree
``k = m + shift``.  Dimensions come from the Chow rings of the bases:
``M_{0,0}(P^r, d)`` has the Chow groups of the Grassmannian of lines, for
every ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closedform import betti
from .qalgebra import QPoly, q_binomial, q_int

__all__ = [
    "BasisSummand",
    "BasisReport",
    "SOURCES",
    "chow_dims_m00",
    "chow_dims_projective",
    "basis_catalog",
    "basis_dims",
    "basis_polynomial",
    "verify_basis",
]

SOURCES = ("U-block", "V1-block", "V2-block", "Y-symmetric", "Y-symmetric-shifted")


def chow_dims_m00(r: int, d: int) -> list[int]:
    """``dim A^m(M_{0,0}(P^r, d))`` for ``m = 0, 1, ...``."""
    if r < 1 or d < 1:
        raise ValueError("chow_dims_m00 requires r >= 1 and d >= 1")
    return list(q_binomial(r + 1, 2).coeffs)


def chow_dims_projective(r: int) -> list[int]:
    return list(q_int(r + 1).coeffs)


@dataclass(frozen=True)
class BasisSummand:
    """One summand ``A^{k - shift}(base)`` of the decomposition in codegree ``k``.

    For the Y-blocks ``indices`` is the orbit representative ``(i, j)`` with
    ``i <= j`` of the unordered pair exchanged by S2.
    """

    source: str
    codegree: int
    shift: int
    base: str
    generator: str
    dim: int
    indices: tuple[int, ...] = field(default=())

    @property
    def base_codegree(self) -> int:
        return self.codegree - self.shift

    def to_dict(self) -> dict:
        return {
            "source": self.source,
            "codegree": self.codegree,
            "shift": self.shift,
            "base": self.base,
            "base_codegree": self.base_codegree,
            "generator": self.generator,
            "indices": list(self.indices),
            "dim": self.dim,
        }


def _dim_at(dims: list[int], m: int) -> int:
    return dims[m] if 0 <= m < len(dims) else 0


def basis_catalog(r: int, k: int) -> list[BasisSummand]:
    """Every summand of the decomposition of ``A^k(Mbar_{0,2}(P^r, 2))``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    if k < 0:
        raise ValueError("codegree must be >= 0")
    m2 = chow_dims_m00(r, 2)
    m1 = chow_dims_m00(r, 1)
    pr = chow_dims_projective(r)
    out: list[BasisSummand] = []

    for shift, gen in ((0, "1"), (1, "H1"), (1, "H2"), (2, "H1*H2")):
        out.append(BasisSummand("U-block", k, shift, "M_{0,0}(P^r,2)", gen,
                                _dim_at(m2, k - shift)))

    for source in ("V1-block", "V2-block"):
        for i in range(r):
            for extra, gen in ((0, "1"), (1, "a"), (1, "b"), (2, "a*b")):
                shift = 1 + i + extra
                out.append(BasisSummand(source, k, shift, "M_{0,0}(P^r,1)",
                                        f"h^{i}*{gen}" if gen != "1" else f"h^{i}",
                                        _dim_at(m1, k - shift), (i,)))

    for source, offset in (("Y-symmetric", 2), ("Y-symmetric-shifted", 3)):
        for i in range(r):
            for j in range(i, r):
                shift = i + j + offset
                out.append(BasisSummand(source, k, shift, "P^r", f"{{h1^{i}*h2^{j}}}",
                                        _dim_at(pr, k - shift), (i, j)))
    return out


def basis_dims(r: int) -> list[int]:
    """Total dimension of the decomposition in each codegree ``0 .. 3r+1``."""
    return [sum(s.dim for s in basis_catalog(r, k)) for k in range(3 * r + 2)]


def basis_polynomial(r: int) -> QPoly:
    """Generating polynomial of :func:`basis_dims`, regraded by dimension."""
    return QPoly(basis_dims(r)).reversed(3 * r + 1)


@dataclass(frozen=True)
class BasisReport:
    r: int
    ok: bool
    dims: tuple[int, ...]
    betti: tuple[int, ...]
    mismatches: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "ok": self.ok,
            "grading": "codegree",
            "dims": list(self.dims),
            "betti": list(self.betti),
            "mismatches": list(self.mismatches),
        }


def verify_basis(r: int) -> BasisReport:
    """Compare the decomposition's dimensions with the Betti numbers."""
    dims = basis_dims(r)
    top = 3 * r + 1
    # Serre polynomials grade by dimension: codegree k pairs with beta_{top-k}.
    betti_vec = [betti(r, top - k) for k in range(top + 1)]
    bad = tuple(k for k in range(top + 1) if dims[k] != betti_vec[k])
    return BasisReport(r, not bad, tuple(dims), tuple(betti_vec), bad)
