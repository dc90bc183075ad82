"""Serre polynomials of moduli spaces of genus-zero stable maps to P^r.

Building blocks are the spaces ``M_{0,n}(P^r, d)`` of maps with smooth
domain.  Boundary strata of ``Mbar_{0,2}(P^r, 2)`` are fibre products of
building blocks over copies of ``P^r`` (one per node), divided by the
automorphisms of the dual graph.  Summing the ten strata gives the Serre
polynomial of the whole space, which :mod:`stablemaps.closedform` computes
independently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial
from typing import Optional

from .equivrep import (
    EquivPoly2,
    augment,
    equiv_exact_div_scalar,
    equivariant_square,
    rank,
)
from .errors import ConsistencyError
from .qalgebra import ONE, Q, QPoly, exact_div, q_binomial, q_int
from .trees import StableTree

__all__ = [
    "serre_projective",
    "serre_m00",
    "serre_flag01",
    "serre_config_p1",
    "serre_pgl2",
    "serre_m0n",
    "serre_m0n_const",
    "serre_fiber_product",
    "equivariant_p1_4",
    "equivariant_f_p1_4",
    "equivariant_f_p1_4_lattice",
    "equivariant_m04",
    "equivariant_m0n_const",
    "Block",
    "StratumRecipe",
    "STRATA",
    "stratum",
    "serre_stratum",
    "serre_stratum_from_tree",
    "serre_m02_strata",
]


# -- building blocks ------------------------------------------------------

def serre_projective(r: int) -> QPoly:
    """Serre polynomial of P^r."""
    return q_int(r + 1)


def serre_m00(r: int, d: int) -> QPoly:
    """Serre polynomial of the space of degree-d rational curves in P^r with smooth domain.

    Its Chow ring agrees with that of the Grassmannian of lines, shifted up
    by ``(d-1)(r+1)`` because Serre polynomials grade by dimension.
    """
    if r < 1 or d < 1:
        raise ValueError("serre_m00 requires r >= 1 and d >= 1")
    return q_binomial(r + 1, 2).shift((d - 1) * (r + 1))


def serre_flag01(r: int) -> QPoly:
    """Point-on-line flags in P^r: ``[r+1][r]``."""
    if r < 1:
        raise ValueError("serre_flag01 requires r >= 1")
    return q_int(r + 1) * q_int(r)


def serre_config_p1(n: int) -> QPoly:
    """Ordered configurations of ``n`` distinct points on P^1."""
    if n < 0:
        raise ValueError("serre_config_p1 requires n >= 0")
    p1 = serre_projective(1)
    out = ONE
    for i in range(n):
        out = out * (p1 - i)
    return out


def serre_pgl2() -> QPoly:
    """PGL(2) is P^3 minus a quadric surface P^1 x P^1."""
    return serre_projective(3) - serre_projective(1) ** 2


def serre_m0n(r: int, n: int, d: int) -> QPoly:
    """``M_{0,n}(P^r, d)`` for ``d >= 1``: an ``F(P^1, n)``-bundle over ``M_{0,0}(P^r, d)``."""
    if d < 1:
        return serre_m0n_const(r, n)
    return serre_config_p1(n) * serre_m00(r, d)


def serre_m0n_const(r: int, n: int) -> QPoly:
    """Constant maps: ``M_{0,n}(P^r, 0) = M_{0,n} x P^r``, for ``n`` in (3, 4)."""
    return rank(equivariant_m0n_const(r, n))


def _product(polys) -> QPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out


def serre_fiber_product(factors: list[QPoly], base: QPoly, n_base: int) -> QPoly:
    """Serre polynomial of an iterated fibre product over ``n_base`` copies of ``base``."""
    return exact_div(_product(factors), base**n_base)


# -- the S2-equivariant Serre polynomial of M_{0,4} ----------------------

def _check_swap(swap) -> tuple[int, int]:
    pair = tuple(sorted(swap))
    if len(pair) != 2 or pair[0] == pair[1] or not set(pair) <= {1, 2, 3, 4}:
        raise ValueError("swap must be two distinct labels from {1, 2, 3, 4}")
    return pair


def equivariant_p1_4(swap=(1, 2)) -> EquivPoly2:
    """``(P^1)^4`` with S2 exchanging two factors, from the Kunneth basis.

    The cohomology has basis ``H_S = prod_{i in S} H_i`` for subsets ``S`` of
    the four factors, in degree ``|S|``.  A monomial fixed by the swap spans a
    trivial summand; a pair of exchanged monomials spans ``1 + eps``.
    """
    i, j = _check_swap(swap)
    triv = [0] * 5
    sign = [0] * 5
    seen = set()
    for size in range(5):
        for s in combinations((1, 2, 3, 4), size):
            s = frozenset(s)
            if s in seen:
                continue
            image = frozenset({i: j, j: i}.get(x, x) for x in s)
            seen.update((s, image))
            triv[size] += 1
            if image != s:
                sign[size] += 1
    return EquivPoly2(QPoly(triv), QPoly(sign))


# Contributions of the removed diagonal cells of (P^1)^4, with 1 and 2 swapped.
_LARGE_DIAGONAL_CELLS = EquivPoly2(QPoly((0, 4, 0, -4)), QPoly((0, 2, 0, -2)))
_MEDIUM_DIAGONAL_CELLS = EquivPoly2(QPoly((0, -5, -5)), QPoly((0, -2, -2)))
_SMALL_DIAGONAL_CELL = EquivPoly2(QPoly((-1, -1)), QPoly())


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def _refines(finer, coarser) -> bool:
    return all(any(b <= c for c in coarser) for b in finer)


def _mobius_from_bottom(poset, bottom) -> dict:
    """``mu(bottom, x)`` for every ``x`` of a finite poset ordered by refinement."""
    ordered = sorted(poset, key=len, reverse=True)
    mu = {}
    for x in ordered:
        if not _refines(bottom, x):
            continue
        if x == bottom:
            mu[x] = 1
        else:
            mu[x] = -sum(v for z, v in mu.items() if z != x and _refines(z, x))
    return mu


def equivariant_f_p1_4_lattice(swap=(1, 2)) -> EquivPoly2:
    """Configuration space ``F(P^1, 4)`` by Mobius inversion on the partition lattice.

    Every set partition ``pi`` of the four points has a closed diagonal
    ``Delta_pi = (P^1)^{#blocks}`` and an open stratum; the closed diagonal is
    the union of the open strata of the coarser partitions.  Inverting over
    the whole lattice gives the plain Serre polynomial of the open stratum
    of the finest partition, which is ``F(P^1, 4)``.

    For the trace of the swap only swap-stable strata matter (an exchanged
    pair contributes trace zero), so the same inversion over the subposet of
    swap-fixed partitions gives the trace polynomial.  A fixed diagonal either
    keeps the swapped points in one block (the swap acts trivially) or has
    them as singleton blocks (it exchanges two P^1 factors, trace ``1 + q^2``
    on that pair).  Trivial and sign parts are half the sum and half the
    difference of the plain and trace polynomials.
    """
    i, j = _check_swap(swap)
    p1 = serre_projective(1)
    tau = {i: j, j: i}
    lattice = [frozenset(frozenset(b) for b in part) for part in _set_partitions([1, 2, 3, 4])]
    bottom = frozenset(frozenset((x,)) for x in (1, 2, 3, 4))

    mu = _mobius_from_bottom(lattice, bottom)
    plain = sum((m * p1 ** len(pi) for pi, m in mu.items()), QPoly())

    fixed = [pi for pi in lattice
             if frozenset(frozenset(tau.get(x, x) for x in b) for b in pi) == pi]
    swap_trace_p1_squared = p1 * p1 - 2 * Q  # (1 + q)^2 minus the exchanged H_i, H_j pair
    trace = QPoly()
    for pi, m in _mobius_from_bottom(fixed, bottom).items():
        if any({i, j} <= b for b in pi):
            t = p1 ** len(pi)
        else:
            t = swap_trace_p1_squared * p1 ** (len(pi) - 2)
        trace = trace + m * t

    return EquivPoly2(exact_div(plain + trace, 2), exact_div(plain - trace, 2))


def equivariant_f_p1_4() -> EquivPoly2:
    """``F(P^1, 4)`` with the first two points swapped.

    Starts from ``(P^1)^4`` and removes the six large, seven medium and one
    small diagonal cells.  Cross-checked against the partition-lattice
    computation.
    """
    value = (
        equivariant_p1_4((1, 2))
        + _LARGE_DIAGONAL_CELLS
        + _MEDIUM_DIAGONAL_CELLS
        + _SMALL_DIAGONAL_CELL
    )
    oracle = equivariant_f_p1_4_lattice((1, 2))
    if value != oracle:
        raise ConsistencyError(f"cell count {value} != lattice count {oracle}")
    if rank(value) != serre_config_p1(4):
        raise ConsistencyError("forgetting the action does not recover F(P^1, 4)")
    return value


def equivariant_m04() -> EquivPoly2:
    """``M_{0,4} = F(P^1, 4) / PGL(2)`` with two of the four points swapped.

    PGL(2) acts freely and its cohomology is untouched by the swap, so the
    division is by a scalar.
    """
    return equiv_exact_div_scalar(equivariant_f_p1_4(), serre_pgl2())


def equivariant_m0n_const(r: int, n: int) -> EquivPoly2:
    """``M_{0,n}(P^r, 0)`` with S2 swapping two marked points (trivial on P^r)."""
    pr = serre_projective(r)
    if n == 3:
        return EquivPoly2.scalar(pr)
    if n == 4:
        return equivariant_m04() * pr
    raise ValueError("constant-map blocks are only needed for n = 3 or 4")


# -- strata of Mbar_{0,2}(P^r, 2) -----------------------------------------

@dataclass(frozen=True)
class Block:
    """One factor ``M_{0,n}(P^r, d)`` of a fibre product (n counts all special points)."""

    n: int
    d: int

    def serre(self, r: int) -> QPoly:
        return serre_m0n(r, self.n, self.d)

    def __str__(self) -> str:
        return f"M_{{0,{self.n}}}(P^r,{self.d})"


@dataclass(frozen=True)
class StratumRecipe:
    """A stratum of ``Mbar_{0,2}(P^r, 2)`` as a fibre product of smooth-domain blocks.

    For the two strata with an S2 automorphism, ``factors`` holds only the
    part fixed by S2 (the central vertex or vertices) and ``swapped`` is the
    block appearing twice, exchanged by the automorphism; ``central_points``
    is the number of special points on the central constant-map block,
    two of which S2 exchanges.  ``n_base`` counts the nodes joining the
    fixed factors to each other (the central block is the last factor).
    """

    id: int
    variant: str
    factors: tuple[Block, ...]
    n_base: int
    tree: StableTree
    automorphisms: str = "trivial"
    swapped: Optional[Block] = None
    central_points: Optional[int] = None
    note: str = field(default="", compare=False)

    @property
    def label(self) -> str:
        return f"{self.id}{self.variant}"

    def description(self) -> str:
        parts = [str(b) for b in self.factors]
        if self.swapped is not None:
            parts.append(f"({self.swapped})^2")
        text = " x_{P^r} ".join(parts)
        if self.automorphisms == "S2":
            text = f"[{text} / S2]"
        return text


def _t(degrees, edges, marks) -> StableTree:
    return StableTree(tuple(degrees), tuple(edges), tuple(marks))


STRATA: tuple[StratumRecipe, ...] = (
    StratumRecipe(1, "", (Block(2, 2),), 0, _t([2], [], [0, 0]),
                  note="smooth domain"),
    StratumRecipe(2, "", (Block(1, 2), Block(3, 0)), 1, _t([2, 0], [(0, 1)], [1, 1]),
                  note="both marks on a contracted component"),
    StratumRecipe(3, "", (Block(3, 1), Block(1, 1)), 1, _t([1, 1], [(0, 1)], [0, 0]),
                  note="both marks on one line"),
    StratumRecipe(4, "", (Block(2, 1), Block(2, 1)), 1, _t([1, 1], [(0, 1)], [0, 1]),
                  note="one mark on each line"),
    StratumRecipe(5, "", (Block(3, 0), Block(2, 1), Block(1, 1)), 2,
                  _t([0, 1, 1], [(0, 1), (1, 2)], [0, 0]),
                  note="contracted tail carrying both marks"),
    StratumRecipe(6, "a", (Block(2, 1), Block(3, 0), Block(1, 1)), 2,
                  _t([1, 0, 1], [(0, 1), (1, 2)], [0, 1]),
                  note="mark 1 on a line, mark 2 on the contracted bridge"),
    StratumRecipe(6, "b", (Block(2, 1), Block(3, 0), Block(1, 1)), 2,
                  _t([1, 0, 1], [(0, 1), (1, 2)], [1, 0]),
                  note="mark 2 on a line, mark 1 on the contracted bridge"),
    StratumRecipe(7, "", (Block(4, 0),), 0, _t([0, 1, 1], [(0, 1), (0, 2)], [0, 0]),
                  automorphisms="S2", swapped=Block(1, 1), central_points=4,
                  note="two lines and both marks on one contracted component"),
    StratumRecipe(8, "", (Block(3, 0), Block(3, 0)), 1,
                  _t([0, 0, 1, 1], [(0, 1), (1, 2), (1, 3)], [0, 0]),
                  automorphisms="S2", swapped=Block(1, 1), central_points=3,
                  note="two lines meeting a contracted component, marks on a further one"),
    StratumRecipe(9, "", (Block(1, 1), Block(3, 0), Block(3, 0), Block(1, 1)), 3,
                  _t([1, 0, 0, 1], [(0, 1), (1, 2), (2, 3)], [1, 2]),
                  note="chain of two contracted components between two lines"),
)


def stratum(label) -> StratumRecipe:
    """Look up a recipe by label: ``1``..``9``, ``"6a"`` or ``"6b"``."""
    key = str(label)
    for s in STRATA:
        if s.label == key:
            return s
    raise KeyError(f"no stratum labelled {label!r}")


def serre_stratum(r: int, s: StratumRecipe) -> QPoly:
    """Serre polynomial of one stratum of ``Mbar_{0,2}(P^r, 2)``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    pr = serre_projective(r)
    if s.automorphisms == "trivial":
        return serre_fiber_product([b.serre(r) for b in s.factors], pr, s.n_base)
    return augment(equivariant_serre_stratum(r, s))


def equivariant_serre_stratum(r: int, s: StratumRecipe) -> EquivPoly2:
    """S2-equivariant Serre polynomial of the cover of a stratum with automorphisms.

    The fixed part is the chain of constant-map blocks; the swapped block
    appears twice, each copy fibred over the central P^r, so its fibre over
    P^r is squared equivariantly.
    """
    pr = serre_projective(r)
    extra = [b.serre(r) for b in s.factors[:-1]]
    central = equivariant_m0n_const(r, s.central_points)
    fixed = equiv_exact_div_scalar(central * _product(extra), pr ** len(extra))
    fibre = exact_div(s.swapped.serre(r), pr)
    value = fixed * equivariant_square(fibre)
    plain = serre_fiber_product(
        [b.serre(r) for b in s.factors] + [s.swapped.serre(r)] * 2, pr, s.n_base + 2
    )
    if rank(value) != plain:
        raise ConsistencyError(f"stratum {s.label}: equivariant rank disagrees with the cover")
    return value


def serre_stratum_from_tree(r: int, tree: StableTree) -> QPoly:
    """Serre polynomial of the fibre-product cover read directly off a dual tree.

    One block per vertex, one P^r per edge.  This is the stratum itself only
    when the tree has no automorphisms.
    """
    factors = []
    for v, deg in enumerate(tree.degrees):
        factors.append(serre_m0n(r, tree.special_points(v), deg))
    return serre_fiber_product(factors, serre_projective(r), len(tree.edges))


def serre_m02_strata(r: int) -> QPoly:
    """Serre polynomial of ``Mbar_{0,2}(P^r, 2)`` as the sum over its ten strata."""
    total = QPoly()
    for s in STRATA:
        total = total + serre_stratum(r, s)
    return total
