"""Cross-check harness behind ``stablemaps verify``.

Each check returns a :class:`CheckResult`; a check that raises is reported
as failed with the exception text rather than aborting the run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import closedform, moduli
from .basis import basis_dims, verify_basis
from .equivrep import EquivPoly2, equivariant_square, rank
from .formats import load_fixture
from .qalgebra import QPoly, exact_div, lambda_k, q_binomial, q_int, sigma_k
from .trees import enumerate_stable_trees, group_by_type

__all__ = ["CheckResult", "run_checks", "FIXTURE_R_MAX"]

FIXTURE_R_MAX = 7


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}" + (
            f": {self.detail}" if self.detail else ""
        )

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def _first_failure(items, pred) -> str | None:
    for x in items:
        if not pred(x):
            return f"fails at {x}"
    return None


def _strata_vs_closed(r_max: int):
    return _first_failure(
        range(1, r_max + 1),
        lambda r: moduli.serre_m02_strata(r) == closedform.serre_m02_closed(r),
    )


def _tables(which: int, fns):
    def check(r_max: int):
        fixture = load_fixture(which)
        for r in range(1, min(r_max, FIXTURE_R_MAX) + 1):
            chi, poly = fixture[r]
            for fn in fns:
                p = fn(r)
                if p != poly or p(1) != chi:
                    return f"{fn.__name__}({r}) = {p}, table has {poly} (chi {chi})"
        return None
    return check


def _euler(r_max: int):
    return _first_failure(
        range(1, r_max + 1),
        lambda r: closedform.betti_table(r).euler == closedform.euler_m02(r),
    )


def _branches(r_max: int):
    # betti() raises BranchMismatch on disagreement.
    for r in range(1, r_max + 1):
        closedform.betti_table(r)
    return None


def _stable(r_max: int):
    for r in range(1, r_max + 1):
        for j in range(r):
            if closedform.betti(r, j) != closedform.betti_stable(j):
                return f"r={r}, j={j}"
        if closedform.betti(r, r) != (5 * r * r + 3 * r) // 2:
            return f"beta_r at r={r}"
    return None


def _basis(r_max: int):
    for r in range(1, r_max + 1):
        rep = verify_basis(r)
        if not rep.ok:
            return f"r={r}: codegrees {list(rep.mismatches)} disagree"
    if basis_dims(1) != [1, 4, 6, 4, 1]:
        return f"r=1 catalog counts {basis_dims(1)}"
    return None


def _equivariant(_r_max: int):
    q = QPoly.monomial
    want = {
        "P1^4": EquivPoly2(QPoly((1, 3, 4, 3, 1)), QPoly((0, 1, 2, 1))),
        "F(P1,4)": EquivPoly2(QPoly((0, 1, -1, -1, 1)), QPoly((0, 1, 0, -1))),
        "M04": EquivPoly2(q(1) - 1, QPoly((-1,))),
    }
    got = {
        "P1^4": moduli.equivariant_p1_4(),
        "F(P1,4)": moduli.equivariant_f_p1_4(),
        "M04": moduli.equivariant_m04(),
    }
    for key in want:
        if got[key] != want[key]:
            return f"{key} = {got[key]}"
    if moduli.equivariant_f_p1_4_lattice() != want["F(P1,4)"]:
        return "partition-lattice oracle disagrees"
    if rank(got["M04"]) != q(1) - 2:
        return "rank of M04"
    if rank(got["F(P1,4)"]) != moduli.serre_config_p1(4):
        return "rank of F(P1,4)"
    return None


def _equivariant_strata(r_max: int):
    for r in range(1, r_max + 1):
        for s in moduli.STRATA:
            if s.automorphisms == "S2":
                # Raises ConsistencyError if the rank disagrees with the cover.
                moduli.equivariant_serre_stratum(r, s)
        pr, pr1 = q_int(r), q_int(r + 1)
        s78 = moduli.serre_stratum(r, moduli.stratum(7)) + moduli.serre_stratum(r, moduli.stratum(8))
        if s78 != pr1 * pr * QPoly.monomial(r):
            return f"strata 7+8 at r={r}"
    return None


def _trees(_r_max: int):
    t22 = enumerate_stable_trees(2, 2)
    if len(t22) != 10 or len(group_by_type(t22)) != 9:
        return f"(2,2): {len(t22)} labeled, {len(group_by_type(t22))} types"
    if sum(t.automorphism_order() == 2 for t in t22) != 2:
        return "(2,2): S2 count"
    if len(enumerate_stable_trees(3, 0)) != 1 or len(enumerate_stable_trees(0, 1)) != 1:
        return "(3,0) or (0,1)"
    forms = {t.canonical_form() for t in t22}
    if {s.tree.canonical_form() for s in moduli.STRATA} != forms:
        return "stratum recipes do not match the enumeration"
    return None


def _lambda_ring(_r_max: int):
    for n in range(1, 31):
        if sigma_k(q_int(n), 2) != q_binomial(n + 1, 2):
            return f"sigma_2([{n}])"
        if lambda_k(q_int(n), 2) != q_binomial(n, 2).shift(1):
            return f"lambda_2([{n}])"
    rng = random.Random(0)
    for _ in range(200):
        p = QPoly([rng.randint(0, 5) for _ in range(rng.randint(0, 6))])
        if rank(equivariant_square(p)) != p * p:
            return f"rank of equivariant square of {p}"
        a = QPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])
        b = QPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 4))] + [rng.choice((1, -1))])
        if exact_div(a * b, b) != a:
            return f"exact_div round trip {a} / {b}"
    return None


def _palindromic(r_max: int):
    return _first_failure(
        range(1, max(r_max, 30) + 1),
        lambda r: closedform.serre_m02_closed(r).is_palindromic()
        and closedform.serre_m01_closed(r).is_palindromic(),
    )


CHECKS: tuple[tuple[str, Callable[[int], str | None]], ...] = (
    ("strata = closed form", _strata_vs_closed),
    ("two-point table fixture", _tables(2, (closedform.serre_m02_closed, moduli.serre_m02_strata))),
    ("one-point table fixture", _tables(1, (closedform.serre_m01_closed,))),
    ("euler characteristic", _euler),
    ("piecewise branches", _branches),
    ("stable betti numbers", _stable),
    ("basis = betti", _basis),
    ("equivariant milestones", _equivariant),
    ("equivariant strata ranks", _equivariant_strata),
    ("tree enumeration", _trees),
    ("lambda-ring identities", _lambda_ring),
    ("palindromic closed forms", _palindromic),
)


def run_checks(r_max: int) -> list[CheckResult]:
    if r_max < 1:
        raise ValueError("r_max must be >= 1")
    out = []
    for name, fn in CHECKS:
        try:
            err = fn(r_max)
        except Exception as exc:  # reported, not raised
            err = f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, err is None, err or ""))
    return out
