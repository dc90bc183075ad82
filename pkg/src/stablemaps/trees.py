"""Stable (n, d)-trees: dual graphs of genus-zero stable maps.

A tree has one vertex per irreducible component of the domain curve.  Each
vertex carries the degree of the map on that component and the set of marked
points lying on it; edges are nodes.  A vertex of degree zero must carry at
least three special points (marks plus incident edges).

Isomorphism classes are found with canonical forms: the tree is rooted at
its center (or split along its central edge when there are two centers) and
encoded recursively with sorted child codes.  The same recursion yields the
order of the automorphism group.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import factorial

from .errors import BoundExceeded

__all__ = [
    "StableTree",
    "enumerate_stable_trees",
    "group_by_type",
    "MAX_MARKS",
    "MAX_DEGREE",
]

MAX_MARKS = 4
MAX_DEGREE = 3


@dataclass(frozen=True)
class StableTree:
    """A decorated tree.

    ``marks[i]`` is the vertex carrying marked point ``i + 1``.
    """

    degrees: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(self.degrees))
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "marks", tuple(self.marks))

    @property
    def n_vertices(self) -> int:
        return len(self.degrees)

    @property
    def n_marks(self) -> int:
        return len(self.marks)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.degrees]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(x) for x in adj)

    def marks_at(self, v: int) -> tuple[int, ...]:
        """Labels (1-based) of the marked points on vertex ``v``."""
        return tuple(i + 1 for i, w in enumerate(self.marks) if w == v)

    def valence(self, v: int) -> int:
        return len(self.adjacency[v])

    def special_points(self, v: int) -> int:
        return self.valence(v) + len(self.marks_at(v))

    def is_tree(self) -> bool:
        nv = self.n_vertices
        if nv == 0 or len(self.edges) != nv - 1:
            return False
        if any(not (0 <= a < nv and 0 <= b < nv) or a == b for a, b in self.edges):
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == nv

    def is_stable(self) -> bool:
        return all(
            deg > 0 or self.special_points(v) >= 3 for v, deg in enumerate(self.degrees)
        )

    def validate(self) -> None:
        if any(d < 0 for d in self.degrees):
            raise ValueError("vertex degrees must be nonnegative")
        if not self.is_tree():
            raise ValueError("edges do not form a tree")
        if any(not 0 <= v < self.n_vertices for v in self.marks):
            raise ValueError("mark assigned to a nonexistent vertex")
        if not self.is_stable():
            raise ValueError("a degree-zero vertex has fewer than three special points")

    # -- canonical forms ----------------------------------------------
    def _label(self, v: int, labeled: bool):
        marks = self.marks_at(v)
        return (self.degrees[v], marks if labeled else len(marks))

    def _rooted(self, v: int, parent: int, labeled: bool):
        """(code, automorphism order) of the subtree hanging from ``v``."""
        kids = [self._rooted(w, v, labeled) for w in self.adjacency[v] if w != parent]
        kids.sort(key=lambda t: t[0])
        aut = 1
        for _, a in kids:
            aut *= a
        for mult in Counter(code for code, _ in kids).values():
            aut *= factorial(mult)
        return (self._label(v, labeled), tuple(code for code, _ in kids)), aut

    def centers(self) -> tuple[int, ...]:
        remaining = set(range(self.n_vertices))
        deg = {v: self.valence(v) for v in remaining}
        leaves = [v for v in remaining if deg[v] <= 1]
        while len(remaining) > 2:
            nxt = []
            for leaf in leaves:
                remaining.discard(leaf)
                for w in self.adjacency[leaf]:
                    if w in remaining:
                        deg[w] -= 1
                        if deg[w] == 1:
                            nxt.append(w)
            leaves = nxt
        return tuple(sorted(remaining))

    def _canon(self, labeled: bool):
        cs = self.centers()
        if len(cs) == 1:
            code, aut = self._rooted(cs[0], -1, labeled)
            return ("c", code), aut
        a, b = cs
        (ca, aa), (cb, ab) = self._rooted(a, b, labeled), self._rooted(b, a, labeled)
        aut = aa * ab * (2 if ca == cb else 1)
        return ("e",) + tuple(sorted((ca, cb))), aut

    def canonical_form(self, labeled: bool = True):
        """Hashable isomorphism invariant.

        With ``labeled=False`` marked points are treated as indistinguishable,
        so the form identifies the degeneration *type* rather than the stratum.
        """
        return self._canon(labeled)[0]

    def automorphism_order(self, labeled: bool = True) -> int:
        return self._canon(labeled)[1]

    @property
    def automorphism_group(self) -> str:
        order = self.automorphism_order()
        return {1: "trivial", 2: "S2"}.get(order, f"order {order}")

    def describe(self) -> str:
        parts = []
        for v, deg in enumerate(self.degrees):
            m = self.marks_at(v)
            parts.append(f"v{v}(d={deg}" + (f"; marks {','.join(map(str, m))})" if m else ")"))
        es = " ".join(f"{a}-{b}" for a, b in self.edges)
        return " ".join(parts) + (f" | edges {es}" if es else "")

    def to_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "edges": [list(e) for e in self.edges],
            "marks": {str(i + 1): v for i, v in enumerate(self.marks)},
            "automorphism_order": self.automorphism_order(),
        }


def _unlabeled_trees(nv: int) -> list[tuple[tuple[int, int], ...]]:
    """One edge list per isomorphism class of trees on ``nv`` vertices."""
    if nv == 1:
        return [()]
    out = {}
    for edges in _unlabeled_trees(nv - 1):
        for v in range(nv - 1):
            new = edges + ((v, nv - 1),)
            t = StableTree((0,) * nv, new)
            out.setdefault(t.canonical_form(labeled=False), new)
    return list(out.values())


def _degree_vectors(nv: int, d: int):
    """All ways of writing ``d`` as an ordered sum of ``nv`` nonnegative parts."""
    for bars in itertools.combinations(range(d + nv - 1), nv - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(d + nv - 1 - prev - 1)
        yield tuple(parts)


def enumerate_stable_trees(n: int, d: int) -> list[StableTree]:
    """All stable (n, d)-trees up to isomorphism, marked points distinguished.

    The result is sorted deterministically.  Use :func:`group_by_type` to
    collapse classes that differ only by a relabelling of the marked points.
    """
    if n < 0 or d < 0:
        raise ValueError("n and d must be nonnegative")
    if n > MAX_MARKS or d > MAX_DEGREE:
        raise BoundExceeded(f"enumeration supported for n <= {MAX_MARKS}, d <= {MAX_DEGREE}")
    max_vertices = max(1, n + 2 * d - 2)
    found: dict = {}
    for nv in range(1, max_vertices + 1):
        for edges in _unlabeled_trees(nv):
            shape = StableTree((0,) * nv, edges)
            valence = [shape.valence(v) for v in range(nv)]
            for degs in _degree_vectors(nv, d):
                need = [max(0, 3 - valence[v]) if degs[v] == 0 else 0 for v in range(nv)]
                if sum(need) > n:
                    continue
                for marks in itertools.product(range(nv), repeat=n):
                    counts = Counter(marks)
                    if any(counts[v] < need[v] for v in range(nv)):
                        continue
                    t = StableTree(degs, edges, marks)
                    found.setdefault(t.canonical_form(), t)
    return sorted(found.values(), key=lambda t: repr(t.canonical_form()))


def group_by_type(trees: list[StableTree]) -> dict:
    """Map each unlabeled-mark canonical form to the labeled classes of that type."""
    groups: dict = {}
    for t in trees:
        groups.setdefault(t.canonical_form(labeled=False), []).append(t)
    return groups
