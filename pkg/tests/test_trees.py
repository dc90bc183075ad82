import itertools

import pytest
from hypothesis import given, settings, strategies as st

from stablemaps.errors import BoundExceeded
from stablemaps.trees import StableTree, enumerate_stable_trees, group_by_type


def prufer_trees(nv):
    """Every labeled tree on ``nv`` vertices, as a sorted edge tuple."""
    if nv == 1:
        yield ()
        return
    if nv == 2:
        yield ((0, 1),)
        return
    for seq in itertools.product(range(nv), repeat=nv - 2):
        degree = [1] * nv
        for v in seq:
            degree[v] += 1
        edges = []
        for v in seq:
            leaf = min(u for u in range(nv) if degree[u] == 1)
            edges.append(tuple(sorted((leaf, v))))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(nv) if degree[x] == 1]
        edges.append((u, w))
        yield tuple(sorted(edges))


def image(degrees, edges, marks, perm, labeled=True):
    nv = len(degrees)
    degs = [None] * nv
    for v in range(nv):
        degs[perm[v]] = degrees[v]
    es = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
    if labeled:
        ms = tuple(perm[v] for v in marks)
    else:
        ms = tuple(sorted(perm[v] for v in marks))
    return tuple(degs), es, ms


def brute_force(n, d, labeled=True):
    """Isomorphism classes and automorphism counts by exhaustive search."""
    classes = {}
    for nv in range(1, max(1, n + 2 * d - 2) + 1):
        perms = list(itertools.permutations(range(nv)))
        for edges in prufer_trees(nv):
            for degs in itertools.product(range(d + 1), repeat=nv):
                if sum(degs) != d:
                    continue
                for marks in itertools.product(range(nv), repeat=n):
                    t = StableTree(degs, edges, marks)
                    if not t.is_stable():
                        continue
                    key = min(image(degs, edges, marks, p, labeled) for p in perms)
                    if key not in classes:
                        base = image(degs, edges, marks, range(nv), labeled)
                        aut = sum(image(degs, edges, marks, p, labeled) == base for p in perms)
                        classes[key] = aut
    return classes


SMALL = [(0, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (0, 2), (1, 2), (2, 2),
         (0, 3), (3, 0), (4, 0)]


@pytest.mark.parametrize("n,d", SMALL)
def test_enumeration_matches_brute_force(n, d):
    trees = enumerate_stable_trees(n, d)
    oracle = brute_force(n, d)
    assert len(trees) == len(oracle)
    assert sorted(t.automorphism_order() for t in trees) == sorted(oracle.values())
    assert len(group_by_type(trees)) == len(brute_force(n, d, labeled=False))


def test_two_points_degree_two():
    trees = enumerate_stable_trees(2, 2)
    assert len(trees) == 10
    assert len(group_by_type(trees)) == 9
    assert sorted(t.automorphism_group for t in trees).count("S2") == 2
    assert all(t.total_degree == 2 and t.n_marks == 2 for t in trees)


def test_small_counts():
    assert len(enumerate_stable_trees(3, 0)) == 1
    assert len(enumerate_stable_trees(0, 1)) == 1
    assert len(enumerate_stable_trees(4, 0)) == 4
    assert enumerate_stable_trees(0, 0) == []
    assert enumerate_stable_trees(2, 0) == []


def test_bounds():
    with pytest.raises(BoundExceeded):
        enumerate_stable_trees(5, 0)
    with pytest.raises(BoundExceeded):
        enumerate_stable_trees(0, 4)
    with pytest.raises(ValueError):
        enumerate_stable_trees(-1, 1)


def test_every_enumerated_tree_is_valid():
    for n, d in SMALL:
        for t in enumerate_stable_trees(n, d):
            t.validate()


def test_validate_rejects():
    with pytest.raises(ValueError):
        StableTree((0,), (), (0, 0)).validate()
    with pytest.raises(ValueError):
        StableTree((1, 1), (), ()).validate()
    with pytest.raises(ValueError):
        StableTree((1, 1, 1), ((0, 1), (1, 0)), ()).validate()
    with pytest.raises(ValueError):
        StableTree((1,), (), (3,)).validate()
    with pytest.raises(ValueError):
        StableTree((-1, 3), ((0, 1),), ()).validate()


def test_automorphisms_of_symmetric_tree():
    # contracted vertex holding both marks with two lines attached
    t = StableTree((0, 1, 1), ((0, 1), (0, 2)), (0, 0))
    assert t.automorphism_order() == 2
    assert t.automorphism_group == "S2"
    # a star of three lines has S3
    star = StableTree((0, 1, 1, 1), ((0, 1), (0, 2), (0, 3)), ())
    assert star.automorphism_order() == 6
    assert star.automorphism_group == "order 6"


def test_two_centers():
    # path of two degree-one vertices: swapping them is an automorphism
    t = StableTree((1, 1), ((0, 1),), ())
    assert t.centers() == (0, 1)
    assert t.automorphism_order() == 2
    assert StableTree((1, 1), ((0, 1),), (0,)).automorphism_order() == 1


def relabel(t, perm):
    degs, edges, marks = image(t.degrees, t.edges, t.marks, perm)
    return StableTree(degs, edges, marks)


@settings(max_examples=60)
@given(st.data())
def test_canonical_form_is_invariant(data):
    n, d = data.draw(st.sampled_from([(2, 2), (4, 1), (3, 1), (1, 3)]))
    trees = enumerate_stable_trees(n, d)
    t = data.draw(st.sampled_from(trees))
    perm = data.draw(st.permutations(range(t.n_vertices)))
    u = relabel(t, perm)
    assert u.canonical_form() == t.canonical_form()
    assert u.automorphism_order() == t.automorphism_order()
    assert u.canonical_form(labeled=False) == t.canonical_form(labeled=False)


def test_to_dict():
    t = StableTree((0, 1, 1), ((0, 1), (0, 2)), (0, 0))
    assert t.to_dict() == {
        "degrees": [0, 1, 1],
        "edges": [[0, 1], [0, 2]],
        "marks": {"1": 0, "2": 0},
        "automorphism_order": 2,
    }
    assert "marks 1,2" in t.describe()
