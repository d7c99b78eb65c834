import itertools
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverfpd.bricks import (
    CompatibilityGraph,
    Completeness,
    compatibility_graph,
    enumerate_bricks_oracle,
    enumerate_bricks_thin,
    hom_matrix,
    maximal_brick_sets,
)
from quiverfpd.homology import annihilated_by_relations, ext1_dim, hom_dim, is_brick
from quiverfpd.quiver import FamilySpec, generate_family, opposite, parse_quiver, strip_loops
from quiverfpd.roots import NotDynkinError

from conftest import families


def names(bricks):
    return [b.name for b in bricks]


def test_a3_thin():
    bricks = enumerate_bricks_thin(generate_family(FamilySpec.a(2, 0, 1)))
    assert names(bricks) == ["(1)", "(2)", "(3)", "(1/2)", "(2/3)"]
    assert bricks.completeness is Completeness.COMPLETE


def test_d4_thin():
    bricks = enumerate_bricks_thin(generate_family(FamilySpec.d(1, 1, 1, 1)))
    assert len(bricks) == 8
    assert set(names(bricks)) == {"(1)", "(2)", "(3)", "(4)", "(1/2)", "(2/3)", "(2/4)", "(2/3 4)"}


def test_e6_thin():
    bricks = enumerate_bricks_thin(generate_family(FamilySpec.e(0, 0, 0, 0, 0, 0)))
    expected = {f"({i})" for i in range(1, 7)} | {"(1/3)", "(3/4)", "(5/6)", "(4/2)", "(4/5)", "(4/2 5)"}
    assert set(names(bricks)) == expected


@pytest.mark.parametrize("n", [6, 7, 8])
def test_e_brick_count(n):
    assert len(enumerate_bricks_thin(generate_family(FamilySpec.e(*([1] * n))))) == 2 * n


def test_qnm_and_a3rev_lists():
    assert names(enumerate_bricks_thin(generate_family(FamilySpec.qnm(2, 1)))) == ["(1)", "(2)", "(1/2)", "(2/1)"]
    rev = enumerate_bricks_thin(generate_family(FamilySpec.a3_reversed(0, 1, 0)))
    assert names(rev) == ["(1)", "(2)", "(3)", "(1/2)", "(3/2)", "(1 3/2)"]


def test_thin_rejects_wild_base():
    spec = parse_quiver("vertices: 2\narrow x: 1 -> 2\narrow y: 1 -> 2\nrelations: rad2")
    with pytest.raises(NotDynkinError):
        enumerate_bricks_thin(spec)


def test_non_standard_orientation_is_lower_bound():
    # A4 with a sink in the middle: 1 -> 2 <- 3 -> 4
    spec = parse_quiver("vertices: 4\narrow a: 1 -> 2\narrow b: 3 -> 2\narrow c: 3 -> 4\nrelations: rad2")
    thin = enumerate_bricks_thin(spec)
    assert thin.completeness is Completeness.LOWER_BOUND
    oracle = enumerate_bricks_oracle(spec, 6, 2)
    assert oracle.completeness is Completeness.COMPLETE
    assert Counter(b.dim_vector for b in thin) == Counter(b.dim_vector for b in oracle)


def test_opposite_orientation_is_complete():
    spec = opposite(generate_family(FamilySpec.e(0, 1, 0, 0, 0, 0)))
    assert enumerate_bricks_thin(spec).completeness is Completeness.COMPLETE


@given(families())
def test_thin_bricks_are_bricks(f):
    spec = generate_family(f)
    for b in enumerate_bricks_thin(spec):
        assert is_brick(spec, b.rep)
        assert annihilated_by_relations(spec, b.rep)
        assert all(m.is_zero() for a, m in zip(spec.arrows, b.rep.maps) if a.is_loop)


@given(families())
def test_loop_independence(f):
    spec = generate_family(f)
    base, _ = strip_loops(spec)
    assert [b.dim_vector for b in enumerate_bricks_thin(spec)] == [b.dim_vector for b in enumerate_bricks_thin(base)]


def test_oracle_examples():
    a2 = generate_family(FamilySpec.a(0, 0))
    assert names(enumerate_bricks_oracle(a2, 4, 2)) == ["(1)", "(2)", "(1/2)"]
    q = generate_family(FamilySpec.qnm(1, 1))
    assert sorted(names(enumerate_bricks_oracle(q, 4, 2))) == ["(1)", "(1/2)", "(2)", "(2/1)"]
    d4 = generate_family(FamilySpec.d(0, 0, 0, 0))
    assert names(enumerate_bricks_oracle(d4, 1, 3)) == ["(1)", "(2)", "(3)", "(4)"]


def test_oracle_errors():
    a2 = generate_family(FamilySpec.a(0, 0))
    with pytest.raises(ValueError):
        enumerate_bricks_oracle(a2, 3, 5)
    with pytest.raises(ValueError):
        enumerate_bricks_oracle(a2, 0, 2)


def test_oracle_completeness_flag():
    d4 = generate_family(FamilySpec.d(0, 0, 0, 0))
    assert enumerate_bricks_oracle(d4, 4, 2).completeness is Completeness.LOWER_BOUND
    assert enumerate_bricks_oracle(d4, 5, 2).completeness is Completeness.COMPLETE


def _sorted(bricks):
    return sorted(bricks, key=lambda b: b.dim_vector)


@pytest.mark.parametrize(
    "f, q",
    [
        (FamilySpec.a(1, 0), 2),
        (FamilySpec.a(0, 2, 1), 3),
        (FamilySpec.a(0, 0, 0, 0), 2),
        (FamilySpec.d(0, 0, 0, 0), 2),
        (FamilySpec.qnm(1, 2), 3),
        (FamilySpec.a3_reversed(1, 0, 1), 2),
    ],
    ids=lambda x: x.label() if isinstance(x, FamilySpec) else f"F{x}",
)
def test_thin_oracle_agreement(f, q):
    spec = generate_family(f)
    thin = _sorted(enumerate_bricks_thin(spec))
    oracle = _sorted(enumerate_bricks_oracle(spec, spec.vertex_count + 2, q))
    assert [b.dim_vector for b in thin] == [b.dim_vector for b in oracle]
    assert hom_matrix(spec, thin) == hom_matrix(spec, oracle)
    ext = lambda bs: [[ext1_dim(spec, x.rep, y.rep) for y in bs] for x in bs]
    assert ext(thin) == ext(oracle)


def test_oracle_parallel_matches_serial(monkeypatch):
    spec = generate_family(FamilySpec.a(0, 0, 0))
    serial = enumerate_bricks_oracle(spec, 5, 2)
    monkeypatch.setenv("FPD_THREADS", "2")
    parallel = enumerate_bricks_oracle(spec, 5, 2)
    assert serial == parallel


def test_compatibility_qnm():
    spec = generate_family(FamilySpec.qnm(1, 1))
    g = compatibility_graph(spec, enumerate_bricks_thin(spec))
    s1, s2, m1, m2 = range(4)
    assert g.adjacent(s1, s2)
    assert not g.adjacent(m1, m2)
    assert not any(g.adjacent(s, m) for s in (s1, s2) for m in (m1, m2))
    assert maximal_brick_sets(g) == [[0, 1], [2], [3]]


def test_compatibility_a3():
    spec = generate_family(FamilySpec.a(0, 0, 0))
    bricks = enumerate_bricks_thin(spec)
    g = compatibility_graph(spec, bricks)
    assert all(g.adjacent(i, j) for i, j in itertools.combinations(range(3), 2))
    assert not g.adjacent(3, 4)
    assert hom_dim(spec, bricks[4].rep, bricks[3].rep) == 1


def test_a3rev_maximal_sets():
    spec = generate_family(FamilySpec.a3_reversed(0, 0, 0))
    bricks = enumerate_bricks_thin(spec)
    sets = maximal_brick_sets(compatibility_graph(spec, bricks))
    got = {frozenset(bricks[i].name for i in s) for s in sets}
    assert got == {
        frozenset({"(1 3/2)"}),
        frozenset({"(1)", "(2)", "(3)"}),
        frozenset({"(3/2)", "(1)"}),
        frozenset({"(1/2)", "(3/2)"}),
        frozenset({"(1/2)", "(3)"}),
    }


def _graph(n, edges):
    return CompatibilityGraph(tuple(range(n)), frozenset(frozenset(e) for e in edges), ())


def test_trivial_graphs():
    assert maximal_brick_sets(_graph(1, [])) == [[0]]
    assert maximal_brick_sets(_graph(4, [])) == [[0], [1], [2], [3]]
    assert maximal_brick_sets(_graph(0, [])) == []


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 10))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [p for p in pairs if draw(st.booleans())]
    return n, edges


@given(graphs())
def test_cliques_match_networkx(data):
    n, edges = data
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    expected = sorted(sorted(c) for c in nx.find_cliques(g))
    assert maximal_brick_sets(_graph(n, edges)) == expected


@given(families())
def test_clique_soundness(f):
    spec = generate_family(f)
    bricks = enumerate_bricks_thin(spec)
    g = compatibility_graph(spec, bricks)
    for s in maximal_brick_sets(g):
        for i, j in itertools.product(s, repeat=2):
            assert hom_dim(spec, bricks[i].rep, bricks[j].rep) == int(i == j)
