from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from instances import AB3, E1, M4, T3, a, b, c, d
from skeletal.errors import DomainError
from skeletal.hypergraph import (
    Edge,
    Hypergraph,
    Partition,
    edge_order_compare,
    edge_quotient,
    induced_partition,
    partition_compare_total,
    quotient_hypergraph,
)
from skeletal.oracle import set_partitions


def P(*classes):
    return Partition(classes)


def test_induced_partition():
    assert induced_partition(P([a, c], [b]), [a, b]) == P([a], [b])
    V = [a, b, c]
    assert induced_partition(P(V), V) == P(V)
    assert induced_partition(Partition.singletons(V), [a, c]) == P([a], [c])


def test_induced_partition_outside_ground():
    with pytest.raises(DomainError):
        induced_partition(P([a, b]), [a, c])


def test_edge_quotient():
    H = T3()
    classes, crossing = edge_quotient(H.edge(1), P([a, c], [b]))
    assert classes == {frozenset([a, c])} and not crossing
    classes, crossing = edge_quotient(H.edge(0), P([a, c], [b]))
    assert classes == {frozenset([a, c]), frozenset([b])} and crossing
    classes, crossing = edge_quotient(E1().edge(0), Partition.singletons([a, b, c]))
    assert len(classes) == 3 and crossing


def test_quotient_of_m4():
    AB, C, D = frozenset([a, b]), frozenset([c]), frozenset([d])
    Q = quotient_hypergraph(M4(), P([a, b], [c], [d]))
    assert {e.id: e.vertices for e in Q.edges} == {
        0: {AB, C}, 1: {AB, D}, 2: {AB, C, D}, 3: {C, D},
    }


def test_quotient_small_cases():
    assert quotient_hypergraph(T3(), P([a, b, c])).edges == ()
    Q = quotient_hypergraph(AB3().host, P([a, b], [c]))
    assert [e.id for e in Q.edges] == [1]


def test_edge_order():
    abc, ab, ac, abd = (Edge(k, frozenset(vs)) for k, vs in enumerate([[a, b, c], [a, b], [a, c], [a, b, d]]))
    assert edge_order_compare(abc, ab) < 0
    assert edge_order_compare(ab, ac) < 0
    assert edge_order_compare(abc, abd) < 0
    assert edge_order_compare(ab, Edge(9, frozenset([a, b]))) == 0  # ids play no part


def test_partition_order_examples():
    V = [a, b, c]
    assert partition_compare_total(Partition.singletons(V), P([a, b], [c])) < 0
    assert partition_compare_total(P(V), P(V)) == 0
    assert partition_compare_total(P([a, b], [c]), P([a, c], [b])) < 0
    with pytest.raises(DomainError):
        partition_compare_total(P([a, b]), P([a, c]))


def test_partition_order_exhaustive_small():
    # strict refinement is strictly smaller, and the order is total and transitive
    for n in range(1, 5):
        parts = [Partition(bl) for bl in set_partitions(range(n))]
        for p in parts:
            for q in parts:
                cpq = partition_compare_total(p, q)
                assert cpq == -partition_compare_total(q, p)
                assert (cpq == 0) == (p == q)
                if p != q and p.refines(q):
                    assert cpq < 0
        keyed = sorted(parts, key=lambda x: (-len(x), x.encoding()))
        for x, y in zip(keyed, keyed[1:]):
            assert partition_compare_total(x, y) < 0


def test_edge_rejects_bad_sizes():
    with pytest.raises(DomainError):
        Edge(0, frozenset([a]))
    with pytest.raises(DomainError):
        Edge(0, frozenset([a, b, c, d]))


def test_hypergraph_rejects_duplicate_ids_and_strays():
    with pytest.raises(DomainError):
        Hypergraph(range(3), [Edge(0, frozenset([0, 1])), Edge(0, frozenset([1, 2]))])
    with pytest.raises(DomainError):
        Hypergraph(range(2), [Edge(0, frozenset([0, 5]))])


def test_partition_validation():
    with pytest.raises(DomainError):
        Partition([[a, b], [b, c]])


@st.composite
def hypergraph_and_partition(draw):
    n = draw(st.integers(2, 6))
    edges = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=2, max_size=3), max_size=7))
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    H = Hypergraph.from_lists(n, edges)
    blocks = {}
    for v, k in enumerate(labels):
        blocks.setdefault(k, []).append(v)
    return H, Partition(blocks.values())


@given(hypergraph_and_partition())
def test_quotient_bijects_crossing_edges(case):
    H, Pt = case
    Q = quotient_hypergraph(H, Pt)
    crossing = [e.id for e in H.edges if edge_quotient(e, Pt)[1]]
    assert [e.id for e in Q.edges] == crossing
    for e in Q.edges:
        assert 2 <= e.size <= H.edge(e.id).size


def test_edge_order_total_over_universe():
    # every hyperedge on 5 vertices gets a distinct rank
    from itertools import combinations
    edges = [Edge(k, frozenset(s)) for k, s in enumerate(
        list(combinations(range(5), 2)) + list(combinations(range(5), 3)))]
    for e, f in permutations(edges, 2):
        assert edge_order_compare(e, f) != 0
