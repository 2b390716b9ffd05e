"""Vertices, hyperedges, 3-hypergraphs, partitions and quotients.

Vertices of an input hypergraph are the integers ``0..n-1``; their natural
order is the fixed linear order used to rank hyperedges. Quotient
hypergraphs use the classes of a partition (frozensets) as vertices and keep
the id of the source hyperedge on every quotient edge, so parallel quotient
edges with equal class sets are distinct objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DomainError


def vertex_key(v):
    """Sort key that works for plain vertices and for partition classes."""
    if isinstance(v, frozenset):
        return (1, tuple(sorted(v)))
    return (0, v)


@dataclass(frozen=True)
class Edge:
    id: int
    vertices: frozenset
    _sorted: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.vertices) not in (2, 3):
            raise DomainError(f"hyperedge {self.id} has size {len(self.vertices)}")
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "_sorted", tuple(sorted(self.vertices, key=vertex_key)))

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sorted_vertices(self) -> tuple:
        return self._sorted

    def __repr__(self):
        return f"Edge({self.id}, {list(self.sorted_vertices())})"


def edge_key(e: Edge) -> tuple:
    """Key of the hyperedge order: 3-edges below 2-edges, each block lexicographic."""
    return (0 if e.size == 3 else 1, tuple(sorted(e.vertices)))


def edge_order_compare(e: Edge, f: Edge) -> int:
    ke, kf = edge_key(e), edge_key(f)
    return (ke > kf) - (ke < kf)


class Hypergraph:
    """A hypergraph whose edges have size 2 or 3, with labelled edges.

    ``names`` optionally maps vertex ids to display labels; it does not take
    part in equality.
    """

    def __init__(self, vertices: Iterable, edges: Iterable[Edge], names: Sequence[str] | None = None):
        self.vertices = tuple(sorted(set(vertices), key=vertex_key))
        self.edges = tuple(edges)
        self.names = tuple(names) if names is not None else None
        self._by_id = {e.id: e for e in self.edges}
        if len(self._by_id) != len(self.edges):
            raise DomainError("duplicate hyperedge id")
        vs = set(self.vertices)
        for e in self.edges:
            if not e.vertices <= vs:
                raise DomainError(f"hyperedge {e.id} leaves the vertex set")

    @classmethod
    def from_lists(cls, n: int, edge_lists: Iterable[Iterable[int]], names=None) -> "Hypergraph":
        edges = [Edge(i, frozenset(vs)) for i, vs in enumerate(edge_lists)]
        return cls(range(n), edges, names)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    def edge(self, eid) -> Edge:
        return self._by_id[eid]

    def has_edge(self, eid) -> bool:
        return eid in self._by_id

    def edge_ids(self) -> list:
        return [e.id for e in self.edges]

    def without(self, *eids) -> "Hypergraph":
        drop = set(eids)
        return type(self)._rebuild(self, [e for e in self.edges if e.id not in drop])

    def restrict(self, eids) -> "Hypergraph":
        keep = set(eids)
        return type(self)._rebuild(self, [e for e in self.edges if e.id in keep])

    def _rebuild(self, edges):
        return Hypergraph(self.vertices, edges, self.names)

    def incident(self, v) -> list[Edge]:
        return [e for e in self.edges if v in e.vertices]

    def next_edge_id(self) -> int:
        return max((e.id for e in self.edges), default=-1) + 1

    def name(self, v) -> str:
        if self.names is not None and isinstance(v, int):
            return self.names[v]
        return str(v)

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={len(self.vertices)}, edges={list(self.edges)})"


def _canonical_classes(classes) -> tuple:
    return tuple(sorted((frozenset(c) for c in classes), key=lambda c: sorted(c)))


class Partition:
    """A partition of a finite ground set of vertices into nonempty classes."""

    __slots__ = ("classes", "ground", "_index", "_hash")

    def __init__(self, classes: Iterable[Iterable]):
        cls = _canonical_classes(classes)
        index = {}
        for k, c in enumerate(cls):
            if not c:
                raise DomainError("empty class in partition")
            for v in c:
                if v in index:
                    raise DomainError(f"vertex {v} lies in two classes")
                index[v] = k
        self.classes = cls
        self.ground = frozenset(index)
        self._index = index
        self._hash = None

    @classmethod
    def trivial(cls, ground: Iterable) -> "Partition":
        g = frozenset(ground)
        return cls([g] if g else [])

    @classmethod
    def singletons(cls, ground: Iterable) -> "Partition":
        return cls([[v] for v in ground])

    def class_of(self, v) -> frozenset:
        return self.classes[self._index[v]]

    def class_index(self, v) -> int:
        return self._index[v]

    def same_class(self, u, v) -> bool:
        return self._index[u] == self._index[v]

    def is_nontrivial(self) -> bool:
        return len(self.classes) > 1

    def refines(self, other: "Partition") -> bool:
        if self.ground != other.ground:
            return False
        return all(any(c <= d for d in other.classes) for c in self.classes)

    def encoding(self) -> tuple:
        return tuple(tuple(sorted(c)) for c in self.classes)

    def to_lists(self) -> list:
        return [list(c) for c in self.encoding()]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.classes == other.classes

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.classes)
        return self._hash

    def __repr__(self):
        return f"Partition({self.to_lists()})"


def induced_partition(P: Partition, X: Iterable) -> Partition:
    X = frozenset(X)
    if not X <= P.ground:
        raise DomainError("X is not a subset of the partition's ground set")
    return Partition(c & X for c in P.classes if c & X)


def edge_quotient(e: Edge, P: Partition) -> tuple[frozenset, bool]:
    """Classes of ``P`` met by ``e`` and whether ``e`` is ``P``-crossing."""
    if not e.vertices <= P.ground:
        raise DomainError(f"hyperedge {e.id} is not inside the partition ground")
    classes = frozenset(P.class_of(v) for v in e.vertices)
    return classes, len(classes) >= 2


def pair_quotient(pair: Iterable, P: Partition) -> frozenset:
    return frozenset(P.class_of(v) for v in pair)


class QuotientHypergraph(Hypergraph):
    """``H/P``: one labelled edge per ``P``-crossing edge of ``H``."""

    def __init__(self, vertices, edges, partition: Partition, source: Hypergraph):
        super().__init__(vertices, edges)
        self.partition = partition
        self.source = source

    def _rebuild(self, edges):
        return QuotientHypergraph(self.vertices, edges, self.partition, self.source)


def quotient_hypergraph(H: Hypergraph, P: Partition) -> QuotientHypergraph:
    if P.ground != frozenset(H.vertices):
        raise DomainError("partition does not cover the vertex set")
    edges = []
    for e in H.edges:
        classes, crossing = edge_quotient(e, P)
        if crossing:
            edges.append(Edge(e.id, classes))
    return QuotientHypergraph(P.classes, edges, P, H)


def partition_key(P: Partition) -> tuple:
    """Total order on partitions of one ground set; strict refinement is strictly smaller."""
    return (-len(P.classes), P.encoding())


def partition_compare_total(P: Partition, Q: Partition) -> int:
    if P.ground != Q.ground:
        raise DomainError("partitions of different ground sets")
    kp, kq = partition_key(P), partition_key(Q)
    return (kp > kq) - (kp < kq)
