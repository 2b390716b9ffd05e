"""Components and anticomponents of a quasigraph on a vertex set.

Anticomponents are computed by a merge fixpoint: start from singletons and
join two classes whenever some hyperedge meets both of them while its value
is empty or lies inside one of the two. Each merge keeps the classes
anticonnected, and a stable family of classes cannot be spanned by any
larger anticonnected set, so the fixpoint is exactly the anticomponent
partition.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import DomainError
from .hypergraph import Hypergraph, Partition
from .quasigraph import Quasigraph


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def groups(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def components_on(pi: Quasigraph, X: Iterable) -> Partition:
    X = frozenset(X)
    uf = _UnionFind(X)
    for pair in pi.pairs.values():
        if pair <= X:
            a, b = pair
            uf.union(a, b)
    return Partition(uf.groups())


def anticomponents_on(pi: Quasigraph, X: Iterable, host: Hypergraph | None = None) -> Partition:
    """Maximal subsets of ``X`` on which ``pi`` is anticonnected (in ``host``).

    ``host`` defaults to the quasigraph's own hypergraph; pass ``H - e`` to
    ask about anticonnectivity after deleting a hyperedge.
    """
    X = frozenset(X)
    host = pi.host if host is None else host
    uf = _UnionFind(X)
    relevant = []
    for h in host.edges:
        inside = [v for v in h.sorted_vertices() if v in X]
        if len(inside) < 2:
            continue
        pair = pi.pairs.get(h.id)
        if pair is not None and not pair <= X:
            # a value leaving X never sits inside a class of a partition of X
            continue
        relevant.append((inside, pair))
    changed = True
    while changed:
        changed = False
        for inside, pair in relevant:
            if pair is None:
                for v in inside[1:]:
                    changed |= uf.union(inside[0], v)
            else:
                a, b = pair
                if uf.find(a) == uf.find(b):
                    for v in inside:
                        changed |= uf.union(a, v)
    return Partition(uf.groups())


def is_connected_on(pi: Quasigraph, X: Iterable) -> bool:
    return len(components_on(pi, X)) <= 1


def is_anticonnected_on(pi: Quasigraph, X: Iterable, host: Hypergraph | None = None) -> bool:
    return len(anticomponents_on(pi, X, host)) <= 1


def is_solid(pi: Quasigraph, P: Partition) -> bool:
    return all(is_connected_on(pi, X) and is_anticonnected_on(pi, X) for X in P.classes)


def _check_bridge_pre(pi, X, eid):
    X = frozenset(X)
    e = pi.host.edge(eid)
    if len(e.vertices & X) != 2:
        raise DomainError(f"hyperedge {eid} does not meet X in exactly two vertices")
    if not (is_connected_on(pi, X) and is_anticonnected_on(pi, X)):
        raise DomainError("quasigraph is not both connected and anticonnected on X")
    return X


def _bridge(pi, X, eid) -> bool:
    pair = pi.pairs.get(eid)
    return pair is not None and pair <= X and not is_connected_on(pi.without(eid), X)


def _antibridge(pi, X, eid) -> bool:
    return eid not in pi.pairs and not is_anticonnected_on(pi, X, pi.host.without(eid))


def is_x_bridge(pi: Quasigraph, X: Iterable, eid) -> bool:
    X = _check_bridge_pre(pi, X, eid)
    return _bridge(pi, X, eid)


def is_x_antibridge(pi: Quasigraph, X: Iterable, eid) -> bool:
    X = _check_bridge_pre(pi, X, eid)
    return _antibridge(pi, X, eid)


class Role(Enum):
    REDUNDANT = "redundant"
    WEAKLY_REDUNDANT = "weakly-redundant"
    BRIDGE = "bridge"
    ANTIBRIDGE = "antibridge"
    NONE = "none"


@dataclass(frozen=True)
class EdgeRole:
    kind: Role
    cls: frozenset | None = None

    @property
    def weakly_redundant(self) -> bool:
        return self.kind in (Role.REDUNDANT, Role.WEAKLY_REDUNDANT)

    @property
    def redundant(self) -> bool:
        return self.kind is Role.REDUNDANT


def redundancy_class(pi: Quasigraph, R: Partition, eid, check: bool = True) -> EdgeRole:
    """Classify a hyperedge relative to a solid partition ``R``.

    ``NONE`` is returned for hyperedges that do not cross ``R``.
    """
    if check and not is_solid(pi, R):
        raise DomainError("partition is not solid for this quasigraph")
    e = pi.host.edge(eid)
    if len({R.class_index(v) for v in e.vertices}) < 2:
        return EdgeRole(Role.NONE)
    for X in R.classes:
        if len(e.vertices & X) != 2:
            continue
        if eid in pi.pairs:
            if _bridge(pi, X, eid):
                return EdgeRole(Role.BRIDGE, X)
        elif _antibridge(pi, X, eid):
            return EdgeRole(Role.ANTIBRIDGE, X)
    return EdgeRole(Role.WEAKLY_REDUNDANT if eid in pi.pairs else Role.REDUNDANT)
