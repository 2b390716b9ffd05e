"""Quasigraphs: one 2-subset (or nothing) per hyperedge.

A quasigraph's pair graph is a multigraph: pairs carried by distinct
hyperedges are distinct edges even when they join the same two vertices, so
two hyperedges assigned the same pair already form a cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

from .errors import DomainError
from .hypergraph import Edge, Hypergraph, Partition, pair_quotient, quotient_hypergraph, vertex_key


class Quasigraph:
    __slots__ = ("host", "pairs", "_hash")

    def __init__(self, host: Hypergraph, pairs: Mapping | None = None):
        self.host = host
        clean = {}
        for eid, pair in (pairs or {}).items():
            if pair is None:
                continue
            pair = frozenset(pair)
            if not host.has_edge(eid):
                raise DomainError(f"no hyperedge {eid} in host")
            if len(pair) != 2 or not pair <= host.edge(eid).vertices:
                raise DomainError(f"value {sorted(pair, key=vertex_key)} is not a pair of hyperedge {eid}")
            clean[eid] = pair
        self.pairs = clean
        self._hash = None

    @classmethod
    def empty(cls, host: Hypergraph) -> "Quasigraph":
        return cls(host, {})

    def value(self, eid):
        return self.pairs.get(eid)

    def is_used(self, eid) -> bool:
        return eid in self.pairs

    def used(self) -> list:
        return [e.id for e in self.host.edges if e.id in self.pairs]

    @property
    def size(self) -> int:
        """Number of used hyperedges."""
        return len(self.pairs)

    def with_pair(self, eid, u, v) -> "Quasigraph":
        if eid in self.pairs:
            raise DomainError(f"hyperedge {eid} is already used")
        edge = self.host.edge(eid)
        if u == v or u not in edge.vertices or v not in edge.vertices:
            raise DomainError(f"({u}, {v}) is not a pair of hyperedge {eid}")
        pairs = dict(self.pairs)
        pairs[eid] = frozenset((u, v))
        return Quasigraph(self.host, pairs)

    def without(self, eid) -> "Quasigraph":
        if eid not in self.pairs:
            return self
        pairs = dict(self.pairs)
        del pairs[eid]
        return Quasigraph(self.host, pairs)

    def rehost(self, host: Hypergraph) -> "Quasigraph":
        """The same assignment, restricted to the edges of another host."""
        return Quasigraph(host, {k: p for k, p in self.pairs.items() if host.has_edge(k)})

    def pair_graph(self) -> "PairGraph":
        return PairGraph(self.host.vertices,
                         tuple((e.id, self.pairs[e.id]) for e in self.host.edges if e.id in self.pairs))

    def is_acyclic(self) -> bool:
        return self.pair_graph().is_forest()

    def complement(self) -> Hypergraph:
        return self.host.without(*self.pairs)

    def quotient(self, P: Partition) -> "Quasigraph":
        """``pi/P`` on ``H/P``: crossing pairs are pushed down, the rest become empty."""
        Q = quotient_hypergraph(self.host, P)
        pairs = {}
        for e in Q.edges:
            pair = self.pairs.get(e.id)
            if pair is not None:
                qp = pair_quotient(pair, P)
                if len(qp) == 2:
                    pairs[e.id] = qp
        return Quasigraph(Q, pairs)

    def to_json(self) -> dict:
        return {"edges": {str(e.id): (sorted(self.pairs[e.id]) if e.id in self.pairs else None)
                          for e in self.host.edges}}

    def __eq__(self, other):
        if not isinstance(other, Quasigraph):
            return NotImplemented
        return self.host == other.host and self.pairs == other.pairs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.host, frozenset(self.pairs.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k}:{sorted(p, key=vertex_key)}" for k, p in sorted(self.pairs.items()))
        return f"Quasigraph({{{body}}})"


@dataclass(frozen=True)
class PairGraph:
    vertices: tuple
    edges: tuple  # (edge id, pair)

    def is_forest(self) -> bool:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for _, pair in self.edges:
            a, b = pair
            ra, rb = find(a), find(b)
            if ra == rb:
                return False
            parent[ra] = rb
        return True

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for _, pair in self.edges:
            for v in pair:
                deg[v] += 1
        return deg

    def find_cycle(self):
        """Edge ids of some cycle of the multigraph, or ``None``."""
        adj = {v: [] for v in self.vertices}
        for eid, pair in self.edges:
            a, b = sorted(pair, key=vertex_key)
            adj[a].append((eid, b))
            adj[b].append((eid, a))
        seen = {}
        for root in self.vertices:
            if root in seen:
                continue
            seen[root] = (None, None)
            stack = [root]
            while stack:
                v = stack.pop()
                for eid, w in adj[v]:
                    if eid == seen[v][1]:
                        continue
                    if w in seen:
                        # walk both ends back to their common ancestor
                        up_v, up_w = _ancestors(seen, v), _ancestors(seen, w)
                        common = next(x for x in up_v if x in set(up_w))
                        cyc = [eid]
                        for start in (v, w):
                            x = start
                            while x != common:
                                cyc.append(seen[x][1])
                                x = seen[x][0]
                        return cyc
                    seen[w] = (v, eid)
                    stack.append(w)
        return None


def _ancestors(seen, v):
    out = [v]
    while seen[v][0] is not None:
        v = seen[v][0]
        out.append(v)
    return out


class Quasicycle(Quasigraph):
    """A quasigraph whose pair graph is one cycle plus isolated vertices.

    ``cycle`` lists ``(edge id, x, y)`` in traversal order.
    """

    __slots__ = ("cycle",)

    def __init__(self, host: Hypergraph, cycle):
        super().__init__(host, {eid: (x, y) for eid, x, y in cycle})
        self.cycle = tuple(cycle)

    def cycle_vertices(self) -> list:
        return [x for _, x, _ in self.cycle]


def candidate_pairs(G: Hypergraph) -> list:
    """Every 2-subset of every edge, as ``(edge id, a, b)`` in (edge, sorted pair) order."""
    out = []
    for e in G.edges:
        for a, b in combinations(e.sorted_vertices(), 2):
            out.append((e.id, a, b))
    return out


def _shortest_path(cands, src, dst, skip_edges=(), skip_vertex=None):
    """BFS path ``src -> dst`` through candidate pairs; list of ``(eid, x, y)``."""
    if src == dst:
        return []
    adj = {}
    for eid, a, b in cands:
        if eid in skip_edges or a == skip_vertex or b == skip_vertex:
            continue
        adj.setdefault(a, []).append((eid, b))
        adj.setdefault(b, []).append((eid, a))
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for eid, y in adj.get(x, ()):
            if y in prev:
                continue
            prev[y] = (x, eid)
            if y == dst:
                path = []
                while prev[y] is not None:
                    px, pe = prev[y]
                    path.append((pe, px, y))
                    y = px
                path.reverse()
                return path
            queue.append(y)
    return None


def close_cycle(cands, eid, a, b, simple=False):
    """A cycle that uses the pair ``ab`` of edge ``eid`` and other candidates.

    In a shortest path no hyperedge appears twice: two pairs of one 3-edge
    share a vertex and would be shortcut by the third pair. With
    ``simple=True`` the cycle must have at least three vertices, so the
    first step out of ``a`` is fixed before searching the rest.
    """
    if not simple:
        path = _shortest_path(cands, b, a, skip_edges={eid})
        if path is None:
            return None
        return [(eid, a, b)] + path
    for gid, x, y in cands:
        if gid == eid or a not in (x, y):
            continue
        w = y if x == a else x
        if w == b:
            continue
        path = _shortest_path(cands, w, b, skip_edges={eid, gid}, skip_vertex=a)
        if path is not None:
            return [(gid, a, w)] + path + [(eid, b, a)]
    return None


def find_quasicycle(G: Hypergraph, simple: bool = False) -> Quasicycle | None:
    cands = candidate_pairs(G)
    for eid, a, b in cands:
        cyc = close_cycle(cands, eid, a, b, simple)
        if cyc is not None:
            return Quasicycle(G, cyc)
    return None


def is_quasicycle(q: Quasigraph, simple: bool = False) -> bool:
    if q.size == 0:
        return False
    pg = q.pair_graph()
    deg = pg.degrees()
    touched = [v for v, d in deg.items() if d]
    if any(d not in (0, 2) for d in deg.values()) or len(touched) != q.size:
        return False
    if simple and q.size < 3:
        return False
    # connected: a forest-free 2-regular graph with |E| = |V| is a single cycle iff connected
    adj = {v: [] for v in touched}
    for _, pair in pg.edges:
        a, b = pair
        adj[a].append(b)
        adj[b].append(a)
    seen = {touched[0]}
    stack = [touched[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(touched)


def complement_quotient(pi: Quasigraph, P: Partition) -> Hypergraph:
    """The complement of ``pi/P`` in ``H/P``."""
    return pi.quotient(P).complement()
