"""Bad leaves and the switch rewrite.

Every component of the pair graph is oriented toward a root (by default its
minimum vertex). A used hyperedge is associated with the tail of its pair.
A bad leaf is a leaf ``u`` of the pair graph meeting exactly three
hyperedges ``ua, ub, ucd`` where ``ucd`` is associated with ``u``; the
switch replaces them by ``uab, uc, ud`` and keeps the pair ``uc`` on the new
2-edge, so the pair graph does not change.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .engine import SkeletalResult, solve
from .errors import ContractError, DomainError
from .hypergraph import Edge, Hypergraph, vertex_key
from .quasigraph import Quasigraph
from .sequence import build_plane_sequence, compare


@dataclass
class Orientation:
    roots: dict  # vertex -> root of its component
    parent: dict  # vertex -> (parent vertex, edge id), absent for roots

    def associated(self, v):
        hit = self.parent.get(v)
        return None if hit is None else hit[1]


def orient(pi: Quasigraph, choose_root: Callable | None = None) -> Orientation:
    """Orient the forest ``pi*`` toward one root per component."""
    adj = {v: [] for v in pi.host.vertices}
    for eid, pair in pi.pairs.items():
        a, b = pair
        adj[a].append((b, eid))
        adj[b].append((a, eid))
    roots, parent = {}, {}
    for v in sorted(adj, key=vertex_key):
        if v in roots:
            continue
        comp, todo = {v}, [v]
        while todo:
            for w, _ in adj[todo.pop()]:
                if w not in comp:
                    comp.add(w)
                    todo.append(w)
        r = min(comp, key=vertex_key) if choose_root is None else choose_root(sorted(comp, key=vertex_key))
        roots[r] = r
        todo = [r]
        while todo:
            x = todo.pop()
            for w, eid in adj[x]:
                if w not in roots:
                    roots[w] = r
                    parent[w] = (x, eid)
                    todo.append(w)
    return Orientation(roots, parent)


def bad_leaves(pi: Quasigraph, choose_root: Callable | None = None) -> list:
    if not pi.is_acyclic():
        raise DomainError("bad leaves need an acyclic quasigraph")
    H = pi.host
    orient_ = orient(pi, choose_root)
    deg = pi.pair_graph().degrees()
    out = []
    for u in sorted(H.vertices, key=vertex_key):
        if deg[u] != 1:
            continue
        inc = H.incident(u)
        big = [e for e in inc if e.size == 3]
        if len(inc) != 3 or len(big) != 1:
            continue
        if orient_.associated(u) == big[0].id:
            out.append(u)
    return out


@dataclass(frozen=True)
class SwitchRecord:
    pivot: object
    removed: tuple  # ids of ua, ub, ucd
    added: tuple  # ids of uab, uc, ud
    a: object
    b: object
    c: object
    d: object

    def to_json(self):
        return {
            "pivot": self.pivot,
            "removed": list(self.removed),
            "added": list(self.added),
            "abcd": [self.a, self.b, self.c, self.d],
        }


def switch(pi: Quasigraph, u, choose_root: Callable | None = None):
    """Switch at the bad leaf ``u``; returns ``(pi', record)`` with ``pi'.host = H^(u)``."""
    if u not in bad_leaves(pi, choose_root):
        raise DomainError(f"vertex {u} is not a bad leaf")
    H = pi.host
    inc = H.incident(u)
    (e,) = [f for f in inc if f.size == 3]
    ua, ub = sorted((f for f in inc if f.size == 2), key=lambda f: f.id)
    (a,) = ua.vertices - {u}
    (b,) = ub.vertices - {u}
    (c,) = pi.value(e.id) - {u}
    (d,) = e.vertices - {u, c}
    nid = H.next_edge_id()
    new = [Edge(nid, frozenset((u, a, b))), Edge(nid + 1, frozenset((u, c))), Edge(nid + 2, frozenset((u, d)))]
    edges = [f for f in H.edges if f.id not in (ua.id, ub.id, e.id)] + new
    H2 = Hypergraph(H.vertices, edges, H.names)
    pairs = {k: p for k, p in pi.pairs.items() if k != e.id}
    pairs[nid + 1] = frozenset((u, c))
    rec = SwitchRecord(u, (ua.id, ub.id, e.id), (nid, nid + 1, nid + 2), a, b, c, d)
    return Quasigraph(H2, pairs), rec


def used_triples(pi: Quasigraph) -> int:
    return sum(1 for eid in pi.pairs if pi.host.edge(eid).size == 3)


def pair_multiset(pi: Quasigraph):
    return sorted(tuple(sorted(p, key=vertex_key)) for p in pi.pairs.values())


@dataclass
class Phase:
    result: SkeletalResult
    bad_before: int
    switch: SwitchRecord | None = None
    bad_after: int | None = None
    switch_order: int | None = None  # compare(before switch, after switch)


@dataclass
class NoBadResult:
    host: Hypergraph
    quasigraph: Quasigraph
    partition: object
    switches: list = field(default_factory=list)
    phases: list = field(default_factory=list)


def solve_no_bad(H: Hypergraph, simple: bool = False, choose_root: Callable | None = None,
                 start: Quasigraph | None = None, max_phases: int = 10_000) -> NoBadResult:
    """Alternate solving and switching until the fixpoint has no bad leaves.

    Each phase must raise ``(signature, -|used|, -#used 3-edges)``
    lexicographically; a violation or a revisited state raises
    ``ContractError``. A switch keeps the signature from dropping and the
    number of used hyperedges fixed, and trades the used 3-edge ``ucd`` for
    the used 2-edge ``uc``. The bad-leaf count itself need not drop: the
    switch can leave ``d`` with a single, associated, 3-edge.
    """
    pi = Quasigraph.empty(H) if start is None else start
    phases, switches = [], []
    seen = set()
    prev_measure = None
    for _ in range(max_phases):
        res = solve(pi.host, pi, simple)
        sigma = res.quasigraph
        root = _frozen_roots(choose_root)
        bad = bad_leaves(sigma, root)
        measure = (res.sequence, sigma.size, used_triples(sigma))
        if prev_measure is not None and not _measure_increases(prev_measure, measure):
            raise ContractError("termination measure did not increase over a phase")
        prev_measure = measure
        phase = Phase(res, len(bad))
        phases.append(phase)
        if not bad:
            return NoBadResult(sigma.host, sigma, res.partition, switches, phases)
        state = (sigma.host, frozenset(sigma.pairs.items()))
        if state in seen:
            raise ContractError("switch loop revisited a state")
        seen.add(state)
        nxt, rec = switch(sigma, bad[0], root)
        if pair_multiset(nxt) != pair_multiset(sigma):
            raise ContractError("switch changed the pair graph")
        phase.switch = rec
        phase.bad_after = len(bad_leaves(nxt, root))
        phase.switch_order = compare(res.sequence, build_plane_sequence(nxt, simple))
        switches.append(rec)
        pi = nxt
    raise ContractError("too many switch phases")


def _frozen_roots(choose_root):
    """Memoise the root choice per component so repeated orientations agree."""
    if choose_root is None:
        return None
    memo = {}

    def pick(comp):
        key = tuple(comp)
        if key not in memo:
            memo[key] = choose_root(comp)
        return memo[key]

    return pick


def _measure_increases(old, new) -> bool:
    c = compare(old[0], new[0])
    if c:
        return c < 0
    if old[1] != new[1]:
        return new[1] < old[1]
    return new[2] < old[2]
