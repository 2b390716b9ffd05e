"""Brute-force, definition-level versions of the fast algorithms.

Everything here enumerates: set partitions via restricted growth strings,
quasigraphs via mixed-radix counters (with degree pruning when only
quasicycles are wanted). Nothing is imported from the fast paths except the
data types, so agreement between the two is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import CapacityError
from .hypergraph import Edge, Hypergraph, Partition, vertex_key
from .quasigraph import Quasigraph

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


@dataclass(frozen=True)
class EnumBudget:
    max_quasigraphs: int = 4 ** 8
    max_partitions: int = BELL[8]

    def check_quasigraphs(self, G: Hypergraph):
        n = count_quasigraphs(G)
        if n > self.max_quasigraphs:
            raise CapacityError(f"{n} quasigraphs exceed the budget of {self.max_quasigraphs}")

    def check_partitions(self, size: int):
        n = BELL[size] if size < len(BELL) else float("inf")
        if n > self.max_partitions:
            raise CapacityError(f"{n} partitions exceed the budget of {self.max_partitions}")


DEFAULT_BUDGET = EnumBudget()


def set_partitions(items):
    """Yield every partition of ``items`` as a list of blocks (restricted growth strings)."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    a = [0] * n
    b = [1] * n  # b[k] = 1 + max(a[:k])
    while True:
        blocks = [[] for _ in range(max(a) + 1)]
        for x, k in zip(items, a):
            blocks[k].append(x)
        yield blocks
        k = n - 1
        while k > 0 and a[k] == b[k]:
            k -= 1
        if k == 0:
            return
        a[k] += 1
        for m in range(k + 1, n):
            a[m] = 0
            b[m] = max(b[m - 1], a[m - 1] + 1)


def _options(e: Edge):
    return [None] + [frozenset(p) for p in combinations(e.sorted_vertices(), 2)]


def count_quasigraphs(G: Hypergraph) -> int:
    n = 1
    for e in G.edges:
        n *= 1 + e.size * (e.size - 1) // 2
    return n


def enumerate_quasigraphs(G: Hypergraph, budget: EnumBudget = DEFAULT_BUDGET):
    budget.check_quasigraphs(G)
    ids = [e.id for e in G.edges]
    for choice in product(*[_options(e) for e in G.edges]):
        yield Quasigraph(G, {k: p for k, p in zip(ids, choice) if p is not None})


def _witnesses(blocks_of, f_vertices, value) -> bool:
    """Does a hyperedge cross the partition while its value sits inside one class?"""
    met = {blocks_of[v] for v in f_vertices if v in blocks_of}
    if len(met) < 2:
        return False
    if value is None:
        return True
    a, b = value
    return a in blocks_of and b in blocks_of and blocks_of[a] == blocks_of[b]


@lru_cache(maxsize=4096)
def _nontrivial_labelings(X: tuple) -> tuple:
    """Every partition of ``X`` with at least two blocks, as vertex -> block maps."""
    out = []
    for blocks in set_partitions(X):
        if len(blocks) >= 2:
            out.append({v: k for k, blk in enumerate(blocks) for v in blk})
    return tuple(out)


def anticonnected_def(pi: Quasigraph, X, host: Hypergraph | None = None,
                      budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    X = tuple(sorted(X, key=vertex_key))
    budget.check_partitions(len(X))
    host = pi.host if host is None else host
    edges = [(e.vertices, pi.value(e.id)) for e in host.edges]
    for blocks_of in _nontrivial_labelings(X):
        if not any(_witnesses(blocks_of, f, val) for f, val in edges):
            return False
    return True


def anticonnected_table(pi: Quasigraph, host: Hypergraph | None = None,
                        budget: EnumBudget = DEFAULT_BUDGET) -> dict:
    """Anticonnectivity of every nonempty vertex subset."""
    V = sorted((pi.host if host is None else host).vertices)
    out = {}
    for r in range(1, len(V) + 1):
        for Y in combinations(V, r):
            out[frozenset(Y)] = anticonnected_def(pi, Y, host, budget)
    return out


def anticomponents_def(pi: Quasigraph, X, host=None, table: dict | None = None,
                       budget: EnumBudget = DEFAULT_BUDGET) -> list:
    """Maximal anticonnected subsets of ``X``, sorted canonically."""
    X = sorted(X)
    good = []
    for r in range(len(X), 0, -1):
        for Y in combinations(X, r):
            Y = frozenset(Y)
            if any(Y < G for G in good):
                continue
            ok = table[Y] if table is not None else anticonnected_def(pi, Y, host, budget)
            if ok:
                good.append(Y)
    return sorted(good, key=sorted)


def connected_def(pi: Quasigraph, X) -> bool:
    X = set(X)
    if len(X) <= 1:
        return True
    adj = {v: set() for v in X}
    for pair in pi.pairs.values():
        a, b = pair
        if a in X and b in X:
            adj[a].add(b)
            adj[b].add(a)
    start = next(iter(X))
    seen, todo = {start}, [start]
    while todo:
        for w in adj[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == X


def is_quasicycle_def(gamma: Quasigraph, simple: bool = False) -> bool:
    """The pair graph is exactly one cycle plus isolated vertices."""
    pairs = list(gamma.pairs.values())
    if not pairs:
        return False
    deg = {}
    for p in pairs:
        for v in p:
            deg[v] = deg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    if simple and len(pairs) < 3:
        return False
    # walk the cycle from one vertex; it must return having used every pair
    remaining = list(pairs)
    start = next(iter(remaining[0]))
    cur, steps = start, 0
    while True:
        nxt = next((p for p in remaining if cur in p), None)
        if nxt is None:
            break
        remaining.remove(nxt)
        (cur,) = nxt - {cur}
        steps += 1
        if cur == start:
            break
    return cur == start and not remaining and steps == len(pairs)


def quasicycles_def(G: Hypergraph, simple: bool = False, budget: EnumBudget = DEFAULT_BUDGET):
    """Every quasicycle of ``G``, by exhaustive assignment with degree pruning."""
    budget.check_quasigraphs(G)
    edges = list(G.edges)
    opts = [_options(e) for e in edges]
    deg = {v: 0 for v in G.vertices}
    chosen = {}

    def rec(k):
        if k == len(edges):
            if chosen:
                q = Quasigraph(G, chosen)
                if is_quasicycle_def(q, simple):
                    yield q
            return
        for p in opts[k]:
            if p is None:
                yield from rec(k + 1)
                continue
            a, b = p
            if deg[a] >= 2 or deg[b] >= 2:
                continue
            deg[a] += 1
            deg[b] += 1
            chosen[edges[k].id] = p
            yield from rec(k + 1)
            del chosen[edges[k].id]
            deg[a] -= 1
            deg[b] -= 1

    yield from rec(0)


def quasicycle_exists_def(G: Hypergraph, simple: bool = False, budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    return next(quasicycles_def(G, simple, budget), None) is not None


def complement_quotient_def(pi: Quasigraph, P: Partition) -> Hypergraph:
    """Complement of ``pi/P`` built straight from the definitions."""
    edges = []
    for e in pi.host.edges:
        classes = frozenset(P.class_of(v) for v in e.vertices)
        if len(classes) < 2:
            continue
        val = pi.value(e.id)
        if val is not None and len({P.class_of(v) for v in val}) == 2:
            continue
        edges.append(Edge(e.id, classes))
    return Hypergraph(P.classes, edges)


def exposure_def(seq, a, b):
    u = min(a) if isinstance(a, frozenset) else a
    v = min(b) if isinstance(b, frozenset) else b
    for row in seq.rows:
        for j, P in enumerate(row.partitions):
            if P.class_of(u) != P.class_of(v):
                return (row.i, j)
    return None


def leading_set_def(seq, P: Partition, simple: bool = False, budget: EnumBudget = DEFAULT_BUDGET) -> set:
    """Union of the leading hyperedges over all quasicycles of the complement."""
    C = complement_quotient_def(seq.pi, P)
    out = set()
    for gamma in quasicycles_def(C, simple, budget):
        steps = {eid: exposure_def(seq, *pair) for eid, pair in gamma.pairs.items()}
        best = min(steps.values())
        out.update(eid for eid, s in steps.items() if s == best)
    return out


def skeletal_def(pi: Quasigraph, P: Partition, simple: bool = False, budget: EnumBudget = DEFAULT_BUDGET) -> bool:
    for X in P.classes:
        if not connected_def(pi, X) or not anticonnected_def(pi, X, budget=budget):
            return False
    return not quasicycle_exists_def(complement_quotient_def(pi, P), simple, budget)


def max_search(H: Hypergraph, simple: bool = False, budget: EnumBudget = EnumBudget(max_quasigraphs=4 ** 5)):
    """Quasigraphs of ``H`` that are largest in the (signature, -|used|) order.

    Returns the build-sequence of every maximiser; the caller checks that each
    one is acyclic with a skeletal final partition.
    """
    from .sequence import build_plane_sequence, compare
    from functools import cmp_to_key

    seqs = [build_plane_sequence(pi, simple) for pi in enumerate_quasigraphs(H, budget)]

    def order(a, b):
        c = compare(a, b)
        return c if c else (b.pi.size > a.pi.size) - (b.pi.size < a.pi.size)

    seqs.sort(key=cmp_to_key(order))
    top = seqs[-1]
    return [s for s in seqs if order(s, top) == 0], seqs
