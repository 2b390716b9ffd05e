"""Text and JSON formats, the random instance generator, DOT export.

Instance text format, one item per line::

    # comment
    v 4          # vertex count (vertices are 0..3)
    e 0 1 2      # a hyperedge of size 2 or 3

Without a ``v`` line vertices are arbitrary tokens, numbered in order of
first appearance and kept as display names. Two hyperedges with the same
vertex set are rejected unless ``allow_parallel`` is set; switching can
create such pairs, so files written after switches may need it.
"""

from __future__ import annotations

import json
import random
from itertools import combinations

from .errors import DomainError, ParseError
from .hypergraph import Edge, Hypergraph, Partition, vertex_key
from .quasigraph import Quasigraph


def parse_hypergraph(text: str, allow_parallel: bool = False) -> Hypergraph:
    n = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "v":
            if n is not None:
                raise ParseError("second vertex-count line", lineno)
            if raw:
                raise ParseError("vertex count must come before the edges", lineno)
            if len(rest) != 1 or not rest[0].isdigit():
                raise ParseError("expected 'v N'", lineno)
            n = int(rest[0])
        elif head == "e":
            if len(rest) not in (2, 3):
                raise ParseError(f"hyperedge must have 2 or 3 vertices, got {len(rest)}", lineno)
            if len(set(rest)) != len(rest):
                raise ParseError("repeated vertex in hyperedge", lineno)
            raw.append((lineno, rest))
        else:
            raise ParseError(f"unknown line type {head!r}", lineno)

    if n is not None:
        edges = []
        for lineno, toks in raw:
            try:
                vs = [int(t) for t in toks]
            except ValueError:
                raise ParseError("vertex ids must be integers when 'v' is given", lineno) from None
            if any(v < 0 or v >= n for v in vs):
                raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
            edges.append(Edge(len(edges), frozenset(vs)))
        _check_parallel(edges, [ln for ln, _ in raw], allow_parallel)
        return Hypergraph(range(n), edges)

    index, names = {}, []
    edges = []
    for _, toks in raw:
        for t in toks:
            if t not in index:
                index[t] = len(names)
                names.append(t)
        edges.append(Edge(len(edges), frozenset(index[t] for t in toks)))
    _check_parallel(edges, [ln for ln, _ in raw], allow_parallel)
    return Hypergraph(range(len(names)), edges, names)


def _check_parallel(edges, linenos, allow):
    if allow:
        return
    first = {}
    for e, ln in zip(edges, linenos):
        if e.vertices in first:
            raise ParseError(f"duplicate hyperedge (first given on line {first[e.vertices]})", ln)
        first[e.vertices] = ln


def load_hypergraph(path, allow_parallel: bool = False) -> Hypergraph:
    with open(path) as fh:
        return parse_hypergraph(fh.read(), allow_parallel)


def serialize_hypergraph(H: Hypergraph) -> str:
    """Text form; edges are written in id order and renumbered on reading."""
    lines = []
    if H.names is None and H.vertices == tuple(range(len(H.vertices))):
        lines.append(f"v {len(H.vertices)}")
        for e in sorted(H.edges, key=lambda e: e.id):
            lines.append("e " + " ".join(str(v) for v in e.sorted_vertices()))
    else:
        for e in sorted(H.edges, key=lambda e: e.id):
            lines.append("e " + " ".join(H.name(v) for v in e.sorted_vertices()))
    return "\n".join(lines) + "\n"


def gen_hypergraph(n: int, m: int, seed: int, tri_prob: float = 0.5) -> Hypergraph:
    """``m`` distinct hyperedges; each is a 3-edge with probability ``tri_prob`` while 3-edges remain."""
    if n < 2:
        raise DomainError("need at least 2 vertices")
    if m < 0:
        raise DomainError("edge count must be non-negative")
    if not 0.0 <= tri_prob <= 1.0:
        raise DomainError("tri-prob must lie in [0, 1]")
    pairs = [frozenset(c) for c in combinations(range(n), 2)]
    triples = [frozenset(c) for c in combinations(range(n), 3)]
    if tri_prob == 1.0:
        pairs = []
    elif tri_prob == 0.0:
        triples = []
    if m > len(pairs) + len(triples):
        raise DomainError(f"only {len(pairs) + len(triples)} distinct hyperedges are available")
    rng = random.Random(seed)
    edges = []
    for i in range(m):
        pool = triples if triples and (not pairs or rng.random() < tri_prob) else pairs
        edges.append(Edge(i, pool.pop(rng.randrange(len(pool)))))
    return Hypergraph(range(n), edges)


def quasigraph_from_json(H: Hypergraph, data) -> Quasigraph:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("quasigraph JSON needs an 'edges' object")
    pairs = {}
    for key, val in data["edges"].items():
        try:
            eid = int(key)
        except ValueError:
            raise ParseError(f"bad hyperedge id {key!r}") from None
        if not H.has_edge(eid):
            raise DomainError(f"no hyperedge {eid}")
        if val is None:
            continue
        if not isinstance(val, list) or len(val) != 2:
            raise ParseError(f"value of hyperedge {eid} must be null or a pair")
        pairs[eid] = frozenset(val)
    return Quasigraph(H, pairs)


def partition_from_json(H: Hypergraph, data) -> Partition:
    if isinstance(data, str):
        data = json.loads(data)
    classes = data["partition"] if isinstance(data, dict) else data
    if not isinstance(classes, list) or not all(isinstance(c, list) for c in classes):
        raise ParseError("partition JSON must be a list of lists")
    flat = [v for c in classes for v in c]
    if sorted(flat, key=vertex_key) != list(H.vertices):
        raise DomainError("classes do not partition the vertex set")
    return Partition(classes)


def result_to_json(res, simple: bool = False) -> dict:
    out = res.quasigraph.to_json()
    out["partition"] = res.partition.to_lists()
    out["certificate"] = res.certificate(simple)
    out["steps"] = [
        {"reason": s.reason.value, "edge": s.edge, "used_before": s.size_before, "used_after": s.size_after}
        for s in res.steps
    ]
    return out


def to_dot(H: Hypergraph, pi: Quasigraph | None = None, P: Partition | None = None, name="H") -> str:
    """Hyperedges as small box nodes, used pairs drawn bold between their two vertices."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    if P is not None:
        for k, X in enumerate(P.classes):
            lines.append(f"  subgraph cluster_{k} {{")
            lines.extend(f'    v{v} [label="{H.name(v)}"];' for v in sorted(X, key=vertex_key))
            lines.append("  }")
    else:
        lines.extend(f'  v{v} [label="{H.name(v)}"];' for v in H.vertices)
    for e in H.edges:
        pair = pi.value(e.id) if pi is not None else None
        if e.size == 2:
            style = "bold" if pair else "dashed"
            u, v = e.sorted_vertices()
            lines.append(f'  v{u} -- v{v} [label="{e.id}", style={style}];')
            continue
        lines.append(f'  e{e.id} [shape=box, width=0.2, height=0.2, label="{e.id}"];')
        for v in e.sorted_vertices():
            style = "bold" if pair and v in pair else "dotted"
            lines.append(f"  e{e.id} -- v{v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def compact_ids(pi: Quasigraph) -> Quasigraph:
    """Renumber hyperedges 0..m-1 in id order, so the text form reads back identically."""
    H = pi.host
    order = sorted(H.edges, key=lambda e: e.id)
    remap = {e.id: k for k, e in enumerate(order)}
    H2 = Hypergraph(H.vertices, [Edge(remap[e.id], e.vertices) for e in order], H.names)
    return Quasigraph(H2, {remap[k]: p for k, p in pi.pairs.items()})
