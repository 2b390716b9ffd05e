"""The plane sequence of a quasigraph, its signature, and the improvement order.

Row ``i`` holds the partitions ``P[i][0], P[i][1], ...`` up to the first one
that is solid (odd steps split into components, even steps into
anticomponents); that last one is the row's limit. The limit step then
either terminates (no quasicycle in the complement of the quotient), stops
(a weakly redundant hyperedge leads some quasicycle) or continues with the
largest leading hyperedge, which splits the limit to start the next row.

Exposure steps behave like an ultrametric: a pair ``pr`` separates no earlier
than the earlier of ``pq`` and ``qr``. Hence restricting candidate pairs to
those exposed no earlier than a bound is compatible with the 3-edge
shortcut used by the quasicycle search, and the leading set can be
computed with one path search per candidate pair instead of enumerating
quasicycles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .connectivity import anticomponents_on, components_on, redundancy_class, Role
from .errors import ContractError, DomainError
from .hypergraph import Edge, Partition, edge_key, partition_compare_total, vertex_key
from .quasigraph import Quasicycle, Quasigraph, candidate_pairs, close_cycle, complement_quotient

INF = math.inf


class StepIndex(NamedTuple):
    i: float
    j: float

    def to_json(self):
        return [_inf_json(self.i), _inf_json(self.j)]


def _inf_json(x):
    return "inf" if x == INF else int(x)


# every hyperedge (by the hyperedge order) < terminate < stop
_RANK = {"continue": 0, "terminate": 1, "stop": 2}


@dataclass(frozen=True)
class Decisive:
    kind: str
    edge: Edge | None = None

    @classmethod
    def terminate(cls):
        return cls("terminate")

    @classmethod
    def stop(cls):
        return cls("stop")

    @classmethod
    def cont(cls, edge: Edge):
        return cls("continue", edge)

    def key(self) -> tuple:
        return (_RANK[self.kind], edge_key(self.edge) if self.edge is not None else ())

    def to_json(self):
        if self.kind == "continue":
            return {"continue": self.edge.id}
        return self.kind


@dataclass(frozen=True)
class Witness:
    """A quasicycle in the complement of the quotient led by ``edge``."""

    edge: int
    cycle: Quasicycle
    step: StepIndex

    def to_json(self):
        return {
            "edge": self.edge,
            "step": self.step.to_json(),
            "cycle": [[eid, sorted(x), sorted(y)] for eid, x, y in self.cycle.cycle],
        }


@dataclass
class Row:
    i: int
    partitions: list
    decisive: Decisive | None = None
    witness: Witness | None = None

    @property
    def limit(self) -> Partition:
        return self.partitions[-1]

    def to_json(self):
        return {
            "i": self.i,
            "partitions": [P.to_lists() for P in self.partitions],
            "limit": self.limit.to_lists(),
            "decisive": self.decisive.to_json(),
            "witness": self.witness.to_json() if self.witness else None,
        }


def refine_components(pi: Quasigraph, P: Partition) -> Partition:
    return Partition([K for X in P.classes for K in components_on(pi, X).classes])


def refine_anticomponents(pi: Quasigraph, P: Partition, host=None) -> Partition:
    return Partition([K for X in P.classes for K in anticomponents_on(pi, X, host).classes])


class PlaneSequence:
    def __init__(self, pi: Quasigraph, simple: bool = False):
        self.pi = pi
        self.simple = simple
        self.rows: list[Row] = []
        self._exposure_cache = {}

    @property
    def final(self) -> Partition:
        return self.rows[-1].limit

    @property
    def last_decisive(self) -> Decisive:
        return self.rows[-1].decisive

    def positions(self):
        """``((i, j), P)`` for every explicitly stored partition, in order."""
        for row in self.rows:
            for j, P in enumerate(row.partitions):
                yield StepIndex(row.i, j), P

    def partition_at(self, i, j) -> Partition:
        row = self.rows[int(i)]
        if j == INF:
            return row.limit
        return row.partitions[min(int(j), len(row.partitions) - 1)]

    def predecessor(self, step: StepIndex) -> Partition:
        i, j = step
        if i == INF or j == INF or (i, j) == (0, 0):
            raise DomainError(f"partition at {tuple(step)} has no predecessor")
        if j > 0:
            return self.partition_at(i, j - 1)
        return self.rows[int(i) - 1].limit

    def exposure_step(self, a, b) -> StepIndex:
        """First step at which ``a`` and ``b`` (vertices or classes) are separated."""
        u = min(a) if isinstance(a, frozenset) else a
        v = min(b) if isinstance(b, frozenset) else b
        key = (u, v) if u <= v else (v, u)
        hit = self._exposure_cache.get(key)
        if hit is not None:
            return hit
        for step, P in self.positions():
            if not P.same_class(u, v):
                self._exposure_cache[key] = step
                return step
        raise DomainError(f"{a} and {b} are never separated")

    def leading_hyperedges(self, gamma: Quasigraph):
        steps = {eid: self.exposure_step(*pair) for eid, pair in gamma.pairs.items()}
        best = min(steps.values())
        return best, sorted(eid for eid, s in steps.items() if s == best)

    def leading_witnesses(self, P: Partition) -> dict:
        """Map each member of the leading set ``L`` at ``P`` to a quasicycle it leads."""
        C = complement_quotient(self.pi, P)
        cands = [(eid, a, b, self.exposure_step(a, b)) for eid, a, b in candidate_pairs(C)]
        out = {}
        for e in C.edges:
            for fid, a, b, t in cands:
                if fid != e.id:
                    continue
                allowed = [(g, x, y) for g, x, y, s in cands if s >= t]
                cyc = close_cycle(allowed, fid, a, b, self.simple)
                if cyc is not None:
                    out[e.id] = Witness(e.id, Quasicycle(C, cyc), t)
                    break
        return out

    def compute_L(self, P: Partition) -> set:
        L = self.leading_witnesses(P)
        if not L:
            raise DomainError("the complement of the quotient is acyclic")
        return set(L)

    def to_json(self):
        return {"rows": [r.to_json() for r in self.rows], "final": self.final.to_lists()}


def _stabilize(pi: Quasigraph, start: Partition) -> list:
    parts = [start]
    while True:
        cur = parts[-1]
        comp = refine_components(pi, cur)
        anti = refine_anticomponents(pi, cur)
        if comp == cur and anti == cur:
            return parts
        parts.append(comp if len(parts) % 2 == 1 else anti)


def build_plane_sequence(pi: Quasigraph, simple: bool = False) -> PlaneSequence:
    H = pi.host
    seq = PlaneSequence(pi, simple)
    start = Partition.trivial(H.vertices)
    for i in range(len(H.vertices) + 1):
        row = Row(i, _stabilize(pi, start))
        seq.rows.append(row)
        P = row.limit
        L = seq.leading_witnesses(P)
        if not L:
            # no quasicycle has no leading hyperedge, so an empty L means acyclic
            row.decisive = Decisive.terminate()
            return seq
        roles = {f: redundancy_class(pi, P, f, check=False) for f in L}
        weak = [f for f in L if roles[f].weakly_redundant]
        if weak:
            f = max(weak, key=lambda k: edge_key(H.edge(k)))
            row.decisive = Decisive.stop()
            row.witness = L[f]
            return seq
        f = max(L, key=lambda k: edge_key(H.edge(k)))
        row.decisive = Decisive.cont(H.edge(f))
        row.witness = L[f]
        if roles[f].kind is Role.ANTIBRIDGE:
            start = refine_anticomponents(pi, P, H.without(f))
        elif roles[f].kind is Role.BRIDGE:
            start = refine_components(pi.without(f), P)
        else:
            raise ContractError(f"decisive hyperedge {f} is neither bridge nor antibridge")
        if len(start) <= len(P):
            raise ContractError(f"limit step at row {i} did not refine the partition")
    raise ContractError("plane sequence did not stop within |V| rows")


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare(a: PlaneSequence, b: PlaneSequence, upto: StepIndex | None = None) -> int:
    """Lexicographic comparison of signatures, optionally of ``(i, j)``-prefixes.

    Rows are compared as eventually constant sequences: the shorter explicit
    row is padded with its limit.
    """
    for i in range(min(len(a.rows), len(b.rows))):
        if upto is not None and upto < (i, 0):
            return 0
        ra, rb = a.rows[i], b.rows[i]
        n = max(len(ra.partitions), len(rb.partitions))
        for j in range(n):
            if upto is not None and upto < (i, j):
                return 0
            c = partition_compare_total(ra.partitions[min(j, len(ra.partitions) - 1)],
                                        rb.partitions[min(j, len(rb.partitions) - 1)])
            if c:
                return c
        if upto is not None and upto < (i, INF):
            return 0
        c = _cmp(ra.decisive.key(), rb.decisive.key())
        if c or ra.decisive.kind != "continue":
            return c
    raise ContractError("signatures ended without a final decisive value")


def compare_quasigraphs(pi: Quasigraph, rho: Quasigraph, upto=None, simple=False) -> int:
    return compare(build_plane_sequence(pi, simple), build_plane_sequence(rho, simple), upto)
