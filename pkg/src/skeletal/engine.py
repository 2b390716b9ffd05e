"""Skeletal partitions and the improvement loop.

``improve_step`` either certifies that a quasigraph is acyclic with a
skeletal final partition, or returns a successor that is strictly larger in
the signature order, or equal in that order while using fewer hyperedges.
``solve`` iterates it; the pair (signature, -|used|) strictly increases, so
the loop ends.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .connectivity import (
    is_anticonnected_on,
    is_connected_on,
    is_solid,
    redundancy_class,
    _antibridge,
)
from .errors import ContractError, DomainError
from .hypergraph import Hypergraph, Partition, edge_key
from .quasigraph import PairGraph, Quasigraph, complement_quotient, find_quasicycle
from .sequence import INF, PlaneSequence, StepIndex, build_plane_sequence, compare


class Reason(Enum):
    ADDITION_AT_STOP = "addition-at-stop"
    REMOVAL_USED_LEADING = "removal-used-leading"
    REMOVAL_QUOTIENT_CYCLE = "removal-quotient-cycle"
    REMOVAL_INNER_CYCLE = "removal-inner-cycle"


@dataclass
class ImproveOutcome:
    quasigraph: Quasigraph
    sequence: PlaneSequence
    reason: Reason | None = None
    edge: int | None = None
    step: StepIndex | None = None

    @property
    def done(self) -> bool:
        return self.reason is None

    @property
    def partition(self) -> Partition:
        return self.sequence.final


@dataclass
class StepRecord:
    reason: Reason
    edge: int
    size_before: int
    size_after: int
    order: int  # compare(before, after): -1 strictly better, 0 equal


@dataclass
class SkeletalResult:
    quasigraph: Quasigraph
    partition: Partition
    sequence: PlaneSequence
    steps: list = field(default_factory=list)

    def certificate(self, simple: bool = False) -> dict:
        return certificate(self.quasigraph, self.partition, simple)


def is_skeletal(pi: Quasigraph, P: Partition, simple: bool = False) -> bool:
    if not is_solid(pi, P):
        return False
    return find_quasicycle(complement_quotient(pi, P), simple) is None


def certificate(pi: Quasigraph, P: Partition, simple: bool = False) -> dict:
    C = complement_quotient(pi, P)
    return {
        "classes": [
            {"class": sorted(X), "connected": is_connected_on(pi, X), "anticonnected": is_anticonnected_on(pi, X)}
            for X in P.classes
        ],
        "complement_edges": len(C.edges),
        "complement_acyclic": find_quasicycle(C, simple) is None,
        "acyclic": pi.is_acyclic(),
    }


def _representatives(pi: Quasigraph, gamma, eid):
    """Minimum vertex of the hyperedge in each of the two classes of ``gamma(e)``."""
    e = pi.host.edge(eid)
    q1, q2 = sorted(gamma.value(eid), key=lambda c: sorted(c))
    return min(e.vertices & q1), min(e.vertices & q2)


def qc_addition(pi: Quasigraph, X, Q: Partition, gamma, eid, seq: PlaneSequence | None = None):
    """Pick ``u, v`` in the two classes of ``gamma(e)`` so that ``pi + (uv)_e`` stays anticonnected on ``X``."""
    X = frozenset(X)
    if not is_anticonnected_on(pi, X):
        raise DomainError("quasigraph is not anticonnected on X")
    if not is_solid(pi, Q):
        raise DomainError("Q is not solid")
    if any(not (c <= X or not (c & X)) for c in Q.classes):
        raise DomainError("Q does not refine {X, V - X}")
    if any(not c <= X for c in gamma.cycle_vertices()):
        raise DomainError("quasicycle leaves X")
    if not redundancy_class(pi, Q, eid, check=False).redundant:
        raise DomainError(f"hyperedge {eid} is not redundant")
    if seq is not None and eid not in seq.leading_hyperedges(gamma)[1]:
        raise DomainError(f"hyperedge {eid} does not lead the quasicycle")
    u, v = _representatives(pi, gamma, eid)
    rho = pi.with_pair(eid, u, v)
    if not is_anticonnected_on(rho, X):
        raise ContractError("addition broke anticonnectivity on X")
    e = pi.host.edge(eid)
    if e.vertices & X == {u, v} and _antibridge(pi, X, eid):
        raise ContractError("added hyperedge is an X-antibridge")
    return u, v


def _check_exposed(seq: PlaneSequence, step: StepIndex):
    i, j = step
    if i == INF or j == INF or (i, j) == (0, 0):
        raise ContractError(f"quasicycle exposed at {tuple(step)}")
    if j == 1 and i >= 1:
        d = seq.rows[int(i) - 1].decisive
        if d.edge is None or seq.pi.is_used(d.edge.id):
            raise ContractError("exposure at (i, 1) after a used decisive hyperedge")


def _max_edge(H: Hypergraph, eids):
    return max(eids, key=lambda k: edge_key(H.edge(k)))


def improve_step(pi: Quasigraph, simple: bool = False, seq: PlaneSequence | None = None) -> ImproveOutcome:
    if seq is None:
        seq = build_plane_sequence(pi, simple)
    H = pi.host
    Q = seq.final

    if seq.last_decisive.kind == "stop":
        w = seq.rows[-1].witness
        eid, gamma, step = w.edge, w.cycle, w.step
        _check_exposed(seq, step)
        pred = seq.predecessor(step)
        q1, q2 = gamma.value(eid)
        X = pred.class_of(min(q1))
        if not (q1 | q2) <= X or any(not c <= X for c in gamma.cycle_vertices()):
            raise ContractError("witness quasicycle is not inside one class of the predecessor")
        if pi.is_used(eid):
            return ImproveOutcome(pi.without(eid), seq, Reason.REMOVAL_USED_LEADING, eid, step)
        if step[1] % 2 == 0 and step[1] > 0:
            raise ContractError("unused leading hyperedge exposed at an anticomponent step")
        if is_anticonnected_on(pi, X):
            u, v = qc_addition(pi, X, Q, gamma, eid)
        elif tuple(step) == (0, 1):
            # splitting at the first component step only needs the two endpoints
            u, v = _representatives(pi, gamma, eid)
        else:
            raise ContractError(f"not anticonnected on X at exposure step {tuple(step)}")
        return ImproveOutcome(pi.with_pair(eid, u, v), seq, Reason.ADDITION_AT_STOP, eid, step)

    pg = pi.pair_graph()
    if pg.is_forest():
        return ImproveOutcome(pi, seq)

    pq = pi.quotient(Q)
    cyc = pq.pair_graph().find_cycle()
    if cyc is not None:
        steps = {eid: seq.exposure_step(*pq.value(eid)) for eid in cyc}
        best = min(steps.values())
        eid = _max_edge(H, [k for k, s in steps.items() if s == best])
        return ImproveOutcome(pi.without(eid), seq, Reason.REMOVAL_QUOTIENT_CYCLE, eid, best)

    for X in Q.classes:
        inner = PairGraph(tuple(sorted(X)), tuple((k, p) for k, p in pg.edges if p <= X))
        cyc = inner.find_cycle()
        if cyc is not None:
            eid = _max_edge(H, cyc)
            return ImproveOutcome(pi.without(eid), seq, Reason.REMOVAL_INNER_CYCLE, eid)
    raise ContractError("cyclic quasigraph without a quotient or inner cycle")


def solve(H: Hypergraph, start: Quasigraph | None = None, simple: bool = False,
          max_steps: int | None = None) -> SkeletalResult:
    pi = Quasigraph.empty(H) if start is None else start
    seq = build_plane_sequence(pi, simple)
    steps = []
    while True:
        out = improve_step(pi, simple, seq)
        if out.done:
            break
        rho = out.quasigraph
        nxt = build_plane_sequence(rho, simple)
        order = compare(seq, nxt)
        if not (order < 0 or (order == 0 and rho.size < pi.size)):
            raise ContractError(f"{out.reason.value} on hyperedge {out.edge} did not improve")
        steps.append(StepRecord(out.reason, out.edge, pi.size, rho.size, order))
        pi, seq = rho, nxt
        if max_steps is not None and len(steps) > max_steps:
            raise ContractError("improvement loop exceeded its step bound")
    if not pi.is_acyclic() or not is_skeletal(pi, seq.final, simple):
        raise ContractError("fixpoint is not acyclic with a skeletal partition")
    return SkeletalResult(pi, seq.final, seq, steps)
