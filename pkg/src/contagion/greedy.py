"""Deterministic contagious sets by minimum-degree peeling.

Repeatedly delete, among vertices whose current degree is at least k, one
of minimal degree (ties to the smallest id). When every surviving vertex
has degree below k the survivors are returned: they must all be seeded,
and the deleted vertices reactivate in reverse deletion order because
each had >= k surviving-or-later-deleted neighbors at deletion time.

The peel runs on a bucket queue indexed by current degree. Each bucket is
a small binary heap of ids so the tie-break is reproducible; entries go
stale when a degree decrements and are skipped on pop. After deleting a
degree-delta vertex no eligible vertex can sit below delta-1, so the
minimum-eligible cursor backs up at most one step per deletion and total
cursor motion is bounded by the number of degree decrements.
"""

from __future__ import annotations

import heapq

from .bounds import weight_value
from .cascade import ThresholdConfig, is_contagious
from .graph import Graph
from .reports import ContagiousSetReport

__all__ = ["greedy_contagious", "peel_order", "verify_reverse_activation", "is_k_degenerate"]


def peel_order(g: Graph, k: int) -> tuple[list[int], list[int]]:
    """Run the restricted peel; returns (deleted order, surviving set).

    Only vertices with current degree >= k are eligible for deletion.
    """
    n = g.n
    deg = g.degrees.tolist()
    alive = bytearray([1]) * n
    indptr = g.indptr.tolist()
    indices = g.indices
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        if deg[v] >= k:
            buckets[deg[v]].append(v)  # ascending ids already satisfy the heap invariant

    deleted: list[int] = []
    cur = k
    while cur <= maxdeg:
        bucket = buckets[cur]
        while bucket:
            v = bucket[0]
            if alive[v] and deg[v] == cur:
                break
            heapq.heappop(bucket)  # stale entry
        if not bucket:
            cur += 1
            continue
        v = heapq.heappop(bucket)
        alive[v] = 0
        deleted.append(v)
        for u in indices[indptr[v] : indptr[v + 1]].tolist():
            if alive[u]:
                du = deg[u] - 1
                deg[u] = du
                if du >= k:
                    heapq.heappush(buckets[du], u)
        if cur > k:
            cur -= 1  # neighbors of the deleted vertex may now sit one bucket lower
    survivors = [v for v in range(n) if alive[v]]
    return deleted, survivors


def greedy_contagious(g: Graph, cfg: ThresholdConfig) -> ContagiousSetReport:
    """Peel away high-degree vertices; the survivors form a contagious set.

    The result size never exceeds w(G). The certificate records the
    deletion order, which doubles as a reactivation witness (see
    verify_reverse_activation).
    """
    deleted, survivors = peel_order(g, cfg.k)
    verified = is_contagious(g, cfg, survivors)
    if not verified:
        raise RuntimeError("peeling produced a non-contagious set; graph state is corrupt")
    return ContagiousSetReport(
        set=survivors,
        size=len(survivors),
        w=weight_value(g, cfg),
        algorithm="greedy",
        certificate={"deletion_order": deleted},
        verified=True,
    )


def verify_reverse_activation(g: Graph, cfg: ThresholdConfig, report: ContagiousSetReport) -> bool:
    """Replay the certificate: deleted vertices must reactivate in reverse order.

    Starting from the returned set active, each deleted vertex (last
    first) needs >= k already-active neighbors at its turn.
    """
    if "deletion_order" not in report.certificate:
        raise ValueError("report carries no deletion_order certificate")
    active = bytearray(g.n)
    for v in report.set:
        active[v] = 1
    k = cfg.k
    for v in reversed(report.certificate["deletion_order"]):
        live = 0
        for u in g.neighbors(v).tolist():
            live += active[u]
        if live < k:
            return False
        active[v] = 1
    return all(active)


def is_k_degenerate(g: Graph, k: int) -> bool:
    """True iff every induced subgraph has a vertex of degree < k.

    Equivalent check: unrestricted minimum-degree peeling never sees a
    minimum alive degree reaching k.
    """
    if k < 1:
        raise ValueError(f"degeneracy threshold must be >= 1, got {k}")
    n = g.n
    deg = g.degrees.tolist()
    alive = bytearray([1]) * n
    indptr = g.indptr.tolist()
    indices = g.indices
    maxdeg = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxdeg + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)
    cur = 0
    remaining = n
    while remaining:
        while cur <= maxdeg:
            bucket = buckets[cur]
            while bucket and not (alive[bucket[-1]] and deg[bucket[-1]] == cur):
                bucket.pop()
            if bucket:
                break
            cur += 1
        if cur >= k:
            return False
        v = buckets[cur].pop()
        alive[v] = 0
        remaining -= 1
        for u in indices[indptr[v] : indptr[v + 1]].tolist():
            if alive[u]:
                du = deg[u] - 1
                deg[u] = du
                buckets[du].append(u)
        if cur > 0:
            cur -= 1
    return True
