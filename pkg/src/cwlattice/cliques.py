"""Compatibility graphs over k-subsets and maximum clique search.

Vertices are all C(n, k) k-subsets of {0..n-1} in lexicographic order.
In "at least" mode two subsets are adjacent when their symmetric
distance is >= d, so cliques are exactly the (n, k, d) constant weight
codes.  In "exact" mode adjacency requires distance exactly d, the
generalized Johnson graph J(n, k, d/2).

Adjacency rows are Python integers used as bitsets.  The search is
branch-and-bound Bron-Kerbosch with greedy pivoting, pruned by the
remaining candidate count and an optional external upper bound (from
the bounds module); hitting that bound proves optimality early.
Everything is deterministic for a fixed vertex order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from cwlattice.code import ConstantWeightCode

MAX_GROUND_SET = 24
DEFAULT_MAX_VERTICES = 20000
DEFAULT_COUNT_CAP = 10 ** 6


class _Stop(Exception):
    pass


@dataclass(frozen=True)
class CompatibilityGraph:
    n: int
    k: int
    d: int
    exact: bool
    vertices: tuple[tuple[int, ...], ...]
    adjacency: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def is_clique(self, verts) -> bool:
        verts = list(verts)
        return all(
            self.adjacency[u] >> v & 1 for u, v in itertools.combinations(verts, 2)
        )


def build_graph(
    n: int,
    k: int,
    d: int,
    exact: bool = False,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> CompatibilityGraph:
    """Build the subset compatibility graph for the given parameters."""
    if not 1 <= k <= n <= MAX_GROUND_SET:
        raise ValueError(f"need 1 <= k <= n <= {MAX_GROUND_SET}, got k={k}, n={n}")
    if d % 2 or d < 2:
        raise ValueError(f"distance must be a positive even number, got {d}")
    vertices = tuple(itertools.combinations(range(n), k))
    if len(vertices) > max_vertices:
        raise ValueError(
            f"graph would have {len(vertices)} vertices, over the limit {max_vertices}"
        )
    masks = [sum(1 << i for i in cw) for cw in vertices]
    # symmetric distance of equal-size sets: 2 * (k - |intersection|)
    target = k - d // 2
    adjacency = [0] * len(vertices)
    for a in range(len(vertices)):
        ma = masks[a]
        for b in range(a + 1, len(vertices)):
            inter = (ma & masks[b]).bit_count()
            ok = inter == target if exact else inter <= target
            if ok:
                adjacency[a] |= 1 << b
                adjacency[b] |= 1 << a
    return CompatibilityGraph(
        n=n, k=k, d=d, exact=exact, vertices=vertices, adjacency=tuple(adjacency)
    )


@dataclass
class CliqueResult:
    size: int
    witnesses: tuple[tuple[int, ...], ...]
    complete: bool
    elapsed: float


@dataclass
class CountResult:
    count: int
    capped: bool
    complete: bool
    elapsed: float


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _greedy_cliques(graph: CompatibilityGraph) -> list[int]:
    """Best greedy clique over a few deterministic vertex orders."""
    V = len(graph)
    orders = [
        range(V),
        sorted(range(V), key=lambda v: -graph.degree(v)),
    ]
    best: list[int] = []
    for order in orders:
        cand = (1 << V) - 1
        cur = []
        for v in order:
            if cand >> v & 1:
                cur.append(v)
                cand &= graph.adjacency[v]
        if len(cur) > len(best):
            best = sorted(cur)
    return best


def max_clique(
    graph: CompatibilityGraph,
    lower_bound: int = 0,
    upper_bound: int | None = None,
    timeout: float | None = None,
) -> CliqueResult:
    """Exact maximum clique size with one witness.

    ``lower_bound`` only tightens pruning (use it when a clique of that
    size is already known to exist elsewhere).  ``upper_bound`` lets the
    search stop as soon as a clique meeting a proven cap is found.  On
    timeout the best clique so far is returned flagged incomplete.
    """
    adjacency = graph.adjacency
    V = len(adjacency)
    started = time.monotonic()
    deadline = started + timeout if timeout is not None else None
    best_verts = _greedy_cliques(graph)
    state = {"best": max(len(best_verts), lower_bound), "calls": 0, "timed_out": False}

    def _result(complete: bool) -> CliqueResult:
        # a witness is only reported when it actually has the reported size
        have_witness = best_verts and len(best_verts) == state["best"]
        return CliqueResult(
            size=state["best"],
            witnesses=(tuple(best_verts),) if have_witness else (),
            complete=complete,
            elapsed=time.monotonic() - started,
        )

    if upper_bound is not None and state["best"] >= upper_bound:
        return _result(True)

    def expand(chosen: list[int], cands: int) -> None:
        nonlocal best_verts
        state["calls"] += 1
        if deadline is not None and state["calls"] % 4096 == 0:
            if time.monotonic() > deadline:
                state["timed_out"] = True
                raise _Stop
        if not cands:
            if len(chosen) > state["best"]:
                state["best"] = len(chosen)
                best_verts = chosen.copy()
                if upper_bound is not None and state["best"] >= upper_bound:
                    raise _Stop
            return
        if len(chosen) + cands.bit_count() <= state["best"]:
            return
        # pivot on the candidate covering most of the candidate set
        pivot, cover = -1, -1
        for u in _bits(cands):
            c = (cands & adjacency[u]).bit_count()
            if c > cover:
                pivot, cover = u, c
        for v in _bits(cands & ~adjacency[pivot]):
            chosen.append(v)
            expand(chosen, cands & adjacency[v])
            chosen.pop()
            cands ^= 1 << v
            if len(chosen) + cands.bit_count() <= state["best"]:
                return

    complete = True
    try:
        if V:
            expand([], (1 << V) - 1)
    except _Stop:
        complete = not state["timed_out"]
    return _result(complete)


def count_maximum_cliques(
    graph: CompatibilityGraph,
    size: int,
    cap: int = DEFAULT_COUNT_CAP,
    timeout: float | None = None,
) -> CountResult:
    """Exact count of cliques of the given size (the known maximum).

    Enumerates vertices in ascending order so each clique is visited
    once.  Stops early when the count exceeds ``cap`` or the timeout
    expires, flagging the result accordingly.
    """
    if size < 1:
        raise ValueError("clique size must be positive")
    adjacency = graph.adjacency
    V = len(adjacency)
    started = time.monotonic()
    deadline = started + timeout if timeout is not None else None
    above = [~((1 << (v + 1)) - 1) for v in range(V)]
    state = {"count": 0, "calls": 0, "capped": False, "timed_out": False}

    def rec(cands: int, need: int) -> None:
        state["calls"] += 1
        if deadline is not None and state["calls"] % 4096 == 0:
            if time.monotonic() > deadline:
                state["timed_out"] = True
                raise _Stop
        if need == 1:
            state["count"] += cands.bit_count()
            if state["count"] > cap:
                state["capped"] = True
                raise _Stop
            return
        if need == 2:
            total = 0
            for v in _bits(cands):
                total += (cands & adjacency[v] & above[v]).bit_count()
            state["count"] += total
            if state["count"] > cap:
                state["capped"] = True
                raise _Stop
            return
        remaining = cands.bit_count()
        for v in _bits(cands):
            if remaining < need:
                return
            remaining -= 1
            sub = cands & adjacency[v] & above[v]
            if sub.bit_count() >= need - 1:
                rec(sub, need - 1)

    complete = True
    try:
        if size == 1:
            state["count"] = V
        elif V:
            rec((1 << V) - 1, size)
    except _Stop:
        complete = False
    return CountResult(
        count=state["count"],
        capped=state["capped"],
        complete=complete,
        elapsed=time.monotonic() - started,
    )


def extract_code(graph: CompatibilityGraph, clique) -> ConstantWeightCode:
    """Turn a clique's vertices into the constant weight code they form."""
    verts = sorted(set(clique))
    if verts and (verts[0] < 0 or verts[-1] >= len(graph)):
        raise ValueError("clique contains unknown vertex indices")
    if not graph.is_clique(verts):
        raise ValueError("vertex set is not a clique of the graph")
    return ConstantWeightCode(graph.n, [graph.vertices[v] for v in verts])
