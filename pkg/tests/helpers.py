"""Independent oracles and generators shared across the test modules."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from cwlattice.cliques import CompatibilityGraph
from cwlattice.code import ConstantWeightCode
from cwlattice.lattice import FiniteLattice


def to_networkx(graph: CompatibilityGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(len(graph)))
    for v in range(len(graph)):
        mask = graph.adjacency[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            if u > v:
                G.add_edge(v, u)
    return G


def nx_max_clique_size(graph: CompatibilityGraph) -> int:
    G = to_networkx(graph)
    return max((len(c) for c in nx.find_cliques(G)), default=0)


def brute_max_clique_size(graph: CompatibilityGraph) -> int:
    """Exhaustive subset scan; only for very small graphs."""
    V = len(graph)
    assert V <= 18, "exhaustive scan is exponential"
    adjacency = graph.adjacency
    best = 0
    for mask in range(1 << V):
        size = mask.bit_count()
        if size <= best:
            continue
        verts = [v for v in range(V) if mask >> v & 1]
        if all(adjacency[u] >> v & 1 for u, v in itertools.combinations(verts, 2)):
            best = size
    return best


def glb_oracle(lat: FiniteLattice, a: str, b: str) -> str:
    """Greatest lower bound recomputed directly from the order relation."""
    commons = [z for z in lat.elements if lat.leq(z, a) and lat.leq(z, b)]
    greatest = [z for z in commons if all(lat.leq(w, z) for w in commons)]
    assert len(greatest) == 1
    return greatest[0]


def lub_oracle(lat: FiniteLattice, a: str, b: str) -> str:
    commons = [z for z in lat.elements if lat.leq(a, z) and lat.leq(b, z)]
    least = [z for z in commons if all(lat.leq(z, w) for w in commons)]
    assert len(least) == 1
    return least[0]


def all_lattices(m: int):
    """Every lattice on m labeled elements whose numeric order is a linear
    extension (so every lattice shape appears at least once).

    Orders are enumerated as upper-triangular relation masks; element 0
    must be the bottom and element m-1 the top.
    """
    if m == 1:
        yield FiniteLattice(["0"], [])
        return
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for mask in range(1 << len(pairs)):
        rows = [1 << i for i in range(m)]
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rows[i] |= 1 << j
        # transitivity: i <= j forces row_j subset of row_i
        ok = True
        for i in range(m):
            r = rows[i] & ~(1 << i)
            while r and ok:
                low = r & -r
                j = low.bit_length() - 1
                r ^= low
                if rows[j] & ~rows[i]:
                    ok = False
        if not ok:
            continue
        full = (1 << m) - 1
        if rows[0] != full:  # 0 must be the bottom
            continue
        if any(not rows[i] >> (m - 1) & 1 for i in range(m)):  # m-1 the top
            continue
        down = [0] * m
        for i in range(m):
            for j in range(m):
                if rows[i] >> j & 1:
                    down[j] |= 1 << i
        # unique glb and lub for every pair
        is_lattice = True
        for i in range(m):
            if not is_lattice:
                break
            for j in range(i + 1, m):
                commons = down[i] & down[j]
                maximal = 0
                r = commons
                while r:
                    low = r & -r
                    z = low.bit_length() - 1
                    r ^= low
                    if rows[z] & commons == 1 << z:
                        maximal += 1
                if maximal != 1:
                    is_lattice = False
                    break
                commons = rows[i] & rows[j]
                minimal = 0
                r = commons
                while r:
                    low = r & -r
                    z = low.bit_length() - 1
                    r ^= low
                    if down[z] & commons == 1 << z:
                        minimal += 1
                if minimal != 1:
                    is_lattice = False
                    break
        if not is_lattice:
            continue
        labels = [str(i) for i in range(m)]
        order_pairs = [
            (labels[i], labels[j])
            for i in range(m)
            for j in range(m)
            if i != j and rows[i] >> j & 1
        ]
        yield FiniteLattice.from_order(labels, order_pairs)


def random_constant_weight_code(n: int, k: int, d: int, rng: random.Random) -> ConstantWeightCode:
    """Greedy random code with minimum distance >= d (at least 2 codewords)."""
    subsets = list(itertools.combinations(range(n), k))
    rng.shuffle(subsets)
    chosen: list[tuple[int, ...]] = []
    for cand in subsets:
        cs = set(cand)
        if all(len(cs ^ set(c)) >= d for c in chosen):
            chosen.append(cand)
    assert len(chosen) >= 2
    return ConstantWeightCode(n, chosen)


def johnson2_recursive(n: int, k: int, delta: int) -> int:
    """The unrestricted Johnson bound via its defining recursion."""
    if k == delta:
        return n // k
    return n * johnson2_recursive(n - 1, k - 1, delta) // k
