"""Store-and-forward unicast simulator over random layered DAGs.

The source maps its codeword (a k-subset of constituent indices) to a
packet of k distinct nonzero symbols of F_q, q prime and larger than
the pool.  Every intermediate node concatenates its incoming packets in
edge order, keeps the first occurrence of each distinct nonzero symbol
in a single scan, and forwards the first k of them; with fewer than k
distinct symbols the node declares a failure and stays silent.  The
sink does the same, pads missing positions with zeros, inverts the
symbol map (unknown nonzero symbols count as erasures) and hands the
recovered index set to the minimum distance decoder.

An adversary may substitute symbols on edges or erase whole edges.
Substituting a symbol by one already present in the packet collapses
at the dedup step, which is exactly how erasures arise in this scheme.

All randomness is seeded; a trial is a pure function of its seeds.
"""

from __future__ import annotations

import csv
import enum
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from cwlattice.code import ConstantWeightCode, decode
from cwlattice.gf import is_prime, next_prime

Edge = tuple[int, int]
Packet = tuple[int, ...]


@dataclass(frozen=True)
class NetworkTopology:
    """Layered DAG with node 0 the source and the last node the sink."""

    layer_sizes: tuple[int, ...]
    edges: tuple[Edge, ...]
    max_indegree: int

    def __post_init__(self):
        layer_of = self.layer_of_node()
        indeg: dict[int, int] = {}
        for u, v in self.edges:
            if layer_of[u] >= layer_of[v]:
                raise ValueError(f"edge ({u}, {v}) does not go to a later layer")
            indeg[v] = indeg.get(v, 0) + 1
        for v in range(1, self.node_count):
            if not 1 <= indeg.get(v, 0) <= self.max_indegree:
                raise ValueError(
                    f"node {v} has in-degree {indeg.get(v, 0)}, "
                    f"need 1..{self.max_indegree}"
                )

    @property
    def node_count(self) -> int:
        return sum(self.layer_sizes)

    @property
    def source(self) -> int:
        return 0

    @property
    def sink(self) -> int:
        return self.node_count - 1

    def layer_of_node(self) -> list[int]:
        out = []
        for layer, size in enumerate(self.layer_sizes):
            out.extend([layer] * size)
        return out

    def in_edges(self, v: int) -> list[Edge]:
        return sorted((u, w) for u, w in self.edges if w == v)

    def to_json(self) -> dict:
        return {
            "layer_sizes": list(self.layer_sizes),
            "edges": [list(e) for e in self.edges],
            "max_indegree": self.max_indegree,
        }


def random_dag(
    layers: int,
    width: int,
    max_indegree: int,
    edge_density: float = 0.5,
    seed: int = 0,
) -> NetworkTopology:
    """Seeded random layered DAG; identical seeds give identical topologies.

    Layer 0 is the single source, the last layer the single sink, and
    the layers between hold ``width`` nodes each.  Candidate edges run
    from any earlier layer to any later node; after density sampling,
    each non-source node is repaired to in-degree between 1 and
    ``max_indegree``.
    """
    if layers < 2:
        raise ValueError("need at least source and sink layers")
    if width < 1 or max_indegree < 1:
        raise ValueError("width and max_indegree must be positive")
    if not 0.0 <= edge_density <= 1.0:
        raise ValueError("edge density must lie in [0, 1]")
    rng = random.Random(seed)
    layer_sizes = (1, *([width] * (layers - 2)), 1)
    layer_of = []
    for layer, size in enumerate(layer_sizes):
        layer_of.extend([layer] * size)
    total = len(layer_of)
    edges: list[Edge] = []
    for v in range(1, total):
        earlier = [u for u in range(total) if layer_of[u] < layer_of[v]]
        chosen = [u for u in earlier if rng.random() < edge_density]
        if not chosen:
            chosen = [rng.choice(earlier)]
        if len(chosen) > max_indegree:
            chosen = sorted(rng.sample(chosen, max_indegree))
        edges.extend((u, v) for u in chosen)
    return NetworkTopology(
        layer_sizes=layer_sizes, edges=tuple(sorted(edges)), max_indegree=max_indegree
    )


@dataclass(frozen=True)
class SymbolMap:
    """Injective map from constituent indices to nonzero symbols of F_q."""

    q: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"field size {self.q} is not prime")
        if len(self.table) >= self.q:
            raise ValueError("need q > n to embed the pool in the nonzero symbols")
        if len(set(self.table)) != len(self.table):
            raise ValueError("symbol map must be injective")
        if any(not 1 <= s < self.q for s in self.table):
            raise ValueError("symbols must be nonzero field elements")

    @classmethod
    def default(cls, n: int, q: int | None = None) -> "SymbolMap":
        """Index i maps to i + 1, over the smallest prime exceeding n by default."""
        if q is None:
            q = next_prime(n)
        return cls(q=q, table=tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.table)

    def encode(self, index: int) -> int:
        if not 0 <= index < len(self.table):
            raise ValueError(f"index {index} outside the map domain")
        return self.table[index]

    def decode(self, symbol: int) -> int | None:
        """Constituent index of a symbol, or None if not in the image."""
        try:
            return self.table.index(symbol)
        except ValueError:
            return None


def source_encode(codeword: Iterable[int], symbol_map: SymbolMap) -> Packet:
    return tuple(symbol_map.encode(i) for i in codeword)


def node_process(incoming: Sequence[Packet], k: int) -> Packet | None:
    """First k distinct nonzero symbols in scan order, or None on failure."""
    seen: set[int] = set()
    out: list[int] = []
    for packet in incoming:
        for s in packet:
            if s and s not in seen:
                seen.add(s)
                out.append(s)
                if len(out) == k:
                    return tuple(out)
    return None


@dataclass(frozen=True)
class RecoveredSet:
    """What the sink hands to the decoder."""

    indices: tuple[int, ...]
    invalid_symbols: int
    padded_zeros: int


def sink_recover(incoming: Sequence[Packet], k: int, symbol_map: SymbolMap) -> RecoveredSet:
    """Dedup like an intermediate node, zero-pad to k, invert the map.

    Nonzero symbols outside the map image are discarded and counted;
    they cost the decoder one erasure each.
    """
    seen: set[int] = set()
    symbols: list[int] = []
    for packet in incoming:
        for s in packet:
            if s and s not in seen:
                seen.add(s)
                symbols.append(s)
                if len(symbols) == k:
                    break
        if len(symbols) == k:
            break
    padded = k - len(symbols)
    indices = []
    invalid = 0
    for s in symbols:
        i = symbol_map.decode(s)
        if i is None:
            invalid += 1
        else:
            indices.append(i)
    return RecoveredSet(
        indices=tuple(sorted(indices)), invalid_symbols=invalid, padded_zeros=padded
    )


# ---------------------------------------------------------------------------
# adversary models

@dataclass(frozen=True)
class NoAdversary:
    kind = "none"


@dataclass(frozen=True)
class RandomSubstitution:
    """Each in-flight symbol is replaced, with the given probability,
    by a uniformly random different nonzero symbol."""

    prob: float
    seed: int = 0
    kind = "random_substitution"


@dataclass(frozen=True)
class TargetedSubstitution:
    """Rules (edge, old, new): on that edge every old symbol becomes new."""

    rules: tuple[tuple[Edge, int, int], ...]
    kind = "targeted_substitution"

    def __post_init__(self):
        for _, _, new in self.rules:
            if new == 0:
                raise ValueError("substitutions may not forge the zero symbol")


@dataclass(frozen=True)
class EdgeErasure:
    """Drop whole packets: the listed edges always, others with ``prob``."""

    prob: float = 0.0
    edges: tuple[Edge, ...] = ()
    seed: int = 0
    kind = "edge_erasure"


Adversary = NoAdversary | RandomSubstitution | TargetedSubstitution | EdgeErasure


def apply_adversary(
    flight: dict[Edge, Packet],
    model: Adversary,
    q: int,
    rng: random.Random,
) -> dict[Edge, Packet]:
    """Corrupt the packets in flight; erased edges vanish from the dict."""
    if isinstance(model, NoAdversary):
        return dict(flight)
    out: dict[Edge, Packet] = {}
    if isinstance(model, RandomSubstitution):
        for edge in sorted(flight):
            packet = []
            for s in flight[edge]:
                if rng.random() < model.prob:
                    others = [x for x in range(1, q) if x != s]
                    s = rng.choice(others)
                packet.append(s)
            out[edge] = tuple(packet)
        return out
    if isinstance(model, TargetedSubstitution):
        for edge in sorted(flight):
            packet = list(flight[edge])
            for rule_edge, old, new in model.rules:
                if rule_edge == edge:
                    packet = [new if s == old else s for s in packet]
            out[edge] = tuple(packet)
        return out
    if isinstance(model, EdgeErasure):
        doomed = set(model.edges)
        for edge in sorted(flight):
            if edge in doomed:
                continue
            if model.prob and rng.random() < model.prob:
                continue
            out[edge] = flight[edge]
        return out
    raise TypeError(f"unknown adversary model {model!r}")


def _adversary_rng(model: Adversary, trial_seed: int) -> random.Random:
    base = getattr(model, "seed", 0)
    return random.Random(f"adversary:{base}:{trial_seed}")


# ---------------------------------------------------------------------------
# trials

class Outcome(enum.Enum):
    SUCCESS = "success"
    DETECTED = "detected"
    WRONG = "wrong"
    NODE_FAILURE = "node_failure"


@dataclass(frozen=True)
class TrialResult:
    transmitted: tuple[int, ...]
    outcome: Outcome
    errors_at_sink: int
    erasures_at_sink: int
    received: tuple[int, ...]
    decoded: tuple[int, ...] | None
    ties: int
    decoded_element: object = None


def run_trial(
    topology: NetworkTopology,
    code: ConstantWeightCode,
    pool,
    symbol_map: SymbolMap,
    adversary: Adversary,
    message_index: int,
    trial_seed: int = 0,
) -> TrialResult:
    """One full source -> network -> sink -> decoder pass."""
    if symbol_map.q <= code.n:
        raise ValueError("symbol field must satisfy q > n")
    if symbol_map.n < code.n:
        raise ValueError("symbol map does not cover the pool")
    if pool is not None and getattr(pool, "n", code.n) != code.n:
        raise ValueError("pool size differs from the code's ground set")
    transmitted = code.codewords[message_index]
    k = code.k
    rng = _adversary_rng(adversary, trial_seed)

    emitted: dict[int, Packet] = {topology.source: source_encode(transmitted, symbol_map)}
    sink_packets: list[Packet] = []
    for v in range(1, topology.node_count):
        flight = {
            (u, w): emitted[u]
            for (u, w) in topology.in_edges(v)
            if u in emitted
        }
        flight = apply_adversary(flight, adversary, symbol_map.q, rng)
        packets = [flight[e] for e in sorted(flight)]
        if v == topology.sink:
            sink_packets = packets
            break
        if packets:
            forwarded = node_process(packets, k)
            if forwarded is not None:
                emitted[v] = forwarded

    if not sink_packets:
        return TrialResult(
            transmitted=transmitted,
            outcome=Outcome.NODE_FAILURE,
            errors_at_sink=0,
            erasures_at_sink=k,
            received=(),
            decoded=None,
            ties=0,
        )

    recovered = sink_recover(sink_packets, k, symbol_map)
    received = set(recovered.indices)
    truth = set(transmitted)
    errors = len(received - truth)
    erasures = len(truth - received) - errors

    result = decode(recovered.indices, code)
    if result.ambiguous:
        outcome = Outcome.DETECTED
        decoded = None
        element = None
    elif result.codeword == transmitted:
        outcome = Outcome.SUCCESS
        decoded = result.codeword
        element = pool.compose(decoded) if pool is not None else None
    else:
        outcome = Outcome.WRONG
        decoded = result.codeword
        element = pool.compose(decoded) if pool is not None else None
    return TrialResult(
        transmitted=transmitted,
        outcome=outcome,
        errors_at_sink=errors,
        erasures_at_sink=erasures,
        received=recovered.indices,
        decoded=decoded,
        ties=len(result.candidates),
        decoded_element=element,
    )


@dataclass(frozen=True)
class TopologySpec:
    """Parameters for regenerating a fresh random DAG per trial."""

    layers: int
    width: int
    max_indegree: int
    edge_density: float = 0.5
    seed: int = 0


@dataclass
class ExperimentStats:
    trials: int = 0
    counts: dict = field(default_factory=dict)
    results: list = field(default_factory=list)

    def rate(self, outcome: Outcome) -> float:
        return self.counts.get(outcome, 0) / self.trials if self.trials else 0.0

    def to_json(self) -> dict:
        return {
            "trials": self.trials,
            "counts": {o.value: self.counts.get(o, 0) for o in Outcome},
            "rates": {o.value: self.rate(o) for o in Outcome},
        }


def run_experiment(
    code: ConstantWeightCode,
    pool,
    symbol_map: SymbolMap,
    topology: NetworkTopology | TopologySpec,
    adversary: Adversary,
    trials: int,
    seed: int = 0,
    keep_results: bool = True,
) -> ExperimentStats:
    """Seeded batch of independent trials with per-outcome counts."""
    stats = ExperimentStats()
    for t in range(trials):
        trial_rng = random.Random(f"experiment:{seed}:{t}")
        if isinstance(topology, TopologySpec):
            topo = random_dag(
                layers=topology.layers,
                width=topology.width,
                max_indegree=topology.max_indegree,
                edge_density=topology.edge_density,
                seed=trial_rng.randrange(2 ** 32) ^ topology.seed,
            )
        else:
            topo = topology
        message = trial_rng.randrange(len(code))
        result = run_trial(topo, code, pool, symbol_map, adversary, message, trial_seed=t ^ seed)
        stats.trials += 1
        stats.counts[result.outcome] = stats.counts.get(result.outcome, 0) + 1
        if keep_results:
            stats.results.append(result)
    return stats


def write_csv(stats: ExperimentStats, path: str) -> None:
    """Columns: trial, outcome, t, e, decoded_ok."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "outcome", "t", "e", "decoded_ok"])
        for i, r in enumerate(stats.results):
            ok = int(r.outcome == Outcome.SUCCESS)
            writer.writerow([i, r.outcome.value, r.errors_at_sink, r.erasures_at_sink, ok])
