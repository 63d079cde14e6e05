import random

import pytest

from cwlattice import saf
from cwlattice.code import ConstantWeightCode
from cwlattice.saf import (
    EdgeErasure,
    NetworkTopology,
    NoAdversary,
    Outcome,
    RandomSubstitution,
    SymbolMap,
    TargetedSubstitution,
    TopologySpec,
    apply_adversary,
    node_process,
    random_dag,
    run_experiment,
    run_trial,
    sink_recover,
    source_encode,
)

DIRECT = NetworkTopology(layer_sizes=(1, 1), edges=((0, 1),), max_indegree=1)


def test_random_dag_trivial():
    topo = random_dag(layers=2, width=1, max_indegree=1, seed=5)
    assert topo.edges == ((0, 1),)
    assert topo.source == 0 and topo.sink == 1


def test_random_dag_deterministic():
    a = random_dag(layers=5, width=4, max_indegree=3, edge_density=0.4, seed=77)
    b = random_dag(layers=5, width=4, max_indegree=3, edge_density=0.4, seed=77)
    c = random_dag(layers=5, width=4, max_indegree=3, edge_density=0.4, seed=78)
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_random_dag_degree_bounds():
    topo = random_dag(layers=4, width=3, max_indegree=2, seed=42)
    indeg = {}
    for u, v in topo.edges:
        indeg[v] = indeg.get(v, 0) + 1
    for v in range(1, topo.node_count):
        assert 1 <= indeg.get(v, 0) <= 2


def test_random_dag_validation():
    with pytest.raises(ValueError):
        random_dag(layers=1, width=1, max_indegree=1)
    with pytest.raises(ValueError):
        random_dag(layers=3, width=0, max_indegree=1)
    with pytest.raises(ValueError):
        random_dag(layers=3, width=1, max_indegree=1, edge_density=1.5)


def test_topology_validation():
    with pytest.raises(ValueError, match="later layer"):
        NetworkTopology(layer_sizes=(1, 1), edges=((1, 0),), max_indegree=1)
    with pytest.raises(ValueError, match="in-degree"):
        NetworkTopology(layer_sizes=(1, 2, 1), edges=((0, 1), (0, 2)), max_indegree=2)


def test_symbol_map_defaults():
    smap = SymbolMap.default(7)
    assert smap.q == 11
    assert smap.encode(0) == 1 and smap.encode(6) == 7
    assert smap.decode(7) == 6
    assert smap.decode(9) is None
    with pytest.raises(ValueError):
        smap.encode(7)


def test_symbol_map_validation():
    with pytest.raises(ValueError, match="prime"):
        SymbolMap(q=10, table=(1, 2))
    with pytest.raises(ValueError, match="injective"):
        SymbolMap(q=11, table=(1, 1))
    with pytest.raises(ValueError, match="nonzero"):
        SymbolMap(q=11, table=(0, 1))
    with pytest.raises(ValueError, match="q > n"):
        SymbolMap(q=5, table=(1, 2, 3, 4, 1))


def test_source_encode():
    smap = SymbolMap.default(7, q=11)
    assert source_encode((0, 1, 2, 5), smap) == (1, 2, 3, 6)
    assert source_encode((3,), smap) == (4,)
    assert 0 not in source_encode((0, 1, 2, 5), smap)


def test_node_process_examples():
    assert node_process([(3, 5, 2, 7), (3, 5, 2, 7)], 4) == (3, 5, 2, 7)
    assert node_process([(3, 5, 2, 7), (1, 5, 9, 4)], 4) == (3, 5, 2, 7)
    assert node_process([(3, 3, 3, 3)], 4) is None


def test_node_process_idempotent():
    packet = node_process([(4, 1, 9, 2), (8, 1, 5, 2)], 4)
    assert node_process([packet] * 3, 4) == packet


def test_sink_recover_cases():
    smap = SymbolMap.default(7, q=11)
    # intact
    rec = sink_recover([(2, 4, 6, 7)], 4, smap)
    assert rec.indices == (1, 3, 5, 6)
    assert rec.invalid_symbols == 0 and rec.padded_zeros == 0
    # one missing symbol
    rec = sink_recover([(2, 4, 7)], 4, smap)
    assert rec.indices == (1, 3, 6)
    assert rec.padded_zeros == 1
    # substituted symbol still in the image
    rec = sink_recover([(2, 4, 5, 7)], 4, smap)
    assert rec.indices == (1, 3, 4, 6)
    # symbol outside the image counts as invalid
    rec = sink_recover([(2, 4, 10, 7)], 4, smap)
    assert rec.indices == (1, 3, 6)
    assert rec.invalid_symbols == 1


def test_apply_adversary_identity():
    rng = random.Random(0)
    flight = {(0, 1): (1, 2, 3)}
    assert apply_adversary(flight, NoAdversary(), 11, rng) == flight
    assert apply_adversary(flight, RandomSubstitution(prob=0.0), 11, rng) == flight


def test_apply_adversary_never_forges_zero():
    rng = random.Random(3)
    flight = {(0, 1): tuple(range(1, 11))}
    out = apply_adversary(flight, RandomSubstitution(prob=1.0), 11, rng)
    assert all(s != 0 for s in out[(0, 1)])
    assert out[(0, 1)] != flight[(0, 1)]
    with pytest.raises(ValueError, match="zero"):
        TargetedSubstitution(rules=(((0, 1), 3, 0),))


def test_apply_adversary_edge_erasure():
    rng = random.Random(1)
    flight = {(0, 2): (1, 2), (1, 2): (3, 4)}
    out = apply_adversary(flight, EdgeErasure(edges=((0, 2),)), 11, rng)
    assert out == {(1, 2): (3, 4)}
    gone = apply_adversary(flight, EdgeErasure(prob=1.0), 11, rng)
    assert gone == {}


def test_erasure_leaves_disjoint_path_intact(code744, pool744):
    # two parallel source->middle->sink paths; erase one of them
    topo = NetworkTopology(
        layer_sizes=(1, 2, 1),
        edges=((0, 1), (0, 2), (1, 3), (2, 3)),
        max_indegree=2,
    )
    smap = SymbolMap.default(7)
    adversary = EdgeErasure(edges=((0, 1), (1, 3)))
    result = run_trial(topo, code744, pool744, smap, adversary, message_index=2)
    assert result.outcome == Outcome.SUCCESS


def test_trial_clean_channel(code744, pool744):
    smap = SymbolMap.default(7)
    result = run_trial(DIRECT, code744, pool744, smap, NoAdversary(), message_index=0)
    assert result.outcome == Outcome.SUCCESS
    assert result.decoded == code744.codewords[0]
    assert result.decoded_element == pool744.compose(code744.codewords[0])


def test_trial_targeted_substitution_detected(code744, pool744):
    # transmit indices {1,3,5,6}; replace symbol 6 (index 5) with 5 (index 4)
    smap = SymbolMap.default(7)
    adversary = TargetedSubstitution(rules=(((0, 1), 6, 5),))
    result = run_trial(DIRECT, code744, pool744, smap, adversary, message_index=5)
    assert result.outcome == Outcome.DETECTED
    assert result.ties == 3
    assert result.errors_at_sink == 1 and result.erasures_at_sink == 0


def test_trial_single_erasure_succeeds(code744, pool744):
    # substitute symbol 6 by the already present symbol 4: dedup drops it
    smap = SymbolMap.default(7)
    adversary = TargetedSubstitution(rules=(((0, 1), 6, 4),))
    result = run_trial(DIRECT, code744, pool744, smap, adversary, message_index=5)
    assert result.outcome == Outcome.SUCCESS
    assert result.erasures_at_sink == 1 and result.errors_at_sink == 0
    assert result.decoded == (1, 3, 5, 6)


def test_trial_total_erasure_is_node_failure(code744, pool744):
    smap = SymbolMap.default(7)
    adversary = EdgeErasure(edges=((0, 1),))
    result = run_trial(DIRECT, code744, pool744, smap, adversary, message_index=0)
    assert result.outcome == Outcome.NODE_FAILURE


def test_trial_determinism(code744, pool744):
    smap = SymbolMap.default(7)
    adversary = RandomSubstitution(prob=0.3, seed=9)
    topo = random_dag(layers=4, width=3, max_indegree=3, seed=11)
    a = run_trial(topo, code744, pool744, smap, adversary, 4, trial_seed=123)
    b = run_trial(topo, code744, pool744, smap, adversary, 4, trial_seed=123)
    assert a == b


def test_trial_parameter_validation(code744, pool744):
    smap = SymbolMap(q=7, table=(1, 2, 3, 4, 5, 6))
    with pytest.raises(ValueError, match="q > n"):
        run_trial(DIRECT, code744, pool744, smap, NoAdversary(), 0)
    small = ConstantWeightCode(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError, match="pool size"):
        run_trial(DIRECT, small, pool744, SymbolMap.default(3), NoAdversary(), 0)


def test_experiment_clean_statistics(code744, pool744):
    smap = SymbolMap.default(7)
    spec = TopologySpec(layers=4, width=3, max_indegree=3, seed=6)
    stats = run_experiment(code744, pool744, smap, spec, NoAdversary(), trials=200, seed=1)
    assert stats.trials == 200
    assert stats.counts.get(Outcome.SUCCESS, 0) == 200
    assert stats.rate(Outcome.SUCCESS) == 1.0


def test_experiment_csv(tmp_path, code744, pool744):
    smap = SymbolMap.default(7)
    stats = run_experiment(
        code744, pool744, smap, DIRECT,
        RandomSubstitution(prob=0.2, seed=4), trials=20, seed=2,
    )
    out = tmp_path / "trials.csv"
    saf.write_csv(stats, str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "trial,outcome,t,e,decoded_ok"
    assert len(lines) == 21
