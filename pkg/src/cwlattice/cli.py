"""Command line interface.

    cwlattice pool      --sample | --file pool.json [--compose 0,1,2,5] [--decompose HEX]
    cwlattice bounds    --n 7 --k 4 --d 4 [--json]
    cwlattice search    --n 8 --k 4 --d 4 [--exact] [--count] [--cap N] [--timeout S] [--out code.json]
    cwlattice decode    (--code code.json | --sample-code) --received 1,3,6
    cwlattice lattice   --file lattice.json [--element x] [--check-theorem]
    cwlattice simulate  (--code ... --pool ... | --sample) --topology JSON --adversary JSON --trials T [--csv out.csv]
    cwlattice table2    [--count] [--cap N] [--timeout S] [--json]

Exit codes: 0 success, 1 domain errors, 2 usage/schema errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from cwlattice import bounds as bounds_mod
from cwlattice import cliques, data, saf
from cwlattice.code import ConstantWeightCode, decode
from cwlattice.lattice import (
    FiniteLattice,
    MultiplicationTable,
    check_primary,
    check_prime,
)
from cwlattice.pool import full_alphabet, pool_from_json

USAGE_ERROR = 2
DOMAIN_ERROR = 1

TABLE2_ROWS = (
    # (n, k, d, reported size); (10,7,4) is reported as 8 but complement
    # symmetry with (10,3,4) forces 13 - flagged as a known discrepancy.
    (8, 4, 4, 14),
    (8, 5, 4, 8),
    (9, 4, 4, 18),
    (9, 5, 4, 18),
    (9, 7, 4, 4),
    (9, 6, 6, 3),
    (10, 3, 4, 13),
    (10, 7, 4, 8),
    (10, 6, 6, 5),
    (10, 7, 6, 3),
)


class SchemaError(ValueError):
    pass


def _load_json_file(path: str) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise SchemaError(f"{path}: file not found") from None
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _parse_indices(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise SchemaError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj, args, text_lines=None) -> None:
    if getattr(args, "json", False) or text_lines is None:
        payload = json.dumps(obj, indent=2)
    else:
        payload = "\n".join(text_lines)
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _search_upper_bound(n: int, k: int, d: int) -> int:
    """Min proven upper bound over the parameter set and its complement."""
    ub = bounds_mod.bound_report(n, k, d).upper_bound
    nk = n - k
    if 1 <= nk and d <= 2 * min(nk, n - nk):
        ub = min(ub, bounds_mod.bound_report(n, nk, d).upper_bound)
    return ub


def cmd_pool(args) -> int:
    if args.sample:
        pool = data.sample_pool()
    else:
        obj = _load_json_file(args.file)
        pool = pool_from_json(obj)
    result = {"pool": pool.to_json()}
    lines = [f"pool: backend={pool.backend} n={pool.n}"]
    if pool.backend == "poly":
        for i, f in enumerate(pool.constituents):
            lines.append(f"  [{i}] {f.to_hex() if pool.field.p == 2 else list(f.coeffs)}")
    if args.compose:
        subset = _parse_indices(args.compose)
        element = pool.compose(subset)
        if pool.backend == "poly":
            shown = element.to_hex() if pool.field.p == 2 else list(element.coeffs)
        else:
            shown = sorted(element)
        result["compose"] = {"subset": list(subset), "element": _jsonable(shown)}
        lines.append(f"compose {list(subset)} -> {shown}")
    if args.decompose:
        from cwlattice.gf import Polynomial

        if pool.backend != "poly" or pool.field.p != 2:
            raise SchemaError("--decompose takes a hex string, needs a binary poly pool")
        element = Polynomial.from_hex(args.decompose, pool.field)
        subset = pool.decompose(element)
        result["decompose"] = {"element": args.decompose, "subset": list(subset)}
        lines.append(f"decompose {args.decompose} -> {list(subset)}")
    _emit(result, args, lines)
    return 0


def _jsonable(x):
    if isinstance(x, frozenset):
        return sorted(x)
    return x


def cmd_bounds(args) -> int:
    report = bounds_mod.bound_report(args.n, args.k, args.d)
    lines = [f"bounds for (n={args.n}, k={args.k}, d={args.d})"]
    for e in report.entries:
        mark = e.value if e.applicable else f"not applicable ({e.reason})"
        lines.append(f"  {e.name:22s} {mark}")
    lines.append(f"  upper bound: {report.upper_bound}")
    lines.append(f"  existence lower bound: {report.lower_bound}")
    _emit(report.to_json(), args, lines)
    return 0


def cmd_search(args) -> int:
    graph = cliques.build_graph(args.n, args.k, args.d, exact=args.exact)
    upper = None if args.exact else _search_upper_bound(args.n, args.k, args.d)
    result = cliques.max_clique(graph, upper_bound=upper, timeout=args.timeout)
    payload = {
        "n": args.n,
        "k": args.k,
        "d": args.d,
        "mode": "exact" if args.exact else "at_least",
        "max_size": result.size,
        "complete": result.complete,
        "elapsed": round(result.elapsed, 3),
    }
    lines = [
        f"max clique for (n={args.n}, k={args.k}, d={args.d}, "
        f"{'exact' if args.exact else 'at least'}): {result.size}"
        + ("" if result.complete else " (timeout, best so far)")
    ]
    if result.witnesses:
        code = cliques.extract_code(graph, result.witnesses[0])
        payload["code"] = code.to_json()
        lines.append(f"witness code: {code.to_json()['codewords']}")
    if args.count:
        counted = cliques.count_maximum_cliques(
            graph, result.size, cap=args.cap, timeout=args.timeout
        )
        payload["count"] = counted.count
        payload["count_capped"] = counted.capped
        payload["count_complete"] = counted.complete
        suffix = " (capped)" if counted.capped else ("" if counted.complete else " (timeout)")
        lines.append(f"maximum cliques of size {result.size}: {counted.count}{suffix}")
    _emit(payload, args, lines)
    return 0


def cmd_decode(args) -> int:
    if args.sample_code:
        code = data.sample_code()
    else:
        code = ConstantWeightCode.from_json(_load_json_file(args.code))
    received = _parse_indices(args.received)
    result = decode(received, code)
    payload = {
        "received": sorted(received),
        "distance": result.distance,
        "candidates": [list(c) for c in result.candidates],
        "ambiguous": result.ambiguous,
    }
    if result.ambiguous:
        lines = [
            f"Ambiguous at distance {result.distance}: "
            + ", ".join(str(list(c)) for c in result.candidates)
        ]
    else:
        lines = [f"Decoded {list(result.codeword)} (distance {result.distance})"]
    _emit(payload, args, lines)
    return 0


def cmd_lattice(args) -> int:
    obj = _load_json_file(args.file)
    try:
        lat = FiniteLattice.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"{args.file}: bad lattice document: {exc}") from None
    payload = {
        "elements": list(lat.elements),
        "top": lat.top,
        "bottom": lat.bottom,
        "meet_irreducibles": lat.meet_irreducibles(),
    }
    lines = [
        f"lattice with {len(lat)} elements, bottom={lat.bottom}, top={lat.top}",
        f"meet-irreducibles: {payload['meet_irreducibles']}",
    ]
    if args.check_theorem:
        report = lat.decomposition_theorem_report()
        payload["theorem"] = report.to_json()
        lines.append(
            f"unique decomposition: {report.unique_decomposition}; "
            f"birkhoff: {report.birkhoff}; m3-free: {report.m3_free}; "
            f"sides agree: {report.agree}"
        )
    if args.element is not None:
        decs = lat.irreducible_decompositions(args.element)
        payload["decompositions"] = [sorted(s) for s in decs]
        lines.append(f"decompositions of {args.element}: {[sorted(s) for s in decs]}")
    if "mult" in obj:
        table = MultiplicationTable(lat, obj["mult"])
        payload["prime"] = {e: check_prime(lat, table, e) for e in lat.elements}
        payload["primary"] = {e: check_primary(lat, table, e) for e in lat.elements}
        primes = [e for e, ok in payload["prime"].items() if ok]
        primaries = [e for e, ok in payload["primary"].items() if ok]
        lines.append(f"prime elements: {primes}")
        lines.append(f"primary elements: {primaries}")
    _emit(payload, args, lines)
    return 0


def _adversary_from_json(obj: dict) -> saf.Adversary:
    kind = obj.get("type", "none")
    if kind == "none":
        return saf.NoAdversary()
    if kind == "random_substitution":
        return saf.RandomSubstitution(prob=obj["prob"], seed=obj.get("seed", 0))
    if kind == "targeted_substitution":
        rules = tuple(
            (tuple(r["edge"]), r["old"], r["new"]) for r in obj["rules"]
        )
        return saf.TargetedSubstitution(rules=rules)
    if kind == "edge_erasure":
        return saf.EdgeErasure(
            prob=obj.get("prob", 0.0),
            edges=tuple(tuple(e) for e in obj.get("edges", [])),
            seed=obj.get("seed", 0),
        )
    raise SchemaError(f"unknown adversary type {kind!r}")


def cmd_simulate(args) -> int:
    if args.sample:
        pool = data.sample_pool()
        code = data.sample_code()
    else:
        if not args.code or not args.pool:
            raise SchemaError("simulate needs --code and --pool (or --sample)")
        code = ConstantWeightCode.from_json(_load_json_file(args.code))
        pool = pool_from_json(_load_json_file(args.pool))
    try:
        topo_obj = json.loads(args.topology)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--topology: invalid JSON: {exc.msg}") from None
    spec = saf.TopologySpec(
        layers=topo_obj["layers"],
        width=topo_obj["width"],
        max_indegree=topo_obj.get("indegree", topo_obj.get("max_indegree", 3)),
        edge_density=topo_obj.get("density", 0.5),
        seed=topo_obj.get("seed", args.seed),
    )
    try:
        adv_obj = json.loads(args.adversary) if args.adversary else {"type": "none"}
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--adversary: invalid JSON: {exc.msg}") from None
    adversary = _adversary_from_json(adv_obj)
    symbol_map = saf.SymbolMap.default(code.n)
    stats = saf.run_experiment(
        code, pool, symbol_map, spec, adversary, trials=args.trials, seed=args.seed
    )
    if args.csv:
        saf.write_csv(stats, args.csv)
    payload = stats.to_json()
    lines = [f"{args.trials} trials, q={symbol_map.q}"]
    for outcome in saf.Outcome:
        lines.append(
            f"  {outcome.value:12s} {stats.counts.get(outcome, 0):6d}"
            f"  ({stats.rate(outcome):.3f})"
        )
    _emit(payload, args, lines)
    return 0


def cmd_table2(args) -> int:
    rows_out = []
    lines = [
        f"{'(n,k,d)':>10s} {'bound':>6s} {'found':>6s} {'reported':>9s} "
        f"{'count':>8s} {'time':>7s}  notes"
    ]
    for n, k, d, reported in TABLE2_ROWS:
        graph = cliques.build_graph(n, k, d)
        upper = _search_upper_bound(n, k, d)
        result = cliques.max_clique(graph, upper_bound=upper, timeout=args.timeout)
        notes = []
        if not result.complete:
            notes.append("timeout: size is a lower bound")
        if result.complete and result.size != reported:
            notes.append(f"disagrees with reported {reported}")
        count_txt = ""
        count_payload = None
        if args.count and result.complete:
            counted = cliques.count_maximum_cliques(
                graph, result.size, cap=args.cap, timeout=args.timeout
            )
            count_payload = {
                "count": counted.count,
                "capped": counted.capped,
                "complete": counted.complete,
            }
            count_txt = str(counted.count)
            if counted.capped:
                count_txt = f">{args.cap}"
            elif not counted.complete:
                count_txt += "+?"
        rows_out.append(
            {
                "n": n,
                "k": k,
                "d": d,
                "upper_bound": upper,
                "max_size": result.size,
                "complete": result.complete,
                "reported_size": reported,
                "elapsed": round(result.elapsed, 3),
                "count": count_payload,
                "notes": notes,
            }
        )
        lines.append(
            f"({n:2d},{k},{d}) {upper:6d} {result.size:6d} {reported:9d} "
            f"{count_txt:>8s} {result.elapsed:6.2f}s  {'; '.join(notes)}"
        )
    _emit({"rows": rows_out}, args, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cwlattice",
        description="Constant weight codes from uniquely decomposable lattice elements.",
    )
    parser.add_argument("--seed", type=int, default=0, help="global random seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pool", help="load, validate and use a constituent pool")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="pool JSON document")
    src.add_argument("--sample", action="store_true", help="use the bundled sample pool")
    p.add_argument("--compose", metavar="I,J,...", help="compose an index subset")
    p.add_argument("--decompose", metavar="HEX", help="decompose a binary element")
    _common_output(p)
    p.set_defaults(func=cmd_pool)

    p = sub.add_parser("bounds", help="evaluate all size bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    _common_output(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="maximum clique search for optimal codes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--exact", action="store_true",
                   help="adjacency at distance exactly d instead of at least d")
    p.add_argument("--count", action="store_true", help="also count maximum cliques")
    p.add_argument("--cap", type=int, default=cliques.DEFAULT_COUNT_CAP)
    p.add_argument("--timeout", type=float, default=None, help="seconds per search")
    _common_output(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("decode", help="minimum distance decoding")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", help="code catalog JSON")
    src.add_argument("--sample-code", action="store_true",
                     help="use the bundled (7,4,4) code")
    p.add_argument("--received", required=True, metavar="I,J,...",
                   help="received index set")
    _common_output(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("lattice", help="analyze a finite lattice document")
    p.add_argument("--file", required=True, help="lattice JSON document")
    p.add_argument("--element", help="list irreducible decompositions of one element")
    p.add_argument("--check-theorem", action="store_true",
                   help="check the unique-decomposition equivalence")
    _common_output(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("simulate", help="store-and-forward network experiments")
    p.add_argument("--code", help="code catalog JSON")
    p.add_argument("--pool", help="pool JSON")
    p.add_argument("--sample", action="store_true",
                   help="use the bundled pool and (7,4,4) code")
    p.add_argument("--topology", required=True,
                   help='JSON, e.g. {"layers":4,"width":3,"indegree":3,"density":0.5,"seed":1}')
    p.add_argument("--adversary", default="",
                   help='JSON, e.g. {"type":"random_substitution","prob":0.05}')
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--csv", help="write per-trial rows to this CSV file")
    _common_output(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("table2", help="run the bundled optimal-code parameter sweep")
    p.add_argument("--count", action="store_true", help="also count maximum cliques")
    p.add_argument("--cap", type=int, default=cliques.DEFAULT_COUNT_CAP)
    p.add_argument("--timeout", type=float, default=120.0, help="seconds per row")
    _common_output(p)
    p.set_defaults(func=cmd_table2)

    return parser


def _common_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine readable output")
    p.add_argument("--out", help="write output to this file instead of stdout")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
