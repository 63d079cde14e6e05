import json

import pytest

from cwlattice.cli import main
from cwlattice.code import ConstantWeightCode
from cwlattice.data import sample_code, sample_pool
from cwlattice.lattice import pentagon_n5
from cwlattice.pool import pool_from_json


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_bounds_text(capsys):
    rc, out, _ = run(capsys, "bounds", "--n", "7", "--k", "4", "--d", "4")
    assert rc == 0
    assert "johnson1" in out and "upper bound: 7" in out


def test_bounds_json_roundtrip(capsys):
    rc, out, _ = run(capsys, "bounds", "--n", "8", "--k", "4", "--d", "4", "--json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["upper_bound"] == 14


def test_bounds_domain_error(capsys):
    rc, _, err = run(capsys, "bounds", "--n", "7", "--k", "4", "--d", "3")
    assert rc == 1
    assert "error" in err


def test_pool_sample_compose_decompose(capsys):
    rc, out, _ = run(
        capsys, "pool", "--sample",
        "--compose", "0,1,2,5", "--decompose", "2B29", "--json",
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["compose"]["element"] == "2B29"
    assert obj["decompose"]["subset"] == [0, 1, 2, 5]
    # the emitted pool document loads back
    pool = pool_from_json(obj["pool"])
    assert pool.n == 7


def test_pool_schema_error(tmp_path, capsys):
    bad = tmp_path / "pool.json"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "pool", "--file", str(bad))
    assert rc == 2
    assert "line 1" in err


def test_decode_erasure_case(capsys):
    rc, out, _ = run(capsys, "decode", "--sample-code", "--received", "1,3,6")
    assert rc == 0
    assert "Decoded [1, 3, 5, 6]" in out


def test_decode_ambiguous_case(capsys):
    rc, out, _ = run(
        capsys, "decode", "--sample-code", "--received", "1,3,4,6", "--json"
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["ambiguous"] and len(obj["candidates"]) == 3


def test_decode_from_file(tmp_path, capsys):
    path = tmp_path / "code.json"
    path.write_text(json.dumps(sample_code().to_json()))
    rc, out, _ = run(capsys, "decode", "--code", str(path), "--received", "0,1,2,5")
    assert rc == 0
    assert "Decoded [0, 1, 2, 5]" in out


def test_search_writes_loadable_code(tmp_path, capsys):
    out_path = tmp_path / "result.json"
    rc, _, _ = run(
        capsys, "search", "--n", "7", "--k", "4", "--d", "4",
        "--json", "--out", str(out_path),
    )
    assert rc == 0
    obj = json.loads(out_path.read_text())
    assert obj["max_size"] == 7 and obj["complete"]
    code = ConstantWeightCode.from_json(obj["code"])
    assert len(code) == 7 and code.min_distance >= 4


def test_search_count(capsys):
    rc, out, _ = run(
        capsys, "search", "--n", "8", "--k", "6", "--d", "4", "--count", "--json"
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["max_size"] == 4 and obj["count"] == 105


def test_lattice_analysis(tmp_path, capsys):
    doc = pentagon_n5().to_json()
    path = tmp_path / "n5.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(
        capsys, "lattice", "--file", str(path),
        "--check-theorem", "--element", "0", "--json",
    )
    assert rc == 0
    obj = json.loads(out)
    assert obj["theorem"]["birkhoff"] is False
    assert obj["theorem"]["agree"] is True
    assert sorted(map(sorted, obj["decompositions"])) == [["a", "b"], ["b", "c"]]


def test_lattice_with_multiplication(tmp_path, capsys):
    from cwlattice.lattice import irreducible_not_primary_example

    lat, table = irreducible_not_primary_example()
    doc = lat.to_json()
    doc["mult"] = table.to_json()
    path = tmp_path / "lat.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, "lattice", "--file", str(path), "--json")
    assert rc == 0
    obj = json.loads(out)
    assert obj["primary"]["d"] is False
    assert obj["primary"]["1"] is True


def test_simulate_seeded_repeatability(tmp_path, capsys):
    args = (
        "simulate", "--sample",
        "--topology", '{"layers":3,"width":2,"indegree":2,"seed":3}',
        "--adversary", '{"type":"random_substitution","prob":0.1,"seed":5}',
        "--trials", "50", "--json",
    )
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2
    obj = json.loads(out1)
    assert obj["trials"] == 50


def test_simulate_csv(tmp_path, capsys):
    csv_path = tmp_path / "out.csv"
    rc, _, _ = run(
        capsys, "simulate", "--sample",
        "--topology", '{"layers":2,"width":1}',
        "--trials", "10", "--csv", str(csv_path), "--json",
    )
    assert rc == 0
    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 11
    assert all(line.endswith(",1") for line in lines[1:])  # clean channel


def test_simulate_usage_error(capsys):
    rc, _, err = run(
        capsys, "simulate", "--topology", '{"layers":2,"width":1}', "--trials", "1"
    )
    assert rc == 2
    assert "--sample" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bounds", "--n", "7", "--k", "4", "--d", "4", "--bogus"])
    assert exc.value.code == 2


def test_table2_rows(capsys):
    rc, out, _ = run(capsys, "table2", "--json")
    assert rc == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 10
    by_params = {(r["n"], r["k"], r["d"]): r for r in rows}
    assert by_params[(8, 4, 4)]["max_size"] == 14
    assert by_params[(10, 7, 6)]["max_size"] == 3
    flagged = by_params[(10, 7, 4)]
    assert flagged["max_size"] == 13
    assert flagged["reported_size"] == 8
    assert any("disagrees" in note for note in flagged["notes"])
    assert all(r["complete"] for r in rows)
