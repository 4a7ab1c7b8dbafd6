import json

from etf_forge.cli import main
from etf_forge.designs import all_pairs_design
from etf_forge.serialize import canonical_json, design_to_obj, load


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_kirkman_pair(tmp_path, capsys):
    out = tmp_path / "pair"
    code, stdout, _ = run(capsys, "construct", "kirkman", "--u", "2", "--out", str(out))
    assert code == 0
    assert (out / "primary.json").exists()
    assert (out / "complement.json").exists()
    cert = load(out / "certificate_primary.json")
    assert (cert["d"], cert["n"]) == (6, 16)
    cert_c = load(out / "certificate_complement.json")
    assert cert_c["d"] == 10
    summary = json.loads(stdout)
    assert summary["d"] == 6 and summary["complement_d"] == 10


def test_construct_harmonic(tmp_path, capsys):
    out = tmp_path / "harmonic"
    code, stdout, _ = run(
        capsys, "construct", "harmonic",
        "--group", "2,2,2,2", "--subset", "1,5,2,10,3,15", "--out", str(out),
    )
    assert code == 0
    cert = load(out / "certificate_primary.json")
    assert (cert["d"], cert["n"], cert["flat"]) == (6, 16, True)


def test_construct_csv_export(tmp_path, capsys):
    out = tmp_path / "simplex"
    code, _, _ = run(
        capsys, "construct", "simplex", "--size", "4", "--out", str(out), "--format", "csv",
    )
    assert code == 0
    assert (out / "primary.csv").read_text().splitlines()[0].count(",") == 3


def test_construct_tensor_from_dirs(tmp_path, capsys):
    left = tmp_path / "left"
    code, _, _ = run(capsys, "construct", "simplex", "--size", "4", "--out", str(left))
    assert code == 0
    # A simplex alone has no complement, so tensor must reject it.
    code, _, err = run(
        capsys, "construct", "tensor", "--left", str(left), "--right", str(left),
        "--out", str(tmp_path / "t"),
    )
    assert code == 1
    assert "pair" in err

    pair_dir = tmp_path / "pair16"
    code, _, _ = run(capsys, "construct", "kirkman", "--u", "2", "--out", str(pair_dir))
    assert code == 0
    code, stdout, _ = run(
        capsys, "construct", "tensor", "--left", str(pair_dir), "--right", str(pair_dir),
        "--out", str(tmp_path / "t2"),
    )
    assert code == 0
    assert json.loads(stdout)["n"] == 256


def test_construct_steiner_weighted_complement(tmp_path, capsys):
    out = tmp_path / "steiner"
    code, _, _ = run(
        capsys, "construct", "steiner", "--design", "all-pairs", "--v", "4", "--out", str(out),
    )
    assert code == 0
    pair_obj = load(out / "pair.json")
    assert pair_obj["complement_row_weights"] == [[1, 1]] * 6 + [[2, 1]] * 4
    code, stdout, _ = run(capsys, "verify", "naimark-pair", str(out))
    assert code == 0
    assert json.loads(stdout)["alpha"] == [8, 1]


def test_construct_steiner_fano(tmp_path, capsys):
    out = tmp_path / "fano"
    code, stdout, _ = run(capsys, "construct", "steiner", "--design", "fano", "--out", str(out))
    assert code == 0
    summary = json.loads(stdout)
    assert (summary["d"], summary["n"]) == (7, 28)
    code, _, _ = run(capsys, "verify", "naimark-pair", str(out))
    assert code == 0


def test_verify_etf_roundtrip(tmp_path, capsys):
    out = tmp_path / "pair"
    run(capsys, "construct", "kirkman", "--u", "2", "--out", str(out))
    code, stdout, _ = run(capsys, "verify", "etf", str(out / "primary.json"))
    assert code == 0
    cert = json.loads(stdout)
    assert cert["beta"] == [6, 1] and cert["flat"]


def test_verify_etf_detects_sign_flip(tmp_path, capsys):
    out = tmp_path / "pair"
    run(capsys, "construct", "kirkman", "--u", "2", "--out", str(out))
    obj = load(out / "primary.json")
    obj["entries"][7] = [[0, 1, 1]] if obj["entries"][7] == [[0, -1, 1]] else [[0, -1, 1]]
    bad = tmp_path / "bad.json"
    bad.write_text(canonical_json(obj))
    code, _, err = run(capsys, "verify", "etf", str(bad))
    assert code == 1
    assert "tight" in err or "equiangular" in err


def test_verify_naimark_pair_dir(tmp_path, capsys):
    out = tmp_path / "pair"
    run(capsys, "construct", "kirkman", "--u", "2", "--out", str(out))
    code, stdout, _ = run(capsys, "verify", "naimark-pair", str(out))
    assert code == 0
    assert json.loads(stdout)["alpha"] == [16, 1]


def test_verify_qsd_design_file(tmp_path, capsys):
    path = tmp_path / "design.json"
    path.write_text(canonical_json(design_to_obj(all_pairs_design(6))))
    code, stdout, _ = run(capsys, "verify", "qsd", str(path))
    assert code == 0
    result = json.loads(stdout)
    assert (result["x"], result["y"]) == (0, 1)


def test_qsd_to_etf_command(tmp_path, capsys):
    path = tmp_path / "design.json"
    path.write_text(canonical_json(design_to_obj(all_pairs_design(6))))
    out = tmp_path / "frame"
    code, stdout, _ = run(
        capsys, "construct", "qsd-to-etf", "--design", str(path),
        "--branch", "plus", "--out", str(out),
    )
    assert code == 0
    cert = load(out / "certificate_primary.json")
    assert (cert["d"], cert["n"], cert["flat"]) == (6, 16, True)


def test_feasibility_command(capsys):
    code, stdout, _ = run(capsys, "feasibility", "15", "36")
    assert code == 1
    lines = stdout.splitlines()
    assert json.loads(lines[0])["verdict"] == "fail"
    code, stdout, _ = run(capsys, "feasibility", "78", "144")
    assert code == 0
    assert json.loads(stdout.splitlines()[0])["verdict"] == "pass"


def test_feasibility_simplex_regime_is_usage_error(capsys):
    code, _, err = run(capsys, "feasibility", "6", "7")
    assert code == 2
    assert "simplices" in err


def test_catalog_commands(tmp_path, capsys):
    recipe_path = tmp_path / "recipe.json"
    recipe_path.write_text(canonical_json(
        {"schema": "etf-forge/recipe/v1", "kind": "kirkman", "inputs": {"u": 2}}
    ))
    cat = str(tmp_path / "cat")
    code, stdout, _ = run(capsys, "catalog", "--catalog", cat, "add", str(recipe_path))
    assert code == 0
    record_id = json.loads(stdout)["id"]

    code, stdout, _ = run(capsys, "catalog", "--catalog", cat, "list")
    assert code == 0
    assert record_id in stdout

    code, stdout, _ = run(capsys, "catalog", "--catalog", cat, "show", record_id[:10])
    assert code == 0
    assert json.loads(stdout)["recipe"]["kind"] == "kirkman"

    code, stdout, _ = run(capsys, "catalog", "--catalog", cat, "audit")
    assert code == 0
    assert json.loads(stdout)["failures"] == []


def test_catalog_audit_failure_names_id(tmp_path, capsys):
    recipe_path = tmp_path / "recipe.json"
    recipe_path.write_text(canonical_json(
        {"schema": "etf-forge/recipe/v1", "kind": "kirkman", "inputs": {"u": 2}}
    ))
    cat = tmp_path / "cat"
    code, stdout, _ = run(capsys, "catalog", "--catalog", str(cat), "add", str(recipe_path))
    record_id = json.loads(stdout)["id"]
    target = cat / "payloads" / record_id / "primary.json"
    obj = json.loads(target.read_text())
    obj["entries"][3] = [[0, 1, 1]] if obj["entries"][3] == [[0, -1, 1]] else [[0, -1, 1]]
    target.write_text(json.dumps(obj))
    code, stdout, _ = run(capsys, "catalog", "--catalog", str(cat), "audit")
    assert code == 1
    assert record_id in json.loads(stdout)["failures"]


def test_env_var_overrides_catalog(tmp_path, capsys, monkeypatch):
    recipe_path = tmp_path / "recipe.json"
    recipe_path.write_text(canonical_json(
        {"schema": "etf-forge/recipe/v1", "kind": "simplex",
         "inputs": {"hadamard": {"generator": "sylvester", "e": 2}, "drop_row": 0}}
    ))
    monkeypatch.setenv("ETF_FORGE_CATALOG", str(tmp_path / "envcat"))
    code, _, _ = run(capsys, "catalog", "add", str(recipe_path))
    assert code == 0
    assert (tmp_path / "envcat" / "records.jsonl").exists()


def test_parse_error_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "verify", "etf", str(bad))
    assert code == 2


def test_missing_file_is_exit_2(capsys):
    code, _, _ = run(capsys, "verify", "etf", "/nonexistent/path.json")
    assert code == 2
