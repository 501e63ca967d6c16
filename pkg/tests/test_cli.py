import json
import shutil
import subprocess

import pytest

from uimlab import analysis, cli
from uimlab.construct import sporadic_function, sporadic_partial_function, sporadic_spec
from uimlab.ftable import FunctionTable, load_table, save_table
from uimlab.construct import save_spec, spec_to_json_obj


AND3 = FunctionTable(2, 2, 3, (0, 0, 0, 0, 0, 0, 1, 1))


@pytest.fixture
def and3_file(tmp_path):
    path = tmp_path / "and3.json"
    save_table(AND3, path)
    return str(path)


def test_ofo_word(capsys):
    assert cli.main(["ofo", "balloon"]) == 0
    assert capsys.readouterr().out.strip() == "balon"


def test_ofo_tuple_form(capsys):
    assert cli.main(["ofo", "(1,1,2)"]) == 0
    assert capsys.readouterr().out.strip() == "(1,2)"


def test_minors_all_pairs(and3_file, capsys):
    assert cli.main(["minors", and3_file]) == 0
    out = capsys.readouterr().out
    assert out.count("minor for pair") == 3
    assert "{1,2}" in out


def test_minors_single_pair_json(and3_file, capsys):
    assert cli.main(["minors", and3_file, "--pair", "1,3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == [
        {
            "pair": [0, 2],
            "minor": {
                "arity": 2,
                "codomain_size": 2,
                "domain_size": 2,
                "values": [0, 0, 0, 1],
            },
        }
    ]


def test_check_exit_codes(tmp_path, and3_file, capsys):
    good = tmp_path / "maj.json"
    save_table(FunctionTable(2, 2, 3, (0, 0, 0, 1, 0, 1, 1, 1)), good)
    assert cli.main(["check", str(good)]) == 0
    assert "yes" in capsys.readouterr().out
    assert cli.main(["check", and3_file]) == 1
    assert "no" in capsys.readouterr().out


def test_check_json(and3_file, capsys):
    assert cli.main(["check", and3_file, "--json"]) == 1
    assert json.loads(capsys.readouterr().out) == {"has_uim": False}


def test_classify_human_and_json(tmp_path, capsys):
    path = tmp_path / "f.json"
    save_table(sporadic_function(3), path)
    assert cli.main(["classify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "category:               OTHER" in out
    assert cli.main(["classify", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["category"] == "OTHER"
    assert data["inv_group_order"] == 1


def test_classify_rejects_partial(tmp_path):
    path = tmp_path / "p.json"
    save_table(sporadic_partial_function(3, 2), path)
    assert cli.main(["classify", str(path)]) == 2


def test_construct_prop4_roundtrip(tmp_path):
    out = tmp_path / "f.json"
    assert cli.main([
        "construct", "prop4", "--k", "3", "--alpha", "1", "--beta", "0",
        "-o", str(out),
    ]) == 0
    table = load_table(out)
    assert table == sporadic_function(3)
    # writing the loaded table again reproduces the file byte for byte
    first = out.read_bytes()
    save_table(table, out)
    assert out.read_bytes() == first
    assert cli.main(["check", str(out)]) == 0


def test_construct_prop4_partial(tmp_path):
    out = tmp_path / "p.json"
    assert cli.main([
        "construct", "prop4", "--k", "4", "--m", "2", "-o", str(out),
    ]) == 0
    assert b"null" in out.read_bytes()
    assert load_table(out) == sporadic_partial_function(4, 2)
    assert cli.main(["check", str(out)]) == 0


def test_construct_gpphi_matches_prop4(tmp_path):
    spec_path = tmp_path / "spec.json"
    save_spec(sporadic_spec(3), spec_path)
    via_spec = tmp_path / "a.json"
    direct = tmp_path / "b.json"
    assert cli.main(["construct", "gpphi", "--spec", str(spec_path),
                     "-o", str(via_spec)]) == 0
    assert cli.main(["construct", "prop4", "--k", "3", "-o", str(direct)]) == 0
    assert via_spec.read_bytes() == direct.read_bytes()


def test_construct_gpphi_rejects_bad_spec(tmp_path, capsys):
    obj = spec_to_json_obj(sporadic_spec(2))
    obj["base_arity"] = 3  # shape no longer matches the minor tables
    spec_path = tmp_path / "bad.json"
    spec_path.write_text(json.dumps(obj))
    assert cli.main(["construct", "gpphi", "--spec", str(spec_path),
                     "-o", str(tmp_path / "out.json")]) == 2
    assert "error" in capsys.readouterr().err


def test_construct_gpphi_reports_violations(tmp_path, capsys):
    obj = spec_to_json_obj(sporadic_spec(2))
    obj["minors"]["0,1"][0] = 1  # breaks agreement with the base at (1,1)
    spec_path = tmp_path / "bad.json"
    spec_path.write_text(json.dumps(obj))
    assert cli.main(["construct", "gpphi", "--spec", str(spec_path),
                     "-o", str(tmp_path / "out.json")]) == 2
    assert "disagrees with the base" in capsys.readouterr().err


def test_malformed_table_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert cli.main(["check", str(path)]) == 2
    err = capsys.readouterr().err
    assert "line 1" in err


def test_verify_pass(capsys):
    assert cli.main(["verify", "--suite", "lemma-hatsigma", "--n", "4"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_verify_json(capsys):
    assert cli.main(["verify", "--suite", "lemma-ofodeltaI", "--k", "2",
                     "--n", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["params"] == {"k": 2, "n": 3}


def test_verify_failure_exit(monkeypatch, capsys):
    def fake(name, **params):
        return analysis.SuiteReport(name, params, 1, False, "synthetic", 0.0)

    monkeypatch.setattr(analysis, "verify_suite", fake)
    assert cli.main(["verify", "--suite", "uim-2st"]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_bad_params_exit(capsys):
    assert cli.main(["verify", "--suite", "prop-suppord", "--k", "3",
                     "--n", "4"]) == 2


def test_search_human_output(capsys):
    assert cli.main(["search", "--k", "2", "--b", "2", "--n", "3",
                     "--exhaustive"]) == 0
    out = capsys.readouterr().out
    assert "classified 256 of 256 tables" in out
    assert "fingerprint:" in out


def test_search_json_and_report_file(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    assert cli.main(["search", "--k", "2", "--b", "2", "--n", "3",
                     "--exhaustive", "--json", "--report", str(report_path)]) == 0
    stdout_obj = json.loads(capsys.readouterr().out)
    file_obj = json.loads(report_path.read_text())
    assert stdout_obj["counts"] == file_obj["counts"]
    assert stdout_obj["fingerprint"] == file_obj["fingerprint"]
    assert sum(stdout_obj["counts"].values()) == 256


def test_search_sampled_cli(capsys):
    assert cli.main(["search", "--k", "2", "--b", "2", "--n", "4",
                     "--samples", "10", "--seed", "1", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["classified"] == 10
    assert data["parameters"]["seed"] == 1


def test_search_guard_exit(capsys):
    assert cli.main(["search", "--k", "2", "--b", "2", "--n", "5",
                     "--exhaustive"]) == 2
    assert "guard" in capsys.readouterr().err


def test_search_requires_a_mode():
    with pytest.raises(SystemExit) as exc:
        cli.main(["search", "--k", "2", "--b", "2", "--n", "3"])
    assert exc.value.code == 2


def test_threads_env_is_respected(monkeypatch):
    monkeypatch.setenv("UIMLAB_THREADS", "2")
    a = analysis.search(2, 2, 3, mode="exhaustive")
    monkeypatch.setenv("UIMLAB_THREADS", "1")
    b = analysis.search(2, 2, 3, mode="exhaustive")
    assert a.fingerprint() == b.fingerprint()


@pytest.mark.skipif(shutil.which("uimlab") is None, reason="script not installed")
def test_console_script():
    proc = subprocess.run(["uimlab", "ofo", "kayak"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "kay"
