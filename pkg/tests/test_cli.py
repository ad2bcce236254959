"""End-to-end runs of the command-line surface."""

import json

from nakamura_lab.cli import main
from nakamura_lab.serialize import dump_json, form_to_json, load_json
from nakamura_lab import veto_free_form


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith(("{", "[")) else out


def test_build_classify_nakamura_pipeline(tmp_path, capsys):
    game_path = tmp_path / "maj.json"
    code, _ = run(capsys, "build", "--name", "majority", "--params", '{"n": 3}', "-o", str(game_path))
    assert code == 0
    doc = load_json(game_path)
    assert doc["kind"] == "finite" and doc["universe"] == 3

    code, payload = run(capsys, "classify", "--game", str(game_path))
    assert code == 0
    assert payload == {"type": 1, "signature": "++++", "witnesses": {}}

    code, payload = run(capsys, "nakamura", "--game", str(game_path))
    assert code == 0
    assert payload["nu"] == 3
    assert payload["witness"] == [[0, 1], [0, 2], [1, 2]]


def test_build_with_sizes_flag(tmp_path, capsys):
    out = tmp_path / "p3.json"
    code, _ = run(capsys, "build", "--name", "partition_type3", "--sizes", "2,1,1", "-o", str(out))
    assert code == 0
    code, payload = run(capsys, "classify", "--game", str(out))
    assert code == 0 and payload["type"] == 3


def test_core_check_commands(tmp_path, capsys):
    game_path = tmp_path / "maj.json"
    run(capsys, "build", "--name", "majority", "--params", '{"n": 3}', "-o", str(game_path))
    code, payload = run(
        capsys, "core-check", "--game", str(game_path), "--alternatives", "2", "--mode", "exhaustive"
    )
    assert code == 0
    assert payload["ok"] and payload["all_nonempty"] and payload["profiles_checked"] == 27
    code, payload = run(
        capsys, "core-check", "--game", str(game_path), "--alternatives", "3", "--mode", "sampled"
    )
    assert code == 0
    assert payload["side"] == "at_or_above" and payload["empty_core_profile"]


def test_product_and_prefix_nakamura(tmp_path, capsys):
    maj = tmp_path / "maj.json"
    diag = tmp_path / "diag.json"
    prod = tmp_path / "prod.json"
    run(capsys, "build", "--name", "majority", "--params", '{"n": 3}', "-o", str(maj))
    run(capsys, "build", "--name", "diagonal", "-o", str(diag))
    code, _ = run(
        capsys, "product", "--left", str(maj), "--right", str(diag), "--pairing", "shift:3",
        "-o", str(prod),
    )
    assert code == 0
    assert load_json(prod)["kind"] == "construction"
    code, payload = run(capsys, "nakamura", "--game", str(prod), "--depth", "16")
    assert code == 0
    assert payload["nu_upper"] == 3

    finite_prod = tmp_path / "mm.json"
    code, _ = run(
        capsys, "product", "--left", str(maj), "--right", str(maj), "-o", str(finite_prod)
    )
    assert code == 0
    assert load_json(finite_prod)["universe"] == 6


def test_effectivity_command(tmp_path, capsys):
    form_path = tmp_path / "form.json"
    dump_json(form_path, form_to_json(veto_free_form(4)))
    code, payload = run(capsys, "effectivity", "--form", str(form_path), "--notion", "exact")
    assert code == 0
    assert sorted(map(tuple, payload["winning"])) == [
        (0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3),
    ]
    code, payload = run(capsys, "effectivity", "--form", str(form_path), "--notion", "alpha")
    assert code == 0
    assert [0, 1, 2, 3] in payload["winning"]


def test_diagonal_command(tmp_path, capsys):
    tables_path = tmp_path / "tables.json"
    code, payload = run(
        capsys, "diagonal", "--oracle", "alternating", "--max-len", "8",
        "--classify", "100", "--dump-tables", str(tables_path),
    )
    assert code == 0
    assert payload["classify"]["status"] == "losing-determining"
    tables = load_json(tables_path)
    assert "11" in tables["winning"] and "00" in tables["losing"]
    assert tables["indices"][:2] == [2, 4]


def test_table_command_writes_matching_json_and_markdown(tmp_path, capsys):
    json_path = tmp_path / "report.json"
    md_path = tmp_path / "report.md"
    code = main(
        ["table", "--max-k", "5", "--depth", "10", "--out", str(json_path), "--md", str(md_path)]
    )
    capsys.readouterr()
    assert code == 0
    report = load_json(json_path)
    assert report["passed"] is True
    markdown = md_path.read_text()
    for entry in report["entries"]:
        assert entry["id"] in markdown
        assert entry["status"] in ("pass", "out-of-scope")
    assert markdown.count("|") >= len(report["entries"])


def test_table_report_is_deterministic():
    from nakamura_lab.report import run_table_report

    first = run_table_report(max_k=5, depth=10).to_json()
    second = run_table_report(max_k=5, depth=10).to_json()
    assert first == second


def test_input_errors_exit_2(tmp_path, capsys):
    code = main(["classify", "--game", str(tmp_path / "missing.json")])
    capsys.readouterr()
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "weird"}')
    code = main(["nakamura", "--game", str(bad)])
    capsys.readouterr()
    assert code == 2
    code = main(["build", "--name", "no_such_game"])
    capsys.readouterr()
    assert code == 2


def test_usage_error_exits_nonzero(capsys):
    code = main(["not-a-command"])
    capsys.readouterr()
    assert code == 2
