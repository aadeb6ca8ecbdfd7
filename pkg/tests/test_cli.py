"""CLI surface: documented examples, golden files, determinism, exit codes."""

import json
import pathlib

import pytest

from lieram.cli import main

GOLDEN_DIR = pathlib.Path(__file__).parent / "golden"

# every CLI example in the README is listed here and diffed against its
# committed golden file
GOLDEN = {
    "quantum_blocks_a1_l5.json": [
        "quantum", "blocks", "--type", "A1", "--ell", "5",
        "--chi-s", "0/1", "--support", "1"],
    "verify_appendix_g2.json": ["verify", "appendix", "--type", "G2"],
    "modular_blocks_a2_p5.json": [
        "modular", "blocks", "--type", "A2", "--p", "5",
        "--chi-s", "0,0", "--support", ""],
    "quantum_exceptional_g2.json": ["quantum", "exceptional", "--type", "G2"],
    "modular_unramified_a1_p3.json": [
        "modular", "unramified", "--type", "A1", "--p", "3", "--weight", "2"],
    "modular_structure_a1_p3_regnil.json": [
        "modular", "structure", "--type", "A1", "--p", "3",
        "--chi-s", "0", "--support", "1"],
}


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(name, capsys):
    code, out = run_cli(GOLDEN[name], capsys)
    assert code == 0
    expected = (GOLDEN_DIR / name).read_text()
    assert out == expected


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_byte_identical_across_runs(name, capsys):
    _, first = run_cli(GOLDEN[name], capsys)
    _, second = run_cli(GOLDEN[name], capsys)
    assert first == second


def test_sl2_quantum_example_content(capsys):
    code, out = run_cli(GOLDEN["quantum_blocks_a1_l5.json"], capsys)
    assert code == 0
    doc = json.loads(out)
    dims = sorted(b["dim"] for b in doc["blocks"])
    assert dims == [1, 2, 2]
    assert doc["structure"]["descriptor"]["matrix_size"] == 5
    assert doc["structure"]["regular"] is True


def test_appendix_g2_content(capsys):
    code, out = run_cli(GOLDEN["verify_appendix_g2.json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["all_ok"] and len(doc["rows"]) == 2


def test_modular_blocks_a2_content(capsys):
    code, out = run_cli(GOLDEN["modular_blocks_a2_p5.json"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["counts"]["num_blocks"] == 7
    assert doc["counts"]["dim_sum"] == 25


def test_tsv_projection(capsys):
    code, out = run_cli(["--format", "tsv", "modular", "blocks", "--type",
                         "A2", "--p", "5", "--chi-s", "0,0", "--support", ""],
                        capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("lambda\teta\torbit_size")
    assert len(lines) == 8  # header + 7 blocks
    # the flag also parses after the subcommand
    code, out2 = run_cli(["modular", "blocks", "--type", "A2", "--p", "5",
                          "--chi-s", "0,0", "--support", "", "--format", "tsv"],
                         capsys)
    assert out2 == out


def test_extension_literals(capsys):
    # AS(1) over p=3 puts the character in F_27
    code, out = run_cli(["modular", "blocks", "--type", "A1", "--p", "3",
                         "--chi-s", "AS(1)", "--support", ""], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["chi"]["field"]["e"] == 3
    assert doc["counts"]["dim_sum"] == 3


def test_generator_literals(capsys):
    # g is the deterministic generator of the ambient field (here F_5)
    code, out = run_cli(["modular", "blocks", "--type", "A2", "--p", "5",
                         "--chi-s", "g,g^2", "--support", ""], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["chi"]["values"] == [[2], [4]]  # 2 generates F_5^x
    assert doc["counts"]["dim_sum"] == 25


def test_domain_error_exit_1(capsys):
    code = main(["modular", "blocks", "--type", "Z9", "--p", "5",
                 "--chi-s", "", "--support", ""])
    assert code == 1
    err = capsys.readouterr().err
    assert "error:" in err
    # hypothesis failures are named
    code = main(["modular", "blocks", "--type", "A2", "--p", "3",
                 "--chi-s", "0,0", "--support", ""])
    assert code == 1


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["modular", "blocks", "--type", "A2"])  # missing --p
    assert exc.value.code == 2


def test_selftest_suite_filter(capsys):
    code, out = run_cli(["selftest", "--suite", "appendix"], capsys)
    assert code == 0
    assert out.startswith("PASS appendix")
    assert out.strip().endswith("ALL PASS")
    code = main(["selftest", "--suite", "nosuch"])
    assert code == 1


def test_quantum_unramified_cli(capsys):
    code, out = run_cli(["quantum", "unramified", "--type", "A1", "--ell", "5",
                         "--torus", "1/5", "--coords", "both"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["component"] is False
    assert doc["highestWeight"] is False


def test_bound_flag(capsys):
    code = main(["modular", "blocks", "--type", "A1", "--p", "3",
                 "--chi-s", "1", "--support", "", "--bound", "10"])
    assert code == 1  # F_27 exceeds the tiny bound
    err = capsys.readouterr().err
    assert "exceeds bound" in err


def test_bound_env_var(capsys, monkeypatch):
    monkeypatch.setenv("LIERAM_BOUND", "10")
    code = main(["modular", "blocks", "--type", "A1", "--p", "3",
                 "--chi-s", "1", "--support", ""])
    assert code == 1
    assert "exceeds bound 10" in capsys.readouterr().err
    # the flag wins over the environment
    monkeypatch.setenv("LIERAM_BOUND", "10")
    code = main(["modular", "blocks", "--type", "A1", "--p", "3",
                 "--chi-s", "1", "--support", "", "--bound", "1000000"])
    assert code == 0
    capsys.readouterr()
