"""End-to-end checks of the command-line tool.

The binary under test is named by the ORBALG_CLI environment variable (the
build system points it at the freshly built executable).
"""

import os
import subprocess

CLI = os.environ.get("ORBALG_CLI", "orbalg")

HEAVY_TABLE = """\
kind = wreath_s
weight 2 = 1
b2.1 : e | b2.1 * 1
b2.1 : b2.1 | e * 1
"""


def run(*args, stdin=""):
    # stdin defaults to an immediately closed pipe so nothing ever blocks on a
    # terminal; subcommands that read a series or element see empty input.
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, input=stdin, timeout=600
    )


def body(proc):
    """Output lines with the leading config-echo comment lines stripped."""
    return [line for line in proc.stdout.splitlines() if not line.startswith("#")]


def test_help_exits_cleanly():
    proc = run("--help")
    assert proc.returncode == 0
    assert "lyndon" in proc.stdout and "verify-all" in proc.stdout


def test_lyndon_count():
    proc = run("lyndon", "--alphabet", "1,1", "--weight", "8")
    assert proc.returncode == 0
    assert proc.stdout.startswith("# orbalg lyndon")
    lines = body(proc)
    assert lines[-1] == "count 5"
    words = lines[:-1]
    assert len(words) == 5
    assert words == sorted(words)  # ascending lexicographic listing


def test_lyndon_count_only():
    proc = run("lyndon", "--alphabet", "1", "--weight", "6", "--count-only")
    assert proc.returncode == 0
    assert body(proc) == ["count 0"]  # only b1.1 itself is Lyndon over one letter


def test_shuffle_worked_product():
    proc = run("shuffle", "b1.1-b1.2", "b1.1-b1.3")
    assert proc.returncode == 0
    assert body(proc) == [
        "2 b1.1-b1.1-b1.2-b1.3",
        "2 b1.1-b1.1-b1.3-b1.2",
        "1 b1.1-b1.2-b1.1-b1.3",
        "1 b1.1-b1.3-b1.1-b1.2",
    ]
    greatest = run("shuffle", "b1.1-b1.2", "b1.1-b1.3", "--greatest")
    assert greatest.returncode == 0
    assert body(greatest) == ["b1.1-b1.3-b1.1-b1.2"]


def test_transform_a2c_lucas(tmp_path):
    series = tmp_path / "fib.a"
    series.write_text("1\n1\n0\n0\n0\n0\n")
    proc = run("transform", "a2c", "--in", str(series), "--order", "6")
    assert proc.returncode == 0
    assert body(proc) == ["1", "3", "4", "7", "11", "18"]


def test_transform_ones_profile():
    proc = run("transform", "a2l", "--ones", "2", "--order", "8")
    assert proc.returncode == 0
    assert body(proc) == ["1", "1", "1", "1", "2", "2", "4", "5"]


def test_transform_euler_inverse_round_trip():
    forward = run("transform", "euler", "--ones", "2", "--order", "8")
    assert forward.returncode == 0
    back = run(
        "transform", "euler", "--inverse", "--order", "8", stdin=forward.stdout
    )
    assert back.returncode == 0
    assert body(back) == ["1", "1", "0", "0", "0", "0", "0", "0"]


def test_transform_realizable():
    ok = run("transform", "realizable", "--order", "5", stdin="1\n2\n3\n5\n8\n")
    assert ok.returncode == 0
    assert body(ok)[0] == "realizable"
    assert body(ok)[1:] == ["1", "1", "1", "1", "2"]

    bad = run("transform", "realizable", "--order", "4", stdin="1\n1\n0\n1\n")
    assert bad.returncode == 1
    assert body(bad) == ["not realizable at index 3"]


def test_product_example():
    proc = run("product", "--model", "sk-wr-a:2", "b1.1", "b1.1")
    assert proc.returncode == 0
    assert body(proc) == ["2 b1.1-b1.1", "2 b2.1"]


def test_product_element_files(tmp_path):
    element = tmp_path / "f.elem"
    element.write_text("1 b1.1\n")
    proc = run("product", "--model", "sk-wr-a:2", f"@{element}", "b1.1")
    assert proc.returncode == 0
    assert body(proc) == ["2 b1.1-b1.1", "2 b2.1"]


def test_product_multiset_model():
    proc = run("product", "--model", "sk-wr-s:2", "b1.1", "b2.1+b1.1")
    assert proc.returncode == 0
    # chi_1 * chi_{2+1}: leading term is the multiset sum 2+1+1
    lines = body(proc)
    assert lines[0].endswith("b2.1+b1.1+b1.1")


def test_basis_round_trip():
    to = run(
        "basis", "--model", "sk-wr-a:2", "--to-generators", stdin="1 b1.1-b1.1\n"
    )
    assert to.returncode == 0
    assert body(to) == ["1 b1.1-b1.1", "-1 b2.1"]
    back = run(
        "basis", "--model", "sk-wr-a:2", "--from-generators", stdin="\n".join(body(to))
    )
    assert back.returncode == 0
    assert body(back) == ["1 b1.1-b1.1"]


def test_basis_requires_exactly_one_direction():
    proc = run("basis", "--model", "sk-wr-a:2", stdin="1 b1.1\n")
    assert proc.returncode == 2
    assert "error" in proc.stderr.lower()


def test_ramsey_listing():
    proc = run("ramsey", "--model", "sk-wr-a:2", "--weight", "2")
    assert proc.returncode == 0
    assert body(proc) == [
        "b1.1-b1.1 -> b1.1-b1.1-b1.1-b1.1",
        "b2.1 -> b2.1-b1.1-b1.1",
    ]
    tsv = run("--format", "tsv", "ramsey", "--model", "sk-wr-a:2", "--weight", "2")
    assert tsv.returncode == 0
    assert body(tsv)[0] == "b1.1-b1.1\tb1.1-b1.1-b1.1-b1.1"


def test_verify_passes():
    proc = run("verify", "--model", "sk-wr-a:2", "--m", "2", "--n", "2")
    assert proc.returncode == 0
    lines = body(proc)
    assert len(lines) == 3
    assert all(line.startswith("pass") for line in lines)


def test_verify_multiset_model():
    proc = run("verify", "--model", "sk-wr-s:3", "--m", "2", "--n", "3")
    assert proc.returncode == 0


def test_padding_without_weight1_blocks_is_a_usage_error(tmp_path):
    table = tmp_path / "heavy.table"
    table.write_text(HEAVY_TABLE)
    proc = run("ramsey", "--model", f"@{table}", "--weight", "2", "--pad", "6")
    assert proc.returncode == 2
    assert "weight-1 block" in proc.stderr


def test_kantor_rank():
    proc = run("kantor", "--d", "6", "--e", "2", "--f", "3")
    assert proc.returncode == 0
    lines = body(proc)
    assert lines[0] == "rows 15 cols 20"
    assert lines[1] == "rank 15 expected 15 pass"


def test_kantor_weighted_rank_is_seeded():
    first = run("kantor", "--d", "7", "--e", "2", "--f", "3", "--weighted")
    second = run("kantor", "--d", "7", "--e", "2", "--f", "3", "--weighted")
    assert first.returncode == 0
    assert "pass" in first.stdout
    assert first.stdout == second.stdout
    other_seed = run(
        "kantor", "--d", "7", "--e", "2", "--f", "3", "--weighted", "--seed", "7"
    )
    assert other_seed.returncode == 0
    assert "pass" in other_seed.stdout


def test_usage_errors_exit_2():
    assert run("no-such-command").returncode == 2
    assert run("lyndon").returncode == 2  # missing required --weight
    assert run("product", "--model", "zz:1", "b1.1", "b1.1").returncode == 2
    assert run("shuffle", "b1.1", "not-a-word").returncode == 2
    assert run("transform", "frobnicate", "--order", "4", "--ones", "1").returncode == 2
    short = run("transform", "invert", "--order", "8", stdin="1\n1\n")
    assert short.returncode == 2
    assert "error" in short.stderr


def test_verify_all_passes_and_is_deterministic():
    first = run("verify-all", "--quick")
    assert first.returncode == 0, first.stdout + first.stderr
    lines = body(first)
    assert lines[-1] == "9/9 criteria passed"
    assert len(lines) == 10
    assert all(line.startswith("[PASS]") for line in lines[:-1])
    second = run("verify-all", "--quick")
    assert second.stdout == first.stdout  # byte-identical reruns

    tsv = run("--format", "tsv", "verify-all", "--quick")
    assert tsv.returncode == 0
    first_row = body(tsv)[0].split("\t")
    assert first_row[0] == "1" and first_row[1] == "PASS"
