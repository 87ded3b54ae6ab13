"""Command-line surface: outputs, exit codes, cache coherence, reports."""

import json
import os

from torusdiv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_w_command_paper_value(capsys):
    code, out, _ = run(capsys, "w", "X1 - X2 - 4", "--n", "2")
    assert code == 0
    assert out.strip() == "192 = 2^6 * 3"


def test_w_command_group_literal(capsys):
    code, out, _ = run(capsys, "w", "X1 - X2 - 4", "--group", "N=2;m=2;gens=(1,1)")
    assert code == 0
    # product over {identity, (-1,-1)}: (-4) * (-4)
    assert out.strip().startswith("16 = ")


def test_w_empty_product(capsys):
    code, out, _ = run(capsys, "w", "X1 - 1", "--n", "1")
    assert code == 0
    assert out.strip() == "1 = 1"


def test_w_json_mode(capsys):
    code, out, _ = run(capsys, "w", "2*X1 - 1", "--n", "4", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "-15"
    assert payload["factorization"]["factors"] == [[3, 1], [5, 1]]


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "2*X1 - 1", "--n", "6", "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "order,subgroup,point,value,exponent,vanished"
    values = [line.split(",")[3] for line in lines[1:]]
    assert values == ["1", "-3", "7", "3"]


def test_ra_command(capsys):
    code, out, _ = run(
        capsys, "ra", "2*X1 - 1", "--p", "7", "--max-order", "20", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [r["order"] for r in payload["records"]] == [3]


def test_zsig_command(capsys):
    code, out, _ = run(capsys, "zsig", "2*X1 - 1", "--max-order", "10", "--json")
    assert code == 0
    payload = json.loads(out)
    in_set = [r["order"] for r in payload["records"] if r["in_zsigmondy_set"]]
    assert 6 in in_set and 5 not in in_set


def test_mahler_command(capsys):
    code, out, _ = run(capsys, "mahler", "X1 - 2")
    assert code == 0
    assert out.strip() == "2.0000"


def test_ptfamily_command(capsys):
    code, out, _ = run(capsys, "ptfamily", "--n", "5", "--check", "eighth-power")
    assert code == 0
    assert "deg_b = 1" in out
    assert "eighth_power_divides = True" in out


def test_growth_command_writes_reports(tmp_path, capsys):
    out_dir = tmp_path / "reports"
    code, out, _ = run(
        capsys,
        "growth",
        "X1 - 2",
        "--n-max",
        "8",
        "--out",
        str(out_dir),
        "--csv",
    )
    assert code == 0
    assert (out_dir / "growth.csv").exists()
    assert (out_dir / "growth.png").exists()
    header = out.splitlines()[0]
    assert header.split(",")[:3] == ["n", "sign", "bit_length"]


def test_density_and_romanoff_commands(capsys):
    code, out, _ = run(
        capsys,
        "density",
        "2*X1 - 1",
        "--theta",
        "1.0",
        "--p-bound",
        "20",
        "--max-order",
        "20",
        "--json",
        "--threads",
        "2",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["primes_in_set"] == [3, 5, 7, 11, 13, 17, 19]
    code, out, _ = run(
        capsys, "romanoff", "X1 - X2 - 4", "--x", "4", "--eps", "1.0",
        "--p-bound", "10", "--json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["inequality_holds_exact"] is True


def test_exit_code_parse_error(capsys):
    code, _, err = run(capsys, "w", "this is not a polynomial", "--n", "2")
    assert code == 2
    assert "error" in err


def test_exit_code_group_parse_error(capsys):
    code, _, _ = run(capsys, "w", "X1 - 1", "--group", "N=1;m=0;gens=(1)")
    assert code == 2


def test_exit_code_resource_cap(capsys):
    code, _, err = run(
        capsys, "w", "X1 - X2 - 4", "--n", "2000", "--max-elements", "1000"
    )
    assert code == 3


def test_cache_round_trip_byte_identical(tmp_path, capsys):
    cache_dir = str(tmp_path / "cache")
    args = ["w", "X1 - X2 - 4", "--n", "4", "--cache", cache_dir]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    cache_file = os.path.join(cache_dir, "torusdiv-cache.jsonl")
    with open(cache_file) as fh:
        lines = fh.read().splitlines()
    header = json.loads(lines[0])
    assert header["schema"] == 1
    assert "sha256" in header["hash"]
    assert len(lines) == 2  # header + one record, the hit did not rewrite


def test_cache_tolerates_partial_trailing_line(tmp_path, capsys):
    cache_dir = str(tmp_path / "cache")
    args = ["w", "2*X1 - 1", "--n", "6", "--cache", cache_dir]
    run(capsys, *args)
    cache_file = os.path.join(cache_dir, "torusdiv-cache.jsonl")
    with open(cache_file, "a") as fh:
        fh.write('{"key": ["partial", "tr')
    code, out, _ = run(capsys, *args)
    assert code == 0
    assert out.strip() == "-63 = -3^2 * 7"


def test_cache_coherence_across_commands(tmp_path, capsys):
    cache_dir = str(tmp_path / "cache")
    for args in (
        ["factor", "2*X1 - 1", "--n", "6", "--csv", "--cache", cache_dir],
        ["ra", "2*X1 - 1", "--p", "7", "--max-order", "12", "--json", "--cache", cache_dir],
        ["zsig", "2*X1 - 1", "--max-order", "8", "--json", "--cache", cache_dir],
        ["ptfamily", "--n", "4", "--check", "gcd", "--cache", cache_dir],
    ):
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


def test_cache_coherence_report_commands(tmp_path, capsys):
    cache_dir = str(tmp_path / "cache")
    for args in (
        ["growth", "X1 - 2", "--n-max", "6", "--json", "--cache", cache_dir],
        ["mahler", "X1 - 2", "--refine", "3", "--json", "--cache", cache_dir],
        ["romanoff", "X1 - X2 - 4", "--x", "3", "--eps", "1.0", "--p-bound",
         "10", "--json", "--cache", cache_dir],
        ["density", "2*X1 - 1", "--theta", "1.0", "--p-bound", "15",
         "--max-order", "15", "--json", "--cache", cache_dir],
    ):
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2 and out1.strip()
